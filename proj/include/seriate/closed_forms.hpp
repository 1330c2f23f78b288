#ifndef SERIATE_CLOSED_FORMS_HPP
#define SERIATE_CLOSED_FORMS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <utility>
#include <vector>

#include "seriate/graphs.hpp"
#include "seriate/matrix.hpp"

namespace seriate {

// Counts grow factorially, so they are kept exact in arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

// (k+1)! (n-k)!: the orderings obtained by sorting one Fiedler basis vector
// of multiplicity k and permuting each of the two constant blocks freely.
// An upper bound that badly overcounts the admissible set.
BigInt naive_count(int n, int k);

// Exact number of reversal-canonical admissible orderings of the modified
// star on n nodes: 3 (n-2)!.
BigInt modified_star_count(int n);

// 2^n * n: admissible orderings of GPG(n,1) reachable from generic
// eigenspace directions alone, hence a lower bound for the full set.
BigInt petersen_lower_bound(int n);

// Laplacian spectrum of the star as (eigenvalue, multiplicity) pairs:
// {0: 1, 1: n-2, n: 1}.
std::vector<std::pair<double, int>> star_spectrum(int n);

// Integer basis of the multiplicity-2 eigenspace (eigenvalue 1) of the
// modified star Laplacian, one vector per column. Unnormalized; satisfies
// L q = q exactly in integer arithmetic.
Matrix modified_star_fiedler_basis(int n);

// 2 - 2 cos(2 pi / n), the double Fiedler value of the cycle (n >= 4;
// for n = 4 the value 2 sits at multiplicity 2 as well).
double cycle_fiedler_value(int n);

// Columns cos(2 pi j / n) and sin(2 pi j / n), j = 0..n-1: a real basis of
// the cycle's Fiedler eigenspace.
Matrix cycle_fiedler_basis(int n);

// sigma - 1, where sigma is the second-smallest eigenvalue of the circulant
// with first column (3, -1, 0, ..., 0, -1). Equals cycle_fiedler_value(n).
double petersen_fiedler_value(int n);

// The cycle basis stacked twice: rows j and n+j are identical, one entry
// per outer/inner node pair of GPG(n,1).
Matrix petersen_fiedler_basis(int n);

// Exact admissible-ordering count where a closed form is known
// (modified star only).
struct CountFormula {
  Family family;
  int n;
  BigInt value;
};
std::optional<CountFormula> closed_form_count(Family family, int n);

// Regression baselines for families without a closed form, established by
// exhaustive enumeration on small instances.
std::optional<std::uint64_t> known_cycle_count(int n);     // n = 4..10
std::optional<std::uint64_t> known_petersen_count(int n);  // n = 5..9, skip 1

}  // namespace seriate

#endif
