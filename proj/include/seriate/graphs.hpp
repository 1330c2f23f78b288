#ifndef SERIATE_GRAPHS_HPP
#define SERIATE_GRAPHS_HPP

#include <optional>
#include <string>

#include "seriate/matrix.hpp"
#include "seriate/permutation.hpp"

namespace seriate {

inline constexpr int kDefaultPreRLimit = 9;

enum class Family { star, modified_star, cycle, petersen };

// Parameters for a bundled graph family. skip is only meaningful for the
// generalized Petersen family.
struct GraphFamilySpec {
  Family family = Family::cycle;
  int n = 0;
  int skip = 1;

  // Throws BadParameter when n or skip is outside the family's domain
  // (star and modified star need n >= 5, cycle n >= 3, petersen n >= 5
  // with 1 <= skip < n/2).
  void validate() const;
  // Number of graph nodes: 2n for petersen, n otherwise.
  int node_count() const;
};

std::optional<Family> family_from_string(const std::string& name);
std::string to_string(Family f);

// Star: unit 1 shares one type with each of the n-1 leaves.
// Rows are units, columns types.
DataMatrix gen_star(int n);

// Star plus a chain of extra types linking leaves 1..n-3, which raises the
// Fiedler multiplicity of the Laplacian to exactly 2.
DataMatrix gen_modified_star(int n);

// Cycle: unit i shares type i with unit i-1 and type i+1 with unit i+1.
DataMatrix gen_cycle(int n);

// Generalized Petersen graph GPG(n, skip) as a unit/type incidence matrix:
// n outer cycle edges, n spokes, n inner skip-cycle edges.
DataMatrix gen_petersen(int n, int skip = 1);

DataMatrix make_data_matrix(const GraphFamilySpec& spec);

// S = A A^T. Entry (i,j) counts the types units i and j share.
SymMatrix similarity(const DataMatrix& a);

// Robinson form: within every row the entries never increase moving away
// from the diagonal. tol allows slack for floating data; the default is an
// exact comparison.
bool is_r_matrix(const SymMatrix& s, double tol = 0.0);

// Searches all n! simultaneous row/column permutations for one that brings
// s into Robinson form. Exhaustive, so the order is capped by n_max
// (TooLarge beyond it). Returns the first witness found, scanning
// permutations in lexicographic order.
std::optional<Permutation> find_r_permutation(const SymMatrix& s, int n_max = kDefaultPreRLimit);

bool is_pre_r_bruteforce(const SymMatrix& s, int n_max = kDefaultPreRLimit);

}  // namespace seriate

#endif
