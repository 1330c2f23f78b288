#ifndef SERIATE_ENUMERATION_HPP
#define SERIATE_ENUMERATION_HPP

#include <cstdint>
#include <vector>

#include "seriate/linalg.hpp"
#include "seriate/matrix.hpp"
#include "seriate/permutation.hpp"

namespace seriate {

inline constexpr int kDefaultOracleLimit = 8;

// 1e-9 * (max|v_i| + max|w_i|): merge tolerance matched to the basis scale.
double default_tau(const Vector& v, const Vector& w);

// The pencil of lines f_i(gamma) = v_i + gamma w_i together with the sorted
// table of pairwise intersection abscissae. Abscissae closer than tau are
// merged transitively into one entry whose multiplicity counts the merged
// line pairs, so adjacent entries always sit more than tau apart.
struct LineArrangement {
  Vector v, w;
  double tau = 0.0;
  struct Crossing {
    double gamma;
    int multiplicity;
  };
  std::vector<Crossing> crossings;  // ascending in gamma
};

// Throws DegenerateBasis when every slope is tau-equal (no line ever
// crosses another) or when v and w do not span a plane. A negative tau
// selects default_tau.
LineArrangement build_line_arrangement(const Vector& v, const Vector& w, double tau = -1.0);

// Sweep enumeration for a two-dimensional Fiedler eigenspace x = v + gamma w.
// Orderings are collected at the probe points where they can change: the
// slope vector w itself (the gamma -> +-inf limit), one point before the
// first crossing, every crossing, every midpoint between consecutive
// crossings, and one point after the last crossing. Tie expansion at a
// crossing uses tau scaled by the probe's distance from the origin, so
// coincident lines are recognized at any abscissa.
PermutationSet graphical_method(const Vector& v, const Vector& w, double tau = -1.0,
                                std::uint64_t cap = kDefaultExplosionCap, int threads = 1);

// Same, taking the basis from a computed eigenspace. Throws
// UnsupportedMultiplicity unless the multiplicity is exactly 2.
PermutationSet graphical_method(const FiedlerSpace& fs, double tau = -1.0,
                                std::uint64_t cap = kDefaultExplosionCap, int threads = 1);

// Samples coefficient directions uniformly on the unit sphere in R^k,
// sorts x = basis * y with tie expansion, and accumulates the canonical
// orderings. Deterministic for a fixed seed: the generator is mt19937_64
// and the sphere mapping is built from raw integer draws. Finds only
// orderings of positive measure, so the result is a subset of the full
// admissible set. Works for any k >= 2. A negative tol selects
// default_tie_tol per sample.
PermutationSet monte_carlo_method(const Matrix& basis, std::uint64_t samples, std::uint64_t seed,
                                  double tol = -1.0, std::uint64_t cap = kDefaultExplosionCap,
                                  int threads = 1);

// Decides whether some nonzero x = alpha v + beta w is sorted
// nondecreasingly by p. Each adjacency constraint is a half-plane through
// the origin in (alpha, beta); the feasible set is a closed convex cone,
// and it is nontrivial iff one of the constraint boundary directions
// satisfies every constraint. Integer-valued bases are decided in exact
// int64 arithmetic; floating bases use a certified sign margin of 1e-12
// relative to the accumulated magnitude. Throws DegenerateBasis when v and
// w do not span a plane.
bool cone_feasible(const Vector& v, const Vector& w, const Permutation& p);

// Ground truth by exhaustion: every permutation of 1..n is tested with
// cone_feasible. Throws TooLarge for n > n_max.
PermutationSet enumerate_by_oracle(const Vector& v, const Vector& w,
                                   int n_max = kDefaultOracleLimit);

}  // namespace seriate

#endif
