#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "published_sets.hpp"
#include "seriate/closed_forms.hpp"
#include "seriate/enumeration.hpp"
#include "seriate/graphs.hpp"

using namespace seriate;
using published::set_of;

namespace {

PermutationSet graphical_analytic(const Matrix& basis) {
  return graphical_method(basis.col(0), basis.col(1));
}

}  // namespace

TEST_CASE("two lines cross once") {
  const LineArrangement arr = build_line_arrangement({0.0, 1.0}, {1.0, 0.0});
  REQUIRE_EQ(arr.crossings.size(), 1);
  CHECK(arr.crossings[0].gamma == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_EQ(arr.crossings[0].multiplicity, 1);
  CHECK(arr.tau > 0.0);
}

TEST_CASE("degenerate bases are rejected") {
  CHECK_THROWS_AS(build_line_arrangement({0.0, 1.0, 2.0}, {1.0, 1.0, 1.0}), DegenerateBasis);
  CHECK_THROWS_AS(build_line_arrangement({2.0, 4.0, 6.0}, {1.0, 2.0, 3.0}), DegenerateBasis);
  CHECK_THROWS_AS(build_line_arrangement({0.0}, {1.0}), BadParameter);
  CHECK_THROWS_AS(build_line_arrangement({0.0, 1.0}, {1.0}), DimensionMismatch);
}

TEST_CASE("crossing multiplicities account for every non-parallel pair") {
  const Matrix b5 = cycle_fiedler_basis(5);
  const LineArrangement a5 = build_line_arrangement(b5.col(0), b5.col(1));
  CHECK_EQ(a5.crossings.size(), 5);
  int total = 0;
  for (const auto& c : a5.crossings) {
    CHECK_EQ(c.multiplicity, 2);
    total += c.multiplicity;
  }
  CHECK_EQ(total, 10);
  for (std::size_t i = 0; i + 1 < a5.crossings.size(); ++i)
    CHECK(a5.crossings[i + 1].gamma - a5.crossings[i].gamma > a5.tau);
}

TEST_CASE("modified star arrangement has the five closed-form abscissae") {
  const int n = 6;
  const Matrix q = modified_star_fiedler_basis(n);
  const LineArrangement arr = build_line_arrangement(q.col(0), q.col(1));
  REQUIRE_EQ(arr.crossings.size(), 5);
  const double expected_gamma[] = {-1.0, -1.0 / (n - 1), 0.0, double(n - 3) / (n - 1),
                                   double(n - 3)};
  const int expected_mult[] = {n - 3, n - 3, 1, 1, 1};
  for (int i = 0; i < 5; ++i) {
    CHECK(arr.crossings[i].gamma == doctest::Approx(expected_gamma[i]).epsilon(1e-12).scale(1.0));
    CHECK_EQ(arr.crossings[i].multiplicity, expected_mult[i]);
  }
}

TEST_CASE("near-parallel lines cross far out and are still recorded") {
  const LineArrangement arr =
      build_line_arrangement({0.0, 1.0, -1.0}, {1.0, 1.0 - 1e-6, 0.0}, 1e-9);
  REQUIRE_EQ(arr.crossings.size(), 3);
  CHECK(arr.crossings[2].gamma == doctest::Approx(1e6).epsilon(1e-9));
  CHECK_EQ(graphical_method({0.0, 1.0, -1.0}, {1.0, 1.0 - 1e-6, 0.0}, 1e-9).size(), 3);
}

TEST_CASE("line sweep reproduces the published 4-cycle orderings") {
  CHECK(graphical_analytic(cycle_fiedler_basis(4)) == published::cycle4());
}

TEST_CASE("line sweep reproduces the published 5-cycle orderings") {
  CHECK(graphical_analytic(cycle_fiedler_basis(5)) == published::cycle5());
}

TEST_CASE("line sweep reproduces the published modified star orderings") {
  CHECK(graphical_analytic(modified_star_fiedler_basis(5)) == published::modified_star5());
}

TEST_CASE("modified star counts follow 3 (n-2)!") {
  for (int n : {5, 6, 7}) {
    CHECK_EQ(BigInt(graphical_analytic(modified_star_fiedler_basis(n)).size()),
             modified_star_count(n));
  }
}

TEST_CASE("the numeric pipeline basis gives the same set as the closed form") {
  const FiedlerSpace fs = fiedler_space(laplacian(similarity(gen_cycle(6))));
  REQUIRE_EQ(fs.multiplicity, 2);
  CHECK(graphical_method(fs) == graphical_analytic(cycle_fiedler_basis(6)));
}

TEST_CASE("the sweep output is invariant under rotation of the basis") {
  const Matrix b = cycle_fiedler_basis(5);
  const PermutationSet reference = graphical_analytic(b);
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 4; ++rep) {
    const double ang = 2.0 * M_PI * static_cast<double>(rng() >> 11) * 0x1p-53;
    Vector v(5), w(5);
    for (int i = 0; i < 5; ++i) {
      v[i] = std::cos(ang) * b(i, 0) + std::sin(ang) * b(i, 1);
      w[i] = -std::sin(ang) * b(i, 0) + std::cos(ang) * b(i, 1);
    }
    CHECK(graphical_method(v, w) == reference);
  }
}

TEST_CASE("sweep agrees with the exhaustive cone oracle") {
  for (int n : {4, 5, 6}) {
    const Matrix b = cycle_fiedler_basis(n);
    CHECK(graphical_analytic(b) == enumerate_by_oracle(b.col(0), b.col(1)));
  }
  for (int n : {5, 6}) {
    const Matrix q = modified_star_fiedler_basis(n);
    CHECK(graphical_analytic(q) == enumerate_by_oracle(q.col(0), q.col(1)));
  }
}

TEST_CASE("cone feasibility accepts members and rejects outsiders") {
  const Matrix b = cycle_fiedler_basis(5);
  const Vector v = b.col(0), w = b.col(1);
  for (const Permutation& p : graphical_analytic(b).sorted_members()) {
    CHECK(cone_feasible(v, w, p));
    CHECK(cone_feasible(v, w, p.reversed()));
  }
  CHECK_FALSE(cone_feasible(v, w, Permutation({1, 2, 3, 4, 5})));
  CHECK_FALSE(cone_feasible(v, w, Permutation({1, 3, 2, 4, 5})));

  const Matrix q = modified_star_fiedler_basis(5);
  CHECK(cone_feasible(q.col(0), q.col(1), Permutation({2, 3, 4, 1, 5})));
  CHECK_FALSE(cone_feasible(q.col(0), q.col(1), Permutation({1, 2, 3, 4, 5})));
  CHECK_THROWS_AS(cone_feasible(q.col(0), q.col(1), Permutation({1, 2, 3, 4})),
                  DimensionMismatch);
  CHECK_THROWS_AS(cone_feasible({1.0, 2.0, 3.0}, {2.0, 4.0, 6.0}, Permutation({1, 2, 3})),
                  DegenerateBasis);
}

TEST_CASE("oracle enumeration refuses large orders") {
  CHECK_THROWS_AS(enumerate_by_oracle(Vector(9, 0.0), Vector(9, 1.0)), TooLarge);
}

TEST_CASE("monte carlo sampling: deterministic, and a subset of the sweep") {
  const Matrix b = petersen_fiedler_basis(5);
  const PermutationSet full = graphical_analytic(b);
  CHECK_EQ(full.size(), 5600);
  const PermutationSet mc1 = monte_carlo_method(b, 5000, 1);
  const PermutationSet mc1_again = monte_carlo_method(b, 5000, 1);
  CHECK(mc1 == mc1_again);
  CHECK(mc1.is_subset_of(full));
  CHECK_EQ(BigInt(mc1.size()), petersen_lower_bound(5));
  const PermutationSet mc2 = monte_carlo_method(b, 5000, 2);
  CHECK(mc2.is_subset_of(full));
}

TEST_CASE("monte carlo on the cycle finds the strict-interval orderings") {
  const Matrix b = cycle_fiedler_basis(5);
  const PermutationSet mc = monte_carlo_method(b, 2000, 3);
  CHECK_EQ(mc.size(), 5);
  CHECK(mc.is_subset_of(graphical_analytic(b)));
}

TEST_CASE("monte carlo rejects nonsense parameters") {
  CHECK_THROWS_AS(monte_carlo_method(Matrix(5, 1), 100, 0), BadParameter);
  CHECK_THROWS_AS(monte_carlo_method(Matrix(5, 2), 0, 0), BadParameter);
}

TEST_CASE("worker count does not change any result") {
  const Matrix b = cycle_fiedler_basis(6);
  CHECK(graphical_method(b.col(0), b.col(1), -1.0, kDefaultExplosionCap, 3) ==
        graphical_analytic(b));
  CHECK(monte_carlo_method(b, 1000, 5, -1.0, kDefaultExplosionCap, 3) ==
        monte_carlo_method(b, 1000, 5));
}

TEST_CASE("eigenspaces of other dimensions are refused by the sweep") {
  const FiedlerSpace fs = fiedler_space(laplacian(similarity(gen_star(6))));
  REQUIRE_EQ(fs.multiplicity, 4);
  CHECK_THROWS_AS(graphical_method(fs), UnsupportedMultiplicity);
}
