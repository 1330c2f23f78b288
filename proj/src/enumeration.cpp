#include "seriate/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <numeric>
#include <random>
#include <thread>

#include "seriate/errors.hpp"

namespace seriate {

namespace {

double max_abs(const Vector& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

void check_pair(const Vector& v, const Vector& w) {
  if (v.size() != w.size()) throw DimensionMismatch("basis vectors differ in length");
  if (v.size() < 2) throw BadParameter("need at least two lines");
}

// Largest 2x2 determinant over component pairs; zero iff v and w are
// linearly dependent.
double max_cross(const Vector& v, const Vector& w) {
  double m = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      m = std::max(m, std::abs(v[i] * w[j] - v[j] * w[i]));
  return m;
}

}  // namespace

double default_tau(const Vector& v, const Vector& w) { return 1e-9 * (max_abs(v) + max_abs(w)); }

LineArrangement build_line_arrangement(const Vector& v, const Vector& w, double tau) {
  check_pair(v, w);
  if (tau < 0.0) tau = default_tau(v, w);
  if (tau <= 0.0) throw DegenerateBasis("basis vectors are zero");

  double wmin = w[0], wmax = w[0];
  for (double x : w) {
    wmin = std::min(wmin, x);
    wmax = std::max(wmax, x);
  }
  if (wmax - wmin <= tau) throw DegenerateBasis("all slopes equal, no intersections");
  if (max_cross(v, w) <= 1e-12 * std::max(1.0, max_abs(v) * max_abs(w)))
    throw DegenerateBasis("basis vectors are linearly dependent");

  std::vector<double> gammas;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (std::abs(w[i] - w[j]) > tau) gammas.push_back((v[i] - v[j]) / (w[j] - w[i]));
  std::sort(gammas.begin(), gammas.end());

  LineArrangement arr;
  arr.v = v;
  arr.w = w;
  arr.tau = tau;
  // Transitive merge of a sorted list: a gap > tau closes the cluster. The
  // stored abscissa is the cluster mean, which keeps merged neighbors more
  // than tau apart and does not depend on input order.
  std::size_t begin = 0;
  for (std::size_t t = 1; t <= gammas.size(); ++t) {
    if (t == gammas.size() || gammas[t] - gammas[t - 1] > tau) {
      const double mean = std::accumulate(gammas.begin() + begin, gammas.begin() + t, 0.0) /
                          static_cast<double>(t - begin);
      arr.crossings.push_back({mean, static_cast<int>(t - begin)});
      begin = t;
    }
  }
  return arr;
}

namespace {

Vector line_values(const LineArrangement& arr, double gamma) {
  Vector f(arr.v.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = arr.v[i] + gamma * arr.w[i];
  return f;
}

struct Probe {
  Vector x;
  double tol;
};

std::vector<Probe> probe_points(const LineArrangement& arr) {
  std::vector<Probe> probes;
  // Ordering of the slopes themselves: the limit gamma -> infinity, where
  // parallel lines are tied and everything else is ordered by slope.
  probes.push_back({arr.w, arr.tau});
  auto at = [&](double gamma) {
    // Line values grow like |gamma|, so the tie tolerance is scaled along;
    // a pair crossing at a far-out abscissa still lands within it.
    probes.push_back({line_values(arr, gamma), arr.tau * (1.0 + std::abs(gamma))});
  };
  at(arr.crossings.front().gamma - 1.0);
  for (std::size_t i = 0; i < arr.crossings.size(); ++i) {
    at(arr.crossings[i].gamma);
    if (i + 1 < arr.crossings.size())
      at(0.5 * (arr.crossings[i].gamma + arr.crossings[i + 1].gamma));
  }
  at(arr.crossings.back().gamma + 1.0);
  return probes;
}

// Runs fn(i) for i in 0..count-1 over the requested number of workers.
// Worker results are merged by the caller in index order, so the outcome
// does not depend on scheduling.
template <typename Fn>
void parallel_indices(std::size_t count, int threads, Fn fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const int nw = std::min<std::size_t>(threads, count);
  std::vector<std::exception_ptr> errors(nw);
  std::vector<std::thread> pool;
  for (int t = 0; t < nw; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += nw) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

PermutationSet graphical_method(const Vector& v, const Vector& w, double tau, std::uint64_t cap,
                                int threads) {
  const LineArrangement arr = build_line_arrangement(v, w, tau);
  const std::vector<Probe> probes = probe_points(arr);

  std::vector<PermutationSet> partial(probes.size());
  parallel_indices(probes.size(), threads,
                   [&](std::size_t i) { partial[i] = tie_expand(probes[i].x, probes[i].tol, cap); });

  PermutationSet out;
  for (PermutationSet& p : partial) out.merge(p);
  return out;
}

PermutationSet graphical_method(const FiedlerSpace& fs, double tau, std::uint64_t cap,
                                int threads) {
  if (fs.multiplicity != 2)
    throw UnsupportedMultiplicity("line sweep needs multiplicity 2, got " +
                                  std::to_string(fs.multiplicity));
  return graphical_method(fs.basis.col(0), fs.basis.col(1), tau, cap, threads);
}

namespace {

// Uniform direction on the unit sphere in R^k, built from raw mt19937_64
// draws so the stream is identical on every platform. k = 2 maps one draw
// to an angle; higher k normalizes a Box-Muller Gaussian vector.
std::vector<Vector> draw_directions(std::uint64_t samples, std::uint64_t seed, std::size_t k) {
  std::mt19937_64 rng(seed);
  auto unit = [&] {  // in (0, 1]
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
  };
  std::vector<Vector> dirs(samples, Vector(k));
  for (auto& y : dirs) {
    if (k == 2) {
      const double ang = 2.0 * M_PI * unit();
      y[0] = std::cos(ang);
      y[1] = std::sin(ang);
      continue;
    }
    double nn = 0.0;
    do {
      for (std::size_t j = 0; j < k; j += 2) {
        const double r = std::sqrt(-2.0 * std::log(unit()));
        const double ang = 2.0 * M_PI * unit();
        y[j] = r * std::cos(ang);
        if (j + 1 < k) y[j + 1] = r * std::sin(ang);
      }
      nn = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
    } while (nn == 0.0);
    for (double& c : y) c /= nn;
  }
  return dirs;
}

}  // namespace

PermutationSet monte_carlo_method(const Matrix& basis, std::uint64_t samples, std::uint64_t seed,
                                  double tol, std::uint64_t cap, int threads) {
  const std::size_t n = basis.rows(), k = basis.cols();
  if (k < 2) throw BadParameter("need an eigenspace of dimension >= 2");
  if (samples < 1) throw BadParameter("need at least one sample");

  const std::vector<Vector> dirs = draw_directions(samples, seed, k);

  const int nw = std::max(1, threads);
  std::vector<PermutationSet> partial(nw);
  parallel_indices(nw, nw, [&](std::size_t worker) {
    Vector x(n);
    for (std::uint64_t s = worker; s < samples; s += nw) {
      const Vector& y = dirs[s];
      for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < k; ++j) acc += basis(i, j) * y[j];
        x[i] = acc;
      }
      partial[worker].merge(tie_expand(x, tol < 0.0 ? default_tie_tol(x) : tol, cap));
    }
  });

  PermutationSet out;
  for (PermutationSet& p : partial) out.merge(p);
  return out;
}

namespace {

// Feasibility of {z : A z >= 0} \ {0} for half-planes through the origin.
// If the cone has a nonzero point it has a boundary ray lying on some
// constraint line, so testing the two boundary directions of every
// constraint is a complete decision procedure.
template <typename Scalar, typename Sign>
bool cone_nonempty(const std::vector<std::pair<Scalar, Scalar>>& cons, Sign sign) {
  std::vector<std::pair<Scalar, Scalar>> active;
  for (const auto& c : cons)
    if (sign(c.first, c.first) != 0 || sign(c.second, c.second) != 0) active.push_back(c);
  if (active.empty()) return true;  // every direction is feasible

  for (const auto& c : active) {
    for (int flip = 0; flip < 2; ++flip) {
      const Scalar z1 = flip ? c.second : -c.second;
      const Scalar z2 = flip ? -c.first : c.first;
      bool ok = true;
      for (const auto& d : active) {
        const Scalar val = d.first * z1 + d.second * z2;
        if (sign(val, d.first * z1) < 0) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

bool integral(const Vector& x) {
  for (double v : x)
    if (v != std::floor(v) || std::abs(v) > 1e6) return false;
  return true;
}

}  // namespace

bool cone_feasible(const Vector& v, const Vector& w, const Permutation& p) {
  check_pair(v, w);
  const std::size_t n = v.size();
  if (static_cast<std::size_t>(p.order()) != n)
    throw DimensionMismatch("permutation order does not match basis length");

  if (integral(v) && integral(w)) {
    if (max_cross(v, w) == 0.0) throw DegenerateBasis("basis vectors are linearly dependent");
    std::vector<std::pair<std::int64_t, std::int64_t>> cons(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const std::size_t a = p[i] - 1, b = p[i + 1] - 1;
      cons[i] = {static_cast<std::int64_t>(v[b] - v[a]), static_cast<std::int64_t>(w[b] - w[a])};
    }
    return cone_nonempty(cons, [](std::int64_t val, std::int64_t) -> int {
      return val > 0 ? 1 : (val < 0 ? -1 : 0);
    });
  }

  if (max_cross(v, w) <= 1e-12 * std::max(1.0, max_abs(v) * max_abs(w)))
    throw DegenerateBasis("basis vectors are linearly dependent");
  // Sign with margin: a value is zero when it is within 1e-12 of the
  // magnitude that went into it, which certifies the sign against rounding
  // for bases, such as the cosine ones here, whose true nonzero margins
  // are far larger.
  const double scale = std::max(1.0, max_abs(v) + max_abs(w));
  std::vector<std::pair<double, double>> cons(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t a = p[i] - 1, b = p[i + 1] - 1;
    cons[i] = {v[b] - v[a], w[b] - w[a]};
  }
  const double floor_margin = 1e-12 * scale * scale;
  return cone_nonempty(cons, [floor_margin](double val, double part) -> int {
    const double margin = std::max(1e-12 * std::abs(part), floor_margin);
    if (val > margin) return 1;
    if (val < -margin) return -1;
    return 0;
  });
}

PermutationSet enumerate_by_oracle(const Vector& v, const Vector& w, int n_max) {
  check_pair(v, w);
  const int n = static_cast<int>(v.size());
  if (n > n_max)
    throw TooLarge("order " + std::to_string(n) + " exceeds oracle limit " + std::to_string(n_max));

  PermutationSet out;
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 1);
  do {
    // Feasibility is reversal-symmetric, so only the lexicographically
    // smaller representative of each pair is tested.
    if (m.front() > m.back()) continue;
    Permutation p(m);
    if (cone_feasible(v, w, p)) out.insert(p);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

}  // namespace seriate
