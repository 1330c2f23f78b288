#include "seriate/graphs.hpp"

#include <algorithm>
#include <numeric>

#include "seriate/errors.hpp"

namespace seriate {

void GraphFamilySpec::validate() const {
  switch (family) {
    case Family::star:
    case Family::modified_star:
      if (n < 5) throw BadParameter("family needs n >= 5");
      break;
    case Family::cycle:
      if (n < 3) throw BadParameter("cycle needs n >= 3");
      break;
    case Family::petersen:
      if (n < 5) throw BadParameter("petersen needs n >= 5");
      if (skip < 1 || 2 * skip >= n) throw BadParameter("petersen needs 1 <= skip < n/2");
      break;
  }
}

int GraphFamilySpec::node_count() const { return family == Family::petersen ? 2 * n : n; }

std::optional<Family> family_from_string(const std::string& name) {
  if (name == "star") return Family::star;
  if (name == "modified_star") return Family::modified_star;
  if (name == "cycle") return Family::cycle;
  if (name == "petersen") return Family::petersen;
  return std::nullopt;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::star: return "star";
    case Family::modified_star: return "modified_star";
    case Family::cycle: return "cycle";
    case Family::petersen: return "petersen";
  }
  return "?";
}

DataMatrix gen_star(int n) {
  if (n < 3) throw BadParameter("star needs n >= 3");
  Matrix e(n, n - 1);
  for (int j = 0; j < n - 1; ++j) {
    e(0, j) = 1.0;
    e(j + 1, j) = 1.0;
  }
  return DataMatrix(std::move(e));
}

DataMatrix gen_modified_star(int n) {
  if (n < 5) throw BadParameter("modified star needs n >= 5");
  Matrix e(n, 2 * n - 5);
  // Star part: hub row covers the first n-1 type columns, leaf i holds
  // type i.
  for (int j = 0; j < n - 1; ++j) {
    e(0, j) = 1.0;
    e(j + 1, j) = 1.0;
  }
  // Chain part: extra type j is shared by leaves j and j+1, linking the
  // first n-3 leaves. The hub has none of these types.
  for (int j = 0; j < n - 4; ++j) {
    e(j + 1, n - 1 + j) = 1.0;
    e(j + 2, n - 1 + j) = 1.0;
  }
  return DataMatrix(std::move(e));
}

DataMatrix gen_cycle(int n) {
  if (n < 3) throw BadParameter("cycle needs n >= 3");
  Matrix e(n, n);
  for (int i = 0; i < n; ++i) {
    e(i, i) = 1.0;
    e(i, (i + 1) % n) = 1.0;
  }
  return DataMatrix(std::move(e));
}

DataMatrix gen_petersen(int n, int skip) {
  if (n < 5) throw BadParameter("petersen needs n >= 5");
  if (skip < 1 || 2 * skip >= n) throw BadParameter("petersen needs 1 <= skip < n/2");
  // Nodes: 0..n-1 outer, n..2n-1 inner. Types: outer cycle edges, spokes,
  // inner skip-cycle edges; n of each.
  Matrix e(2 * n, 3 * n);
  for (int j = 0; j < n; ++j) {
    e(j, j) = 1.0;
    e((j + 1) % n, j) = 1.0;
    e(j, n + j) = 1.0;
    e(n + j, n + j) = 1.0;
    e(n + j, 2 * n + j) = 1.0;
    e(n + (j + skip) % n, 2 * n + j) = 1.0;
  }
  return DataMatrix(std::move(e));
}

DataMatrix make_data_matrix(const GraphFamilySpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::star: return gen_star(spec.n);
    case Family::modified_star: return gen_modified_star(spec.n);
    case Family::cycle: return gen_cycle(spec.n);
    case Family::petersen: return gen_petersen(spec.n, spec.skip);
  }
  throw BadParameter("unknown family");
}

SymMatrix similarity(const DataMatrix& a) {
  const std::size_t n = a.rows(), m = a.cols();
  SymMatrix s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t t = 0; t < m; ++t) sum += a(i, t) * a(j, t);
      s.set(i, j, sum);
    }
  return s;
}

bool is_r_matrix(const SymMatrix& s, double tol) {
  const std::size_t n = s.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j + 1 < n; ++j)
      if (s(i, j) < s(i, j + 1) - tol) return false;
    for (std::size_t j = i; j >= 1; --j)
      if (s(i, j) < s(i, j - 1) - tol) return false;
  }
  return true;
}

std::optional<Permutation> find_r_permutation(const SymMatrix& s, int n_max) {
  const int n = static_cast<int>(s.order());
  if (n > n_max) throw TooLarge("order " + std::to_string(n) + " exceeds brute-force limit " +
                                std::to_string(n_max));
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  SymMatrix t(n);
  do {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) t.set(i, j, s(p[i], p[j]));
    if (is_r_matrix(t)) {
      std::vector<int> one_based(p.begin(), p.end());
      for (int& v : one_based) ++v;
      return Permutation(std::move(one_based));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

bool is_pre_r_bruteforce(const SymMatrix& s, int n_max) {
  return find_r_permutation(s, n_max).has_value();
}

}  // namespace seriate
