#include "seriate/closed_forms.hpp"

#include <algorithm>
#include <cmath>

#include "seriate/errors.hpp"
#include "seriate/linalg.hpp"

namespace seriate {

BigInt factorial(int n) {
  if (n < 0) throw BadParameter("factorial of a negative number");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt naive_count(int n, int k) {
  if (k < 1 || k >= n) throw BadParameter("need 1 <= k < n");
  return factorial(k + 1) * factorial(n - k);
}

BigInt modified_star_count(int n) {
  if (n < 5) throw BadParameter("modified star needs n >= 5");
  return 3 * factorial(n - 2);
}

BigInt petersen_lower_bound(int n) {
  if (n < 5) throw BadParameter("petersen needs n >= 5");
  return (BigInt(1) << n) * n;
}

std::vector<std::pair<double, int>> star_spectrum(int n) {
  if (n < 3) throw BadParameter("star needs n >= 3");
  return {{0.0, 1}, {1.0, n - 2}, {static_cast<double>(n), 1}};
}

Matrix modified_star_fiedler_basis(int n) {
  if (n < 5) throw BadParameter("modified star needs n >= 5");
  Matrix q(n, 2);
  // Column 0: (0, -1, ..., -1, n-3, 0); column 1: (0, -1, ..., -1, n-2).
  // Zero hub entry, constant bulk, one distinguished leaf each.
  for (int i = 1; i < n; ++i) {
    q(i, 0) = -1.0;
    q(i, 1) = -1.0;
  }
  q(n - 2, 0) = static_cast<double>(n - 3);
  q(n - 1, 0) = 0.0;
  q(n - 1, 1) = static_cast<double>(n - 2);
  return q;
}

double cycle_fiedler_value(int n) {
  if (n < 3) throw BadParameter("cycle needs n >= 3");
  return 2.0 - 2.0 * std::cos(2.0 * M_PI / static_cast<double>(n));
}

Matrix cycle_fiedler_basis(int n) {
  if (n < 3) throw BadParameter("cycle needs n >= 3");
  Matrix b(n, 2);
  for (int j = 0; j < n; ++j) {
    const double ang = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n);
    b(j, 0) = std::cos(ang);
    b(j, 1) = std::sin(ang);
  }
  return b;
}

double petersen_fiedler_value(int n) {
  if (n < 5) throw BadParameter("petersen needs n >= 5");
  Vector col(n, 0.0);
  col[0] = 3.0;
  col[1] = -1.0;
  col[n - 1] = -1.0;
  std::vector<std::complex<double>> lam = circulant_spectrum(col);
  Vector re(n);
  for (int k = 0; k < n; ++k) re[k] = lam[k].real();
  std::sort(re.begin(), re.end());
  return re[1] - 1.0;
}

Matrix petersen_fiedler_basis(int n) {
  if (n < 5) throw BadParameter("petersen needs n >= 5");
  const Matrix cyc = cycle_fiedler_basis(n);
  Matrix b(2 * n, 2);
  for (int j = 0; j < n; ++j)
    for (int c = 0; c < 2; ++c) {
      b(j, c) = cyc(j, c);
      b(n + j, c) = cyc(j, c);
    }
  return b;
}

std::optional<CountFormula> closed_form_count(Family family, int n) {
  if (family == Family::modified_star && n >= 5)
    return CountFormula{family, n, modified_star_count(n)};
  return std::nullopt;
}

std::optional<std::uint64_t> known_cycle_count(int n) {
  switch (n) {
    case 4: return 8;
    case 5: return 15;
    case 6: return 30;
    case 7: return 49;
    case 8: return 88;
    case 9: return 135;
    case 10: return 230;
    default: return std::nullopt;
  }
}

std::optional<std::uint64_t> known_petersen_count(int n) {
  switch (n) {
    case 5: return 5600;
    case 6: return 48000;
    case 7: return 192640;
    case 8: return 1546240;
    case 9: return 5967360;
    default: return std::nullopt;
  }
}

}  // namespace seriate
