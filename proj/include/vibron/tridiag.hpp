#ifndef VIBRON_TRIDIAG_HPP
#define VIBRON_TRIDIAG_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace vibron {

// Real symmetric tridiagonal matrix; the off-diagonal is stored once,
// off[k] coupling indices k and k+1.
struct TridiagonalMatrix {
  std::vector<double> diag;
  std::vector<double> off;

  int dim() const { return static_cast<int>(diag.size()); }
};

struct TridiagonalEigensystem {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[j] pairs with values[j], unit norm
};

// Implicit-shift QL with accumulated rotations, following the classic
// Bowdler-Martin-Reinsch-Wilkinson tql2 procedure. Blocks in this project
// are small (dim <= N/2 + 1), so robustness is worth more than speed.
inline TridiagonalEigensystem tridiagonal_eigensystem(const TridiagonalMatrix& m) {
  const int n = m.dim();
  if (static_cast<int>(m.off.size()) + 1 != n && n > 0)
    throw std::domain_error("tridiagonal_eigensystem: off-diagonal size must be dim-1");

  TridiagonalEigensystem out;
  if (n == 0) return out;

  std::vector<double> d = m.diag;
  std::vector<double> e(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) e[i] = m.off[i];

  // z[k*n + j]: component k of the j-th accumulated column
  std::vector<double> z(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i) * n + i] = 1.0;

  const double eps = std::numeric_limits<double>::epsilon();
  double f = 0.0;
  double tst1 = 0.0;

  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    int mm = l;
    while (mm < n && std::abs(e[mm]) > eps * tst1) ++mm;

    if (mm > l) {
      int iter = 0;
      do {
        if (++iter > 50)
          throw std::runtime_error("tridiagonal_eigensystem: QL iteration did not converge");

        // implicit shift from the leading 2x2
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (int i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        // QL sweep from mm-1 down to l
        p = d[mm];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (int i = mm - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          for (int k = 0; k < n; ++k) {
            const std::size_t a = static_cast<std::size_t>(k) * n + i;
            h = z[a + 1];
            z[a + 1] = s * z[a] + c * h;
            z[a] = c * z[a] - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&d](int a, int b) { return d[a] < d[b]; });

  out.values.resize(n);
  out.vectors.assign(n, std::vector<double>(n));
  for (int j = 0; j < n; ++j) {
    out.values[j] = d[order[j]];
    for (int k = 0; k < n; ++k)
      out.vectors[j][k] = z[static_cast<std::size_t>(k) * n + order[j]];
  }
  return out;
}

}  // namespace vibron

#endif
