#ifndef VIBRON_FOCKSPACE_HPP
#define VIBRON_FOCKSPACE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "vibron/basis.hpp"
#include "vibron/coefficients.hpp"

namespace vibron {

// Dense cross-check route, independent of the blocked matrix elements in
// basis.hpp: enumerate the full three-mode Fock space at fixed total boson
// number and build n, l, D+- and W^2 from raw ladder-operator action. The
// blocked code never sees these operators, which is what makes agreement
// between the two a meaningful check rather than a tautology.

using DenseMatrix = std::vector<std::vector<double>>;

// Occupations (n_s, n_plus, n_minus) of the scalar and the two circular
// bosons, n_s + n_plus + n_minus = N.
struct FockBasis {
  int N = 0;
  std::vector<std::array<int, 3>> states;

  int dim() const { return static_cast<int>(states.size()); }

  int index(int ns, int np, int nm) const {
    for (int i = 0; i < dim(); ++i)
      if (states[i][0] == ns && states[i][1] == np && states[i][2] == nm) return i;
    throw std::domain_error("FockBasis: occupation triple not in basis");
  }
};

inline FockBasis fock_basis(int N) {
  if (N < 0) throw std::domain_error("fock_basis: negative N");
  FockBasis b;
  b.N = N;
  for (int ns = N; ns >= 0; --ns)
    for (int np = N - ns; np >= 0; --np) b.states.push_back({ns, np, N - ns - np});
  return b;
}

namespace detail {

inline DenseMatrix zero_matrix(int d) { return DenseMatrix(d, std::vector<double>(d, 0.0)); }

// a_to^dagger a_from acting inside the fixed-N space; `to`/`from` index the
// (sigma, tau_plus, tau_minus) triple.
inline DenseMatrix hop(const FockBasis& b, int to, int from) {
  DenseMatrix m = zero_matrix(b.dim());
  for (int j = 0; j < b.dim(); ++j) {
    std::array<int, 3> occ = b.states[j];
    if (occ[from] == 0) continue;
    const double amp = std::sqrt(static_cast<double>(occ[from]) * (occ[to] + 1));
    occ[from] -= 1;
    occ[to] += 1;
    m[b.index(occ[0], occ[1], occ[2])][j] += amp;
  }
  return m;
}

}  // namespace detail

inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  const int d = static_cast<int>(a.size());
  DenseMatrix c = detail::zero_matrix(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const double aik = a[i][k];
      if (aik == 0.0) continue;
      for (int j = 0; j < d; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

// Pair-mode number operator n = tau+^dag tau+ + tau-^dag tau-.
inline DenseMatrix number_operator(const FockBasis& b) {
  DenseMatrix m = detail::zero_matrix(b.dim());
  for (int j = 0; j < b.dim(); ++j) m[j][j] = b.states[j][1] + b.states[j][2];
  return m;
}

// Angular momentum l = tau+^dag tau+ - tau-^dag tau-.
inline DenseMatrix angular_momentum_operator(const FockBasis& b) {
  DenseMatrix m = detail::zero_matrix(b.dim());
  for (int j = 0; j < b.dim(); ++j) m[j][j] = b.states[j][1] - b.states[j][2];
  return m;
}

// D+ = sqrt2 (tau+^dag sigma - sigma^dag tau-), D- = D+^dag.
inline DenseMatrix dipole_plus(const FockBasis& b) {
  const double s = std::sqrt(2.0);
  DenseMatrix up = detail::hop(b, 1, 0);
  const DenseMatrix down = detail::hop(b, 0, 2);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) up[i][j] = s * (up[i][j] - down[i][j]);
  return up;
}

inline DenseMatrix dipole_minus(const FockBasis& b) {
  const double s = std::sqrt(2.0);
  DenseMatrix up = detail::hop(b, 0, 1);
  const DenseMatrix down = detail::hop(b, 2, 0);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) up[i][j] = s * (up[i][j] - down[i][j]);
  return up;
}

// W^2 = (D+ D- + D- D+)/2 + l^2.
inline DenseMatrix w2_operator(const FockBasis& b) {
  const DenseMatrix dp = dipole_plus(b);
  const DenseMatrix dm = dipole_minus(b);
  const DenseMatrix pm = matmul(dp, dm);
  const DenseMatrix mp = matmul(dm, dp);
  DenseMatrix m = detail::zero_matrix(b.dim());
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) m[i][j] = 0.5 * (pm[i][j] + mp[i][j]);
  for (int j = 0; j < b.dim(); ++j) {
    const double l = b.states[j][1] - b.states[j][2];
    m[j][j] += l * l;
  }
  return m;
}

inline DenseMatrix hamiltonian_dense(const ModelPoint& p, const FockBasis& b) {
  validate(p);
  if (b.N != p.N) throw std::domain_error("hamiltonian_dense: basis and model N differ");
  DenseMatrix h = w2_operator(b);
  const double scale = p.xi / (p.N - 1.0);
  const double pairing = static_cast<double>(p.N) * (p.N + 1);
  const DenseMatrix num = number_operator(b);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) {
      h[i][j] = scale * ((i == j ? pairing : 0.0) - h[i][j]);
      if (i == j) h[i][j] += (1.0 - p.xi) * num[i][i];
    }
  return h;
}

// Basis state |N; n, l> is the Fock state (N-n, (n+l)/2, (n-l)/2), so a
// coefficient table maps onto a dense vector entry-by-entry with
// n_plus = n - m and n_minus = m.
inline std::vector<double> to_fock_vector(const FockBasis& b, const CoefficientTable& c) {
  if (b.N != c.N()) throw std::domain_error("to_fock_vector: basis and table N differ");
  std::vector<double> v(b.dim(), 0.0);
  for (int n = 0; n <= c.N(); ++n)
    for (int m = 0; m <= n; ++m) v[b.index(c.N() - n, n - m, m)] = c.at(n, m);
  return v;
}

inline double expectation(const DenseMatrix& op, const std::vector<double>& v) {
  const int d = static_cast<int>(op.size());
  double s = 0.0;
  for (int i = 0; i < d; ++i) {
    double row = 0.0;
    for (int j = 0; j < d; ++j) row += op[i][j] * v[j];
    s += v[i] * row;
  }
  return s;
}

}  // namespace vibron

#endif
