#ifndef VIBRON_POSITION_HPP
#define VIBRON_POSITION_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "vibron/coefficients.hpp"
#include "vibron/special.hpp"
#include "vibron/variational.hpp"

namespace vibron {

namespace detail {

// h~_0(x) .. h~_kmax(x) in one sweep of the normalized recurrence.
inline std::vector<double> hermite_table(int kmax, double x) {
  std::vector<double> h(kmax + 1);
  h[0] = 1.0;
  if (kmax >= 1) h[1] = std::sqrt(2.0) * x;
  for (int k = 1; k < kmax; ++k)
    h[k + 1] = x * std::sqrt(2.0 / (k + 1.0)) * h[k] - std::sqrt(k / (k + 1.0)) * h[k - 1];
  return h;
}

}  // namespace detail

// Wavefunction of an N-boson state at q = (q0, q1, q2): the q0 axis hosts
// the N - n scalar quanta and the rotational pair carries n - m and m.
// Written with unit-normalized Hermite functions, the triple product of
// oscillator eigenfunctions becomes
//   psi(q) = pi^{-3/4} exp(-|q|^2/2) sum_{n,m} c_{n,m}
//            h~_{N-n}(q0) h~_{n-m}(q1) h~_m(q2).
inline double evaluate_psi(const CoefficientTable& state, double q0, double q1, double q2) {
  const int N = state.N();
  const std::vector<double> h0 = detail::hermite_table(N, q0);
  const std::vector<double> h1 = detail::hermite_table(N, q1);
  const std::vector<double> h2 = detail::hermite_table(N, q2);

  double s = 0.0;
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= n; ++m) s += state.at(n, m) * h0[N - n] * h1[n - m] * h2[m];

  const double pi = std::acos(-1.0);
  return std::pow(pi, -0.75) * std::exp(-0.5 * (q0 * q0 + q1 * q1 + q2 * q2)) * s;
}

// Position-space inverse participation ratio, integral of psi^4 over R^3.
// Factoring the Gaussian out of psi leaves a polynomial part S of per-axis
// degree at most N, so psi^4 = pi^-3 exp(-2|q|^2) S^4 has polynomial
// degree at most 4N per axis. After q = u/sqrt(2) the weight becomes the
// Gauss-Hermite one, and m_points >= 2N + 2 nodes per axis integrate the
// result exactly up to rounding:
//   P = pi^-3 2^-3/2 sum_{ijk} w_i w_j w_k S(u_i/sqrt2, u_j/sqrt2, u_k/sqrt2)^4.
// m_points = 0 selects that minimal exact order.
inline double ipr_position(const CoefficientTable& state, int m_points = 0) {
  const int N = state.N();
  if (m_points == 0) m_points = 2 * N + 2;
  if (m_points < 2 * N + 2)
    throw std::domain_error("ipr_position: need at least 2N + 2 quadrature points per axis");

  const QuadratureRule rule = gauss_hermite(m_points);
  const int M = m_points;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  // table[i][k] = h~_k(u_i / sqrt 2)
  std::vector<std::vector<double>> table(M);
  for (int i = 0; i < M; ++i) table[i] = detail::hermite_table(N, rule.nodes[i] * inv_sqrt2);

  // Contract the rotational axes first: rot[n](j, k) = sum_m c_{n,m}
  // h~_{n-m}(u_j) h~_m(u_k); then fold in the q0 axis per grid point.
  std::vector<std::vector<double>> rot(N + 1,
                                       std::vector<double>(static_cast<std::size_t>(M) * M, 0.0));
  for (int n = 0; n <= N; ++n)
    for (int j = 0; j < M; ++j)
      for (int k = 0; k < M; ++k) {
        double s = 0.0;
        for (int m = 0; m <= n; ++m) s += state.at(n, m) * table[j][n - m] * table[k][m];
        rot[n][static_cast<std::size_t>(j) * M + k] = s;
      }

  double sum = 0.0, comp = 0.0;
  for (int i = 0; i < M; ++i) {
    const double wi = rule.weights[i];
    for (int j = 0; j < M; ++j) {
      const double wij = wi * rule.weights[j];
      for (int k = 0; k < M; ++k) {
        double s = 0.0;
        for (int n = 0; n <= N; ++n)
          s += table[i][N - n] * rot[n][static_cast<std::size_t>(j) * M + k];
        const double s2 = s * s;
        const double term = wij * rule.weights[k] * s2 * s2;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
      }
    }
  }

  const double pi = std::acos(-1.0);
  return sum / (pi * pi * pi * 2.0 * std::sqrt(2.0));
}

// Participation ratio over the number basis, sum of c^4.
inline double ipr_basis(const CoefficientTable& state) {
  const int N = state.N();
  double s = 0.0;
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= n; ++m) {
      const double c2 = state.at(n, m) * state.at(n, m);
      s += c2 * c2;
    }
  return s;
}

// Closed form of ipr_basis for the condensate and even-cat states through
// the terminating series 3F2(1/2,-N,-N;1,1;x) at x = +-r^4.
inline double ipr_basis_closed_form(int N, double r, AnsatzKind kind) {
  if (N < 0) throw std::domain_error("ipr_basis_closed_form: negative N");
  if (kind == AnsatzKind::CatOdd)
    throw std::domain_error("ipr_basis_closed_form: only CS and CatEven forms are defined");
  const double r2 = r * r;
  const double x = r2 * r2;
  if (kind == AnsatzKind::CS)
    return hyp3f2_half(N, x) * std::exp(-2.0 * N * std::log1p(r2));
  const double log_den = N * std::log1p(r2) + std::log1p(overlap(N, r));
  return 2.0 * (hyp3f2_half(N, x) + hyp3f2_half(N, -x)) * std::exp(-2.0 * log_den);
}

}  // namespace vibron

#endif
