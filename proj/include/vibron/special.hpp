#ifndef VIBRON_SPECIAL_HPP
#define VIBRON_SPECIAL_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "vibron/tridiag.hpp"

namespace vibron {

// log C(n, k); lgamma keeps this exact to ~1 ulp for every n reachable here.
inline double log_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::domain_error("log_binomial: need 0 <= k <= n");
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

inline double binomial(int n, int k) { return std::exp(log_binomial(n, k)); }

// Physicists' Hermite polynomial H_k(x) by upward recurrence.
inline double hermite(int k, double x) {
  if (k < 0) throw std::domain_error("hermite: negative degree");
  double hm = 1.0;
  if (k == 0) return hm;
  double h = 2.0 * x;
  for (int j = 1; j < k; ++j) {
    const double next = 2.0 * x * h - 2.0 * j * hm;
    hm = h;
    h = next;
  }
  return h;
}

// h~_k(x) = H_k(x) / sqrt(2^k k!), the weight-free part of the oscillator
// eigenfunction. The recurrence keeps every intermediate O(1) where the bare
// H_k would overflow near k ~ 150.
inline double hermite_normalized(int k, double x) {
  if (k < 0) throw std::domain_error("hermite_normalized: negative degree");
  double hm = 1.0;
  if (k == 0) return hm;
  double h = std::sqrt(2.0) * x;
  for (int j = 1; j < k; ++j) {
    const double next =
        x * std::sqrt(2.0 / (j + 1.0)) * h - std::sqrt(j / (j + 1.0)) * hm;
    hm = h;
    h = next;
  }
  return h;
}

namespace detail {

// Compensated sum of a terminating series given the first term and the
// ratio term_{k+1}/term_k as a callable. Used only on series whose terms
// share a sign; alternating arguments go through the Legendre reduction
// below instead.
template <typename Ratio>
double sum_terminating(double first, int count, Ratio ratio) {
  double sum = 0.0, comp = 0.0;
  double term = first;
  for (int k = 0; k < count; ++k) {
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    term *= ratio(k);
  }
  return sum;
}

// sum_k C(N,k)^2 x^k for x < 0. The direct alternating sum cancels
// catastrophically once N grows (the largest term exceeds the result by
// ~C(N,N/2) at x = -1), so the sum is rewritten through
//   sum_k C(N,k)^2 x^k = (x - 1)^N P_N((x + 1)/(x - 1)),
// where the Legendre argument lies in (-1, 1) for every x < 0 and the
// upward recurrence only ever holds values bounded by 1.
inline long double alt_binomial_sq_sum(int N, long double x) {
  const long double z = (x + 1.0L) / (x - 1.0L);
  long double prev = 1.0L, cur = z;
  for (int k = 1; k < N; ++k) {
    const long double next = ((2 * k + 1) * z * cur - k * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  long double result = N == 0 ? 1.0L : cur;
  for (int k = 0; k < N; ++k) result *= x - 1.0L;
  return result;
}

}  // namespace detail

// 2F1(-N, -N; 1; x) for nonnegative integer N: sum_k C(N,k)^2 x^k.
inline double hyp2f1_nn(int N, double x) {
  if (N < 0) throw std::domain_error("hyp2f1_nn: negative N");
  if (x < 0.0) return static_cast<double>(detail::alt_binomial_sq_sum(N, x));
  return detail::sum_terminating(1.0, N + 1, [N, x](int k) {
    const double f = (N - k) / (k + 1.0);
    return x * f * f;
  });
}

// 3F2(1/2, -N, -N; 1, 1; x) for nonnegative integer N:
// sum_k (1/2)_k C(N,k)^2 x^k / k!.
// For x < 0 the series is taken in its Wallis-moment form: (1/2)_k / k!
// is the average of sin^{2k}(t) over a period, so the whole sum is the
// average of 2F1(-N, -N; 1; x sin^2 t). The integrand is a cosine
// polynomial of degree N in 2t, which an (N+1)-point midpoint rule
// integrates exactly, and each node evaluation is cancellation-free.
inline double hyp3f2_half(int N, double x) {
  if (N < 0) throw std::domain_error("hyp3f2_half: negative N");
  if (x < 0.0) {
    const int nodes = N + 1;
    const long double pi = 3.14159265358979323846264338327950288L;
    long double acc = 0.0L;
    for (int i = 0; i < nodes; ++i) {
      const long double s = std::sin(pi * (i + 0.5L) / nodes);
      acc += detail::alt_binomial_sq_sum(N, x * s * s);
    }
    return static_cast<double>(acc / nodes);
  }
  return detail::sum_terminating(1.0, N + 1, [N, x](int k) {
    const double nk = static_cast<double>(N - k);
    return x * (k + 0.5) * nk * nk / ((k + 1.0) * (k + 1.0) * (k + 1.0));
  });
}

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Hermite rule for weight exp(-x^2) by the Golub-Welsch method: the
// nodes are the eigenvalues of the Jacobi matrix of the (monic) Hermite
// recurrence and the weights come from the first eigenvector components.
// Nodes and weights are symmetrized about zero afterwards so that the
// returned rule is exactly even, which downstream parity arguments rely on.
inline QuadratureRule gauss_hermite(int m) {
  if (m < 1 || m > 200) throw std::domain_error("gauss_hermite: order must be in [1, 200]");

  TridiagonalMatrix jacobi;
  jacobi.diag.assign(m, 0.0);
  jacobi.off.resize(m > 0 ? m - 1 : 0);
  for (int k = 1; k < m; ++k) jacobi.off[k - 1] = std::sqrt(k / 2.0);

  const TridiagonalEigensystem es = tridiagonal_eigensystem(jacobi);

  const double sqrt_pi = std::sqrt(std::acos(-1.0));
  QuadratureRule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  for (int j = 0; j < m; ++j) {
    rule.nodes[j] = es.values[j];
    const double v0 = es.vectors[j][0];
    rule.weights[j] = sqrt_pi * v0 * v0;
  }

  for (int j = 0; j < m / 2; ++j) {
    const int jj = m - 1 - j;
    const double x = 0.5 * (rule.nodes[jj] - rule.nodes[j]);
    rule.nodes[j] = -x;
    rule.nodes[jj] = x;
    const double w = 0.5 * (rule.weights[j] + rule.weights[jj]);
    rule.weights[j] = w;
    rule.weights[jj] = w;
  }
  if (m % 2 == 1) rule.nodes[m / 2] = 0.0;

  return rule;
}

}  // namespace vibron

#endif
