#ifndef VIBRON_VARIATIONAL_HPP
#define VIBRON_VARIATIONAL_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "vibron/basis.hpp"
#include "vibron/coefficients.hpp"
#include "vibron/special.hpp"

namespace vibron {

enum class AnsatzKind { CS, CatEven, CatOdd };

struct VariationalResult {
  AnsatzKind kind = AnsatzKind::CS;
  double r_e = 0.0;
  double energy_per_particle = 0.0;
  int N = 0;  // 0 for the N-independent coherent-state functional
  double xi = 0.0;
};

// Critical coupling of the mean-field energy functional.
inline constexpr double xi_critical = 0.2;

// Upper end of the equilibrium-radius search interval. The radius is 1 at
// xi = 1 and decreases toward the linear phase, so [0, 3] brackets the
// minimum with a wide margin.
inline constexpr double radius_search_max = 3.0;

namespace detail {

inline double powi(double x, int k) {
  double p = 1.0;
  for (double f = x; k > 0; k >>= 1, f *= f)
    if (k & 1) p *= f;
  return p;
}

}  // namespace detail

// Condensate expansion coefficients: c_{n,m} = sqrt(C(N,n) C(n,m))
// (-r/sqrt2)^n (-1)^m / (1+r^2)^{N/2}. Magnitudes go through logs so that
// no intermediate binomial overflows at large N.
inline CoefficientTable cs_coefficients(int N, double r) {
  if (N < 0) throw std::domain_error("cs_coefficients: negative N");
  if (!std::isfinite(r)) throw std::domain_error("cs_coefficients: r must be finite");

  CoefficientTable c(N);
  if (r == 0.0) {
    c.at(0, 0) = 1.0;
    return c;
  }
  const double log_r_factor = std::log(std::abs(r) / std::sqrt(2.0));
  const double log_norm = 0.5 * N * std::log1p(r * r);
  const double sign_r = r > 0.0 ? -1.0 : 1.0;  // sign of -r
  double sign_n = 1.0;
  for (int n = 0; n <= N; ++n) {
    double sign_m = sign_n;
    for (int m = 0; m <= n; ++m) {
      const double lg = 0.5 * (log_binomial(N, n) + log_binomial(n, m));
      c.at(n, m) = sign_m * std::exp(lg + n * log_r_factor - log_norm);
      sign_m = -sign_m;
    }
    sign_n *= sign_r;
  }
  return c;
}

// <N;-r | N;r> = ((1-r^2)/(1+r^2))^N.
inline double overlap(int N, double r) {
  if (N < 0) throw std::domain_error("overlap: negative N");
  return detail::powi((1.0 - r * r) / (1.0 + r * r), N);
}

// Parity-projected condensate. Projection doubles the surviving-parity
// entries of cs_coefficients and removes the rest, so the table is built
// directly on the surviving rows; the other rows are exact zeros.
inline CoefficientTable cat_coefficients(int N, double r, AnsatzKind kind) {
  if (kind == AnsatzKind::CS)
    throw std::domain_error("cat_coefficients: kind must be CatEven or CatOdd");
  const int keep = kind == AnsatzKind::CatEven ? 0 : 1;
  const double sign = keep == 0 ? 1.0 : -1.0;
  const double norm_sq = 2.0 * (1.0 + sign * overlap(N, r));
  if (norm_sq < 1e-14)
    throw std::domain_error("cat_coefficients: parity projection yields the null vector");

  const CoefficientTable base = cs_coefficients(N, r);
  const double scale = 2.0 / std::sqrt(norm_sq);
  CoefficientTable c(N);
  for (int n = keep; n <= N; n += 2)
    for (int m = 0; m <= n; ++m) c.at(n, m) = scale * base.at(n, m);
  return c;
}

// Energy per particle of the condensate; independent of N.
inline double cs_energy(double xi, double r) {
  const double r2 = r * r;
  const double t = (1.0 - r2) / (1.0 + r2);
  return (1.0 - xi) * r2 / (1.0 + r2) + xi * t * t;
}

inline VariationalResult cs_equilibrium(double xi) {
  if (!(xi >= 0.0 && xi <= 1.0)) throw std::domain_error("cs_equilibrium: xi must be in [0, 1]");
  VariationalResult res;
  res.kind = AnsatzKind::CS;
  res.xi = xi;
  if (xi <= xi_critical) {
    res.r_e = 0.0;
    res.energy_per_particle = xi;
  } else {
    res.r_e = std::sqrt((5.0 * xi - 1.0) / (3.0 * xi + 1.0));
    res.energy_per_particle = (-9.0 * xi * xi + 10.0 * xi - 1.0) / (16.0 * xi);
  }
  return res;
}

// <n>_+ / N in the even cat state.
inline double cat_mean_n(int N, double r) {
  if (N < 2) throw std::domain_error("cat_mean_n: N must be >= 2");
  const double r2 = r * r;
  const double u = 1.0 / (1.0 + r2);
  const double t = (1.0 - r2) * u;
  return r2 * u * (1.0 - detail::powi(t, N - 1)) / (1.0 + detail::powi(t, N));
}

// <W^2>_+ / N in the even cat state.
inline double cat_mean_w2(int N, double r) {
  if (N < 2) throw std::domain_error("cat_mean_w2: N must be >= 2");
  const double r2 = r * r;
  const double u = 1.0 / (1.0 + r2);
  const double t = (1.0 - r2) * u;
  const double head = u * u * (1.0 + 2.0 * N * r2 + r2 * r2);
  return 2.0 * (detail::powi(t, N) + head) / (1.0 + detail::powi(t, N));
}

// Energy per particle of the even cat state; N-dependent, unlike cs_energy.
inline double cat_energy(int N, double xi, double r) {
  if (N < 2) throw std::domain_error("cat_energy: N must be >= 2");
  return (1.0 - xi) * cat_mean_n(N, r) +
         xi * (N + 1.0 - cat_mean_w2(N, r)) / (N - 1.0);
}

// Equilibrium radius and energy of the even cat state: coarse scan over
// r in {0, 0.02, ..., radius_search_max}, golden-section refinement of
// the surrounding bracket down to 1e-10, then one parabolic vertex step.
// The functional is very flat near the critical region, so the coarse
// pass picks the basin and the refinement never has to guess one; the
// final vertex step recovers the digits comparison-based search loses to
// rounding noise in the energy evaluations. r = 0 is an ordinary boundary
// point of the search: at finite N the optimal radius is positive for
// every xi > 0 and the scan must be allowed to find values under the
// coarse step.
inline VariationalResult cat_equilibrium(int N, double xi) {
  if (N < 2) throw std::domain_error("cat_equilibrium: N must be >= 2");
  if (!(xi >= 0.0 && xi <= 1.0)) throw std::domain_error("cat_equilibrium: xi must be in [0, 1]");

  const double step = 0.02;
  const int count = static_cast<int>(std::round(radius_search_max / step)) + 1;
  int best = 0;
  double best_energy = cat_energy(N, xi, 0.0);
  for (int i = 1; i < count; ++i) {
    const double e = cat_energy(N, xi, i * step);
    if (e < best_energy) {
      best_energy = e;
      best = i;
    }
  }
  if (best == count - 1)
    throw std::runtime_error("cat_equilibrium: minimum hit the end of the search interval");

  double a = std::max(0.0, (best - 1) * step);
  double b = std::min(radius_search_max, (best + 1) * step);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = cat_energy(N, xi, x1);
  double f2 = cat_energy(N, xi, x2);
  while (b - a > 1e-10) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = cat_energy(N, xi, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = cat_energy(N, xi, x2);
    }
  }

  // Comparison-based search stalls once energy differences fall below
  // rounding noise, leaving r off by ~sqrt(eps / E''). The three-point
  // vertex uses a stencil wide enough (h = 1e-5) that the curvature
  // signal is ~1e-10, far above the ~1e-16 noise in each evaluation.
  double r_e = 0.5 * (a + b);
  const double h = 1e-5;
  if (r_e > h) {
    const double f_lo = cat_energy(N, xi, r_e - h);
    const double f_mid = cat_energy(N, xi, r_e);
    const double f_hi = cat_energy(N, xi, r_e + h);
    const double curvature = f_hi - 2.0 * f_mid + f_lo;
    if (curvature > 0.0)
      r_e = std::clamp(r_e - 0.5 * h * (f_hi - f_lo) / curvature, r_e - h, r_e + h);
  }

  VariationalResult res;
  res.kind = AnsatzKind::CatEven;
  res.N = N;
  res.xi = xi;
  res.r_e = r_e;
  res.energy_per_particle = cat_energy(N, xi, res.r_e);
  return res;
}

// Closed-form even-cat equilibrium, available for N = 2 and N = 3. Written
// so that no term divides by xi: with X = sqrt(1 - 2xi + 5xi^2),
// (X - 1)/(2xi) = (5xi - 2)/(2(X + 1)), and analogously for N = 3.
inline VariationalResult cat_equilibrium_closed_form(int N, double xi) {
  if (!(xi >= 0.0 && xi <= 1.0))
    throw std::domain_error("cat_equilibrium_closed_form: xi must be in [0, 1]");
  VariationalResult res;
  res.kind = AnsatzKind::CatEven;
  res.N = N;
  res.xi = xi;
  if (N == 2) {
    const double x = std::sqrt(1.0 + xi * (5.0 * xi - 2.0));
    res.r_e = std::sqrt(std::max(0.0, 0.5 + (5.0 * xi - 2.0) / (2.0 * (x + 1.0))));
    res.energy_per_particle = (1.0 + xi - x) / 2.0;
  } else if (N == 3) {
    const double x = std::sqrt(1.0 + xi * (7.0 * xi - 4.0));
    res.r_e = std::sqrt(std::max(0.0, 2.0 / 3.0 + (7.0 * xi - 4.0) / (3.0 * (x + 1.0))));
    res.energy_per_particle = (1.0 + xi - x) / 3.0;
  } else {
    throw std::domain_error("cat_equilibrium_closed_form: only N = 2 and N = 3 have closed forms");
  }
  return res;
}

}  // namespace vibron

#endif
