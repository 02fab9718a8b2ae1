#ifndef VIBRON_ENTANGLEMENT_HPP
#define VIBRON_ENTANGLEMENT_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "vibron/coefficients.hpp"
#include "vibron/special.hpp"
#include "vibron/variational.hpp"

namespace vibron {

struct EntanglementReport {
  std::vector<double> lambdas;
  double purity = 1.0;
  double linear_entropy = 0.0;
  double von_neumann_bits = 0.0;
};

// Eigenvalues of the vibrational reduced density matrix. Tracing out the
// rotational pair leaves a diagonal RDM in the vibrational number basis,
// so lambda_n = sum_m c_{n,m}^2.
inline std::vector<double> rdm_eigenvalues(const CoefficientTable& state) {
  const int N = state.N();
  std::vector<double> lambdas(N + 1, 0.0);
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= n; ++m) lambdas[n] += state.at(n, m) * state.at(n, m);
  return lambdas;
}

// Closed-form RDM spectrum for the condensate and even-cat states.
inline std::vector<double> lambda_closed_form(int N, double r, AnsatzKind kind) {
  if (N < 0) throw std::domain_error("lambda_closed_form: negative N");
  if (kind == AnsatzKind::CatOdd)
    throw std::domain_error("lambda_closed_form: only CS and CatEven spectra are defined");

  std::vector<double> lambdas(N + 1, 0.0);
  if (r == 0.0) {
    lambdas[0] = 1.0;
    return lambdas;
  }
  const double r2 = r * r;
  const double log_r2 = std::log(r2);
  const double log_onep = std::log1p(r2);
  if (kind == AnsatzKind::CS) {
    for (int n = 0; n <= N; ++n)
      lambdas[n] = std::exp(log_binomial(N, n) + n * log_r2 - N * log_onep);
  } else {
    const double t_pow = overlap(N, r);
    const double log_den = N * log_onep + std::log1p(t_pow);
    for (int n = 0; n <= N; n += 2)
      lambdas[n] = 2.0 * std::exp(log_binomial(N, n) + n * log_r2 - log_den);
  }
  return lambdas;
}

// Tr(rho^2) in closed form through the terminating Gauss series
// 2F1(-N,-N;1;x) evaluated at x = +-r^4.
inline double purity_closed_form(int N, double r, AnsatzKind kind) {
  if (N < 0) throw std::domain_error("purity_closed_form: negative N");
  if (kind == AnsatzKind::CatOdd)
    throw std::domain_error("purity_closed_form: only CS and CatEven purities are defined");
  const double r2 = r * r;
  const double x = r2 * r2;
  if (kind == AnsatzKind::CS)
    return hyp2f1_nn(N, x) * std::exp(-2.0 * N * std::log1p(r2));
  const double log_den = N * std::log1p(r2) + std::log1p(overlap(N, r));
  return 2.0 * (hyp2f1_nn(N, x) + hyp2f1_nn(N, -x)) * std::exp(-2.0 * log_den);
}

// Purity, linear entropy and von Neumann entropy (bits) of an RDM
// spectrum. Rejects spectra that are more than rounding-noise away from a
// genuine probability distribution, then clips the noise.
inline EntanglementReport entropies(const std::vector<double>& lambdas) {
  double total = 0.0;
  for (double l : lambdas) {
    if (l < -1e-10) throw std::domain_error("entropies: negative RDM eigenvalue");
    total += l;
  }
  if (std::abs(total - 1.0) > 1e-8)
    throw std::domain_error("entropies: RDM eigenvalues do not sum to 1");

  EntanglementReport rep;
  rep.lambdas = lambdas;
  for (double& l : rep.lambdas)
    if (l < 0.0) l = 0.0;

  double purity = 0.0, entropy = 0.0;
  for (double l : rep.lambdas) {
    purity += l * l;
    if (l > 0.0) entropy -= l * std::log2(l);
  }
  rep.purity = purity;
  rep.linear_entropy = 1.0 - purity;
  rep.von_neumann_bits = entropy;
  return rep;
}

// Large-N reference values in the rigidly bent limit xi = 1, where both
// equilibrium radii equal 1.
struct BentPhaseAsymptotics {
  double L_cs_xi1 = 0.0;           // 1 - 4^{-N} C(2N, N)
  double L_cat_xi1 = 0.0;          // 1 - 2^{1-2N} C(2N, N)
  double purity_cat_stirling = 0;  // 2 / sqrt(pi N)
  double S_cat_xi1 = 0.0;          // (1/2) log2(N+1)
  double S_cs_xi1 = 0.0;           // 1 + (1/2) log2(N+1)
};

inline BentPhaseAsymptotics bent_phase_asymptotics(int N) {
  if (N < 1) throw std::domain_error("bent_phase_asymptotics: N must be >= 1");
  BentPhaseAsymptotics a;
  const double log_central = log_binomial(2 * N, N);
  a.L_cs_xi1 = 1.0 - std::exp(log_central - 2.0 * N * std::log(2.0));
  a.L_cat_xi1 = 1.0 - std::exp(log_central + (1.0 - 2.0 * N) * std::log(2.0));
  a.purity_cat_stirling = 2.0 / std::sqrt(std::acos(-1.0) * N);
  a.S_cat_xi1 = 0.5 * std::log2(N + 1.0);
  a.S_cs_xi1 = 1.0 + 0.5 * std::log2(N + 1.0);
  return a;
}

}  // namespace vibron

#endif
