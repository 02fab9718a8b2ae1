#ifndef VIBRON_SOLVER_HPP
#define VIBRON_SOLVER_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "vibron/basis.hpp"
#include "vibron/coefficients.hpp"
#include "vibron/tridiag.hpp"

namespace vibron {

// Spectrum of one angular-momentum sector together with its ground
// eigenvector expanded over the full (n, m) table; entries off the sector's
// n-ladder stay zero, so the table has definite l.
struct SpectralResult {
  int l = 0;
  std::vector<double> energies;
  CoefficientTable ground_vector;
  double ground_energy_per_particle = 0.0;
};

inline SpectralResult diagonalize_block(const ModelPoint& p, int l) {
  validate(p);
  const AngularBlock blk = angular_block(p.N, l);
  TridiagonalEigensystem es;
  try {
    es = tridiagonal_eigensystem(hamiltonian_block(p, l));
  } catch (const std::runtime_error& err) {
    throw std::runtime_error("diagonalize_block: sector l=" + std::to_string(l) + ": " +
                             err.what());
  }

  SpectralResult out;
  out.l = l;
  out.energies = es.values;
  out.ground_energy_per_particle = es.values.front() / p.N;

  // Global phase: the lowest-n amplitude is taken nonnegative. When it
  // underflows (decoupled ladder at xi = 0), fall back to the first
  // component that is clearly nonzero.
  std::vector<double> v = es.vectors.front();
  for (double a : v) {
    if (std::abs(a) > 1e-12) {
      if (a < 0.0)
        for (double& b : v) b = -b;
      break;
    }
  }

  out.ground_vector = CoefficientTable(p.N);
  for (int i = 0; i < blk.dim(); ++i) {
    const int n = blk.n_values[i];
    out.ground_vector.at(n, (n - l) / 2) = v[i];
  }
  return out;
}

// Scans sectors l = 0..N and returns the one holding the global ground
// state. Sectors +-l share a spectrum (l enters H through l^2 only), so
// nonnegative l suffices. Near-degenerate sectors (within 1e-9 relative)
// resolve to the smaller l; this keeps the reported sector continuous
// through xi = 1, where the lowest multiplet is degenerate across l.
inline SpectralResult ground_state(const ModelPoint& p) {
  validate(p);
  SpectralResult best = diagonalize_block(p, 0);
  for (int l = 1; l <= p.N; ++l) {
    SpectralResult cand = diagonalize_block(p, l);
    const double scale = std::max({1.0, std::abs(best.energies.front()),
                                   std::abs(cand.energies.front())});
    if (cand.energies.front() < best.energies.front() - 1e-9 * scale) best = std::move(cand);
  }
  return best;
}

}  // namespace vibron

#endif
