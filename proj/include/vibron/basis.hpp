#ifndef VIBRON_BASIS_HPP
#define VIBRON_BASIS_HPP

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "vibron/tridiag.hpp"

namespace vibron {

// One point of the model: total boson number N and control parameter xi.
// The Hamiltonian interpolates between the harmonic limit (xi = 0) and the
// displaced limit (xi = 1); its two-body term carries a 1/(N-1) factor, so
// N >= 2 is required wherever the full Hamiltonian appears.
struct ModelPoint {
  int N = 2;
  double xi = 0.0;
};

inline void validate(const ModelPoint& p) {
  if (p.N < 2) throw std::domain_error("ModelPoint: N must be >= 2");
  if (!(p.xi >= 0.0 && p.xi <= 1.0)) throw std::domain_error("ModelPoint: xi must be in [0, 1]");
}

// Basis state |N; n, l>: n quanta in the degenerate pair mode, vibrational
// angular momentum l with |l| <= n and n - l even.
struct BasisLabel {
  int n = 0;
  int l = 0;
};

inline int parity(const BasisLabel& s) { return (s.n % 2 == 0) ? +1 : -1; }

// All (n, l) labels for a given N, n-major, l ascending within fixed n.
// Count is (N+1)(N+2)/2.
inline std::vector<BasisLabel> enumerate_basis(int N) {
  if (N < 0) throw std::domain_error("enumerate_basis: negative N");
  std::vector<BasisLabel> basis;
  basis.reserve(static_cast<std::size_t>((N + 1) * (N + 2) / 2));
  for (int n = 0; n <= N; ++n)
    for (int l = -n; l <= n; l += 2) basis.push_back({n, l});
  return basis;
}

// Fixed-l block: n runs over l, l+2, ..., up through N (same parity as l).
// W^2 only couples n with n +- 2 inside such a block, so the block is
// symmetric tridiagonal in this ordering.
struct AngularBlock {
  int N = 0;
  int l = 0;
  std::vector<int> n_values;

  int dim() const { return static_cast<int>(n_values.size()); }
};

inline AngularBlock angular_block(int N, int l) {
  if (N < 0) throw std::domain_error("angular_block: negative N");
  if (std::abs(l) > N) throw std::domain_error("angular_block: |l| must be <= N");
  AngularBlock blk;
  blk.N = N;
  blk.l = l;
  for (int n = std::abs(l); n <= N; n += 2) blk.n_values.push_back(n);
  return blk;
}

// <N; n_prime, l | W^2 | N; n, l>. Nonzero only for n_prime = n or
// n +- 2; pairs whose n parities differ cannot both carry the same l and
// give 0. Labels that do not fit in the N-boson tower at all are rejected.
inline double w2_element(int N, int n, int n_prime, int l) {
  if (N < 0) throw std::domain_error("w2_element: negative N");
  if (n < 0 || n > N || n_prime < 0 || n_prime > N || std::abs(l) > n || std::abs(l) > n_prime)
    throw std::domain_error("w2_element: labels outside the N-boson tower");
  if ((n - l) % 2 != 0 || (n_prime - l) % 2 != 0) return 0.0;
  switch (n_prime - n) {
    case 0:
      return static_cast<double>(N - n) * (n + 2) + static_cast<double>(N - n + 1) * n +
             static_cast<double>(l) * l;
    case -2: {
      const double prod = static_cast<double>(N - n + 2) * (N - n + 1) *
                          (static_cast<double>(n + l)) * (static_cast<double>(n - l));
      return -std::sqrt(prod);
    }
    case +2: {
      const double prod = static_cast<double>(N - n) * (N - n - 1) *
                          (static_cast<double>(n + l + 2)) * (static_cast<double>(n - l + 2));
      return -std::sqrt(prod);
    }
    default:
      return 0.0;
  }
}

// W^2 restricted to a fixed-l block, as a symmetric tridiagonal matrix over
// the block's n-ladder.
inline TridiagonalMatrix w2_block(const AngularBlock& blk) {
  TridiagonalMatrix m;
  const int d = blk.dim();
  m.diag.resize(d);
  m.off.resize(d > 0 ? d - 1 : 0);
  for (int i = 0; i < d; ++i) {
    const int n = blk.n_values[i];
    m.diag[i] = w2_element(blk.N, n, n, blk.l);
    if (i + 1 < d) m.off[i] = w2_element(blk.N, n, n + 2, blk.l);
  }
  return m;
}

// H = (1 - xi) n + xi [N(N+1) - W^2] / (N - 1), restricted to one l block.
inline TridiagonalMatrix hamiltonian_block(const ModelPoint& p, int l) {
  validate(p);
  const AngularBlock blk = angular_block(p.N, l);
  TridiagonalMatrix h = w2_block(blk);
  const double scale = p.xi / (p.N - 1.0);
  const double pairing = static_cast<double>(p.N) * (p.N + 1);
  for (int i = 0; i < blk.dim(); ++i)
    h.diag[i] = (1.0 - p.xi) * blk.n_values[i] + scale * (pairing - h.diag[i]);
  for (double& e : h.off) e = -scale * e;
  return h;
}

}  // namespace vibron

#endif
