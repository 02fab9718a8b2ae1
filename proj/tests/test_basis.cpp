#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "vibron/basis.hpp"
#include "vibron/fockspace.hpp"

using Catch::Approx;
using namespace vibron;

TEST_CASE("enumerate_basis lists every (n, l) once with the right count") {
  CHECK(enumerate_basis(0).size() == 1);

  const std::vector<BasisLabel> basis = enumerate_basis(2);
  REQUIRE(basis.size() == 6);
  std::set<std::pair<int, int>> seen;
  for (const BasisLabel& s : basis) {
    CHECK(s.n >= 0);
    CHECK(s.n <= 2);
    CHECK(std::abs(s.l) <= s.n);
    CHECK((s.n - s.l) % 2 == 0);
    seen.insert({s.n, s.l});
  }
  CHECK(seen.size() == 6);
  CHECK(seen.count({1, -1}) == 1);
  CHECK(seen.count({2, 0}) == 1);

  CHECK(enumerate_basis(8).size() == 45);
}

TEST_CASE("parity is the sign of (-1)^n") {
  CHECK(parity({0, 0}) == 1);
  CHECK(parity({3, 1}) == -1);
  for (const BasisLabel& s : enumerate_basis(5)) CHECK(parity(s) == (s.n % 2 == 0 ? 1 : -1));
}

TEST_CASE("angular blocks partition the basis") {
  for (int N : {2, 5, 8}) {
    int total = 0;
    for (int l = -N; l <= N; ++l) {
      const AngularBlock blk = angular_block(N, l);
      CHECK(blk.dim() == (N - std::abs(l)) / 2 + 1);
      for (int n : blk.n_values) {
        CHECK(n >= std::abs(l));
        CHECK((n - l) % 2 == 0);
      }
      total += blk.dim();
    }
    CHECK(total == (N + 1) * (N + 2) / 2);
  }
  CHECK_THROWS_AS(angular_block(3, 4), std::domain_error);
}

TEST_CASE("w2_element reproduces the displayed matrix elements") {
  CHECK(w2_element(2, 0, 0, 0) == Approx(4.0));  // 2N on the vacuum
  CHECK(w2_element(2, 2, 2, 2) == Approx(6.0));  // N(N+1), top of the SO(3) ladder
  CHECK(w2_element(2, 0, 1, 0) == 0.0);          // parity-mismatched pair
  CHECK(w2_element(2, 0, 2, 0) == Approx(-2.0 * std::sqrt(2.0)));
  CHECK(w2_element(2, 2, 0, 0) == Approx(-2.0 * std::sqrt(2.0)));

  // symmetric under n <-> n'
  for (int N : {4, 7})
    for (int l = 0; l <= N; ++l) {
      const AngularBlock blk = angular_block(N, l);
      for (int i = 0; i < blk.dim(); ++i)
        for (int j = 0; j < blk.dim(); ++j)
          CHECK(w2_element(N, blk.n_values[i], blk.n_values[j], l) ==
                Approx(w2_element(N, blk.n_values[j], blk.n_values[i], l)).margin(0.0).epsilon(0));
    }

  CHECK_THROWS_AS(w2_element(2, 3, 3, 0), std::domain_error);
  CHECK_THROWS_AS(w2_element(2, 0, 0, 1), std::domain_error);
}

TEST_CASE("w2 blocks match the ladder-operator construction") {
  for (int N : {2, 3, 5}) {
    const FockBasis fb = fock_basis(N);
    const DenseMatrix W = w2_operator(fb);
    auto fock_index = [&](int n, int l) { return fb.index(N - n, (n + l) / 2, (n - l) / 2); };

    for (int l = -N; l <= N; ++l) {
      const AngularBlock blk = angular_block(N, l);
      const TridiagonalMatrix m = w2_block(blk);
      for (int i = 0; i < blk.dim(); ++i) {
        const int row = fock_index(blk.n_values[i], l);
        CHECK(m.diag[i] == Approx(W[row][row]).margin(1e-12).epsilon(0));
        if (i + 1 < blk.dim())
          CHECK(m.off[i] == Approx(W[row][fock_index(blk.n_values[i + 1], l)]).margin(1e-12).epsilon(0));
      }
    }
  }
}

TEST_CASE("blocks at l and -l are identical") {
  for (int l : {1, 2, 3}) {
    const TridiagonalMatrix a = w2_block(angular_block(7, l));
    const TridiagonalMatrix b = w2_block(angular_block(7, -l));
    CHECK(a.diag == b.diag);
    CHECK(a.off == b.off);
  }
}

TEST_CASE("full w2 spectrum consists of w(w+1) multiplets") {
  for (int N : {2, 3, 4, 6}) {
    const FockBasis fb = fock_basis(N);
    const std::vector<double> spectrum = oracles::jacobi_eigenvalues(w2_operator(fb));

    std::multiset<long> expected;
    for (int w = N; w >= 0; w -= 2)
      for (int count = 0; count < 2 * w + 1; ++count) expected.insert(w * (w + 1L));

    REQUIRE(spectrum.size() == expected.size());
    std::multiset<long> got;
    for (double v : spectrum) got.insert(std::lround(v));
    CHECK(got == expected);
  }
}

TEST_CASE("hamiltonian blocks take the documented limiting forms") {
  // xi = 0: pure vibrational number operator
  const TridiagonalMatrix h0 = hamiltonian_block({2, 0.0}, 0);
  CHECK(h0.diag[0] == Approx(0.0).margin(0.0).epsilon(0));
  CHECK(h0.diag[1] == Approx(2.0));
  CHECK(h0.off[0] == Approx(0.0).margin(0.0).epsilon(0));

  // xi = 1, l = 0 at N = 2: [[2, 2sqrt2], [2sqrt2, 4]], ground eigenvalue 0
  const TridiagonalMatrix h1 = hamiltonian_block({2, 1.0}, 0);
  CHECK(h1.diag[0] == Approx(2.0));
  CHECK(h1.diag[1] == Approx(4.0));
  CHECK(h1.off[0] == Approx(2.0 * std::sqrt(2.0)));

  // xi = 1, l = 2 at N = 2: single state with H = (6 - 6)/1 = 0
  const TridiagonalMatrix h2 = hamiltonian_block({2, 1.0}, 2);
  REQUIRE(h2.diag.size() == 1);
  CHECK(h2.diag[0] == Approx(0.0).margin(1e-14).epsilon(0));
}

TEST_CASE("hamiltonian blocks match the dense ladder-operator hamiltonian") {
  for (int N : {2, 4})
    for (double xi : {0.0, 0.35, 1.0}) {
      const FockBasis fb = fock_basis(N);
      const DenseMatrix H = hamiltonian_dense({N, xi}, fb);
      auto fock_index = [&](int n, int l) { return fb.index(N - n, (n + l) / 2, (n - l) / 2); };
      for (int l = 0; l <= N; ++l) {
        const AngularBlock blk = angular_block(N, l);
        const TridiagonalMatrix m = hamiltonian_block({N, xi}, l);
        for (int i = 0; i < blk.dim(); ++i) {
          const int row = fock_index(blk.n_values[i], l);
          CHECK(m.diag[i] == Approx(H[row][row]).margin(1e-12).epsilon(0));
          if (i + 1 < blk.dim())
            CHECK(m.off[i] == Approx(H[row][fock_index(blk.n_values[i + 1], l)]).margin(1e-12).epsilon(0));
        }
      }
    }
}

TEST_CASE("model point validation enforces N >= 2 and xi in [0, 1]") {
  CHECK_THROWS_AS(validate(ModelPoint{1, 0.5}), std::domain_error);
  CHECK_THROWS_AS(validate(ModelPoint{4, -0.1}), std::domain_error);
  CHECK_THROWS_AS(validate(ModelPoint{4, 1.1}), std::domain_error);
  CHECK_NOTHROW(validate(ModelPoint{2, 0.0}));
  CHECK_NOTHROW(validate(ModelPoint{2, 1.0}));
}
