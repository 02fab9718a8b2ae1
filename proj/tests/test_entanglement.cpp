#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "vibron/entanglement.hpp"
#include "vibron/solver.hpp"
#include "vibron/variational.hpp"

using Catch::Approx;
using namespace vibron;

TEST_CASE("reduced density matrix spectrum of reference states") {
  CoefficientTable vac(4);
  vac.at(0, 0) = 1.0;
  const std::vector<double> pure = rdm_eigenvalues(vac);
  CHECK(pure[0] == 1.0);
  for (int n = 1; n <= 4; ++n) CHECK(pure[n] == 0.0);

  const std::vector<double> cs = rdm_eigenvalues(cs_coefficients(2, 1.0));
  CHECK(cs[0] == Approx(0.25));
  CHECK(cs[1] == Approx(0.5));
  CHECK(cs[2] == Approx(0.25));

  const std::vector<double> cat = rdm_eigenvalues(cat_coefficients(2, 1.0, AnsatzKind::CatEven));
  CHECK(cat[0] == Approx(0.5));
  CHECK(cat[1] == 0.0);
  CHECK(cat[2] == Approx(0.5));
}

TEST_CASE("closed-form RDM spectra match the coefficient tables") {
  std::mt19937 rng(5821);
  std::uniform_real_distribution<double> radius(0.05, 1.5);
  for (int N = 2; N <= 12; ++N)
    for (int rep = 0; rep < 3; ++rep) {
      const double r = radius(rng);
      const std::vector<double> cs_direct = rdm_eigenvalues(cs_coefficients(N, r));
      const std::vector<double> cs_closed = lambda_closed_form(N, r, AnsatzKind::CS);
      const std::vector<double> cat_direct =
          rdm_eigenvalues(cat_coefficients(N, r, AnsatzKind::CatEven));
      const std::vector<double> cat_closed = lambda_closed_form(N, r, AnsatzKind::CatEven);
      for (int n = 0; n <= N; ++n) {
        CHECK(cs_closed[n] == Approx(cs_direct[n]).margin(1e-13).epsilon(0));
        CHECK(cat_closed[n] == Approx(cat_direct[n]).margin(1e-13).epsilon(0));
      }
    }

  const std::vector<double> at_zero = lambda_closed_form(6, 0.0, AnsatzKind::CS);
  CHECK(at_zero[0] == 1.0);
  CHECK_THROWS_AS(lambda_closed_form(4, 0.5, AnsatzKind::CatOdd), std::domain_error);
}

TEST_CASE("closed-form purity matches the spectrum sum of squares") {
  CHECK(purity_closed_form(2, 1.0, AnsatzKind::CS) == Approx(3.0 / 8.0));
  CHECK(purity_closed_form(2, 1.0, AnsatzKind::CatEven) == Approx(0.5));
  CHECK(purity_closed_form(5, 0.0, AnsatzKind::CS) == Approx(1.0));
  CHECK(purity_closed_form(5, 0.0, AnsatzKind::CatEven) == Approx(1.0));

  std::mt19937 rng(4096);
  std::uniform_real_distribution<double> radius(0.05, 1.5);
  for (int N = 2; N <= 12; N += 2)
    for (int rep = 0; rep < 3; ++rep) {
      const double r = radius(rng);
      for (AnsatzKind kind : {AnsatzKind::CS, AnsatzKind::CatEven}) {
        const std::vector<double> lam = lambda_closed_form(N, r, kind);
        double sum_sq = 0.0;
        for (double l : lam) sum_sq += l * l;
        CHECK(purity_closed_form(N, r, kind) == Approx(sum_sq).margin(1e-12).epsilon(0));
      }
    }
  CHECK_THROWS_AS(purity_closed_form(4, 0.5, AnsatzKind::CatOdd), std::domain_error);
}

TEST_CASE("entropy report of simple spectra") {
  const EntanglementReport pure = entropies({1.0, 0.0, 0.0});
  CHECK(pure.purity == 1.0);
  CHECK(pure.linear_entropy == 0.0);
  CHECK(pure.von_neumann_bits == 0.0);

  const EntanglementReport pair = entropies({0.5, 0.0, 0.5});
  CHECK(pair.purity == Approx(0.5));
  CHECK(pair.linear_entropy == Approx(0.5));
  CHECK(pair.von_neumann_bits == Approx(1.0));

  const EntanglementReport triple = entropies({0.25, 0.5, 0.25});
  CHECK(triple.linear_entropy == Approx(0.625));
  CHECK(triple.von_neumann_bits == Approx(1.5));
}

TEST_CASE("entropy report rejects non-spectra and clips rounding noise") {
  CHECK_THROWS_AS(entropies({-1e-9, 1.0 + 1e-9}), std::domain_error);
  CHECK_THROWS_AS(entropies({0.9, 0.05}), std::domain_error);

  const EntanglementReport noisy = entropies({-1e-12, 1.0});
  CHECK(noisy.lambdas[0] == 0.0);
  CHECK(noisy.purity == Approx(1.0));
  CHECK(noisy.von_neumann_bits == 0.0);
}

TEST_CASE("bent-limit references agree with the exact closed forms") {
  // 2F1(-N,-N;1;1) is the central binomial, so the condensate value is exact
  for (int N : {1, 2, 7, 32}) {
    const BentPhaseAsymptotics a = bent_phase_asymptotics(N);
    CHECK(1.0 - purity_closed_form(N, 1.0, AnsatzKind::CS) == Approx(a.L_cs_xi1).margin(1e-12).epsilon(0));
  }

  // the cat value drops the alternating series, which dies out by N = 32
  const BentPhaseAsymptotics a2 = bent_phase_asymptotics(2);
  CHECK(a2.L_cat_xi1 == Approx(0.25));
  CHECK(1.0 - purity_closed_form(2, 1.0, AnsatzKind::CatEven) == Approx(0.5));
  const BentPhaseAsymptotics a32 = bent_phase_asymptotics(32);
  CHECK(1.0 - purity_closed_form(32, 1.0, AnsatzKind::CatEven) ==
        Approx(a32.L_cat_xi1).margin(1e-9).epsilon(0));

  // Stirling estimate of the cat purity is good to half a percent by N = 32
  const double exact = purity_closed_form(32, 1.0, AnsatzKind::CatEven);
  CHECK(std::abs(a32.purity_cat_stirling - exact) / exact < 0.005);

  CHECK_THROWS_AS(bent_phase_asymptotics(0), std::domain_error);
}

TEST_CASE("cat states are entangled but not maximally at full coupling") {
  for (int N : {2, 8, 32}) {
    const double p = purity_closed_form(N, 1.0, AnsatzKind::CatEven);
    CHECK(p > 1.0 / (N + 1.0));
    CHECK(p < 1.0);
  }
}

TEST_CASE("ground-state entanglement switches on across the transition") {
  const EntanglementReport sym = entropies(rdm_eigenvalues(ground_state({8, 0.0}).ground_vector));
  CHECK(sym.linear_entropy == Approx(0.0).margin(1e-12).epsilon(0));
  CHECK(sym.von_neumann_bits == Approx(0.0).margin(1e-12).epsilon(0));

  const double low =
      entropies(rdm_eigenvalues(ground_state({32, 0.1}).ground_vector)).linear_entropy;
  const double high =
      entropies(rdm_eigenvalues(ground_state({32, 0.8}).ground_vector)).linear_entropy;
  CHECK(low < 0.1 * high);
}

TEST_CASE("cat entropy near full coupling follows the half-log law") {
  const std::vector<double> lam = lambda_closed_form(32, 1.0, AnsatzKind::CatEven);
  const EntanglementReport rep = entropies(lam);
  CHECK(rep.von_neumann_bits == Approx(0.5 * std::log2(33.0)).margin(0.1).epsilon(0));

  const std::vector<double> lam_cs = lambda_closed_form(32, 1.0, AnsatzKind::CS);
  const double gap = entropies(lam_cs).von_neumann_bits - rep.von_neumann_bits;
  CHECK(gap == Approx(1.0).margin(0.1).epsilon(0));
}
