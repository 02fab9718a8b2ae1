// Prints a side-by-side table of ground-state properties across the phase
// transition for one molecule size: exact diagonalization against the
// coherent-state and parity-adapted cat ansatzs.

#include <cstdio>

#include "vibron/vibron.hpp"

int main() {
  const int N = 20;
  std::printf("N = %d\n", N);
  std::printf("%6s %12s %12s %12s %10s %10s %12s\n", "xi", "E_exact", "E_cat", "E_cs", "r_cat",
              "L_exact", "L_cat");
  for (int k = 0; k <= 20; ++k) {
    const double xi = 0.05 * k;
    const vibron::SpectralResult gs = vibron::ground_state({N, xi});
    const vibron::VariationalResult cat = vibron::cat_equilibrium(N, xi);
    const vibron::VariationalResult cs = vibron::cs_equilibrium(xi);

    const vibron::EntanglementReport exact_rep =
        vibron::entropies(vibron::rdm_eigenvalues(gs.ground_vector));
    const vibron::EntanglementReport cat_rep =
        vibron::entropies(vibron::lambda_closed_form(N, cat.r_e, vibron::AnsatzKind::CatEven));

    std::printf("%6.2f %12.8f %12.8f %12.8f %10.6f %10.6f %12.6f\n", xi,
                gs.ground_energy_per_particle, cat.energy_per_particle, cs.energy_per_particle,
                cat.r_e, exact_rep.linear_entropy, cat_rep.linear_entropy);
  }
  return 0;
}
