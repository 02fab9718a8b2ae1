// Command-line front end: grid scans over (N, xi), single-point solves, and
// the library self-check suite.
//
// Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 I/O failure.

#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vibron/vibron.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;

int run_scan_command(vibron::ScanSpec spec, const std::string& out_path,
                     const std::string& format) {
  std::vector<vibron::ScanRow> rows;
  try {
    rows = vibron::run_scan(spec);
  } catch (const std::domain_error& e) {
    std::cerr << "scan: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (out_path.empty()) {
      if (format == "csv")
        vibron::write_csv(rows, std::cout);
      else
        vibron::write_json(rows, std::cout);
    } else {
      vibron::write_scan_file(rows, out_path, format);
    }
  } catch (const vibron::IoError& e) {
    std::cerr << "scan: " << e.what() << "\n";
    return kExitIo;
  }

  for (const vibron::ScanRow& r : rows)
    if (!r.ok) {
      std::cerr << "scan: some grid cells failed numerically (value = nan rows)\n";
      return kExitNumerical;
    }
  return kExitOk;
}

int run_solve_command(int N, double xi, const std::string& ansatz_str,
                      const std::string& out_path) {
  const std::optional<vibron::Ansatz> ansatz = vibron::parse_ansatz(ansatz_str);
  if (!ansatz) {
    std::cerr << "solve: unknown ansatz '" << ansatz_str << "'\n";
    return kExitUsage;
  }

  nlohmann::ordered_json doc;
  doc["N"] = N;
  doc["xi"] = xi;
  doc["ansatz"] = ansatz_str;

  try {
    vibron::CoefficientTable table(0);
    if (*ansatz == vibron::Ansatz::Exact) {
      const vibron::SpectralResult gs = vibron::ground_state({N, xi});
      table = gs.ground_vector;
      doc["energy_per_particle"] = gs.ground_energy_per_particle;
      doc["l_sector"] = gs.l;
      doc["r_e"] = nullptr;
    } else {
      const bool is_cs = *ansatz == vibron::Ansatz::CS;
      const vibron::VariationalResult eq =
          is_cs ? vibron::cs_equilibrium(xi) : vibron::cat_equilibrium(N, xi);
      table = is_cs ? vibron::cs_coefficients(N, eq.r_e)
                    : vibron::cat_coefficients(N, eq.r_e, vibron::AnsatzKind::CatEven);
      doc["energy_per_particle"] = eq.energy_per_particle;
      doc["l_sector"] = nullptr;
      doc["r_e"] = eq.r_e;
    }

    doc["lambdas"] = vibron::rdm_eigenvalues(table);
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (int n = 0; n <= N; ++n)
      for (int m = 0; m <= n; ++m)
        coeffs.push_back({{"n", n}, {"m", m}, {"l", n - 2 * m}, {"value", table.at(n, m)}});
    doc["coefficients"] = std::move(coeffs);
  } catch (const std::domain_error& e) {
    std::cerr << "solve: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "solve: " << e.what() << "\n";
    return kExitNumerical;
  }

  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream os(out_path);
    if (!(os << doc.dump(2) << "\n")) {
      std::cerr << "solve: cannot write " << out_path << "\n";
      return kExitIo;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D vibron model scans: exact, coherent-state and cat ground states"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a key=value config file");

  // scan
  CLI::App* scan = app.add_subcommand("scan", "Sweep a (N, xi) grid and write observables");
  std::vector<int> n_list = {8, 20, 32};
  double xi_start = 0.0, xi_stop = 1.0, xi_step = 0.01;
  std::vector<std::string> ansatz_names = {"exact"};
  std::vector<std::string> observable_names = {"energy"};
  std::string out_path, format = "csv", preset;
  int workers = 1;
  scan->add_option("--n", n_list, "Boson numbers N to scan")->delimiter(',');
  scan->add_option("--xi-start", xi_start, "First xi value");
  scan->add_option("--xi-stop", xi_stop, "Last xi value");
  scan->add_option("--xi-step", xi_step, "xi grid step");
  scan->add_option("--ansatz", ansatz_names, "Subset of exact,cs,cat")->delimiter(',');
  scan->add_option("--observables", observable_names,
                   "Subset of energy,radius,linear_entropy,von_neumann,purity,"
                   "ipr_position,ipr_basis,lambdas")
      ->delimiter(',');
  scan->add_option("--out", out_path, "Output file (stdout when omitted)");
  scan->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--preset", preset, "Figure preset fig1|fig2|fig3|fig4");
  scan->add_option("--workers", workers, "Worker threads for grid evaluation")
      ->check(CLI::PositiveNumber);

  // solve
  CLI::App* solve = app.add_subcommand("solve", "Solve a single (N, xi) point, JSON output");
  int solve_n = 8;
  double solve_xi = 0.5;
  std::string solve_ansatz = "exact", solve_out;
  solve->add_option("--n", solve_n, "Boson number N")->required();
  solve->add_option("--xi", solve_xi, "Control parameter xi")->required();
  solve->add_option("--ansatz", solve_ansatz, "exact, cs or cat");
  solve->add_option("--out", solve_out, "Output file (stdout when omitted)");

  // selfcheck
  CLI::App* selfcheck = app.add_subcommand("selfcheck", "Run the cross-check suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (selfcheck->parsed()) return vibron::run_selfcheck(std::cout) ? kExitOk : kExitNumerical;

  if (solve->parsed()) return run_solve_command(solve_n, solve_xi, solve_ansatz, solve_out);

  vibron::ScanSpec spec;
  if (!preset.empty()) {
    const std::optional<vibron::ScanSpec> p = vibron::preset_spec(preset);
    if (!p) {
      std::cerr << "scan: unknown preset '" << preset << "'\n";
      return kExitUsage;
    }
    spec = *p;
  } else {
    spec.N_list = n_list;
    spec.xi_start = xi_start;
    spec.xi_stop = xi_stop;
    spec.xi_step = xi_step;
  }

  // Explicit flags override whatever the preset chose.
  if (scan->count("--n")) spec.N_list = n_list;
  if (scan->count("--xi-start")) spec.xi_start = xi_start;
  if (scan->count("--xi-stop")) spec.xi_stop = xi_stop;
  if (scan->count("--xi-step")) spec.xi_step = xi_step;
  spec.workers = workers;

  if (scan->count("--ansatz") || preset.empty()) {
    spec.ansatz_set.clear();
    for (const std::string& name : ansatz_names) {
      const std::optional<vibron::Ansatz> a = vibron::parse_ansatz(name);
      if (!a) {
        std::cerr << "scan: unknown ansatz '" << name << "'\n";
        return kExitUsage;
      }
      spec.ansatz_set.push_back(*a);
    }
  }
  if (scan->count("--observables") || preset.empty()) {
    spec.observables.clear();
    for (const std::string& name : observable_names) {
      const std::optional<vibron::Observable> o = vibron::parse_observable(name);
      if (!o) {
        std::cerr << "scan: unknown observable '" << name << "'\n";
        return kExitUsage;
      }
      spec.observables.push_back(*o);
    }
  }

  return run_scan_command(std::move(spec), out_path, format);
}
