#ifndef VIBRON_SCAN_HPP
#define VIBRON_SCAN_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "vibron/basis.hpp"
#include "vibron/entanglement.hpp"
#include "vibron/fockspace.hpp"
#include "vibron/position.hpp"
#include "vibron/solver.hpp"
#include "vibron/variational.hpp"

namespace vibron {

enum class Ansatz { Exact, CS, Cat };

enum class Observable {
  Energy,
  Radius,
  LinearEntropy,
  VonNeumann,
  Purity,
  IprPosition,
  IprBasis,
  Lambdas
};

inline const char* ansatz_name(Ansatz a) {
  switch (a) {
    case Ansatz::Exact: return "exact";
    case Ansatz::CS: return "cs";
    default: return "cat";
  }
}

inline const char* observable_name(Observable o) {
  switch (o) {
    case Observable::Energy: return "energy";
    case Observable::Radius: return "radius";
    case Observable::LinearEntropy: return "linear_entropy";
    case Observable::VonNeumann: return "von_neumann";
    case Observable::Purity: return "purity";
    case Observable::IprPosition: return "ipr_position";
    case Observable::IprBasis: return "ipr_basis";
    default: return "lambdas";
  }
}

inline std::optional<Ansatz> parse_ansatz(const std::string& s) {
  if (s == "exact") return Ansatz::Exact;
  if (s == "cs") return Ansatz::CS;
  if (s == "cat") return Ansatz::Cat;
  return std::nullopt;
}

inline std::optional<Observable> parse_observable(const std::string& s) {
  for (Observable o : {Observable::Energy, Observable::Radius, Observable::LinearEntropy,
                       Observable::VonNeumann, Observable::Purity, Observable::IprPosition,
                       Observable::IprBasis, Observable::Lambdas})
    if (s == observable_name(o)) return o;
  return std::nullopt;
}

struct ScanSpec {
  std::vector<int> N_list;
  double xi_start = 0.0;
  double xi_stop = 1.0;
  double xi_step = 0.01;
  std::vector<Observable> observables;
  std::vector<Ansatz> ansatz_set;
  int workers = 1;
};

// One output record. `ok` is false when the computation of this value
// failed; the value is then NaN and the scan as a whole is reported as a
// numerical failure after the remaining grid has been completed.
struct ScanRow {
  int N = 0;
  double xi = 0.0;
  Ansatz ansatz = Ansatz::Exact;
  std::string observable;
  double value = 0.0;
  std::optional<int> l_sector;
  std::optional<double> r_e;
  bool ok = true;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string format_g15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

// Deduplicate while forcing the canonical order, so row order never
// depends on how the request was phrased.
template <typename T>
std::vector<T> canonical(const std::vector<T>& in, std::initializer_list<T> order) {
  std::vector<T> out;
  for (T v : order)
    for (T w : in)
      if (w == v) {
        out.push_back(v);
        break;
      }
  return out;
}

inline std::vector<double> xi_grid(const ScanSpec& spec) {
  std::vector<double> grid;
  const long count = std::lround((spec.xi_stop - spec.xi_start) / spec.xi_step);
  for (long k = 0; k <= count; ++k) {
    const double xi = spec.xi_start + k * spec.xi_step;
    if (xi > spec.xi_stop + 0.5 * spec.xi_step) break;
    grid.push_back(xi);
  }
  return grid;
}

struct RowSink {
  std::vector<ScanRow>& rows;
  int N;
  double xi;
  Ansatz ansatz;
  std::optional<int> l_sector;
  std::optional<double> r_e;

  void emit(const std::string& obs, double value, bool ok = true) {
    ScanRow row;
    row.N = N;
    row.xi = xi;
    row.ansatz = ansatz;
    row.observable = obs;
    row.value = ok ? value : std::nan("");
    row.l_sector = l_sector;
    row.r_e = r_e;
    row.ok = ok;
    rows.push_back(std::move(row));
  }

  void emit_guarded(const std::string& obs, const std::function<double()>& compute) {
    try {
      emit(obs, compute());
    } catch (const std::exception&) {
      emit(obs, 0.0, false);
    }
  }
};

// All requested rows for one (N, xi, ansatz) cell. Heavier shared pieces
// (diagonalization, equilibrium search, coefficient tables) are computed
// once and reused across the cell's observables.
inline void scan_cell(const ScanSpec& spec, int N, double xi, Ansatz ansatz,
                      std::vector<ScanRow>& rows) {
  RowSink sink{rows, N, xi, ansatz, std::nullopt, std::nullopt};

  auto emit_entropy_rows = [&](const std::vector<double>& lambdas, double purity) {
    for (Observable o : spec.observables) {
      switch (o) {
        case Observable::LinearEntropy:
          sink.emit(observable_name(o), 1.0 - purity);
          break;
        case Observable::VonNeumann:
          sink.emit_guarded(observable_name(o),
                            [&] { return entropies(lambdas).von_neumann_bits; });
          break;
        case Observable::Purity:
          sink.emit(observable_name(o), purity);
          break;
        case Observable::Lambdas:
          for (std::size_t n = 0; n < lambdas.size(); ++n)
            sink.emit("lambda_" + std::to_string(n), lambdas[n]);
          break;
        default:
          break;
      }
    }
  };

  auto wants = [&](Observable o) {
    for (Observable w : spec.observables)
      if (w == o) return true;
    return false;
  };

  try {
    if (ansatz == Ansatz::Exact) {
      const SpectralResult gs = ground_state({N, xi});
      sink.l_sector = gs.l;
      if (wants(Observable::Energy))
        sink.emit(observable_name(Observable::Energy), gs.ground_energy_per_particle);
      // No equilibrium radius exists for the exact state; the row is
      // omitted rather than padded.
      const std::vector<double> lambdas = rdm_eigenvalues(gs.ground_vector);
      double purity = 0.0;
      for (double l : lambdas) purity += l * l;
      emit_entropy_rows(lambdas, purity);
      if (wants(Observable::IprPosition))
        sink.emit_guarded(observable_name(Observable::IprPosition),
                          [&] { return ipr_position(gs.ground_vector); });
      if (wants(Observable::IprBasis))
        sink.emit(observable_name(Observable::IprBasis), ipr_basis(gs.ground_vector));
      return;
    }

    const bool is_cs = ansatz == Ansatz::CS;
    const VariationalResult eq = is_cs ? cs_equilibrium(xi) : cat_equilibrium(N, xi);
    const AnsatzKind kind = is_cs ? AnsatzKind::CS : AnsatzKind::CatEven;
    sink.r_e = eq.r_e;
    if (wants(Observable::Energy))
      sink.emit(observable_name(Observable::Energy), eq.energy_per_particle);
    if (wants(Observable::Radius)) sink.emit(observable_name(Observable::Radius), eq.r_e);
    if (wants(Observable::LinearEntropy) || wants(Observable::VonNeumann) ||
        wants(Observable::Purity) || wants(Observable::Lambdas)) {
      const std::vector<double> lambdas = lambda_closed_form(N, eq.r_e, kind);
      emit_entropy_rows(lambdas, purity_closed_form(N, eq.r_e, kind));
    }
    if (wants(Observable::IprPosition))
      sink.emit_guarded(observable_name(Observable::IprPosition), [&] {
        const CoefficientTable table =
            is_cs ? cs_coefficients(N, eq.r_e) : cat_coefficients(N, eq.r_e, kind);
        return ipr_position(table);
      });
    if (wants(Observable::IprBasis))
      sink.emit(observable_name(Observable::IprBasis), ipr_basis_closed_form(N, eq.r_e, kind));
  } catch (const std::exception&) {
    // The whole cell failed before per-observable guards could help
    // (diagonalization or equilibrium search); emit failure rows so the
    // grid stays complete.
    for (Observable o : spec.observables) {
      if (ansatz == Ansatz::Exact && o == Observable::Radius) continue;
      if (o == Observable::Lambdas) {
        for (int n = 0; n <= N; ++n) sink.emit("lambda_" + std::to_string(n), 0.0, false);
      } else {
        sink.emit(observable_name(o), 0.0, false);
      }
    }
  }
}

}  // namespace detail

inline void validate(const ScanSpec& spec) {
  if (spec.N_list.empty()) throw std::domain_error("scan: N list is empty");
  for (int n : spec.N_list)
    if (n < 2) throw std::domain_error("scan: N must be >= 2");
  if (!(spec.xi_step > 0.0)) throw std::domain_error("scan: xi step must be positive");
  if (spec.xi_stop < spec.xi_start) throw std::domain_error("scan: empty xi range");
  if (!(spec.xi_start >= 0.0 && spec.xi_stop <= 1.0))
    throw std::domain_error("scan: xi range must lie in [0, 1]");
  if (spec.observables.empty()) throw std::domain_error("scan: no observables selected");
  if (spec.ansatz_set.empty()) throw std::domain_error("scan: no ansatz selected");
}

// Evaluates the full grid. Cells are independent; with workers > 1 they are
// distributed over a thread pool and merged back in grid order, so the
// result is identical for every worker count.
inline std::vector<ScanRow> run_scan(ScanSpec spec) {
  validate(spec);
  spec.observables = detail::canonical(
      spec.observables,
      {Observable::Energy, Observable::Radius, Observable::LinearEntropy, Observable::VonNeumann,
       Observable::Purity, Observable::IprPosition, Observable::IprBasis, Observable::Lambdas});
  spec.ansatz_set = detail::canonical(spec.ansatz_set, {Ansatz::Exact, Ansatz::CS, Ansatz::Cat});

  const std::vector<double> grid = detail::xi_grid(spec);
  struct Cell {
    int N;
    double xi;
    Ansatz ansatz;
  };
  std::vector<Cell> cells;
  for (int N : spec.N_list)
    for (double xi : grid)
      for (Ansatz a : spec.ansatz_set) cells.push_back({N, xi, a});

  std::vector<std::vector<ScanRow>> buckets(cells.size());
  const int workers =
      std::max(1, std::min<int>(spec.workers, static_cast<int>(cells.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      detail::scan_cell(spec, cells[i].N, cells[i].xi, cells[i].ansatz, buckets[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++)
          detail::scan_cell(spec, cells[i].N, cells[i].xi, cells[i].ansatz, buckets[i]);
      });
    for (std::thread& t : pool) t.join();
  }

  std::vector<ScanRow> rows;
  for (std::vector<ScanRow>& b : buckets)
    for (ScanRow& r : b) rows.push_back(std::move(r));
  return rows;
}

inline void write_csv(const std::vector<ScanRow>& rows, std::ostream& os) {
  os << "N,xi,ansatz,observable,value,l_sector,r_e\n";
  for (const ScanRow& r : rows) {
    os << r.N << ',' << detail::format_g15(r.xi) << ',' << ansatz_name(r.ansatz) << ','
       << r.observable << ',' << (r.ok ? detail::format_g15(r.value) : "nan") << ',';
    if (r.l_sector) os << *r.l_sector;
    os << ',';
    if (r.r_e) os << detail::format_g15(*r.r_e);
    os << '\n';
  }
}

inline void write_json(const std::vector<ScanRow>& rows, std::ostream& os) {
  os << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ScanRow& r = rows[i];
    os << "  {\"N\": " << r.N << ", \"xi\": " << detail::format_g15(r.xi) << ", \"ansatz\": \""
       << ansatz_name(r.ansatz) << "\", \"observable\": \"" << r.observable << "\", \"value\": "
       << (r.ok ? detail::format_g15(r.value) : "null") << ", \"l_sector\": ";
    if (r.l_sector)
      os << *r.l_sector;
    else
      os << "null";
    os << ", \"r_e\": ";
    if (r.r_e)
      os << detail::format_g15(*r.r_e);
    else
      os << "null";
    os << "}" << (i + 1 < rows.size() ? "," : "") << "\n";
  }
  os << "]\n";
}

// Writes through a temporary in the same directory and renames into place,
// so readers never observe a half-written file.
inline void write_scan_file(const std::vector<ScanRow>& rows, const std::string& path,
                            const std::string& format) {
  if (format != "csv" && format != "json")
    throw std::domain_error("write_scan_file: format must be csv or json");
  const std::filesystem::path target(path);
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream os(tmp);
    if (!os) throw IoError("cannot open " + tmp.string() + " for writing");
    if (format == "csv")
      write_csv(rows, os);
    else
      write_json(rows, os);
    os.flush();
    if (!os) throw IoError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw IoError("cannot move " + tmp.string() + " to " + target.string());
}

// Figure presets: the grids behind the paper-style data sets.
//   fig1: equilibrium radius, cat N in {2,3,8,32} plus the CS curve
//   fig2: energy per particle, N in {2,3}, exact + both ansatzs
//   fig3: linear entropy, N in {8,20,32}, exact + cat
//   fig4: position-space IPR, N in {8,20}, exact + both ansatzs
inline std::optional<ScanSpec> preset_spec(const std::string& name) {
  ScanSpec spec;
  spec.xi_start = 0.0;
  spec.xi_stop = 1.0;
  spec.xi_step = 0.01;
  if (name == "fig1") {
    spec.N_list = {2, 3, 8, 32};
    spec.observables = {Observable::Radius};
    spec.ansatz_set = {Ansatz::CS, Ansatz::Cat};
  } else if (name == "fig2") {
    spec.N_list = {2, 3};
    spec.observables = {Observable::Energy};
    spec.ansatz_set = {Ansatz::Exact, Ansatz::CS, Ansatz::Cat};
  } else if (name == "fig3") {
    spec.N_list = {8, 20, 32};
    spec.observables = {Observable::LinearEntropy};
    spec.ansatz_set = {Ansatz::Exact, Ansatz::Cat};
  } else if (name == "fig4") {
    spec.N_list = {8, 20};
    spec.observables = {Observable::IprPosition};
    spec.ansatz_set = {Ansatz::Exact, Ansatz::CS, Ansatz::Cat};
  } else {
    return std::nullopt;
  }
  return spec;
}

// Cross-checks every closed form in the library against an independent
// computation route. Prints one status line per check; returns true iff
// all pass.
inline bool run_selfcheck(std::ostream& os) {
  struct Check {
    const char* name;
    std::function<bool()> fn;
  };

  auto fock_index = [](const FockBasis& fb, int n, int l) {
    return fb.index(fb.N - n, (n + l) / 2, (n - l) / 2);
  };

  const std::vector<Check> checks = {
      {"w2 blocks vs ladder-operator construction (N=2..5)",
       [&] {
         for (int N = 2; N <= 5; ++N) {
           const FockBasis fb = fock_basis(N);
           const DenseMatrix W = w2_operator(fb);
           for (int l = 0; l <= N; ++l) {
             const AngularBlock blk = angular_block(N, l);
             for (int i = 0; i < blk.dim(); ++i)
               for (int j = 0; j < blk.dim(); ++j) {
                 const int ni = blk.n_values[i], nj = blk.n_values[j];
                 const double dense = W[fock_index(fb, ni, l)][fock_index(fb, nj, l)];
                 if (std::abs(w2_element(N, nj, ni, l) - dense) > 1e-10) return false;
               }
           }
           // W^2 must not couple different l at all
           for (int i = 0; i < fb.dim(); ++i)
             for (int j = 0; j < fb.dim(); ++j) {
               const int li = fb.states[i][1] - fb.states[i][2];
               const int lj = fb.states[j][1] - fb.states[j][2];
               if (li != lj && std::abs(W[i][j]) > 1e-12) return false;
             }
         }
         return true;
       }},
      {"hamiltonian blocks vs ladder-operator construction",
       [&] {
         for (int N : {2, 3, 4})
           for (double xi : {0.3, 1.0}) {
             const FockBasis fb = fock_basis(N);
             const DenseMatrix H = hamiltonian_dense({N, xi}, fb);
             for (int l = 0; l <= N; ++l) {
               const TridiagonalMatrix blk = hamiltonian_block({N, xi}, l);
               const AngularBlock labels = angular_block(N, l);
               for (int i = 0; i < labels.dim(); ++i) {
                 const int row = fock_index(fb, labels.n_values[i], l);
                 if (std::abs(blk.diag[i] - H[row][row]) > 1e-12) return false;
                 if (i + 1 < labels.dim()) {
                   const int next = fock_index(fb, labels.n_values[i + 1], l);
                   if (std::abs(blk.off[i] - H[row][next]) > 1e-12) return false;
                 }
               }
             }
           }
         return true;
       }},
      {"cat equilibrium vs closed forms (N=2,3)",
       [&] {
         for (int N : {2, 3})
           for (int k = 0; k <= 20; ++k) {
             const double xi = 0.05 * k;
             const VariationalResult num = cat_equilibrium(N, xi);
             const VariationalResult ref = cat_equilibrium_closed_form(N, xi);
             if (std::abs(num.r_e - ref.r_e) > 1e-8) return false;
             if (std::abs(num.energy_per_particle - ref.energy_per_particle) > 1e-8)
               return false;
           }
         return true;
       }},
      {"variational energies vs dense expectation values",
       [&] {
         std::mt19937 rng(2021);
         std::uniform_real_distribution<double> rdist(0.05, 1.6), xdist(0.0, 1.0);
         for (int N = 2; N <= 6; ++N) {
           const FockBasis fb = fock_basis(N);
           for (int trial = 0; trial < 3; ++trial) {
             const double r = rdist(rng), xi = xdist(rng);
             const DenseMatrix H = hamiltonian_dense({N, xi}, fb);
             const std::vector<double> cs = to_fock_vector(fb, cs_coefficients(N, r));
             if (std::abs(cs_energy(xi, r) - expectation(H, cs) / N) > 1e-12) return false;
             const std::vector<double> cat =
                 to_fock_vector(fb, cat_coefficients(N, r, AnsatzKind::CatEven));
             if (std::abs(cat_energy(N, xi, r) - expectation(H, cat) / N) > 1e-12) return false;
           }
         }
         return true;
       }},
      {"closed-form RDM spectra and purities vs coefficient tables",
       [&] {
         std::mt19937 rng(4096);
         std::uniform_real_distribution<double> rdist(0.05, 1.6);
         for (int N = 2; N <= 12; N += 2)
           for (int trial = 0; trial < 3; ++trial) {
             const double r = rdist(rng);
             for (AnsatzKind kind : {AnsatzKind::CS, AnsatzKind::CatEven}) {
               const CoefficientTable table = kind == AnsatzKind::CS
                                                  ? cs_coefficients(N, r)
                                                  : cat_coefficients(N, r, kind);
               const std::vector<double> direct = rdm_eigenvalues(table);
               const std::vector<double> closed = lambda_closed_form(N, r, kind);
               double sum_sq = 0.0;
               for (int n = 0; n <= N; ++n) {
                 if (std::abs(direct[n] - closed[n]) > 1e-12) return false;
                 sum_sq += direct[n] * direct[n];
               }
               if (std::abs(purity_closed_form(N, r, kind) - sum_sq) > 1e-12) return false;
             }
           }
         return true;
       }},
      {"closed-form basis participation vs coefficient tables",
       [&] {
         std::mt19937 rng(777);
         std::uniform_real_distribution<double> rdist(0.05, 1.6);
         for (int N = 2; N <= 12; N += 2)
           for (int trial = 0; trial < 3; ++trial) {
             const double r = rdist(rng);
             if (std::abs(ipr_basis_closed_form(N, r, AnsatzKind::CS) -
                          ipr_basis(cs_coefficients(N, r))) > 1e-12)
               return false;
             if (std::abs(ipr_basis_closed_form(N, r, AnsatzKind::CatEven) -
                          ipr_basis(cat_coefficients(N, r, AnsatzKind::CatEven))) > 1e-12)
               return false;
           }
         return true;
       }},
      {"position quadrature exact at minimal order",
       [&] {
         CoefficientTable vacuum(0);
         vacuum.at(0, 0) = 1.0;
         const double pi = std::acos(-1.0);
         if (std::abs(ipr_position(vacuum) - std::pow(2.0 * pi, -1.5)) > 1e-12) return false;
         for (int N : {2, 4, 8}) {
           const CoefficientTable table = cat_coefficients(N, 0.8, AnsatzKind::CatEven);
           if (std::abs(ipr_position(table, 2 * N + 2) - ipr_position(table, 2 * N + 8)) > 1e-11)
             return false;
         }
         return true;
       }},
  };

  bool all_ok = true;
  for (const Check& c : checks) {
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception&) {
      ok = false;
    }
    os << (ok ? "[ ok ] " : "[FAIL] ") << c.name << "\n";
    all_ok = all_ok && ok;
  }
  return all_ok;
}

}  // namespace vibron

#endif
