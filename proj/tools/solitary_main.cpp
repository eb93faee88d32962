// solitary: verification runs against the closed-form solitary solutions.
//
//   solitary run        [--preset table1|table2] [--config f] [--c1 list] [--out dir] [--format csv,svg]
//   solitary audit      residual audit of the 1D closed forms
//   solitary converge   grid-refinement study of the solver
//   solitary ndim-audit residual audit of the n-D closed forms
//   solitary bathymetry h_B(x, t) data with k_H switched on mid-run
//
// Exit codes: 0 pass, 1 tolerance failure, 2 configuration or runtime error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "solitary/config.hpp"
#include "solitary/output.hpp"
#include "solitary/solver.hpp"
#include "solitary/validation.hpp"

namespace {

using namespace solitary;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

struct CommonOptions {
  std::string config_path;
  std::string preset_name;
  std::string out_dir;
  std::string formats;
  std::string c1_list;
};

void add_common(CLI::App* app, CommonOptions& o) {
  app->add_option("--config", o.config_path, "Configuration file");
  app->add_option("--preset", o.preset_name, "Grid preset: table1 | table2");
  app->add_option("--out", o.out_dir, "Output directory");
  app->add_option("--format", o.formats, "Output formats: csv,svg");
  app->add_option("--c1", o.c1_list, "Comma-separated c1 sweep");
}

RunConfig build_config(const CommonOptions& o, const std::string& default_preset) {
  RunConfig cfg;
  if (!o.config_path.empty()) {
    cfg = load_config(o.config_path);
    if (!o.preset_name.empty()) {
      throw ConfigError(0, "--preset and --config are mutually exclusive");
    }
  } else {
    cfg = preset(o.preset_name.empty() ? default_preset : o.preset_name);
  }
  if (!o.c1_list.empty()) {
    override_c1(cfg, parse_number_list(o.c1_list));
  }
  if (!o.out_dir.empty()) {
    cfg.output.dir = o.out_dir;
  }
  if (!o.formats.empty()) {
    // Reuse the config grammar for the format list.
    RunConfig tmp = parse_config("[output]\nformats = " + o.formats + "\n");
    cfg.output.csv = tmp.output.csv;
    cfg.output.svg = tmp.output.svg;
  }
  cfg.validate();
  return cfg;
}

void print_summary(const char* label, const ResidualSummary& r) {
  std::printf("  %-34s continuity %.3e  momentum %.3e  splitting %.3e  gradient %.3e\n", label,
              r.continuity, r.momentum, r.splitting, r.gradient);
}

int cmd_run(const CommonOptions& o) {
  const RunConfig cfg = build_config(o, "table1");
  if (cfg.run_case == RunCase::ndim_audit) {
    throw ConfigError(0, "case: use the ndim-audit subcommand for ndim_audit configs");
  }
  const FlowCase flow = cfg.flow_case();
  RunOptions opts;
  opts.snapshot_times = cfg.output.snapshot_times;
  bool ok = true;
  std::vector<Snapshot> finals;
  std::printf("case %s, %zu cells, dx %g, dt %g, %zu steps, kernel %s\n",
              std::string(to_string(flow)).c_str(), cfg.grid.n_cells, cfg.grid.dx, cfg.grid.dt,
              cfg.grid.n_steps, std::string(kernels::to_string(kernels::resolve(cfg.scheme.isa))).c_str());
  for (const auto& p : cfg.params_list) {
    const RunResult r = run(flow, cfg.grid, cfg.scheme, p, opts);
    std::printf("c1 = %g: u error L2 %.6e  Linf %.6e  (h Linf %.6e)\n", p.c1, r.final_u.l2,
                r.final_u.linf, r.final_h.linf);
    if (!r.per_snapshot.empty()) {
      std::printf("  Linf(u) by snapshot:");
      for (const auto& sn : r.per_snapshot) {
        std::printf(" t=%g:%.2e", sn.t, sn.linf);
      }
      std::printf("\n");
    }
    for (const auto& w : r.warnings) {
      std::printf("  warning: %s\n", w.c_str());
    }
    if (cfg.max_linf && !(r.final_u.linf <= *cfg.max_linf)) {
      std::printf("  FAIL: velocity Linf exceeds %g\n", *cfg.max_linf);
      ok = false;
    }
    if (cfg.output.csv && !r.snapshots.empty()) {
      const auto paths = emit_csv(r.snapshots, cfg.output.dir);
      std::printf("  wrote %zu CSV files to %s\n", paths.size(), cfg.output.dir.string().c_str());
    }
    if (cfg.output.svg && !r.snapshots.empty()) {
      const auto path = cfg.output.dir / (std::string(to_string(flow)) + "_c1-" +
                                          std::to_string(static_cast<int>(p.c1)) + ".svg");
      emit_plot(r.snapshots, path);
    }
    if (!r.snapshots.empty()) {
      finals.push_back(r.snapshots.back());
    }
  }
  if (cfg.output.svg && !finals.empty()) {
    emit_plot(finals, cfg.output.dir / (std::string(to_string(flow)) + "_overlay.svg"),
              "Closed form (lines) and finite-difference solution (markers)");
  }
  return ok ? kPass : kFail;
}

int cmd_audit(const CommonOptions& o, std::size_t points, std::uint64_t seed, double tol,
              const std::string& k_list) {
  const RunConfig cfg = build_config(o, "table1");
  bool ok = true;
  const auto pts = sample_points(1, points, seed);
  for (auto p : cfg.params_list) {
    std::printf("c1 = %g, g = %g\n", p.c1, p.g);
    p.k_h = 0.0;
    const auto euler = residual_audit(model_1d(FlowCase::euler, p), pts);
    print_summary("euler", euler);
    ok = ok && euler.worst_pde() <= tol && euler.splitting <= tol && euler.gradient <= tol;
    for (const double k : parse_number_list(k_list)) {
      p.k_h = k;
      const auto ns = residual_audit(model_1d(FlowCase::navier_stokes, p), pts);
      const auto tr = residual_audit(model_1d_ns_transcribed(p), pts);
      char label[64];
      std::snprintf(label, sizeof label, "ns k_h=%g", k);
      print_summary(label, ns);
      std::snprintf(label, sizeof label, "ns k_h=%g (transcribed, diagnostic)", k);
      print_summary(label, tr);
      ok = ok && ns.worst_pde() <= tol && ns.splitting <= tol && ns.gradient <= tol;
    }
  }
  std::printf("%s (tolerance %.1e, %zu points)\n", ok ? "PASS" : "FAIL", tol, points);
  return ok ? kPass : kFail;
}

int cmd_converge(const CommonOptions& o, double t_end, int levels, double min_rate,
                 double max_rate) {
  RunConfig cfg = build_config(o, "table1");
  if (cfg.run_case == RunCase::ndim_audit) {
    throw ConfigError(0, "case: converge needs euler or ns");
  }
  cfg.grid.n_steps = static_cast<std::size_t>(std::llround(t_end / cfg.grid.dt));
  bool ok = true;
  for (const auto& p : cfg.params_list) {
    const auto rep = convergence_study(cfg.flow_case(), cfg.grid, levels, cfg.scheme, p);
    std::printf("c1 = %g\n", p.c1);
    for (const auto& lvl : rep.levels) {
      if (lvl.blew_up) {
        std::printf("  dx %-10g dt %-10g BLOW-UP: %s\n", lvl.grid.dx, lvl.grid.dt, lvl.message.c_str());
      } else {
        std::printf("  dx %-10g dt %-10g Linf %.6e  L2 %.6e\n", lvl.grid.dx, lvl.grid.dt,
                    lvl.error.linf, lvl.error.l2);
      }
    }
    if (rep.fit.exact) {
      std::printf("  exact (all errors zero)\n");
    } else if (rep.fit.rate) {
      const bool in_range = *rep.fit.rate >= min_rate && *rep.fit.rate <= max_rate;
      std::printf("  observed order %.4f (%s [%g, %g])\n", *rep.fit.rate,
                  in_range ? "within" : "OUTSIDE", min_rate, max_rate);
      ok = ok && in_range;
    } else {
      std::printf("  no rate (partial report)\n");
      ok = false;
    }
  }
  return ok ? kPass : kFail;
}

int cmd_ndim(const CommonOptions& o, const std::string& dims, const std::string& k_list,
             std::size_t points, std::uint64_t seed, double tol) {
  RunConfig cfg = build_config(o, "table1");
  bool ok = true;
  for (const double dn : parse_number_list(dims)) {
    for (const double k : parse_number_list(k_list)) {
      for (auto p : cfg.params_list) {
        p.n = static_cast<int>(dn);
        p.k_h = k;
        const auto rep = ndim_audit(p, points, seed, kResidualFdStep, tol);
        std::printf("n = %d, c1 = %g, k_h = %g\n", p.n, p.c1, p.k_h);
        print_summary("re-derived", rep.rederived);
        print_summary("transcribed", rep.transcribed);
        if (!rep.diagnostic.empty()) {
          std::printf("  diagnostic: %s\n", rep.diagnostic.c_str());
        }
        const bool pass = rep.rederived.continuity <= tol && rep.transcribed.continuity <= tol &&
                          rep.rederived.momentum <= tol && rep.rederived.splitting <= tol;
        ok = ok && pass;
      }
    }
  }
  std::printf("%s (tolerance %.1e)\n", ok ? "PASS" : "FAIL", tol);
  return ok ? kPass : kFail;
}

int cmd_bathymetry(const CommonOptions& o, double k_h, double t_switch, double t_end) {
  CommonOptions local = o;
  if (local.c1_list.empty()) {
    local.c1_list = "5";
  }
  const RunConfig cfg = build_config(local, "table1");
  for (auto p : cfg.params_list) {
    p.k_h = k_h;
    const auto ev = bathymetry_evolution(p, t_switch, t_end, 0.05, cfg.grid);
    const std::string stem = "bathymetry_c1-" + std::to_string(static_cast<int>(p.c1));
    if (cfg.output.csv) {
      emit_bathymetry_csv(ev, cfg.output.dir / (stem + ".csv"));
    }
    if (cfg.output.svg) {
      emit_bathymetry_plot(ev, cfg.output.dir / (stem + ".svg"),
                           "Bathymetry: k_H = 0 before t = " + std::to_string(t_switch).substr(0, 4) +
                               " s, k_H > 0 after");
    }
    std::printf("c1 = %g: wrote %s.* to %s\n", p.c1, stem.c_str(), cfg.output.dir.string().c_str());
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form solitary solutions and finite-difference solver verification"};
  app.require_subcommand(1);

  CommonOptions run_opts, audit_opts, conv_opts, ndim_opts, bathy_opts;

  auto* run_cmd = app.add_subcommand("run", "Run the solver and emit snapshots");
  add_common(run_cmd, run_opts);

  std::size_t points = 1000;
  std::uint64_t seed = 20240601;
  double tol = kResidualTolerance;
  std::string k_list = "0.3,1";
  auto* audit_cmd = app.add_subcommand("audit", "Residual audit of the 1D closed forms");
  add_common(audit_cmd, audit_opts);
  audit_cmd->add_option("--points", points, "Number of sample points");
  audit_cmd->add_option("--seed", seed, "Sampling seed");
  audit_cmd->add_option("--tol", tol, "Residual tolerance");
  audit_cmd->add_option("--k-h", k_list, "Eddy viscosities for the NS audit");

  double t_end = 0.5;
  int levels = 4;
  double min_rate = 0.8, max_rate = 1.3;
  auto* conv_cmd = app.add_subcommand("converge", "Grid-refinement study of the solver");
  add_common(conv_cmd, conv_opts);
  conv_cmd->add_option("--t-end", t_end, "Final time of each run");
  conv_cmd->add_option("--levels", levels, "Number of refinement levels (>= 3)");
  conv_cmd->add_option("--min-rate", min_rate);
  conv_cmd->add_option("--max-rate", max_rate);

  std::string dims = "2,3";
  std::string ndim_k = "0,0.3";
  std::size_t ndim_points = 200;
  auto* ndim_cmd = app.add_subcommand("ndim-audit", "Residual audit of the n-D closed forms");
  add_common(ndim_cmd, ndim_opts);
  ndim_cmd->add_option("--dims", dims, "Spatial dimension counts");
  ndim_cmd->add_option("--k-h", ndim_k, "Eddy viscosities");
  ndim_cmd->add_option("--points", ndim_points, "Number of sample points");
  ndim_cmd->add_option("--seed", seed, "Sampling seed");
  ndim_cmd->add_option("--tol", tol, "Residual tolerance");

  double bathy_k = 1.0, t_switch = 5.0, bathy_end = 10.0;
  auto* bathy_cmd = app.add_subcommand("bathymetry", "h_B(x, t) with k_H switched on at --switch");
  add_common(bathy_cmd, bathy_opts);
  bathy_cmd->add_option("--k-h", bathy_k, "Eddy viscosity after the switch");
  bathy_cmd->add_option("--switch", t_switch, "Switch time [s]");
  bathy_cmd->add_option("--t-end", bathy_end, "End time [s]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kError;
  }

  try {
    if (*run_cmd) return cmd_run(run_opts);
    if (*audit_cmd) return cmd_audit(audit_opts, points, seed, tol, k_list);
    if (*conv_cmd) return cmd_converge(conv_opts, t_end, levels, min_rate, max_rate);
    if (*ndim_cmd) return cmd_ndim(ndim_opts, dims, ndim_k, ndim_points, seed, tol);
    if (*bathy_cmd) return cmd_bathymetry(bathy_opts, bathy_k, t_switch, bathy_end);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kError;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
