#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pathent/driver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPropertyViolation = 2;

pathent::ExecutionMode mode_from_flag(bool parallel) {
  return parallel ? pathent::ExecutionMode::kParallel
                  : pathent::ExecutionMode::kSerial;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Population-preserving channels on path-superposed particle pairs: "
      "separability diagnostics and the gravitational dephasing demo"};
  app.require_subcommand(1);
  bool parallel = false;
  app.add_flag("--parallel", parallel,
               "evaluate sweep/audit points with OpenMP (output is identical "
               "to the serial reference)");

  pathent::SweepSpec sweep_spec;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "CSV of negativity and inseparability measure over theta = "
               "coupling*hold_time/(pi*separation)");
  sweep->add_option("--theta-min", sweep_spec.theta_min, "sweep start")
      ->capture_default_str();
  sweep->add_option("--theta-max", sweep_spec.theta_max, "sweep end")
      ->capture_default_str();
  sweep->add_option("--steps", sweep_spec.steps, "grid intervals")
      ->capture_default_str();
  sweep->add_option("--ratio", sweep_spec.ratio, "arm/separation, in (0,1)")
      ->capture_default_str();
  sweep->add_flag("--use-numeric-phases", sweep_spec.use_numeric_phases,
                  "integrate the trajectories instead of the hold-stage "
                  "formula");
  sweep->add_option("--tau-over-t", sweep_spec.tau_over_hold,
                    "ramp_time/hold_time (numeric phases only)")
      ->capture_default_str();

  std::string config_path;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "full report for one interferometer configuration file");
  analyze->add_option("config", config_path, "key = value configuration file")
      ->required();

  pathent::AuditSpec audit_spec;
  CLI::App* audit = app.add_subcommand(
      "audit", "randomized consistency audit of inseparability vs "
               "entanglement generation");
  audit->add_option("--samples", audit_spec.samples, "number of channels")
      ->capture_default_str();
  audit->add_option("--seed", audit_spec.seed, "base seed")
      ->capture_default_str();
  audit->add_option("--dim-a", audit_spec.dim_a, "paths of particle A")
      ->capture_default_str();
  audit->add_option("--dim-b", audit_spec.dim_b, "paths of particle B")
      ->capture_default_str();
  std::string rank_arg = "all";
  audit->add_option("--rank", rank_arg,
                    "Gram rank 1..d_A*d_B, or 'all' to cycle")
      ->capture_default_str();
  audit->add_option("--tol", audit_spec.tol, "consistency tolerance")
      ->capture_default_str();

  CLI::App* swap = app.add_subcommand(
      "swap-demo", "the SWAP counterexample: non-entangling yet inseparable");
  (void)swap;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sweep->parsed()) {
      const auto rows = pathent::run_sweep(sweep_spec, mode_from_flag(parallel));
      pathent::write_sweep_csv(std::cout, rows);
      return kExitOk;
    }

    if (analyze->parsed()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "cannot open config file: " << config_path << '\n';
        return kExitUsage;
      }
      const pathent::ParsedConfig parsed = pathent::parse_config(in);
      const pathent::AnalyzeReport report =
          pathent::run_analyze(parsed.config, parsed.integrator_eps);
      pathent::write_analyze_report(std::cerr, report);
      pathent::write_analyze_csv(std::cout, report);
      return kExitOk;
    }

    if (audit->parsed()) {
      if (rank_arg == "all") {
        audit_spec.rank = 0;
      } else {
        try {
          audit_spec.rank = std::stoul(rank_arg);
        } catch (const std::exception&) {
          std::cerr << "rank must be a positive integer or 'all'\n";
          return kExitUsage;
        }
        if (audit_spec.rank == 0) {
          std::cerr << "rank must be a positive integer or 'all'\n";
          return kExitUsage;
        }
      }
      const auto rows = pathent::run_audit(audit_spec, mode_from_flag(parallel));
      const auto summary = pathent::summarize_audit(audit_spec, rows);
      pathent::write_audit_csv(std::cout, rows);
      pathent::write_audit_summary(std::cerr, audit_spec, summary);
      if (summary.inconsistent > 0 || summary.measure_only > 0 ||
          summary.negativity_only > 0) {
        std::cerr << "audit failed: inseparability and entanglement "
                     "generation disagree\n";
        return kExitPropertyViolation;
      }
      return kExitOk;
    }

    if (swap->parsed()) {
      const pathent::SwapDemoResult result = pathent::swap_demo(2);
      pathent::write_swap_demo_report(std::cout, result);
      const bool ok = result.choi_verdict.tag ==
                          pathent::Separability::kEntangled &&
                      result.preserved_separability &&
                      result.population_gate_rejected;
      return ok ? kExitOk : kExitPropertyViolation;
    }
  } catch (const pathent::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const pathent::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
