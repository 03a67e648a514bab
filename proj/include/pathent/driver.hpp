#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pathent/gravity.hpp"
#include "pathent/separability.hpp"

namespace pathent {

/// Sweep and audit points are independent; kParallel evaluates them under
/// OpenMP and merges results in input order, so both modes produce identical
/// bytes. The serial path is kept as the reference implementation.
enum class ExecutionMode { kSerial, kParallel };

/// Sweep over theta = coupling * hold_time / (pi * separation) at fixed
/// arm/separation ratio.
struct SweepSpec {
  double theta_min = 0.0;
  double theta_max = 4.0;
  int steps = 400;        // grid intervals; rows = steps + 1
  double ratio = 0.5;     // arm / separation, in (0,1)
  bool use_numeric_phases = false;
  double tau_over_hold = 1e-3;  // ramp_time / hold_time, numeric mode only

  void validate() const;
};

struct SweepRow {
  double theta = 0.0;
  double phi_ll = 0.0, phi_lr = 0.0, phi_rl = 0.0, phi_rr = 0.0;
  double negativity_closed = 0.0;
  double negativity_pipeline = 0.0;
  double v_closed = 0.0;
  double v_pipeline = 0.0;
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec,
                                ExecutionMode mode = ExecutionMode::kSerial);
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

/// Randomized channel audit: per sample, the inseparability measure, the
/// output negativity on the uniform input and their consistency flag.
struct AuditSpec {
  int samples = 200;
  std::uint64_t seed = 42;
  std::size_t dim_a = 2;
  std::size_t dim_b = 2;
  std::size_t rank = 0;  // 0 = cycle through all ranks 1..d_A*d_B
  double tol = 1e-9;

  void validate() const;
};

struct AuditRow {
  int sample = 0;
  std::size_t rank = 0;
  double measure = 0.0;
  double output_negativity = 0.0;
  bool consistent = false;
};

struct AuditSummary {
  long both_positive = 0;   // measure > tol and negativity > tol/(dA*dB)
  long measure_only = 0;    // off-diagonal cells; must stay zero
  long negativity_only = 0;
  long both_zero = 0;
  long inconsistent = 0;    // rows whose consistency flag is false
};

std::vector<AuditRow> run_audit(const AuditSpec& spec,
                                ExecutionMode mode = ExecutionMode::kSerial);
AuditSummary summarize_audit(const AuditSpec& spec,
                             const std::vector<AuditRow>& rows);
void write_audit_csv(std::ostream& os, const std::vector<AuditRow>& rows);
void write_audit_summary(std::ostream& os, const AuditSpec& spec,
                         const AuditSummary& summary);

/// Single-configuration analysis: both phase tables, their worst relative
/// disagreement, the channel spectrum and rank, both diagnostics through the
/// closed forms and the full pipeline, and the separability verdict.
struct AnalyzeReport {
  InterferometerConfig config;
  double integrator_eps = 1e-9;
  PhaseTable analytic;
  PhaseTable numeric;
  double max_phase_rel_discrepancy = 0.0;
  std::vector<double> coefficient_eigenvalues;  // ascending
  std::size_t kraus_rank = 0;
  double negativity_closed = 0.0;
  double negativity_pipeline = 0.0;
  double v_closed = 0.0;
  double v_pipeline = 0.0;
  SeparabilityVerdict verdict;
};

AnalyzeReport run_analyze(const InterferometerConfig& config,
                          double integrator_eps = 1e-9);
void write_analyze_csv(std::ostream& os, const AnalyzeReport& report);
void write_analyze_report(std::ostream& os, const AnalyzeReport& report);

/// Flat key = value configuration; '#' starts a comment. Keys: coupling,
/// separation, arm, hold_time, ramp_time and optional integrator_eps.
/// Parse failures throw ConfigError naming the offending line.
struct ParsedConfig {
  InterferometerConfig config;
  double integrator_eps = 1e-9;
};

ParsedConfig parse_config(std::istream& in);

void write_swap_demo_report(std::ostream& os, const SwapDemoResult& result);

/// 17 significant digits; round-trip exact for doubles. The CSV writers use
/// this, human-readable reports use format_g6.
std::string format_g17(double x);
std::string format_g6(double x);

}  // namespace pathent
