#include "pathent/driver.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>

#include "pathent/rng.hpp"

namespace pathent {

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_g6(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

void SweepSpec::validate() const {
  if (!(theta_min < theta_max)) {
    throw ValidationError(Violation::kInvalidArgument,
                          "theta-min must be below theta-max");
  }
  if (steps < 1) {
    throw ValidationError(Violation::kInvalidArgument,
                          "steps must be positive");
  }
  if (!(ratio > 0.0) || !(ratio < 1.0)) {
    throw ValidationError(Violation::kInvalidArgument,
                          "ratio must lie in (0,1)");
  }
  if (use_numeric_phases && !(tau_over_hold > 0.0)) {
    throw ValidationError(Violation::kInvalidArgument,
                          "tau-over-hold must be positive");
  }
}

namespace {

PhaseTable scale_table(const PhaseTable& unit, double factor) {
  PhaseTable out = unit;
  for (auto& row : out.phi)
    for (auto& phi : row) phi *= factor;
  return out;
}

// Phases are linear in the coupling, so one unit-coupling table serves the
// whole sweep; theta = 0 then gives an exactly zero table without ever
// building a zero-coupling configuration.
PhaseTable unit_coupling_table(const SweepSpec& spec) {
  InterferometerConfig base;
  base.coupling = 1.0;
  base.separation = 1.0;
  base.arm = spec.ratio;
  base.hold_time = 1.0;
  base.ramp_time = spec.use_numeric_phases ? spec.tau_over_hold : 1e-3;
  return spec.use_numeric_phases ? phase_numeric(base) : phase_analytic(base);
}

SweepRow evaluate_sweep_point(double theta, const PhaseTable& unit_table) {
  // theta = coupling * hold_time / (pi * separation) with D = T = 1.
  const double coupling = theta * std::numbers::pi;
  const PhaseTable table = scale_table(unit_table, coupling);

  SweepRow row;
  row.theta = theta;
  row.phi_ll = table(Path::kLeft, Path::kLeft);
  row.phi_lr = table(Path::kLeft, Path::kRight);
  row.phi_rl = table(Path::kRight, Path::kLeft);
  row.phi_rr = table(Path::kRight, Path::kRight);
  row.negativity_closed = negativity_closed_form(table);
  row.v_closed = measure_closed_form(table);

  const CoefficientMatrix e = gravity_coefficients(table);
  const DensityOperator uniform_in =
      pure_product_state(uniform_superposition(2), uniform_superposition(2));
  row.negativity_pipeline = negativity(apply_channel(e, uniform_in)).value;
  row.v_pipeline = inseparability_measure(e).value;
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, ExecutionMode mode) {
  spec.validate();
  const PhaseTable unit_table = unit_coupling_table(spec);
  const int points = spec.steps + 1;
  const double span = spec.theta_max - spec.theta_min;
  std::vector<SweepRow> rows(points);

  if (mode == ExecutionMode::kParallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < points; ++i) {
      const double theta =
          spec.theta_min + static_cast<double>(i) * span / spec.steps;
      rows[i] = evaluate_sweep_point(theta, unit_table);
    }
  } else {
    for (int i = 0; i < points; ++i) {
      const double theta =
          spec.theta_min + static_cast<double>(i) * span / spec.steps;
      rows[i] = evaluate_sweep_point(theta, unit_table);
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "theta,phi_LL,phi_LR,phi_RL,phi_RR,negativity_closed,"
        "negativity_pipeline,v_closed,v_pipeline\n";
  for (const SweepRow& r : rows) {
    os << format_g17(r.theta) << ',' << format_g17(r.phi_ll) << ','
       << format_g17(r.phi_lr) << ',' << format_g17(r.phi_rl) << ','
       << format_g17(r.phi_rr) << ',' << format_g17(r.negativity_closed) << ','
       << format_g17(r.negativity_pipeline) << ',' << format_g17(r.v_closed)
       << ',' << format_g17(r.v_pipeline) << '\n';
  }
}

void AuditSpec::validate() const {
  if (samples < 1) {
    throw ValidationError(Violation::kInvalidArgument,
                          "samples must be positive");
  }
  if (dim_a == 0 || dim_b == 0) {
    throw ValidationError(Violation::kInvalidArgument,
                          "dimensions must be positive");
  }
  if (rank > dim_a * dim_b) {
    throw ValidationError(Violation::kInvalidArgument,
                          "rank cannot exceed d_A*d_B");
  }
  if (!(tol > 0.0)) {
    throw ValidationError(Violation::kInvalidArgument, "tol must be positive");
  }
}

namespace {

AuditRow evaluate_audit_sample(const AuditSpec& spec, int index) {
  const std::size_t n = spec.dim_a * spec.dim_b;
  AuditRow row;
  row.sample = index;
  row.rank = spec.rank != 0 ? spec.rank
                            : 1 + static_cast<std::size_t>(index) % n;
  const CoefficientMatrix e = random_coefficient_matrix(
      mix_seed(spec.seed, static_cast<std::uint64_t>(index)), spec.dim_a,
      spec.dim_b, row.rank);
  const ChannelAudit audit = audit_channel(e, spec.tol);
  row.measure = audit.measure;
  row.output_negativity = audit.output_negativity;
  row.consistent = audit.consistent;
  return row;
}

}  // namespace

std::vector<AuditRow> run_audit(const AuditSpec& spec, ExecutionMode mode) {
  spec.validate();
  std::vector<AuditRow> rows(spec.samples);
  if (mode == ExecutionMode::kParallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < spec.samples; ++i) {
      rows[i] = evaluate_audit_sample(spec, i);
    }
  } else {
    for (int i = 0; i < spec.samples; ++i) {
      rows[i] = evaluate_audit_sample(spec, i);
    }
  }
  return rows;
}

AuditSummary summarize_audit(const AuditSpec& spec,
                             const std::vector<AuditRow>& rows) {
  const double scaled_tol =
      spec.tol / static_cast<double>(spec.dim_a * spec.dim_b);
  AuditSummary s;
  for (const AuditRow& r : rows) {
    const bool measure_positive = r.measure > spec.tol;
    const bool negativity_positive = r.output_negativity > scaled_tol;
    if (measure_positive && negativity_positive) ++s.both_positive;
    else if (measure_positive) ++s.measure_only;
    else if (negativity_positive) ++s.negativity_only;
    else ++s.both_zero;
    if (!r.consistent) ++s.inconsistent;
  }
  return s;
}

void write_audit_csv(std::ostream& os, const std::vector<AuditRow>& rows) {
  os << "sample,rank,v,n_out,consistent\n";
  for (const AuditRow& r : rows) {
    os << r.sample << ',' << r.rank << ',' << format_g17(r.measure) << ','
       << format_g17(r.output_negativity) << ',' << (r.consistent ? 1 : 0)
       << '\n';
  }
}

void write_audit_summary(std::ostream& os, const AuditSpec& spec,
                         const AuditSummary& s) {
  os << "audit: " << (s.both_positive + s.both_zero + s.measure_only +
                      s.negativity_only)
     << " samples, contingency [measure>tol x negativity>tol/n]: "
     << "both=" << s.both_positive << " measure-only=" << s.measure_only
     << " negativity-only=" << s.negativity_only << " neither=" << s.both_zero
     << ", inconsistent=" << s.inconsistent << " (tol=" << format_g6(spec.tol)
     << ")\n";
  if (spec.dim_a * spec.dim_b > kPptSufficientDim) {
    os << "warning: d_A*d_B > " << kPptSufficientDim
       << ", a positive partial transpose no longer certifies separability; "
          "only measure > tol conclusions are exact\n";
  }
}

AnalyzeReport run_analyze(const InterferometerConfig& config,
                          double integrator_eps) {
  config.validate();
  AnalyzeReport report;
  report.config = config;
  report.integrator_eps = integrator_eps;
  report.analytic = phase_analytic(config);
  report.numeric = phase_numeric(config, integrator_eps);

  for (Path a : {Path::kLeft, Path::kRight}) {
    for (Path b : {Path::kLeft, Path::kRight}) {
      const double ana = report.analytic(a, b);
      const double num = report.numeric(a, b);
      const double rel = std::abs(num - ana) / std::abs(ana);
      report.max_phase_rel_discrepancy =
          std::max(report.max_phase_rel_discrepancy, rel);
    }
  }

  const CoefficientMatrix e = gravity_coefficients(report.analytic);
  report.coefficient_eigenvalues = hermitian_eigensolve(e.matrix()).eigenvalues;
  report.kraus_rank = kraus_from_coefficients(e).operators.size();
  report.negativity_closed = negativity_closed_form(report.analytic);
  report.v_closed = measure_closed_form(report.analytic);

  const DensityOperator uniform_in =
      pure_product_state(uniform_superposition(2), uniform_superposition(2));
  report.negativity_pipeline = negativity(apply_channel(e, uniform_in)).value;
  report.v_pipeline = inseparability_measure(e).value;
  report.verdict = channel_separability_verdict(e);
  return report;
}

void write_analyze_csv(std::ostream& os, const AnalyzeReport& r) {
  os << "coupling,separation,arm,hold_time,ramp_time,integrator_eps,"
        "phi_LL_analytic,phi_LR_analytic,phi_RL_analytic,phi_RR_analytic,"
        "phi_LL_numeric,phi_LR_numeric,phi_RL_numeric,phi_RR_numeric,"
        "max_phase_rel_discrepancy,coeff_eig_1,coeff_eig_2,coeff_eig_3,"
        "coeff_eig_4,kraus_rank,negativity_closed,negativity_pipeline,"
        "v_closed,v_pipeline,verdict\n";
  os << format_g17(r.config.coupling) << ',' << format_g17(r.config.separation)
     << ',' << format_g17(r.config.arm) << ','
     << format_g17(r.config.hold_time) << ','
     << format_g17(r.config.ramp_time) << ',' << format_g17(r.integrator_eps);
  for (const PhaseTable* t : {&r.analytic, &r.numeric}) {
    for (Path a : {Path::kLeft, Path::kRight})
      for (Path b : {Path::kLeft, Path::kRight})
        os << ',' << format_g17((*t)(a, b));
  }
  os << ',' << format_g17(r.max_phase_rel_discrepancy);
  for (double eig : r.coefficient_eigenvalues) os << ',' << format_g17(eig);
  os << ',' << r.kraus_rank << ',' << format_g17(r.negativity_closed) << ','
     << format_g17(r.negativity_pipeline) << ',' << format_g17(r.v_closed)
     << ',' << format_g17(r.v_pipeline) << ',' << to_string(r.verdict.tag)
     << '\n';
}

void write_analyze_report(std::ostream& os, const AnalyzeReport& r) {
  os << "interferometer\n"
     << "  coupling   = " << format_g6(r.config.coupling) << '\n'
     << "  separation = " << format_g6(r.config.separation) << '\n'
     << "  arm        = " << format_g6(r.config.arm) << '\n'
     << "  hold_time  = " << format_g6(r.config.hold_time) << '\n'
     << "  ramp_time  = " << format_g6(r.config.ramp_time) << '\n';
  os << "accumulated phases (radians)\n"
     << "  branch   analytic      numeric       rel.discrepancy\n";
  static constexpr const char* kNames[2][2] = {{"LL", "LR"}, {"RL", "RR"}};
  for (Path a : {Path::kLeft, Path::kRight}) {
    for (Path b : {Path::kLeft, Path::kRight}) {
      const double ana = r.analytic(a, b);
      const double num = r.numeric(a, b);
      char line[128];
      std::snprintf(line, sizeof(line), "  %s       %-13.6g %-13.6g %.6g\n",
                    kNames[static_cast<int>(a)][static_cast<int>(b)], ana, num,
                    std::abs(num - ana) / std::abs(ana));
      os << line;
    }
  }
  os << "channel\n  coefficient eigenvalues =";
  for (double eig : r.coefficient_eigenvalues) os << ' ' << format_g6(eig);
  os << "\n  kraus rank = " << r.kraus_rank << '\n';
  os << "diagnostics\n"
     << "  negativity (closed form)  = " << format_g6(r.negativity_closed)
     << '\n'
     << "  negativity (pipeline)     = " << format_g6(r.negativity_pipeline)
     << '\n'
     << "  measure    (closed form)  = " << format_g6(r.v_closed) << '\n'
     << "  measure    (pipeline)     = " << format_g6(r.v_pipeline) << '\n'
     << "  verdict = " << to_string(r.verdict.tag);
  if (r.verdict.witness.has_value()) {
    os << " (witness = " << format_g6(*r.verdict.witness) << ")";
  }
  os << '\n';
}

namespace {

bool parse_double(const std::string& text, double& out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

ParsedConfig parse_config(std::istream& in) {
  static const std::map<std::string, int> kKeys = {
      {"coupling", 0},   {"separation", 1},     {"arm", 2},
      {"hold_time", 3},  {"ramp_time", 4},      {"integrator_eps", 5}};

  ParsedConfig parsed;
  double values[6] = {0, 0, 0, 0, 0, 1e-9};
  bool seen[6] = {false, false, false, false, false, false};

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t comment = line.find('#');
    if (comment != std::string::npos) line.erase(comment);
    const std::string body = trim(line);
    if (body.empty()) continue;

    const std::size_t eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(line_no, "expected 'key = value' on line " +
                                     std::to_string(line_no));
    }
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    const auto it = kKeys.find(key);
    if (it == kKeys.end()) {
      throw ConfigError(line_no, "unknown key '" + key + "' on line " +
                                     std::to_string(line_no));
    }
    if (seen[it->second]) {
      throw ConfigError(line_no, "duplicate key '" + key + "' on line " +
                                     std::to_string(line_no));
    }
    double parsed_value = 0.0;
    if (!parse_double(value, parsed_value)) {
      throw ConfigError(line_no, "cannot parse number '" + value +
                                     "' on line " + std::to_string(line_no));
    }
    values[it->second] = parsed_value;
    seen[it->second] = true;
  }

  for (const auto& [key, idx] : kKeys) {
    if (idx != 5 && !seen[idx]) {
      throw ConfigError(0, "missing required key '" + key + "'");
    }
  }
  parsed.config.coupling = values[0];
  parsed.config.separation = values[1];
  parsed.config.arm = values[2];
  parsed.config.hold_time = values[3];
  parsed.config.ramp_time = values[4];
  parsed.integrator_eps = values[5];
  return parsed;
}

void write_swap_demo_report(std::ostream& os, const SwapDemoResult& r) {
  os << "Choi: " << to_string(r.choi_verdict.tag);
  if (r.choi_verdict.witness.has_value()) {
    os << " (witness = " << format_g6(*r.choi_verdict.witness) << ")";
  }
  os << "\nnon-entangling: " << r.preserved_count << "/" << r.total_inputs
     << "\npopulation-preserving: "
     << (r.population_gate_rejected ? "NO" : "YES") << '\n';
}

}  // namespace pathent
