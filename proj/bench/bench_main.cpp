// Compares the serial reference evaluation of sweeps and audits against the
// OpenMP path, verifying that both produce identical rows.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pathent/driver.hpp"

using namespace pathent;

namespace {

template <typename F>
double time_seconds(const F& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int sweep_steps = 20000;
  int audit_samples = 4000;
  if (argc > 1) sweep_steps = std::atoi(argv[1]);
  if (argc > 2) audit_samples = std::atoi(argv[2]);

#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled; both runs use the serial path\n");
#endif

  SweepSpec sweep_spec;
  sweep_spec.theta_min = 0.0;
  sweep_spec.theta_max = 4.0;
  sweep_spec.steps = sweep_steps;
  sweep_spec.ratio = 0.5;

  std::vector<SweepRow> sweep_serial, sweep_parallel;
  const double sweep_t_serial = time_seconds(
      [&] { sweep_serial = run_sweep(sweep_spec, ExecutionMode::kSerial); });
  const double sweep_t_parallel = time_seconds([&] {
    sweep_parallel = run_sweep(sweep_spec, ExecutionMode::kParallel);
  });

  std::ostringstream a, b;
  write_sweep_csv(a, sweep_serial);
  write_sweep_csv(b, sweep_parallel);
  const bool sweep_match = a.str() == b.str();

  std::printf("sweep  %7d points  serial %.3f s  parallel %.3f s  "
              "speedup %.2fx  rows %s\n",
              sweep_steps + 1, sweep_t_serial, sweep_t_parallel,
              sweep_t_serial / sweep_t_parallel,
              sweep_match ? "identical" : "DIFFER");

  AuditSpec audit_spec;
  audit_spec.samples = audit_samples;
  audit_spec.seed = 42;

  std::vector<AuditRow> audit_serial, audit_parallel;
  const double audit_t_serial = time_seconds(
      [&] { audit_serial = run_audit(audit_spec, ExecutionMode::kSerial); });
  const double audit_t_parallel = time_seconds([&] {
    audit_parallel = run_audit(audit_spec, ExecutionMode::kParallel);
  });

  std::ostringstream c, d;
  write_audit_csv(c, audit_serial);
  write_audit_csv(d, audit_parallel);
  const bool audit_match = c.str() == d.str();

  std::printf("audit  %7d samples serial %.3f s  parallel %.3f s  "
              "speedup %.2fx  rows %s\n",
              audit_samples, audit_t_serial, audit_t_parallel,
              audit_t_serial / audit_t_parallel,
              audit_match ? "identical" : "DIFFER");

  return (sweep_match && audit_match) ? 0 : 1;
}
