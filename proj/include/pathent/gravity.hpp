#pragma once

#include <array>

#include "pathent/channel.hpp"

namespace pathent {

enum class Path { kLeft = 0, kRight = 1 };

/// Two-arm interferometer pair: each particle ramps out for ramp_time, holds
/// for hold_time at half-arm displacement, then ramps back. Units use
/// hbar = 1, so coupling = G * m_A * m_B has dimension length/time.
struct InterferometerConfig {
  double coupling = 0.0;    // G * m_A * m_B
  double separation = 0.0;  // D, distance between the interferometer centers
  double arm = 0.0;         // L, full superposition length scale
  double hold_time = 0.0;   // T
  double ramp_time = 0.0;   // tau

  double transit_velocity() const { return arm / (2.0 * ramp_time); }
  double total_time() const { return hold_time + 2.0 * ramp_time; }

  /// All parameters strictly positive and separation > arm (the mixed-branch
  /// distance D - L must stay positive).
  void validate() const;
};

/// Accumulated two-particle phases, one per branch pair (a, b).
struct PhaseTable {
  std::array<std::array<double, 2>, 2> phi{};  // [a][b], radians

  double operator()(Path a, Path b) const {
    return phi[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  double& at(Path a, Path b) {
    return phi[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
};

/// phi_LR + phi_RL - phi_LL - phi_RR, the only combination the entanglement
/// diagnostics depend on.
double phase_mismatch(const PhaseTable& p);

/// Hold-stage approximation: phi_ab = coupling * T / (D + (eps_b - eps_a) L/2)
/// with eps_L = -1, eps_R = +1.
PhaseTable phase_analytic(const InterferometerConfig& c);

/// Full trajectory integral over ramp, hold and return segments, each
/// integrated independently by adaptive Simpson to relative tolerance eps.
PhaseTable phase_numeric(const InterferometerConfig& c, double eps = 1e-9);

/// Separation between the two particles at time t on branches (a, b). The
/// shared transverse drift cancels, so this is a 1-d distance.
double branch_separation(const InterferometerConfig& c, Path a, Path b,
                         double t);

/// Coefficient matrix with entries e^{i(phi_ab - phi_a'b')}: a rank-one pure
/// phase Gram matrix, i.e. a unitary dephasing channel.
CoefficientMatrix gravity_coefficients(const PhaseTable& p);

/// (1/2) |sin(mismatch / 2)|, the output-state negativity on the uniform
/// product input.
double negativity_closed_form(const PhaseTable& p);

/// 2 |sin(mismatch / 2)|, the channel inseparability measure.
double measure_closed_form(const PhaseTable& p);

}  // namespace pathent
