#include "pathent/gravity.hpp"

#include <cmath>

#include "pathent/quadrature.hpp"

namespace pathent {

void InterferometerConfig::validate() const {
  if (!(coupling > 0.0) || !(separation > 0.0) || !(arm > 0.0) ||
      !(hold_time > 0.0) || !(ramp_time > 0.0)) {
    throw ValidationError(Violation::kInvalidArgument,
                          "all interferometer parameters must be positive");
  }
  if (!(separation > arm)) {
    throw ValidationError(
        Violation::kInvalidArgument,
        "separation must exceed the arm length; at separation = arm the "
        "closest-approach branch distance reaches zero and the accumulated "
        "phase diverges");
  }
}

namespace {

double branch_sign(Path p) { return p == Path::kRight ? 1.0 : -1.0; }

// Displacement of one particle from its interferometer center at time t.
double branch_displacement(const InterferometerConfig& c, Path p, double t) {
  const double v = c.transit_velocity();
  const double tau = c.ramp_time;
  const double hold_end = c.hold_time + tau;
  double s;
  if (t <= tau) {
    s = v * t;
  } else if (t <= hold_end) {
    s = v * tau;
  } else {
    s = v * (hold_end - t) + v * tau;
  }
  return branch_sign(p) * s;
}

}  // namespace

double branch_separation(const InterferometerConfig& c, Path a, Path b,
                         double t) {
  // Particle B sits at separation + its displacement; |x_b - x_a| <= arm
  // keeps the distance positive because separation > arm.
  return c.separation + branch_displacement(c, b, t) -
         branch_displacement(c, a, t);
}

double phase_mismatch(const PhaseTable& p) {
  return p(Path::kLeft, Path::kRight) + p(Path::kRight, Path::kLeft) -
         p(Path::kLeft, Path::kLeft) - p(Path::kRight, Path::kRight);
}

PhaseTable phase_analytic(const InterferometerConfig& c) {
  c.validate();
  PhaseTable table;
  for (Path a : {Path::kLeft, Path::kRight}) {
    for (Path b : {Path::kLeft, Path::kRight}) {
      const double gap =
          c.separation + (branch_sign(b) - branch_sign(a)) * 0.5 * c.arm;
      table.at(a, b) = c.coupling * c.hold_time / gap;
    }
  }
  return table;
}

PhaseTable phase_numeric(const InterferometerConfig& c, double eps) {
  c.validate();
  const double tau = c.ramp_time;
  const double hold_end = c.hold_time + tau;
  const double out = c.total_time();

  PhaseTable table;
  for (Path a : {Path::kLeft, Path::kRight}) {
    for (Path b : {Path::kLeft, Path::kRight}) {
      auto integrand = [&c, a, b](double t) {
        return c.coupling / branch_separation(c, a, b, t);
      };
      // Segment boundaries are kinks; integrating each segment on its own
      // keeps the Simpson error estimate honest.
      table.at(a, b) = adaptive_simpson(integrand, 0.0, tau, eps) +
                       adaptive_simpson(integrand, tau, hold_end, eps) +
                       adaptive_simpson(integrand, hold_end, out, eps);
    }
  }
  return table;
}

CoefficientMatrix gravity_coefficients(const PhaseTable& p) {
  const double flat[4] = {
      p(Path::kLeft, Path::kLeft), p(Path::kLeft, Path::kRight),
      p(Path::kRight, Path::kLeft), p(Path::kRight, Path::kRight)};
  for (double phi : flat) {
    if (!std::isfinite(phi)) {
      throw ValidationError(Violation::kNotFinite, "phase table not finite");
    }
  }
  Matrix e(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const double delta = flat[i] - flat[j];
      e(i, j) = Complex{std::cos(delta), std::sin(delta)};
    }
    e(i, i) = 1.0;
  }
  return validate_coefficients(e, 2, 2);
}

double negativity_closed_form(const PhaseTable& p) {
  return 0.5 * std::abs(std::sin(0.5 * phase_mismatch(p)));
}

double measure_closed_form(const PhaseTable& p) {
  return 2.0 * std::abs(std::sin(0.5 * phase_mismatch(p)));
}

}  // namespace pathent
