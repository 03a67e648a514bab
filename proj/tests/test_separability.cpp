#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pathent/gravity.hpp"
#include "pathent/rng.hpp"
#include "pathent/separability.hpp"

using namespace pathent;

namespace {

DensityOperator bell_state() {
  Matrix m(4, 4);
  m(0, 0) = 0.5;
  m(0, 3) = 0.5;
  m(3, 0) = 0.5;
  m(3, 3) = 0.5;
  return validate_density(m, 2, 2);
}

Matrix all_ones(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = 1.0;
  return m;
}

PhaseTable phases_with_mismatch(double mismatch) {
  PhaseTable p;
  p.at(Path::kRight, Path::kLeft) = mismatch;
  return p;
}

}  // namespace

TEST_CASE("partial transpose of a product state stays positive") {
  Rng rng(41);
  const Matrix rho_a = random_density(rng, 2);
  const Matrix rho_b = random_density(rng, 3);
  const Matrix pt = partial_transpose(kron(rho_a, rho_b), 2, 3);
  // transposing one factor transposes that factor alone
  Matrix rho_a_t(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) rho_a_t(i, j) = rho_a(j, i);
  CHECK(max_abs_diff(pt, kron(rho_a_t, rho_b)) == 0.0);
  CHECK(is_psd(pt));
}

TEST_CASE("partial transpose is an involution preserving trace and hermiticity") {
  Rng rng(42);
  const Matrix m = hermitian_part(random_density(rng, 6));
  const Matrix pt = partial_transpose(m, 2, 3);
  CHECK(pt.is_hermitian(1e-14));
  CHECK(std::abs(pt.trace() - m.trace()) == 0.0);
  CHECK(max_abs_diff(partial_transpose(pt, 2, 3), m) == 0.0);
  CHECK_THROWS_AS(partial_transpose(m, 2, 2), ValidationError);
}

TEST_CASE("bell state negativity") {
  const DensityOperator bell = bell_state();
  const Matrix pt = partial_transpose(bell.matrix(), 2, 2);
  CHECK(oracles::spectrum_matches_power_sums(pt, {-0.5, 0.5, 0.5, 0.5}, 1e-12));

  const NegativityReport report = negativity(bell);
  CHECK(std::abs(report.value - 0.5) < 1e-12);
  REQUIRE(report.negative_eigenvalues.size() == 1);
  CHECK(std::abs(report.negative_eigenvalues[0] + 0.5) < 1e-12);

  double recomputed = 0.0;
  for (double lambda : report.negative_eigenvalues) recomputed += -lambda;
  CHECK(std::abs(report.value - recomputed) < 1e-12);
}

TEST_CASE("separable assemblies have zero negativity") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityOperator rho =
        assemble_separable(random_separable_state(seed, 2, 2, 2 + seed % 3));
    CHECK(negativity(rho).value < 1e-10);
    CHECK(ppt_verdict(rho).tag == Separability::kSeparable);
  }
}

TEST_CASE("ppt verdict tags") {
  const SeparabilityVerdict bell = ppt_verdict(bell_state());
  CHECK(bell.tag == Separability::kEntangled);
  REQUIRE(bell.witness.has_value());
  CHECK(std::abs(*bell.witness + 0.5) < 1e-12);

  const SeparabilityVerdict mixed = ppt_verdict(
      validate_density(Complex{0.25, 0.0} * Matrix::identity(4), 2, 2));
  CHECK(mixed.tag == Separability::kSeparable);

  // PPT on 3x3 is no longer sufficient: the verdict must stay open.
  const SeparabilityVerdict big = ppt_verdict(
      validate_density(Complex{1.0 / 9.0, 0.0} * Matrix::identity(9), 3, 3));
  CHECK(big.tag == Separability::kInconclusive);
}

TEST_CASE("negativity is invariant under local unitaries") {
  Rng rng(43);
  const DensityOperator bell = bell_state();
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix local = kron(random_unitary(rng, 2), random_unitary(rng, 2));
    const Matrix rotated =
        matmul(local, matmul(bell.matrix(), dagger(local)));
    const DensityOperator rho = validate_density(rotated, 2, 2);
    CHECK(std::abs(negativity(rho).value - 0.5) < 1e-10);
  }
}

TEST_CASE("inseparability measure of the canonical channels") {
  // All-ones coefficients (the identity channel) are invariant under the
  // partial index swap, so the spectrum {4,0,0,0} carries no negative part.
  const CoefficientMatrix identity_e = validate_coefficients(all_ones(4), 2, 2);
  const Matrix pt = partial_transpose(identity_e.matrix(), 2, 2);
  CHECK(oracles::spectrum_matches_power_sums(pt, {0.0, 0.0, 0.0, 4.0}, 1e-12));
  CHECK(inseparability_measure(identity_e).value == 0.0);
  CHECK(channel_separability_verdict(identity_e).tag ==
        Separability::kSeparable);

  const CoefficientMatrix dephasing =
      validate_coefficients(Matrix::identity(4), 2, 2);
  CHECK(inseparability_measure(dephasing).value == 0.0);
  CHECK(channel_separability_verdict(dephasing).tag ==
        Separability::kSeparable);
}

TEST_CASE("gravity channel at mismatch pi/2 and pi") {
  const CoefficientMatrix half =
      gravity_coefficients(phases_with_mismatch(std::acos(-1.0) / 2.0));
  CHECK(std::abs(inseparability_measure(half).value - std::sqrt(2.0)) < 1e-10);

  const CoefficientMatrix peak =
      gravity_coefficients(phases_with_mismatch(std::acos(-1.0)));
  CHECK(std::abs(inseparability_measure(peak).value - 2.0) < 1e-10);
  CHECK(channel_separability_verdict(peak).tag == Separability::kEntangled);
}

TEST_CASE("audit ties the measure to the output negativity") {
  const CoefficientMatrix identity_e = validate_coefficients(all_ones(4), 2, 2);
  const ChannelAudit trivial = audit_channel(identity_e);
  CHECK(trivial.measure == 0.0);
  CHECK(trivial.output_negativity == 0.0);
  CHECK(trivial.consistent);

  const CoefficientMatrix peak =
      gravity_coefficients(phases_with_mismatch(std::acos(-1.0)));
  const ChannelAudit extreme = audit_channel(peak);
  CHECK(std::abs(extreme.measure - 2.0) < 1e-9);
  CHECK(std::abs(extreme.output_negativity - 0.5) < 1e-9);
  CHECK(extreme.consistent);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const CoefficientMatrix e =
        random_coefficient_matrix(seed, 2, 2, 1 + seed % 4);
    const ChannelAudit audit = audit_channel(e);
    CHECK(audit.consistent);
    CHECK(std::abs(audit.output_negativity - audit.measure / 4.0) < 1e-9);
  }
}

TEST_CASE("entangled verdict iff positive output negativity on 2x2") {
  for (std::uint64_t seed = 700; seed < 760; ++seed) {
    const CoefficientMatrix e =
        random_coefficient_matrix(seed, 2, 2, 1 + seed % 4);
    const bool verdict_entangled =
        channel_separability_verdict(e).tag == Separability::kEntangled;
    const ChannelAudit audit = audit_channel(e);
    CHECK(verdict_entangled == (audit.output_negativity > 1e-9 / 4.0));
  }
}

TEST_CASE("swap demo") {
  const SwapDemoResult result = swap_demo(2);
  CHECK(result.choi_verdict.tag == Separability::kEntangled);
  REQUIRE(result.choi_verdict.witness.has_value());
  CHECK(std::abs(*result.choi_verdict.witness + 0.25) < 1e-10);
  CHECK(result.preserved_count == result.total_inputs);
  CHECK(result.preserved_separability);
  CHECK(result.population_gate_rejected);
  CHECK_THROWS_AS(swap_demo(1), ValidationError);
}
