#include "pathent/separability.hpp"

#include <algorithm>
#include <cmath>

#include "pathent/rng.hpp"

namespace pathent {

const char* to_string(Separability s) {
  switch (s) {
    case Separability::kSeparable: return "Separable";
    case Separability::kEntangled: return "Entangled";
    case Separability::kInconclusive: return "Inconclusive";
  }
  return "unknown";
}

Matrix partial_transpose(const Matrix& m, std::size_t d_a, std::size_t d_b) {
  const std::size_t n = d_a * d_b;
  if (!m.is_square() || m.rows() != n) {
    throw ValidationError(Violation::kDimensionMismatch,
                          "partial transpose size does not match d_A*d_B");
  }
  Matrix out(n, n);
  for (std::size_t a = 0; a < d_a; ++a)
    for (std::size_t b = 0; b < d_b; ++b)
      for (std::size_t ap = 0; ap < d_a; ++ap)
        for (std::size_t bp = 0; bp < d_b; ++bp)
          out(basis_index(a, b, d_b), basis_index(ap, bp, d_b)) =
              m(basis_index(ap, b, d_b), basis_index(a, bp, d_b));
  return out;
}

namespace {

NegativityReport negative_part(const Matrix& pt, double tol) {
  const auto eig = hermitian_eigensolve(pt, tol);
  const double threshold = tol * std::max(pt.frobenius_norm(), 1.0);
  NegativityReport report;
  for (double lambda : eig.eigenvalues) {
    if (lambda < -threshold) {
      report.negative_eigenvalues.push_back(lambda);
      report.value += -lambda;
    }
  }
  return report;
}

SeparabilityVerdict verdict_from_pt(const Matrix& pt, std::size_t total_dim,
                                    double tol) {
  const auto eig = hermitian_eigensolve(pt, tol);
  const double min_eig = eig.eigenvalues.front();
  SeparabilityVerdict v;
  v.witness = min_eig;
  if (min_eig < -tol * std::max(pt.frobenius_norm(), 1.0)) {
    v.tag = Separability::kEntangled;
  } else if (total_dim <= kPptSufficientDim) {
    v.tag = Separability::kSeparable;
  } else {
    v.tag = Separability::kInconclusive;
  }
  return v;
}

}  // namespace

NegativityReport negativity(const DensityOperator& rho, double tol) {
  return negative_part(partial_transpose(rho.matrix(), rho.dim_a(), rho.dim_b()),
                       tol);
}

SeparabilityVerdict ppt_verdict(const DensityOperator& rho, double tol) {
  return verdict_from_pt(
      partial_transpose(rho.matrix(), rho.dim_a(), rho.dim_b()),
      rho.dim_a() * rho.dim_b(), tol);
}

NegativityReport inseparability_measure(const CoefficientMatrix& e,
                                        double tol) {
  return negative_part(partial_transpose(e.matrix(), e.dim_a(), e.dim_b()),
                       tol);
}

SeparabilityVerdict channel_separability_verdict(const CoefficientMatrix& e,
                                                 double tol) {
  const double inv = 1.0 / static_cast<double>(e.size());
  const DensityOperator as_state = validate_density(
      Complex{inv, 0.0} * e.matrix(), e.dim_a(), e.dim_b(), tol);
  return ppt_verdict(as_state, tol);
}

ChannelAudit audit_channel(const CoefficientMatrix& e, double tol) {
  const std::size_t n = e.size();
  ChannelAudit audit;
  audit.measure = inseparability_measure(e).value;

  const DensityOperator uniform_in = pure_product_state(
      uniform_superposition(e.dim_a()), uniform_superposition(e.dim_b()));
  audit.output_negativity = negativity(apply_channel(e, uniform_in)).value;

  const double scaled_tol = tol / static_cast<double>(n);
  const bool flags_agree =
      (audit.measure > tol) == (audit.output_negativity > scaled_tol);
  const bool proportional =
      std::abs(audit.output_negativity -
               audit.measure / static_cast<double>(n)) <= tol;
  audit.consistent = flags_agree && proportional;
  return audit;
}

namespace {

Matrix swap_unitary(std::size_t d) {
  Matrix u(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) u(j * d + i, i * d + j) = 1.0;
  return u;
}

}  // namespace

SwapDemoResult swap_demo(std::size_t d, int inputs, std::uint64_t seed) {
  if (d < 2) {
    throw ValidationError(Violation::kInvalidArgument,
                          "SWAP demo needs d >= 2");
  }
  SwapDemoResult result;
  const Matrix u = swap_unitary(d);
  KrausSet raw;
  raw.operators.push_back(u);

  // The Choi matrix is entangled across the cut even though the channel
  // never creates entanglement.
  const ChoiMatrix choi = choi_of_kraus(raw, d, d);
  const std::size_t party = d * d;
  const double inv = 1.0 / static_cast<double>(party);
  const DensityOperator choi_state =
      validate_density(Complex{inv, 0.0} * choi_across_cut(choi), party, party);
  result.choi_verdict = ppt_verdict(choi_state);

  result.total_inputs = inputs;
  const Matrix u_dag = dagger(u);
  for (int t = 0; t < inputs; ++t) {
    const DensityOperator rho = assemble_separable(
        random_separable_state(mix_seed(seed, static_cast<std::uint64_t>(t)),
                               d, d, 3));
    const Matrix swapped = matmul(u, matmul(rho.matrix(), u_dag));
    const DensityOperator out = validate_density(swapped, d, d);
    if (ppt_verdict(out).tag != Separability::kEntangled) {
      ++result.preserved_count;
    }
  }
  result.preserved_separability = result.preserved_count == inputs;

  try {
    coefficients_from_kraus(raw, d, d);
    result.population_gate_rejected = false;
  } catch (const ValidationError& err) {
    result.population_gate_rejected =
        err.kind() == Violation::kNonDiagonalKraus;
  }
  return result;
}

}  // namespace pathent
