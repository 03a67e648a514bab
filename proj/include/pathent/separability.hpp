#pragma once

#include <optional>
#include <vector>

#include "pathent/channel.hpp"

namespace pathent {

// Dimension up to which a positive partial transpose certifies separability.
inline constexpr std::size_t kPptSufficientDim = 6;

enum class Separability { kSeparable, kEntangled, kInconclusive };

const char* to_string(Separability s);

struct SeparabilityVerdict {
  Separability tag = Separability::kInconclusive;
  /// Minimum eigenvalue of the partial transposition.
  std::optional<double> witness;
};

struct NegativityReport {
  double value = 0.0;  // sum of |negative eigenvalues|
  std::vector<double> negative_eigenvalues;
};

/// Partial transposition on the first factor:
/// (M^{T_A})_{(ab),(a'b')} = M_{(a'b),(ab')}.
Matrix partial_transpose(const Matrix& m, std::size_t d_a, std::size_t d_b);

/// Sum of |negative eigenvalues| of rho^{T_A}. An eigenvalue counts as
/// negative only below -tol * ||rho^{T_A}||_F.
NegativityReport negativity(const DensityOperator& rho,
                            double tol = kDefaultTol);

/// Entangled when the partial transposition has a negative eigenvalue;
/// Separable only when PPT holds and d_A*d_B <= 6; Inconclusive otherwise.
SeparabilityVerdict ppt_verdict(const DensityOperator& rho,
                                double tol = kDefaultTol);

/// Same functional applied to the coefficient matrix: sum of |negative
/// eigenvalues| of E^{T_A}. Zero exactly for separable channels.
NegativityReport inseparability_measure(const CoefficientMatrix& e,
                                        double tol = kDefaultTol);

/// PPT verdict on E/(d_A*d_B) treated as a state across the bipartite cut
/// the coefficient matrix natively carries.
SeparabilityVerdict channel_separability_verdict(const CoefficientMatrix& e,
                                                 double tol = kDefaultTol);

/// Cross-checks a channel's inseparability measure against the entanglement
/// it creates on the uniform product input: the two must co-vanish and relate
/// by measure = (d_A*d_B) * output negativity.
struct ChannelAudit {
  double measure = 0.0;           // of the coefficient matrix
  double output_negativity = 0.0; // of the uniform-input image
  bool consistent = false;
};

ChannelAudit audit_channel(const CoefficientMatrix& e, double tol = 1e-9);

/// SWAP counterexample on d (x) d: a non-entangling unitary whose Choi matrix
/// is entangled across the cut, and which the diagonal-Kraus gate rejects.
struct SwapDemoResult {
  SeparabilityVerdict choi_verdict;
  int preserved_count = 0;  // separable inputs that stayed PPT after SWAP
  int total_inputs = 0;
  bool preserved_separability = false;
  bool population_gate_rejected = false;
};

SwapDemoResult swap_demo(std::size_t d, int inputs = 50,
                         std::uint64_t seed = 20240901);

}  // namespace pathent
