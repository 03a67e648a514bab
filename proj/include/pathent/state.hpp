#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pathent/linalg.hpp"

namespace pathent {

// Composite basis ordering used everywhere: |a>|b> -> index a * d_B + b,
// with zero-based path labels (L, R map to 0, 1).
inline std::size_t basis_index(std::size_t a, std::size_t b, std::size_t d_b) {
  return a * d_b + b;
}
inline std::pair<std::size_t, std::size_t> basis_labels(std::size_t index,
                                                        std::size_t d_b) {
  return {index / d_b, index % d_b};
}

/// Single-particle path amplitudes; |amplitudes|^2 sums to one within
/// kNormalizationTol.
struct PathAmplitudes {
  std::vector<Complex> amplitudes;
};

inline constexpr double kNormalizationTol = 1e-12;

/// All amplitudes equal to 1/sqrt(d); throws for d = 0.
PathAmplitudes uniform_superposition(std::size_t d);

/// Bipartite density operator on the composite path basis. Instances exist
/// only through validate_density (or operations that provably preserve
/// validity), so holding one certifies Hermiticity, unit trace and positivity.
class DensityOperator {
 public:
  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  const Matrix& matrix() const { return matrix_; }

 private:
  DensityOperator(std::size_t d_a, std::size_t d_b, Matrix m)
      : dim_a_(d_a), dim_b_(d_b), matrix_(std::move(m)) {}

  friend DensityOperator validate_density(const Matrix&, std::size_t,
                                          std::size_t, double);

  std::size_t dim_a_;
  std::size_t dim_b_;
  Matrix matrix_;
};

/// Certifies m as a density operator on dims (d_a, d_b): square of size
/// d_a*d_b, finite, Hermitian within tol, trace one within kNormalizationTol,
/// PSD within tol. Each violated condition is reported distinctly.
DensityOperator validate_density(const Matrix& m, std::size_t d_a,
                                 std::size_t d_b, double tol = kDefaultTol);

/// Rank-one projector onto (sum_a psi_a |a>) (x) (sum_b phi_b |b>).
DensityOperator pure_product_state(const PathAmplitudes& psi,
                                   const PathAmplitudes& phi,
                                   double tol = kDefaultTol);

/// Convex mixture of product states: weights p_k >= 0 summing to one and
/// factor pairs (rho_k on A, sigma_k on B).
struct ProductStateEnsemble {
  std::vector<double> weights;
  std::vector<std::pair<Matrix, Matrix>> factors;
};

/// Assembles sum_k p_k rho_k (x) sigma_k and certifies the result.
DensityOperator assemble_separable(const ProductStateEnsemble& e,
                                   double tol = kDefaultTol);

/// Deterministic (per seed) separable ensemble: Haar-random pure factors and
/// flat-Dirichlet weights.
ProductStateEnsemble random_separable_state(std::uint64_t seed,
                                            std::size_t d_a, std::size_t d_b,
                                            std::size_t terms);

}  // namespace pathent
