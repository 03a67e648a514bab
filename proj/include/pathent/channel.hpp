#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathent/state.hpp"

namespace pathent {

/// Coefficient matrix of a population-preserving channel: Hermitian, PSD,
/// unit diagonal, indexed by composite path labels. It fully determines the
/// channel, which acts as an entrywise (Schur) multiplier in the path basis.
/// Instances exist only through validate_coefficients.
class CoefficientMatrix {
 public:
  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  std::size_t size() const { return dim_a_ * dim_b_; }
  const Matrix& matrix() const { return matrix_; }

 private:
  CoefficientMatrix(std::size_t d_a, std::size_t d_b, Matrix m)
      : dim_a_(d_a), dim_b_(d_b), matrix_(std::move(m)) {}

  friend CoefficientMatrix validate_coefficients(const Matrix&, std::size_t,
                                                 std::size_t, double);

  std::size_t dim_a_;
  std::size_t dim_b_;
  Matrix matrix_;
};

/// Certifies m as a coefficient matrix: unit diagonal (within
/// kNormalizationTol), Hermitian and PSD (within tol). Distinct errors per
/// violated condition.
CoefficientMatrix validate_coefficients(const Matrix& m, std::size_t d_a,
                                        std::size_t d_b,
                                        double tol = kDefaultTol);

/// Kraus operators with their completeness residual ||sum K^dag K - I||_F.
/// In this project in/out spaces are identified by relabeling, so every
/// operator is square on the composite path basis.
struct KrausSet {
  std::vector<Matrix> operators;
  double completeness_residual = 0.0;
};

/// Channel image of the unnormalized maximally entangled input, kept in the
/// natural A,B,A',B' tensor order. Trace equals d_A*d_B.
struct ChoiMatrix {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  Matrix matrix;  // (d_A*d_B)^2 square, order A (x) B (x) A' (x) B'
};

/// Applies the channel: (out)_{ij} = E_{ij} * rho_{ij} in the path basis.
/// The output is certified as a density operator before returning.
DensityOperator apply_channel(const CoefficientMatrix& e,
                              const DensityOperator& rho);

/// Eigendecomposes E = sum_l nu_l v_l v_l^dag and emits one diagonal Kraus
/// operator diag(sqrt(nu_l) * v_l) per eigenvalue above 1e-12 * d_A * d_B.
KrausSet kraus_from_coefficients(const CoefficientMatrix& e);

/// Gram reconstruction E_{ij} = sum_l k^(l)_i conj(k^(l)_j) from diagonal
/// Kraus operators. Rejects non-diagonal operators (the channel would not be
/// population-preserving) and incomplete sets.
CoefficientMatrix coefficients_from_kraus(const KrausSet& k, std::size_t d_a,
                                          std::size_t d_b,
                                          double tol = kDefaultTol);

/// Choi matrix sum_l (K_l (x) I)|Omega><Omega|(K_l (x) I)^dag with
/// |Omega> = sum_I |I>_{AB} |I>_{A'B'}, in the natural A,B,A',B' order.
ChoiMatrix choi_of_kraus(const KrausSet& k, std::size_t d_a, std::size_t d_b,
                         double tol = kDefaultTol);

/// Reorders the Choi matrix to the A,A',B,B' layout, the bipartite cut that
/// channel separability is judged across.
Matrix choi_across_cut(const ChoiMatrix& choi);

/// Matrix elements of the Choi matrix in the orthonormal frame
/// {|a>_A |a>_{A'} (x) |b>_B |b>_{B'}}. For a population-preserving channel
/// this reproduces its coefficient matrix entrywise.
Matrix choi_frame_projection(const ChoiMatrix& choi);

/// Checks that every joint path population survives the channel, on all
/// basis projector pairs and `trials` seeded random inputs. On failure
/// returns false and, if given, fills `counterexample`.
bool population_check(const CoefficientMatrix& e, int trials,
                      std::uint64_t seed, double tol = kDefaultTol,
                      std::string* counterexample = nullptr);

/// Deterministic random coefficient matrix of the given rank: a normalized
/// Gram matrix of rank x (d_A*d_B) complex Gaussians. rank must lie in
/// [1, d_A*d_B]; the overload without a rank samples at full rank.
CoefficientMatrix random_coefficient_matrix(std::uint64_t seed,
                                            std::size_t d_a, std::size_t d_b,
                                            std::size_t rank);
CoefficientMatrix random_coefficient_matrix(std::uint64_t seed,
                                            std::size_t d_a, std::size_t d_b);

}  // namespace pathent
