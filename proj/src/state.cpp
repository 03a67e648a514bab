#include "pathent/state.hpp"

#include <cmath>
#include <string>

#include "pathent/rng.hpp"

namespace pathent {

PathAmplitudes uniform_superposition(std::size_t d) {
  if (d == 0) {
    throw ValidationError(Violation::kInvalidArgument,
                          "superposition over zero paths");
  }
  PathAmplitudes p;
  p.amplitudes.assign(d, Complex{1.0 / std::sqrt(static_cast<double>(d)), 0.0});
  return p;
}

namespace {

double squared_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return s;
}

void require_normalized(const PathAmplitudes& p, const char* which) {
  for (const Complex& z : p.amplitudes) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError(Violation::kNotFinite,
                            std::string(which) + " amplitudes not finite");
    }
  }
  if (std::abs(squared_norm(p.amplitudes) - 1.0) > kNormalizationTol) {
    throw ValidationError(Violation::kNotNormalized,
                          std::string(which) + " amplitudes not normalized");
  }
}

}  // namespace

DensityOperator validate_density(const Matrix& m, std::size_t d_a,
                                 std::size_t d_b, double tol) {
  const std::size_t n = d_a * d_b;
  if (d_a == 0 || d_b == 0 || !m.is_square() || m.rows() != n) {
    throw ValidationError(Violation::kDimensionMismatch,
                          "density matrix size does not match d_A*d_B");
  }
  if (!m.all_finite()) {
    throw ValidationError(Violation::kNotFinite,
                          "density matrix holds a non-finite entry");
  }
  if (!m.is_hermitian(tol)) {
    throw ValidationError(Violation::kNotHermitian,
                          "density matrix is not Hermitian within tol");
  }
  if (std::abs(m.trace().real() - 1.0) > kNormalizationTol ||
      std::abs(m.trace().imag()) > kNormalizationTol) {
    throw ValidationError(Violation::kNotUnitTrace,
                          "density matrix trace differs from one");
  }
  if (!is_psd(m, tol)) {
    throw ValidationError(Violation::kNotPositiveSemidefinite,
                          "density matrix has a negative eigenvalue");
  }
  return DensityOperator(d_a, d_b, m);
}

DensityOperator pure_product_state(const PathAmplitudes& psi,
                                   const PathAmplitudes& phi, double tol) {
  require_normalized(psi, "A");
  require_normalized(phi, "B");
  const std::size_t d_a = psi.amplitudes.size();
  const std::size_t d_b = phi.amplitudes.size();
  const std::size_t n = d_a * d_b;

  std::vector<Complex> joint(n);
  for (std::size_t a = 0; a < d_a; ++a)
    for (std::size_t b = 0; b < d_b; ++b)
      joint[basis_index(a, b, d_b)] = psi.amplitudes[a] * phi.amplitudes[b];

  Matrix rho(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rho(i, j) = joint[i] * std::conj(joint[j]);
  return validate_density(rho, d_a, d_b, tol);
}

DensityOperator assemble_separable(const ProductStateEnsemble& e, double tol) {
  if (e.weights.size() != e.factors.size() || e.weights.empty()) {
    throw ValidationError(Violation::kBadWeights,
                          "weights and factors must pair up");
  }
  double sum = 0.0;
  for (double w : e.weights) {
    if (!(w >= 0.0)) {
      throw ValidationError(Violation::kBadWeights, "negative ensemble weight");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kNormalizationTol) {
    throw ValidationError(Violation::kBadWeights,
                          "ensemble weights do not sum to one");
  }

  const std::size_t d_a = e.factors.front().first.rows();
  const std::size_t d_b = e.factors.front().second.rows();
  for (const auto& [rho_k, sigma_k] : e.factors) {
    if (rho_k.rows() != d_a || rho_k.cols() != d_a || sigma_k.rows() != d_b ||
        sigma_k.cols() != d_b) {
      throw ValidationError(Violation::kDimensionMismatch,
                            "ensemble factor dimensions differ");
    }
    // factors must themselves be states
    validate_density(rho_k, 1, d_a, tol);
    validate_density(sigma_k, 1, d_b, tol);
  }

  Matrix acc(d_a * d_b, d_a * d_b);
  for (std::size_t k = 0; k < e.weights.size(); ++k) {
    acc = acc + Complex{e.weights[k], 0.0} *
                    kron(e.factors[k].first, e.factors[k].second);
  }
  return validate_density(acc, d_a, d_b, tol);
}

ProductStateEnsemble random_separable_state(std::uint64_t seed,
                                            std::size_t d_a, std::size_t d_b,
                                            std::size_t terms) {
  if (terms == 0) {
    throw ValidationError(Violation::kInvalidArgument,
                          "ensemble needs at least one term");
  }
  Rng rng(seed);
  ProductStateEnsemble e;
  e.weights.resize(terms);
  double sum = 0.0;
  for (auto& w : e.weights) {
    w = -std::log(rng.uniform());  // Exp(1) draws -> flat Dirichlet
    sum += w;
  }
  for (auto& w : e.weights) w /= sum;
  e.factors.reserve(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    Matrix rho_k = random_pure_projector(rng, d_a);
    Matrix sigma_k = random_pure_projector(rng, d_b);
    e.factors.emplace_back(std::move(rho_k), std::move(sigma_k));
  }
  return e;
}

}  // namespace pathent
