#include "pathent/channel.hpp"

#include <cmath>
#include <sstream>

#include "pathent/rng.hpp"

namespace pathent {

CoefficientMatrix validate_coefficients(const Matrix& m, std::size_t d_a,
                                        std::size_t d_b, double tol) {
  const std::size_t n = d_a * d_b;
  if (d_a == 0 || d_b == 0 || !m.is_square() || m.rows() != n) {
    throw ValidationError(Violation::kDimensionMismatch,
                          "coefficient matrix size does not match d_A*d_B");
  }
  if (!m.all_finite()) {
    throw ValidationError(Violation::kNotFinite,
                          "coefficient matrix holds a non-finite entry");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(m(i, i) - Complex{1.0, 0.0}) > kNormalizationTol) {
      throw ValidationError(Violation::kDiagonalNotUnit,
                            "coefficient diagonal entry differs from one");
    }
  }
  if (!m.is_hermitian(tol)) {
    throw ValidationError(Violation::kNotHermitian,
                          "coefficient matrix is not Hermitian within tol");
  }
  if (!is_psd(m, tol)) {
    throw ValidationError(Violation::kNotPositiveSemidefinite,
                          "coefficient matrix has a negative eigenvalue");
  }
  return CoefficientMatrix(d_a, d_b, m);
}

DensityOperator apply_channel(const CoefficientMatrix& e,
                              const DensityOperator& rho) {
  if (e.dim_a() != rho.dim_a() || e.dim_b() != rho.dim_b()) {
    throw ValidationError(Violation::kDimensionMismatch,
                          "channel and state dimensions differ");
  }
  const std::size_t n = e.size();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = e.matrix()(i, j) * rho.matrix()(i, j);
  return validate_density(out, e.dim_a(), e.dim_b());
}

KrausSet kraus_from_coefficients(const CoefficientMatrix& e) {
  const std::size_t n = e.size();
  const auto eig = hermitian_eigensolve(e.matrix());
  const double cutoff = 1e-12 * static_cast<double>(n);

  KrausSet set;
  for (std::size_t l = 0; l < n; ++l) {
    const double nu = eig.eigenvalues[l];
    if (nu <= cutoff) continue;
    const double root = std::sqrt(nu);
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i) k(i, i) = root * eig.eigenvectors(i, l);
    set.operators.push_back(std::move(k));
  }

  Matrix sum(n, n);
  for (const Matrix& k : set.operators) sum = sum + matmul(dagger(k), k);
  set.completeness_residual = (sum - Matrix::identity(n)).frobenius_norm();
  return set;
}

namespace {

void require_complete(const KrausSet& k, std::size_t n, double tol) {
  Matrix sum(n, n);
  for (const Matrix& op : k.operators) {
    if (op.rows() != n || op.cols() != n) {
      throw ValidationError(Violation::kDimensionMismatch,
                            "Kraus operator size does not match d_A*d_B");
    }
    sum = sum + matmul(dagger(op), op);
  }
  const double residual = (sum - Matrix::identity(n)).frobenius_norm();
  if (residual > tol * std::sqrt(static_cast<double>(n))) {
    throw ValidationError(Violation::kIncompleteKraus,
                          "Kraus operators do not sum to the identity");
  }
}

}  // namespace

CoefficientMatrix coefficients_from_kraus(const KrausSet& k, std::size_t d_a,
                                          std::size_t d_b, double tol) {
  const std::size_t n = d_a * d_b;
  if (k.operators.empty()) {
    throw ValidationError(Violation::kIncompleteKraus, "empty Kraus set");
  }
  for (const Matrix& op : k.operators) {
    if (op.rows() != n || op.cols() != n) {
      throw ValidationError(Violation::kDimensionMismatch,
                            "Kraus operator size does not match d_A*d_B");
    }
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off += std::norm(op(i, j));
    if (std::sqrt(off) > tol * std::max(op.frobenius_norm(), 1.0)) {
      throw ValidationError(Violation::kNonDiagonalKraus,
                            "Kraus operator is not diagonal in the path "
                            "basis, so the channel cannot preserve "
                            "populations");
    }
  }
  require_complete(k, n, tol);

  Matrix e(n, n);
  for (const Matrix& op : k.operators) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        e(i, j) += op(i, i) * std::conj(op(j, j));
  }
  return validate_coefficients(e, d_a, d_b, tol);
}

ChoiMatrix choi_of_kraus(const KrausSet& k, std::size_t d_a, std::size_t d_b,
                         double tol) {
  const std::size_t n = d_a * d_b;
  require_complete(k, n, tol);

  // (K (x) I)|Omega> has component K[J, I] at flat index J*n + I.
  ChoiMatrix choi{d_a, d_b, Matrix(n * n, n * n)};
  for (const Matrix& op : k.operators) {
    for (std::size_t j1 = 0; j1 < n; ++j1)
      for (std::size_t i1 = 0; i1 < n; ++i1) {
        const Complex left = op(j1, i1);
        if (left == Complex{0.0, 0.0}) continue;
        for (std::size_t j2 = 0; j2 < n; ++j2)
          for (std::size_t i2 = 0; i2 < n; ++i2)
            choi.matrix(j1 * n + i1, j2 * n + i2) +=
                left * std::conj(op(j2, i2));
      }
  }
  return choi;
}

Matrix choi_across_cut(const ChoiMatrix& choi) {
  const std::vector<std::size_t> dims{choi.dim_a, choi.dim_b, choi.dim_a,
                                      choi.dim_b};
  const std::vector<std::size_t> to_cut{0, 2, 1, 3};  // A,B,A',B' -> A,A',B,B'
  return permute_systems(choi.matrix, dims, to_cut);
}

Matrix choi_frame_projection(const ChoiMatrix& choi) {
  const std::size_t n = choi.dim_a * choi.dim_b;
  // Frame vector for (a,b) is the basis vector |ab>_{AB} |ab>_{A'B'}.
  Matrix e(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      e(i, j) = choi.matrix(i * n + i, j * n + j);
  return e;
}

bool population_check(const CoefficientMatrix& e, int trials,
                      std::uint64_t seed, double tol,
                      std::string* counterexample) {
  const std::size_t n = e.size();

  auto check_state = [&](const DensityOperator& rho,
                         const std::string& label) -> bool {
    const DensityOperator out = apply_channel(e, rho);
    for (std::size_t i = 0; i < n; ++i) {
      const double before = rho.matrix()(i, i).real();
      const double after = out.matrix()(i, i).real();
      if (std::abs(before - after) > tol) {
        if (counterexample != nullptr) {
          std::ostringstream os;
          os << label << ": population at basis index " << i << " moved from "
             << before << " to " << after;
          *counterexample = os.str();
        }
        return false;
      }
    }
    return true;
  };

  // Basis projector pairs first.
  for (std::size_t i = 0; i < n; ++i) {
    Matrix proj(n, n);
    proj(i, i) = 1.0;
    if (!check_state(validate_density(proj, e.dim_a(), e.dim_b()),
                     "basis projector")) {
      return false;
    }
  }
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const DensityOperator rho =
        validate_density(random_density(rng, n), e.dim_a(), e.dim_b());
    if (!check_state(rho, "random state")) return false;
  }
  return true;
}

CoefficientMatrix random_coefficient_matrix(std::uint64_t seed,
                                            std::size_t d_a, std::size_t d_b,
                                            std::size_t rank) {
  const std::size_t n = d_a * d_b;
  if (rank < 1 || rank > n) {
    throw ValidationError(Violation::kInvalidArgument,
                          "rank must lie in [1, d_A*d_B]");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Matrix x(rank, n);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < n; ++j) x(i, j) = rng.complex_gaussian();
    const Matrix g = matmul(dagger(x), x);

    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      ok = g(i, i).real() >= 1e-12;
    if (!ok) continue;

    std::vector<double> root(n);
    for (std::size_t i = 0; i < n; ++i) root[i] = std::sqrt(g(i, i).real());
    Matrix e(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        e(i, j) = g(i, j) / (root[i] * root[j]);
      e(i, i) = 1.0;  // exact by construction
    }
    return validate_coefficients(e, d_a, d_b);
  }
  throw ValidationError(Violation::kNoConvergence,
                        "random Gram matrix kept a near-zero diagonal");
}

CoefficientMatrix random_coefficient_matrix(std::uint64_t seed,
                                            std::size_t d_a,
                                            std::size_t d_b) {
  return random_coefficient_matrix(seed, d_a, d_b, d_a * d_b);
}

}  // namespace pathent
