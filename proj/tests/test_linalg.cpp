#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "pathent/linalg.hpp"
#include "pathent/rng.hpp"

using namespace pathent;

namespace {

const Complex kI{0.0, 1.0};

Matrix pauli_x() {
  return Matrix(2, 2, {0.0, 1.0, 1.0, 0.0});
}

Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.complex_gaussian();
  return m;
}

Matrix diag_real(const std::vector<double>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

// Partial transposition of the Bell projector, written out by hand.
Matrix bell_partial_transpose() {
  Matrix m(4, 4);
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  m(1, 2) = 0.5;
  m(2, 1) = 0.5;
  return m;
}

}  // namespace

TEST_CASE("matmul basics") {
  const Matrix i2 = Matrix::identity(2);
  CHECK(max_abs_diff(matmul(i2, i2), i2) == 0.0);
  CHECK(max_abs_diff(matmul(pauli_x(), pauli_x()), i2) == 0.0);
  CHECK_THROWS_AS(matmul(Matrix(2, 3), Matrix(2, 3)), ValidationError);
}

TEST_CASE("matmul against a constructed inverse") {
  Rng rng(11);
  const Matrix q = random_unitary(rng, 3);
  const Matrix a = matmul(q, matmul(diag_real({1.5, -0.25, 3.0}), dagger(q)));
  const Matrix a_inv =
      matmul(q, matmul(diag_real({1.0 / 1.5, -4.0, 1.0 / 3.0}), dagger(q)));
  CHECK(max_abs_diff(matmul(a, a_inv), Matrix::identity(3)) < 1e-12);
}

TEST_CASE("kron basics") {
  const Matrix i2 = Matrix::identity(2);
  CHECK(max_abs_diff(kron(i2, i2), Matrix::identity(4)) == 0.0);

  Matrix e11(2, 2), e22(2, 2);
  e11(0, 0) = 1.0;
  e22(1, 1) = 1.0;
  const Matrix k = kron(e11, e22);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(k(i, j) == ((i == 1 && j == 1) ? Complex{1.0, 0.0}
                                           : Complex{0.0, 0.0}));
}

TEST_CASE("kron trace multiplicativity on seeded inputs") {
  Rng rng(7);
  const Matrix a = random_matrix(rng, 2, 2);
  const Matrix b = random_matrix(rng, 3, 3);
  const Complex lhs = kron(a, b).trace();
  const Complex rhs = a.trace() * b.trace();
  CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("kron associativity") {
  Rng rng(8);
  const Matrix a = random_matrix(rng, 2, 2);
  const Matrix b = random_matrix(rng, 2, 3);
  const Matrix c = random_matrix(rng, 3, 2);
  const Matrix left = kron(kron(a, b), c);
  const Matrix right = kron(a, kron(b, c));
  // Entries differ only by the association order of the same scalar product.
  CHECK(max_abs_diff(left, right) < 1e-14);
}

TEST_CASE("dagger basics") {
  CHECK(max_abs_diff(dagger(Matrix::identity(2)), Matrix::identity(2)) == 0.0);

  Matrix m(2, 2);
  m(0, 1) = kI;
  const Matrix d = dagger(m);
  CHECK(d(0, 1) == Complex{0.0, 0.0});
  CHECK(d(1, 0) == -kI);

  Rng rng(5);
  const Matrix r = random_matrix(rng, 3, 2);
  CHECK(max_abs_diff(dagger(dagger(r)), r) == 0.0);
}

TEST_CASE("dagger is an antihomomorphism") {
  Rng rng(6);
  const Matrix a = random_matrix(rng, 3, 3);
  const Matrix b = random_matrix(rng, 3, 3);
  CHECK(max_abs_diff(dagger(matmul(a, b)), matmul(dagger(b), dagger(a))) <
        1e-12);
}

TEST_CASE("matrix constructor rejects bad input") {
  CHECK_THROWS_AS(Matrix(2, 2, std::vector<Complex>(3)), ValidationError);
  std::vector<Complex> with_nan(4);
  with_nan[2] = Complex{std::nan(""), 0.0};
  CHECK_THROWS_AS(Matrix(2, 2, with_nan), ValidationError);
}

TEST_CASE("eigensolve diagonal input") {
  const auto d = hermitian_eigensolve(diag_real({3.0, 1.0, 2.0}));
  REQUIRE(d.eigenvalues.size() == 3);
  CHECK(d.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(d.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("eigensolve pauli x") {
  // Characteristic polynomial lambda^2 - 1 = 0.
  CHECK(oracles::spectrum_matches_power_sums(pauli_x(), {-1.0, 1.0}, 1e-12));
  const auto d = hermitian_eigensolve(pauli_x());
  CHECK(std::abs(d.eigenvalues[0] + 1.0) < 1e-12);
  CHECK(std::abs(d.eigenvalues[1] - 1.0) < 1e-12);
}

TEST_CASE("eigensolve bell partial transpose") {
  const Matrix pt = bell_partial_transpose();
  const std::vector<double> frozen{-0.5, 0.5, 0.5, 0.5};
  CHECK(oracles::spectrum_matches_power_sums(pt, frozen, 1e-12));
  const auto d = hermitian_eigensolve(pt);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(d.eigenvalues[i] - frozen[i]) < 1e-12);
  }
}

TEST_CASE("eigensolve rejects bad input") {
  CHECK_THROWS_AS(hermitian_eigensolve(Matrix(2, 3)), ValidationError);
  Matrix non_hermitian(2, 2);
  non_hermitian(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigensolve(non_hermitian), ValidationError);
}

TEST_CASE("eigensolve residuals and unitarity on seeded Hermitian matrices") {
  Rng rng(21);
  for (std::size_t n : {2u, 5u, 12u}) {
    const Matrix a = hermitian_part(random_matrix(rng, n, n));
    const auto d = hermitian_eigensolve(a);
    const double norm = a.frobenius_norm();

    double eig_sum = 0.0;
    for (double lambda : d.eigenvalues) eig_sum += lambda;
    CHECK(std::abs(eig_sum - a.trace().real()) <= 1e-10 * norm);

    const Matrix gram = matmul(dagger(d.eigenvectors), d.eigenvectors);
    CHECK((gram - Matrix::identity(n)).frobenius_norm() <= 1e-10 * n);

    for (std::size_t c = 0; c < n; ++c) {
      Matrix v(n, 1);
      for (std::size_t r = 0; r < n; ++r) v(r, 0) = d.eigenvectors(r, c);
      const Matrix residual =
          matmul(a, v) - Complex{d.eigenvalues[c], 0.0} * v;
      CHECK(residual.frobenius_norm() <= 1e-10 * std::max(norm, 1.0));
    }
  }
}

TEST_CASE("is_psd") {
  CHECK(is_psd(Matrix::identity(4)));
  CHECK_FALSE(is_psd(diag_real({1.0, -0.1})));

  // Pure-phase Gram matrices are rank-one PSD.
  Rng rng(3);
  Matrix z(4, 1);
  for (std::size_t i = 0; i < 4; ++i) {
    const double angle = 6.0 * rng.uniform();
    z(i, 0) = Complex{std::cos(angle), std::sin(angle)};
  }
  CHECK(is_psd(matmul(z, dagger(z))));
}

TEST_CASE("permute_systems swaps kron factors") {
  Rng rng(9);
  const Matrix a = random_matrix(rng, 2, 2);
  const Matrix b = random_matrix(rng, 3, 3);
  const Matrix swapped = permute_systems(kron(a, b), {2, 3}, {1, 0});
  CHECK(max_abs_diff(swapped, kron(b, a)) == 0.0);
}

TEST_CASE("permute_systems reorders four factors") {
  Rng rng(10);
  const Matrix a = random_matrix(rng, 2, 2);
  const Matrix b = random_matrix(rng, 2, 2);
  const Matrix c = random_matrix(rng, 2, 2);
  const Matrix d = random_matrix(rng, 2, 2);
  const Matrix natural = kron(kron(a, b), kron(c, d));
  const Matrix cut = permute_systems(natural, {2, 2, 2, 2}, {0, 2, 1, 3});
  CHECK(max_abs_diff(cut, kron(kron(a, c), kron(b, d))) < 1e-14);
}

TEST_CASE("permute_systems validates its arguments") {
  CHECK_THROWS_AS(permute_systems(Matrix(4, 4), {2, 3}, {0, 1}),
                  ValidationError);
  CHECK_THROWS_AS(permute_systems(Matrix(4, 4), {2, 2}, {0, 0}),
                  ValidationError);
}
