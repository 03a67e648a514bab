#include "pathent/rng.hpp"

#include <cmath>
#include <numbers>

namespace pathent {

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u = uniform();  // (0,1], log is safe
  const double v = uniform();
  const double r = std::sqrt(-2.0 * std::log(u));
  const double angle = 2.0 * std::numbers::pi * v;
  spare_ = r * std::sin(angle);
  have_spare_ = true;
  return r * std::cos(angle);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Complex> random_unit_vector(Rng& rng, std::size_t n) {
  std::vector<Complex> v(n);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& z : v) {
      z = rng.complex_gaussian();
      norm2 += std::norm(z);
    }
  } while (norm2 == 0.0);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : v) z *= inv;
  return v;
}

Matrix random_pure_projector(Rng& rng, std::size_t n) {
  const auto v = random_unit_vector(rng, n);
  Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = v[i] * std::conj(v[j]);
  return p;
}

Matrix random_density(Rng& rng, std::size_t n) {
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
  Matrix rho = matmul(g, dagger(g));
  const double tr = rho.trace().real();
  return Complex{1.0 / tr, 0.0} * rho;
}

Matrix random_unitary(Rng& rng, std::size_t n) {
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
  // Gram-Schmidt over columns, with one re-orthogonalization pass.
  for (std::size_t c = 0; c < n; ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t prev = 0; prev < c; ++prev) {
        Complex overlap = 0.0;
        for (std::size_t r = 0; r < n; ++r)
          overlap += std::conj(g(r, prev)) * g(r, c);
        for (std::size_t r = 0; r < n; ++r) g(r, c) -= overlap * g(r, prev);
      }
    }
    double norm2 = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm2 += std::norm(g(r, c));
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t r = 0; r < n; ++r) g(r, c) *= inv;
  }
  return g;
}

}  // namespace pathent
