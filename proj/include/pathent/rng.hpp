#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pathent/linalg.hpp"

namespace pathent {

/// Seeded generator with hand-rolled Box-Muller Gaussians so sampled values
/// do not depend on the standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in (0, 1].
  double uniform() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  double gaussian();

  /// Real and imaginary parts are independent standard Gaussians.
  Complex complex_gaussian() { return {gaussian(), gaussian()}; }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Decorrelates per-sample seeds derived from one user-facing seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Haar-distributed pure state: normalized vector of complex Gaussians.
std::vector<Complex> random_unit_vector(Rng& rng, std::size_t n);

/// Rank-one projector onto a Haar-random pure state.
Matrix random_pure_projector(Rng& rng, std::size_t n);

/// Full-rank random density matrix G G^dagger / tr(G G^dagger).
Matrix random_density(Rng& rng, std::size_t n);

/// Haar-ish random unitary: Gram-Schmidt of a complex Gaussian matrix.
Matrix random_unitary(Rng& rng, std::size_t n);

}  // namespace pathent
