#pragma once

#include <armadillo>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace crsim {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Derives an independent stream seed from a master seed and a trial index.
/// Trial i always maps to the same stream, so serial and parallel Monte Carlo
/// sweeps produce bit-identical results.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master;
  std::uint64_t mixed = detail::splitmix64(s);
  s = mixed ^ (0x2545f4914f6cdd1dULL + index * 0x9e3779b97f4a7c15ULL);
  return detail::splitmix64(s);
}

/// Seeded random generator with explicit, portable sampling routines.
/// Gaussian draws use Box-Muller on 53-bit uniforms so that the output stream
/// depends only on the seed, not on the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  /// Independent child stream for trial `index` (see derive_seed).
  Rng derive(std::uint64_t index) const { return Rng(derive_seed(seed_, index)); }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal N(0, 1).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] avoids log(0)
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  /// Circularly symmetric complex Gaussian with per-entry variance `var`
  /// (i.e. var/2 in each of the real and imaginary parts).
  std::complex<double> cnormal(double var = 1.0) {
    const double s = std::sqrt(var / 2.0);
    return {s * normal(), s * normal()};
  }

  /// rows x cols matrix of i.i.d. CSCG entries with per-entry variance `var`.
  arma::cx_mat cnormal_matrix(std::size_t rows, std::size_t cols, double var = 1.0) {
    arma::cx_mat m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cnormal(var);
    return m;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace crsim
