/**
 * @file rng.hpp
 * @brief Deterministic random draws. The uniform and Gaussian transforms are
 * implemented here rather than taken from <random> distributions, whose
 * output is not pinned by the standard; given a seed the sample stream is
 * fully defined by this code on every platform.
 */
#ifndef FLUIDBEAM_RNG_HPP
#define FLUIDBEAM_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace fluidbeam {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller; consumes two engine draws per pair.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Circularly-symmetric complex Gaussian CN(0, variance).
  std::complex<double> complex_normal(double variance) {
    const double s = std::sqrt(variance / 2.0);
    const double re = s * normal();
    const double im = s * normal();
    return {re, im};
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// splitmix64 finalizer; used to derive independent per-trial seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace fluidbeam

#endif  // FLUIDBEAM_RNG_HPP
