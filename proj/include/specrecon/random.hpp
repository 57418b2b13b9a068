#ifndef SPECRECON_RANDOM_HPP_
#define SPECRECON_RANDOM_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace specrecon {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic sub-stream seed. Serial and per-stream-parallel execution see
// the same draws as long as each stream id keeps its own engine.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = seed;
  std::uint64_t mixed = splitmix64(state) ^ (stream * 0xd1342543de82ef95ULL);
  return splitmix64(mixed);
}

/// Seeded generator with the samplers the simulator needs. All samplers are
/// hand-rolled on top of the raw engine output so that a given seed produces
/// the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  // Exact Poisson sampling: product-of-uniforms inversion for small means,
  // transformed rejection (Hormann's PTRS) for large ones.
  std::int64_t poisson(double mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean)) {
      throw std::invalid_argument("poisson mean must be finite and >= 0");
    }
    if (mean == 0.0) return 0;
    if (mean < 10.0) return poisson_inversion(mean);
    return poisson_ptrs(mean);
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::int64_t poisson_inversion(double mean) {
    const double limit = std::exp(-mean);
    std::int64_t k = 0;
    double prod = 1.0;
    do {
      ++k;
      prod *= uniform();
    } while (prod > limit);
    return k - 1;
  }

  std::int64_t poisson_ptrs(double mean) {
    const double log_mean = std::log(mean);
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
      const double u = uniform() - 0.5;
      const double v = uniform();
      const double us = 0.5 - std::abs(u);
      const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
      if (us >= 0.07 && v <= v_r) return static_cast<std::int64_t>(k);
      if (k < 0.0 || (us < 0.013 && v > us) || v <= 0.0) continue;
      if (std::log(v) + std::log(inv_alpha) -
              std::log(a / (us * us) + b) <=
          k * log_mean - mean - std::lgamma(k + 1.0)) {
        return static_cast<std::int64_t>(k);
      }
    }
  }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace specrecon

#endif  // SPECRECON_RANDOM_HPP_
