#ifndef MICROSIM_RNG_HPP
#define MICROSIM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace msim {

// All randomness in the simulator flows through this generator so that runs
// are reproducible bit-for-bit across platforms. The standard <random>
// distributions are implementation-defined, so the few distributions we need
// are implemented here explicitly (xoshiro256++ core, splitmix64 seeding).

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stable 64-bit hash of a label, used to carve named substreams out of one
// run seed (FNV-1a).
inline std::uint64_t hash_label(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : state_) w = splitmix64(sm);
  }

  // Substream keyed by (seed, label, keys...). Streams with different keys
  // are statistically independent, which lets per-entity/per-tick draws be
  // evaluated in any order without changing the output.
  static Rng keyed(std::uint64_t seed, std::string_view label,
                   std::initializer_list<std::uint64_t> keys = {}) {
    std::uint64_t sm = seed;
    std::uint64_t h = splitmix64(sm) ^ hash_label(label);
    for (std::uint64_t k : keys) {
      std::uint64_t t = h ^ (k + 0x9e3779b97f4a7c15ULL);
      h = splitmix64(t);
    }
    return Rng(h);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi]; degenerate ranges return lo exactly.
  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  bool bernoulli(double p) { return uniform01() < p; }

  // Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) {
    // Multiply-shift; bias is negligible for the small n used here.
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Standard normal via Box-Muller (cosine branch only, two uniforms per
  // draw, no cached spare).
  double gaussian() {
    double u1 = 1.0 - uniform01();  // (0, 1]
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  double gaussian(double mean, double stddev) { return mean + stddev * gaussian(); }

  // Poisson sample; Knuth's method for small rates, normal approximation for
  // large ones so draw cost stays bounded.
  long poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    if (lambda < 30.0) {
      const double limit = std::exp(-lambda);
      long k = 0;
      double p = 1.0;
      do {
        ++k;
        p *= uniform01();
      } while (p > limit);
      return k - 1;
    }
    double v = std::round(lambda + std::sqrt(lambda) * gaussian());
    return v < 0.0 ? 0 : static_cast<long>(v);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t state_[4];
};

// Named sub-seed of a run seed; each pipeline stage draws from its own
// stream so adding draws in one stage never shifts another.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t sm = seed;
  std::uint64_t t = splitmix64(sm) ^ hash_label(label);
  return splitmix64(t);
}

}  // namespace msim

#endif
