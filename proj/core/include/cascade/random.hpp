#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace cascade {

// SplitMix64 finalizer; used both for seeding and for deriving sub-seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Hashes a parent seed together with a path of labels into a child seed.
// derive(s, {a, b}) == derive(derive(s, {a}), {b}).
constexpr std::uint64_t derive_seed(std::uint64_t parent,
                                    std::initializer_list<std::uint64_t> path) noexcept {
  std::uint64_t s = parent;
  for (std::uint64_t label : path) s = mix64(s ^ mix64(label + 0x632be59bd9b4e019ULL));
  return s;
}

// Named sub-streams. Values are part of the reproducibility contract.
enum class Stage : std::uint64_t {
  kRealization = 1,
  kNetwork = 2,
  kInitialStrategies = 3,
  kImitation = 10,
  kExploration = 11,
  kOrigination = 12,
  kPropagation = 13,
  kResolution = 14,
  kReset = 15,
};

// xoshiro256** with portable distribution helpers. Every draw is defined
// bit-for-bit here so output does not depend on the standard library's
// distribution implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) noexcept {
    std::uint64_t s = seed;
    for (auto& w : state_) {
      s += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = s;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      w = z ^ (z >> 31);
    }
  }

  RandomStream(std::uint64_t seed, Stage stage, std::uint64_t step) noexcept
      : RandomStream(derive_seed(seed, {static_cast<std::uint64_t>(stage), step})) {}

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // True with probability p; p <= 0 never, p >= 1 always.
  bool bernoulli(double p) noexcept { return uniform() < p; }

  // Uniform integer on [0, bound), 0 < bound < 2^32 (Lemire's multiply-shift
  // with rejection on the upper 32 bits of each draw).
  std::uint32_t below(std::uint32_t bound) noexcept {
    std::uint64_t m = (next() >> 32) * bound;
    auto low = static_cast<std::uint32_t>(m);
    if (low < bound) {
      const std::uint32_t threshold = (0u - bound) % bound;
      while (low < threshold) {
        m = (next() >> 32) * bound;
        low = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 32);
  }

  // Marsaglia polar method; the spare variate is discarded.
  double normal(double mean, double sd) noexcept {
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    return mean + sd * u * std::sqrt(-2.0 * std::log(s) / s);
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t state_[4];
};

}  // namespace cascade
