#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sgp {

// Deterministic randomness. std::mt19937_64 output is pinned by the standard,
// but the standard distributions are not, so all draws go through the helpers
// below. Sub-streams are derived with mix() so parallel producers keyed by
// (seed, index) see independent, reproducible streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static std::uint64_t mix(std::uint64_t a, std::uint64_t b);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, n), rejection-sampled. n must be > 0.
  std::uint64_t below(std::uint64_t n);

  // Uniform double in [0, 1) with 53 random bits.
  double real01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller.
  double normal();

  bool coin() { return (engine_() & 1u) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(below(v.size()))];
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sgp
