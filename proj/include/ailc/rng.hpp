#pragma once

#include <cstdint>
#include <random>

namespace ailc {

/// Labels for the disjoint random substreams of one experiment. Each label
/// derives an independent generator from the experiment seed, so enabling or
/// disabling one consumer never shifts another's draws.
enum class Substream : std::uint64_t {
  initial_estimates = 0x494e4954u,  // per-model initial parameter draws
  reference_scaling = 0x54484554u,  // per-iteration reference scaling samples
};

/// splitmix64 mixing step (Steele, Lea & Flood 2014). Used only to derive
/// substream seeds; the draws themselves come from mt19937_64.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Deterministic, platform-independent uniform double stream.
///
/// The engine is std::mt19937_64, which the standard pins bit-for-bit; the
/// uniform conversion is done by hand because std::uniform_real_distribution
/// is implementation-defined.
class UniformStream {
public:
  UniformStream(std::uint64_t seed, Substream label)
      : engine_(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(label))) {}

  /// Uniform in [0, 1), 53-bit resolution.
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double next(double lo, double hi) { return lo + next_unit() * (hi - lo); }

private:
  std::mt19937_64 engine_;
};

}  // namespace ailc
