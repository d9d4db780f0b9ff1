#pragma once

#include <cstdint>
#include <string_view>

namespace volte {

/// Counter-based random stream. Every draw is a pure function of
/// (key, counter), so streams can be split by name without any shared state
/// and results do not depend on the standard library's distributions.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t key) : key_(key) {}

  /// Independent child stream identified by `name` (and an optional index,
  /// e.g. the episode number).
  RandomStream split(std::string_view name, std::uint64_t index = 0) const;

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform();

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). Requires n > 0.
  std::uint64_t uniform_index(std::uint64_t n);

  /// Poisson variate with the given mean (mean >= 0).
  std::uint64_t poisson(double mean);

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Root stream for a master seed.
inline RandomStream master_stream(std::uint64_t seed) { return RandomStream(mix64(seed ^ 0x6a09e667f3bcc909ULL)); }

}  // namespace volte
