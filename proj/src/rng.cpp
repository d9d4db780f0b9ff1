#include "volte/rng.hpp"

#include <cmath>

namespace volte {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t hash_name(std::string_view name) {
  // FNV-1a; only needs to be stable, not strong.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

RandomStream RandomStream::split(std::string_view name, std::uint64_t index) const {
  std::uint64_t k = mix64(key_ ^ hash_name(name));
  k = mix64(k + kGolden * (index + 1));
  return RandomStream(k);
}

std::uint64_t RandomStream::next_u64() {
  ++counter_;
  return mix64(key_ + kGolden * counter_);
}

double RandomStream::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::uint64_t RandomStream::uniform_index(std::uint64_t n) {
  // Lemire's multiply-shift with rejection, unbiased.
  std::uint64_t x = next_u64();
  __uint128_t m = static_cast<__uint128_t>(x) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      x = next_u64();
      m = static_cast<__uint128_t>(x) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t RandomStream::poisson(double mean) {
  if (mean <= 0.0) return 0;
  if (mean < 30.0) {
    // Knuth's product-of-uniforms method.
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double prod = uniform();
    while (prod > limit) {
      ++k;
      prod *= uniform();
    }
    return k;
  }
  // Inversion by sequential search from the mode region, in log space.
  const double u = uniform();
  double log_p = -mean;
  double cdf = std::exp(log_p);
  std::uint64_t k = 0;
  while (cdf < u && k < static_cast<std::uint64_t>(mean * 20 + 100)) {
    ++k;
    log_p += std::log(mean) - std::log(static_cast<double>(k));
    cdf += std::exp(log_p);
  }
  return k;
}

}  // namespace volte
