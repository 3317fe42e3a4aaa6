#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace voxgen {

/// Probability expressed as an exact fraction, so sampling never depends on
/// floating-point rounding.
struct Probability {
  std::uint64_t numerator = 1;
  std::uint64_t denominator = 2;

  friend bool operator==(const Probability&, const Probability&) = default;

  /// Accepts "a/b" or a decimal literal such as "0.25" or "1".
  static Probability parse(std::string_view text);
};

/// Seedable 64-bit Mersenne Twister (std::mt19937_64, whose output sequence is
/// fixed by the C++ standard) with a platform-independent mapping to ranges.
///
/// Every draw consumes exactly one 64-bit engine output:
///   uniform_int(lo, hi) = lo + floor(u * (hi - lo + 1) / 2^64)
///   bernoulli(a/b)      = uniform_int(0, b - 1) < a
/// std::uniform_int_distribution is deliberately not used: its algorithm is
/// implementation-defined.
class SeededRng {
 public:
  static constexpr std::uint64_t kDefaultSeed = std::mt19937_64::default_seed;

  explicit SeededRng(std::uint64_t seed = kDefaultSeed)
      : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  /// Engine outputs consumed so far.
  std::uint64_t draws() const noexcept { return draws_; }

  std::uint64_t next_u64() {
    ++draws_;
    return engine_();
  }

  /// Uniform integer on the inclusive range [lo, hi]; requires lo <= hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  bool bernoulli(const Probability& p);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

}  // namespace voxgen
