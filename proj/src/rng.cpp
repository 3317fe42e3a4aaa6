#include "voxgen/rng.hpp"

#include <charconv>
#include <string>

#include "voxgen/error.hpp"

namespace voxgen {

namespace {

__extension__ using uint128 = unsigned __int128;

/// floor(raw * span / 2^64): maps one engine output onto [0, span).
std::uint64_t scale_down(std::uint64_t raw, std::uint64_t span) {
  return static_cast<std::uint64_t>((static_cast<uint128>(raw) * span) >> 64);
}

std::uint64_t parse_u64(std::string_view text, std::string_view whole) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "not a probability: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Probability Probability::parse(std::string_view text) {
  Probability p;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    p.numerator = parse_u64(text.substr(0, slash), text);
    p.denominator = parse_u64(text.substr(slash + 1), text);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 18) {
      throw Error(ErrorKind::InvalidArgument, "too many decimals: '" + std::string(text) + "'");
    }
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const auto whole = text.substr(0, dot);
    const std::uint64_t int_part = whole.empty() ? 0 : parse_u64(whole, text);
    const std::uint64_t frac_part = frac.empty() ? 0 : parse_u64(frac, text);
    if (int_part > 1) {
      throw Error(ErrorKind::InvalidArgument,
                  "probability must lie in (0, 1]: '" + std::string(text) + "'");
    }
    p.numerator = int_part * scale + frac_part;
    p.denominator = scale;
  } else {
    p.numerator = parse_u64(text, text);
    p.denominator = 1;
  }
  if (p.denominator == 0 || p.numerator == 0 || p.numerator > p.denominator) {
    throw Error(ErrorKind::InvalidArgument,
                "probability must lie in (0, 1]: '" + std::string(text) + "'");
  }
  return p;
}

std::int64_t SeededRng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw Error(ErrorKind::InvalidArgument, "uniform_int: empty range");
  }
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  const std::uint64_t raw = next_u64();
  if (span == 0) return static_cast<std::int64_t>(raw);  // full 64-bit range
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + scale_down(raw, span));
}

bool SeededRng::bernoulli(const Probability& p) {
  if (p.denominator == 0 || p.numerator > p.denominator) {
    throw Error(ErrorKind::InvalidArgument, "bernoulli: probability outside [0, 1]");
  }
  // Same mapping as uniform_int(0, denominator - 1), kept unsigned so any
  // 64-bit denominator works.
  return scale_down(next_u64(), p.denominator) < p.numerator;
}

}  // namespace voxgen
