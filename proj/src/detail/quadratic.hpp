#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>

namespace qhecke::detail {

inline constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max() / 8;

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Integers n in [lo, hi] with a*n^2 + b*n + c <= bound, for a > 0. The set is
/// an interval; it is found by walking outward from the vertex, so the cost is
/// proportional to the interval length and no floating point is involved.
inline std::optional<std::pair<std::int64_t, std::int64_t>> parabola_interval(
    std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t bound, std::int64_t lo = -kUnbounded,
    std::int64_t hi = kUnbounded) {
  auto f = [&](std::int64_t n) {
    const __int128 v = static_cast<__int128>(a) * n * n + static_cast<__int128>(b) * n + c;
    return v;
  };
  if (lo > hi) return std::nullopt;
  // The vertex sits at -b / 2a.
  const std::int64_t vceil = ceil_div(-b, 2 * a);
  std::int64_t right_start = std::max(vceil, lo);
  std::int64_t left_start = std::min(right_start - 1, hi);

  std::optional<std::int64_t> found_lo, found_hi;
  for (std::int64_t n = right_start; n <= hi && f(n) <= bound; ++n) {
    if (!found_lo) found_lo = n;
    found_hi = n;
  }
  for (std::int64_t n = left_start; n >= lo && f(n) <= bound; --n) {
    if (!found_hi) found_hi = n;
    found_lo = n;
  }
  if (!found_lo) return std::nullopt;
  return std::make_pair(*found_lo, *found_hi);
}

/// Minimum of a*n^2 + b*n + c over integers in [lo, hi] (a > 0, interval non-empty).
inline __int128 parabola_min(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t lo, std::int64_t hi) {
  auto f = [&](std::int64_t n) {
    return static_cast<__int128>(a) * n * n + static_cast<__int128>(b) * n + c;
  };
  const std::int64_t vfloor = floor_div(-b, 2 * a);
  __int128 best = 0;
  bool have = false;
  for (std::int64_t n : {vfloor, vfloor + 1}) {
    const std::int64_t m = std::clamp(n, lo, hi);
    const __int128 v = f(m);
    if (!have || v < best) best = v;
    have = true;
  }
  return best;
}

}  // namespace qhecke::detail
