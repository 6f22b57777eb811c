#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace kuni {

/// Calls fn(indices) for every size-t subset of {0, ..., n-1} in
/// lexicographic order. fn may return false to stop early; the return value
/// reports whether the walk ran to completion.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t t, Fn&& fn) {
  if (t > n) return true;
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    if (!fn(static_cast<const std::vector<std::size_t>&>(idx))) return false;
    if (t == 0) return true;
    std::size_t i = t;
    while (i > 0 && idx[i - 1] == n - t + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// q^e, or 0 when the result would exceed `cap` (used for size guards).
inline std::uint64_t checked_power(std::uint64_t q, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / q) return 0;
    r *= q;
  }
  return r <= cap ? r : 0;
}

}  // namespace kuni
