#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kuni/dense.hpp"
#include "kuni/json.hpp"

namespace kuni {

struct SubsetRank {
  std::vector<std::size_t> subset;  // sorted, 0-based
  std::size_t rank = 0;
};

/// rank(rho_S) for every S with 1 <= |S| <= floor(n/2), ordered by size and
/// then lexicographically.
struct RankSpectrum {
  std::size_t n = 0;
  std::uint32_t q = 0;
  std::vector<SubsetRank> entries;

  std::optional<std::size_t> rank_at(const std::vector<std::size_t>& subset) const;
};

/// Subset sweeps run on worker threads; the entry order is fixed.
RankSpectrum rank_spectrum(const StateVector& state, unsigned threads = 0);

struct DistinguishingSubset {
  std::vector<std::size_t> subset;  // 0-based
  std::size_t rank_first = 0;
  std::size_t rank_second = 0;
};

/// Outcome of one SLOCC discrimination test on a pair of states.
struct SloccReport {
  std::string method;
  std::array<std::string, 2> states;
  std::size_t subsets_checked = 0;
  std::vector<DistinguishingSubset> distinguishing_subsets;
  std::array<std::size_t, 2> supports{};
  bool distinguished = false;
  /// Ranks differ but the pair lies outside the cases where a difference is
  /// reported as inequivalence.
  bool claim_withheld = false;
  std::string note;
};

inline constexpr const char* kVerdictDistinguished = "distinguished";
inline constexpr const char* kVerdictNotDistinguished = "not distinguished by this test";
inline constexpr const char* kVerdictWithheld = "rank spectra differ; no inequivalence claim";

/// Ranks on S = S1 u S2, S1 a k-subset of the first n - n* qudits and S2 a
/// k*-subset of the last n*. Schmidt ranks are SLOCC invariant, so any
/// differing rank separates the pair. Throws InvalidInput unless
/// k + k* <= n/2, k <= n - n*, k* <= n* and the states have the same shape.
SloccReport split_subset_rank_check(const StateVector& first, const StateVector& second, std::size_t n_star,
                                    std::size_t k, std::size_t k_star,
                                    const std::array<std::string, 2>& ids);

/// Computational-basis support counts of two AME states on an odd number of
/// qudits. Support is not an SLOCC invariant by itself; the verdict leans on
/// the analytic result that, for a code state and its first-level
/// hierarchy state, differing support classes rule out equivalence. Throws
/// InvalidInput unless n is odd and the oracle finds both states AME.
SloccReport odd_ame_support_check(const StateVector& first, const StateVector& second,
                                  const std::array<std::string, 2>& ids);

/// Full rank spectra compared subset by subset. With claim = false a
/// difference is reported under kVerdictWithheld instead of as a verdict
/// (used for two hierarchy states that differ only in their nested levels).
SloccReport rank_spectrum_comparison(const StateVector& first, const StateVector& second,
                                     const std::array<std::string, 2>& ids, bool claim = true);

/// {"method", "states", "subsets_checked", "distinguishing_subsets",
/// "supports", "verdict", "note"}, subsets 1-based.
Json to_json(const SloccReport& report);
Json to_json(const RankSpectrum& spectrum);

}  // namespace kuni
