#include "kuni/analysis.hpp"

#include <algorithm>
#include <future>

#include "kuni/combinatorics.hpp"
#include "kuni/errors.hpp"
#include "kuni/stabilizer.hpp"

namespace kuni {

namespace {

void check_same_shape(const StateVector& a, const StateVector& b) {
  if (a.n() != b.n() || a.q() != b.q()) throw InvalidInput("states in a pair must have the same n and q");
}

Json one_based(const std::vector<std::size_t>& subset) {
  Json j = Json::array();
  for (std::size_t s : subset) j.push_back(s + 1);
  return j;
}

std::vector<std::size_t> parallel_ranks(const StateVector& state, const std::vector<std::vector<std::size_t>>& subsets,
                                        unsigned threads) {
  if (threads == 0) threads = default_thread_count();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(subsets.size(), 1))));
  std::vector<std::size_t> ranks(subsets.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) ranks[i] = rank_of_reduction(state, subsets[i]);
  };
  const std::size_t chunk = (subsets.size() + threads - 1) / threads;
  std::vector<std::future<void>> jobs;
  for (std::size_t begin = 0; begin < subsets.size(); begin += chunk) {
    jobs.push_back(std::async(std::launch::async, work, begin, std::min(subsets.size(), begin + chunk)));
  }
  for (auto& j : jobs) j.get();
  return ranks;
}

std::size_t ipow(std::size_t q, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace

std::optional<std::size_t> RankSpectrum::rank_at(const std::vector<std::size_t>& subset) const {
  for (const SubsetRank& e : entries) {
    if (e.subset == subset) return e.rank;
  }
  return std::nullopt;
}

RankSpectrum rank_spectrum(const StateVector& state, unsigned threads) {
  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t size = 1; size <= state.n() / 2; ++size) {
    for_each_combination(state.n(), size, [&](const std::vector<std::size_t>& s) {
      subsets.push_back(s);
      return true;
    });
  }
  const auto ranks = parallel_ranks(state, subsets, threads);
  RankSpectrum spectrum{state.n(), state.q(), {}};
  for (std::size_t i = 0; i < subsets.size(); ++i) spectrum.entries.push_back({subsets[i], ranks[i]});
  return spectrum;
}

SloccReport split_subset_rank_check(const StateVector& first, const StateVector& second, std::size_t n_star,
                                    std::size_t k, std::size_t k_star, const std::array<std::string, 2>& ids) {
  check_same_shape(first, second);
  const std::size_t n = first.n();
  if (2 * (k + k_star) > n) throw InvalidInput("split-subset rank test needs k + k* <= n/2");
  if (n_star > n || k > n - n_star || k_star > n_star) {
    throw InvalidInput("split-subset rank test needs k <= n - n* and k* <= n*");
  }
  std::vector<std::vector<std::size_t>> subsets;
  const std::size_t front = n - n_star;
  for_each_combination(front, k, [&](const std::vector<std::size_t>& s1) {
    for_each_combination(n_star, k_star, [&](const std::vector<std::size_t>& s2) {
      std::vector<std::size_t> s = s1;
      for (std::size_t t : s2) s.push_back(front + t);
      subsets.push_back(std::move(s));
      return true;
    });
    return true;
  });

  const auto ranks_a = parallel_ranks(first, subsets, 0);
  const auto ranks_b = parallel_ranks(second, subsets, 0);
  SloccReport report;
  report.method = "split_subset_rank";
  report.states = ids;
  report.subsets_checked = subsets.size();
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (ranks_a[i] != ranks_b[i]) report.distinguishing_subsets.push_back({subsets[i], ranks_a[i], ranks_b[i]});
  }
  report.supports = {support_count(first), support_count(second)};
  report.distinguished = !report.distinguishing_subsets.empty();
  report.note = "Schmidt ranks across each bipartition S|S^c are SLOCC invariant. Bound for a code state: q^" +
                std::to_string(k) + " = " + std::to_string(ipow(first.q(), k)) +
                "; maximally mixed hierarchy reduction: q^" + std::to_string(k + k_star) + " = " +
                std::to_string(ipow(first.q(), k + k_star)) + ".";
  return report;
}

SloccReport odd_ame_support_check(const StateVector& first, const StateVector& second,
                                  const std::array<std::string, 2>& ids) {
  check_same_shape(first, second);
  const std::size_t n = first.n();
  if (n % 2 == 0) throw InvalidInput("support test needs an odd number of qudits");
  const auto ua = uniformity_by_oracle(first);
  const auto ub = uniformity_by_oracle(second);
  if (ua.k != n / 2 || ub.k != n / 2) throw InvalidInput("support test needs both states to be AME");

  SloccReport report;
  report.method = "odd_ame_support";
  report.states = ids;
  report.subsets_checked = ua.subsets_checked + ub.subsets_checked;
  report.supports = {support_count(first), support_count(second)};
  report.distinguished = report.supports[0] != report.supports[1];
  report.note =
      "Both states are AME on an odd number of qudits, so every rank is maximal and ranks cannot separate them. "
      "The differing computational-basis supports are the checkable part of the analytic argument for this "
      "family; they are not an independent numerical proof of inequivalence.";
  return report;
}

SloccReport rank_spectrum_comparison(const StateVector& first, const StateVector& second,
                                     const std::array<std::string, 2>& ids, bool claim) {
  check_same_shape(first, second);
  const RankSpectrum a = rank_spectrum(first);
  const RankSpectrum b = rank_spectrum(second);
  SloccReport report;
  report.method = "rank_spectrum";
  report.states = ids;
  report.subsets_checked = a.entries.size();
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].rank != b.entries[i].rank) {
      report.distinguishing_subsets.push_back({a.entries[i].subset, a.entries[i].rank, b.entries[i].rank});
    }
  }
  report.supports = {support_count(first), support_count(second)};
  const bool differ = !report.distinguishing_subsets.empty();
  report.distinguished = differ && claim;
  report.claim_withheld = differ && !claim;
  if (report.claim_withheld) {
    report.note = "Spectra are reported for reference only; this pair is outside the cases the report decides.";
  } else {
    report.note = differ ? "Schmidt ranks differ on at least one bipartition."
                         : "Equal rank spectra do not imply SLOCC equivalence.";
  }
  return report;
}

Json to_json(const SloccReport& report) {
  Json j;
  j["method"] = report.method;
  j["states"] = Json::array({report.states[0], report.states[1]});
  j["subsets_checked"] = report.subsets_checked;
  Json subsets = Json::array();
  for (const auto& d : report.distinguishing_subsets) {
    Json e;
    e["subset"] = one_based(d.subset);
    e["ranks"] = Json::array({d.rank_first, d.rank_second});
    subsets.push_back(std::move(e));
  }
  j["distinguishing_subsets"] = std::move(subsets);
  j["supports"] = Json::array({report.supports[0], report.supports[1]});
  j["verdict"] = report.distinguished    ? kVerdictDistinguished
                 : report.claim_withheld ? kVerdictWithheld
                                         : kVerdictNotDistinguished;
  j["note"] = report.note;
  return j;
}

Json to_json(const RankSpectrum& spectrum) {
  Json j;
  j["q"] = spectrum.q;
  j["n"] = spectrum.n;
  Json entries = Json::array();
  for (const auto& e : spectrum.entries) {
    Json x;
    x["subset"] = one_based(e.subset);
    x["rank"] = e.rank;
    entries.push_back(std::move(x));
  }
  j["ranks"] = std::move(entries);
  return j;
}

}  // namespace kuni
