#include "ssr/constrained.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "ssr/binning.hpp"

namespace ssr {

PartialSums make_partial_sums(const Instance& inst) {
  PartialSums ps;
  ps.t.resize(inst.n() + 1);
  ps.t[0] = 0;
  for (std::size_t k = 1; k <= inst.n(); ++k) ps.t[k] = ps.t[k - 1] + inst.at(k - 1);
  return ps;
}

SmallCompletion add_small_elements(const BigInt& lp_sum, const BigInt& bar_sum,
                                   std::size_t small_count, const PartialSums& t) {
  if (lp_sum > bar_sum || bar_sum <= 0 || small_count >= t.t.size())
    throw Error(Errc::internal_invariant, "add_small_elements precondition violated");
  if (lp_sum == 0 && small_count == 0) return ZeroDenominator{};
  const BigInt need = bar_sum - lp_sum;
  if (t.t[small_count] >= need) {
    auto first = t.t.begin();
    auto it = std::lower_bound(first, first + small_count + 1, need);
    return CompletionK{static_cast<std::size_t>(it - first)};
  }
  if (small_count == 0) return NoImprovement{};
  return UseAllSmall{};
}

namespace {

// M_k = the k smallest elements; small elements are always a prefix of the
// sorted instance.
SubsetSel small_prefix(const Instance& inst, std::size_t k) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  return make_subset(inst, std::move(idx));
}

}  // namespace

std::optional<CandidateSolution> constrained_ssr(const Instance& prefix, const Epsilon& eps,
                                                 const PartialSums& t,
                                                 PartitionStrategy strategy,
                                                 const PartitionLimits& limits,
                                                 ConstrainedStats* stats) {
  if (prefix.n() < 2) return std::nullopt;

  const SplitResult split = split_large_small(prefix, eps);
  const BinGrid grid = make_bin_grid(prefix, eps);
  if (stats) {
    stats->large_count = split.large.size();
    stats->bin_count = grid.bin_count;
  }

  EnumerationOutcome outcome = enumerate_large_subsets(prefix, split.large, grid);
  if (auto* col = std::get_if<Collision>(&outcome)) {
    if (stats) stats->collision_exit = true;
    return collision_solution(prefix, col->first, col->second);
  }

  // All subset sums of L landed in distinct bins, so 2^|L| <= B + 1 and the
  // per-subset Partition sweep is affordable.
  const Epsilon eps_prime = derived_epsilon_prime(eps);
  const std::size_t lcount = split.large.size();
  if (lcount >= 63)
    throw Error(Errc::size_guard, "distinct-bin large set too big to sweep");
  const std::size_t mcount = split.small.size();
  const BigInt& a_n = prefix.max_element();

  std::optional<CandidateSolution> best;
  auto consider = [&](CandidateSolution cand) {
    if (!best || compare_ratio(cand.ratio, best->ratio) == std::strong_ordering::less)
      best = std::move(cand);
  };

  // Every subset of L containing a_n (the last large index).
  const std::uint64_t rest = std::uint64_t(1) << (lcount - 1);
  for (std::uint64_t rel = 0; rel < rest; ++rel) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j + 1 < lcount; ++j)
      if ((rel >> j) & 1u) idx.push_back(split.large.indices[j]);
    idx.push_back(split.large.indices[lcount - 1]);
    SubsetSel sprime = make_subset(prefix, std::move(idx));

    PartitionResult pr = solve_partition(prefix, sprime, strategy, eps_prime, limits);
    if (stats) ++stats->partition_calls;
    const BigInt& lp = pr.x_p.sum;
    const BigInt& bar = pr.complement.sum;

    if (lp > 0) consider(make_candidate(pr.x_p, pr.complement));

    SmallCompletion comp = add_small_elements(lp, bar, mcount, t);
    if (auto* ck = std::get_if<CompletionK>(&comp)) {
      BigInt new_sum = lp + t.t[ck->k];
      if (new_sum > 0) {
        BigInt overshoot = new_sum - bar;
        if (overshoot < 0 || overshoot * eps.den() >= eps.num() * a_n)
          throw Error(Errc::internal_invariant, "completion overshoot outside [0, eps*a_n)");
        if (stats) ++stats->completions;
        consider(make_candidate(subset_union(prefix, pr.x_p, small_prefix(prefix, ck->k)),
                                pr.complement));
      }
    } else if (std::holds_alternative<UseAllSmall>(comp)) {
      consider(make_candidate(subset_union(prefix, pr.x_p, small_prefix(prefix, mcount)),
                              pr.complement));
    }
    // NoImprovement and ZeroDenominator leave no candidate.
  }
  return best;
}

}  // namespace ssr
