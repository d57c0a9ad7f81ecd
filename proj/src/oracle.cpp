#include "ssr/oracle.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ssr {

namespace {

struct SsrSearch {
  const Instance& inst;
  bool require_max;
  BigInt sum1 = 0, sum2 = 0;
  std::uint32_t mask1 = 0, mask2 = 0;
  std::optional<RatioValue> best;
  std::uint32_t best_mask1 = 0, best_mask2 = 0;

  void leaf() {
    if (sum1 == 0 || sum2 == 0) return;
    if (require_max) {
      const std::uint32_t top = std::uint32_t(1) << (inst.n() - 1);
      if (((mask1 | mask2) & top) == 0) return;
    }
    RatioValue r = ratio_of(sum1, sum2);
    if (!best || compare_ratio(r, *best) == std::strong_ordering::less) {
      best = std::move(r);
      best_mask1 = mask1;
      best_mask2 = mask2;
    }
  }

  void descend(std::size_t i) {
    if (i == inst.n()) {
      leaf();
      return;
    }
    const BigInt& v = inst.at(i);
    const std::uint32_t bit = std::uint32_t(1) << i;
    descend(i + 1);  // neither side
    sum1 += v; mask1 |= bit;
    descend(i + 1);
    sum1 -= v; mask1 &= ~bit;
    sum2 += v; mask2 |= bit;
    descend(i + 1);
    sum2 -= v; mask2 &= ~bit;
  }
};

SubsetSel subset_from_mask(const Instance& inst, std::uint32_t mask) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < inst.n(); ++i)
    if ((mask >> i) & 1u) idx.push_back(i);
  return make_subset(inst, std::move(idx));
}

}  // namespace

OracleResult brute_force_ssr(const Instance& inst, bool require_max) {
  if (inst.n() > 20) throw Error(Errc::too_large, "oracle limited to 20 elements");
  if (inst.n() < 2) throw Error(Errc::instance_too_small, "need at least two elements");
  SsrSearch search{inst, require_max};
  search.descend(0);
  if (!search.best) throw Error(Errc::internal_invariant, "oracle found no feasible pair");
  CandidateSolution witness = make_candidate(subset_from_mask(inst, search.best_mask1),
                                             subset_from_mask(inst, search.best_mask2));
  return OracleResult{*search.best, std::move(witness)};
}

BigInt brute_force_partition(const Instance& inst, const SubsetSel& x) {
  const std::size_t m = x.size();
  if (m > 20) throw Error(Errc::too_large, "oracle limited to 20 elements");
  std::vector<BigInt> vals;
  vals.reserve(m);
  for (std::size_t i : x.indices) vals.push_back(inst.at(i));
  const BigInt target = x.sum / 2;
  BigInt best = 0;
  const std::uint32_t count = std::uint32_t(1) << m;
  std::vector<BigInt> sums(count);
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    std::uint32_t low = mask & (~mask + 1);
    std::size_t j = 0;
    while ((std::uint32_t(1) << j) != low) ++j;
    sums[mask] = sums[mask & (mask - 1)] + vals[j];
    if (sums[mask] <= target && sums[mask] > best) best = sums[mask];
  }
  return best;
}

}  // namespace ssr
