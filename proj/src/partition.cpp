#include "ssr/partition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace ssr {

namespace {

std::vector<BigInt> subset_values(const Instance& inst, const SubsetSel& x) {
  std::vector<BigInt> vals;
  vals.reserve(x.size());
  for (std::size_t i : x.indices) vals.push_back(inst.at(i));
  return vals;
}

// Turns a relative bitmask over x.indices into a PartitionResult.
PartitionResult result_from_flags(const Instance& inst, const SubsetSel& x,
                                  const std::vector<bool>& in_xp, PartitionTier tier) {
  std::vector<std::size_t> xp_idx, comp_idx;
  for (std::size_t j = 0; j < x.size(); ++j) {
    (in_xp[j] ? xp_idx : comp_idx).push_back(x.indices[j]);
  }
  PartitionResult r;
  r.x_p = make_subset(inst, std::move(xp_idx));
  r.complement = make_subset(inst, std::move(comp_idx));
  r.tier = tier;
  if (r.x_p.sum > r.complement.sum)
    throw Error(Errc::internal_invariant, "partition witness heavier than complement");
  return r;
}

std::vector<bool> flags_from_mask(std::uint64_t mask, std::size_t m) {
  std::vector<bool> f(m, false);
  for (std::size_t j = 0; j < m; ++j) f[j] = (mask >> j) & 1u;
  return f;
}

// All 2^k subset sums of vals[lo..lo+k), indexed by mask; sums[0] = 0.
std::vector<BigInt> half_sums(const std::vector<BigInt>& vals, std::size_t lo, std::size_t k) {
  std::vector<BigInt> sums(std::uint64_t(1) << k);
  for (std::uint64_t mask = 1; mask < sums.size(); ++mask) {
    std::uint64_t low = std::uint64_t(std::countr_zero(mask));
    sums[mask] = sums[mask & (mask - 1)] + vals[lo + low];
  }
  return sums;
}

}  // namespace

PartitionResult mim_partition_exact(const Instance& inst, const SubsetSel& x,
                                    const PartitionLimits& limits) {
  const std::size_t m = x.size();
  if (m == 0) throw Error(Errc::internal_invariant, "partition of empty subset");
  if (m > limits.mim_size_cap)
    throw Error(Errc::size_guard, "subset size " + std::to_string(m) +
                                      " exceeds meet-in-the-middle cap " +
                                      std::to_string(limits.mim_size_cap));
  const std::vector<BigInt> vals = subset_values(inst, x);
  BigInt total = x.sum;
  BigInt target = total / 2;

  const std::size_t h = m / 2;           // half A: indices [0,h), half B: [h,m)
  const std::size_t hb = m - h;
  std::vector<BigInt> sums_a = half_sums(vals, 0, h);
  std::vector<BigInt> sums_b = half_sums(vals, h, hb);

  // sum -> minimal mask per half; ascending mask order makes the first
  // insertion the minimum.
  std::map<BigInt, std::uint64_t> by_sum_a, by_sum_b;
  for (std::uint64_t mask = 0; mask < sums_a.size(); ++mask) by_sum_a.emplace(sums_a[mask], mask);
  for (std::uint64_t mask = 0; mask < sums_b.size(); ++mask) by_sum_b.emplace(sums_b[mask], mask);

  std::vector<std::pair<BigInt, std::uint64_t>> sorted_b(by_sum_b.begin(), by_sum_b.end());

  BigInt best = -1;
  for (const auto& [sa, ma] : by_sum_a) {
    if (sa > target) break;
    BigInt rem = target - sa;
    // largest sum_b <= rem
    auto it = std::upper_bound(sorted_b.begin(), sorted_b.end(), rem,
                               [](const BigInt& v, const auto& e) { return v < e.first; });
    --it;  // sum 0 (empty half) always qualifies
    BigInt cand = sa + it->first;
    if (cand > best) best = cand;
  }

  // Witness pass: among pairs reaching `best`, minimize the combined mask
  // value mask_a | mask_b << h, i.e. (mask_b, mask_a) lexicographically.
  bool found = false;
  std::uint64_t best_ma = 0, best_mb = 0;
  for (const auto& [sa, ma] : by_sum_a) {
    if (sa > best) break;
    auto it = by_sum_b.find(best - sa);
    if (it == by_sum_b.end()) continue;
    std::uint64_t mb = it->second;
    if (!found || mb < best_mb || (mb == best_mb && ma < best_ma)) {
      found = true;
      best_ma = ma;
      best_mb = mb;
    }
  }
  if (!found) throw Error(Errc::internal_invariant, "meet-in-the-middle lost its optimum");

  std::vector<bool> flags = flags_from_mask(best_ma, m);
  for (std::size_t j = 0; j < hb; ++j)
    if ((best_mb >> j) & 1u) flags[h + j] = true;
  return result_from_flags(inst, x, flags, PartitionTier::exact);
}

PartitionResult dp_partition_exact(const Instance& inst, const SubsetSel& x,
                                   const PartitionLimits& limits) {
  const std::size_t m = x.size();
  if (m == 0) throw Error(Errc::internal_invariant, "partition of empty subset");
  if (x.sum > limits.dp_capacity_cap)
    throw Error(Errc::capacity_guard,
                "subset sum " + x.sum.str() + " exceeds DP capacity cap " +
                    limits.dp_capacity_cap.str());
  const std::vector<BigInt> vals = subset_values(inst, x);
  const std::size_t target = static_cast<std::size_t>(x.sum / 2);
  const std::size_t words = target / 64 + 1;

  // rows[i] = sums reachable from the first i elements, as a bitset.
  std::vector<std::vector<std::uint64_t>> rows(m + 1, std::vector<std::uint64_t>(words, 0));
  rows[0][0] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t shift = static_cast<std::size_t>(vals[i]);
    const std::size_t ws = shift / 64, bs = shift % 64;
    auto& prev = rows[i];
    auto& cur = rows[i + 1];
    cur = prev;
    if (shift <= target) {
      for (std::size_t w = words; w-- > ws;) {
        std::uint64_t v = prev[w - ws] << bs;
        if (bs && w > ws) v |= prev[w - ws - 1] >> (64 - bs);
        cur[w] |= v;
      }
    }
    // mask off bits beyond target
    if (target % 64 != 63) cur[words - 1] &= (std::uint64_t(1) << (target % 64 + 1)) - 1;
  }

  auto test = [&](const std::vector<std::uint64_t>& row, std::size_t s) {
    return (row[s / 64] >> (s % 64)) & 1u;
  };
  std::size_t opt = target;
  while (!test(rows[m], opt)) --opt;  // 0 is always reachable

  // Greedy reconstruction from the highest index down: skipping an element
  // whenever the remainder stays reachable yields the minimal bitmask.
  std::vector<bool> flags(m, false);
  std::size_t r = opt;
  for (std::size_t i = m; i-- > 0;) {
    if (test(rows[i], r)) continue;
    flags[i] = true;
    r -= static_cast<std::size_t>(vals[i]);
  }
  if (r != 0) throw Error(Errc::internal_invariant, "DP reconstruction failed");
  return result_from_flags(inst, x, flags, PartitionTier::exact);
}

PartitionResult approx_partition_trim(const Instance& inst, const SubsetSel& x,
                                      const Epsilon& eps_prime) {
  const std::size_t m = x.size();
  if (m == 0) throw Error(Errc::internal_invariant, "partition of empty subset");
  const std::vector<BigInt> vals = subset_values(inst, x);
  const BigInt target = x.sum / 2;

  // delta = eps'/(2m); keep y only if y * dden > last * (dden + dnum)
  const BigInt dnum = eps_prime.num();
  const BigInt dden = BigInt(2 * m) * eps_prime.den();

  struct Entry {
    BigInt sum;
    BigInt mask;  // relative bitmask over x.indices
  };
  std::vector<Entry> list{{BigInt(0), BigInt(0)}};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Entry> merged;
    merged.reserve(list.size() * 2);
    std::size_t a = 0, b = 0;
    BigInt bit = BigInt(1) << i;
    auto shifted = [&](std::size_t j) { return Entry{list[j].sum + vals[i], list[j].mask | bit}; };
    auto push = [&](Entry e) {
      if (e.sum > target) return;
      if (!merged.empty()) {
        // trim entries within factor (1 + delta) of the last kept sum
        if (e.sum * dden <= merged.back().sum * (dden + dnum)) return;
      }
      merged.push_back(std::move(e));
    };
    while (a < list.size() && b < list.size()) {
      if (list[a].sum <= list[b].sum + vals[i]) push(list[a++]);
      else push(shifted(b++));
    }
    while (a < list.size()) push(list[a++]);
    while (b < list.size()) push(shifted(b++));
    list = std::move(merged);
  }

  const BigInt& mask = list.back().mask;
  std::vector<bool> flags(m, false);
  for (std::size_t j = 0; j < m; ++j) flags[j] = boost::multiprecision::bit_test(mask, unsigned(j));
  return result_from_flags(inst, x, flags, PartitionTier::approx);
}

PartitionResult solve_partition(const Instance& inst, const SubsetSel& x,
                                PartitionStrategy strategy, const Epsilon& eps_prime,
                                const PartitionLimits& limits) {
  switch (strategy) {
    case PartitionStrategy::meet_in_middle:
      return mim_partition_exact(inst, x, limits);
    case PartitionStrategy::dynamic_programming:
      return dp_partition_exact(inst, x, limits);
    case PartitionStrategy::trim_approx:
      return approx_partition_trim(inst, x, eps_prime);
  }
  throw Error(Errc::internal_invariant, "unknown partition strategy");
}

}  // namespace ssr
