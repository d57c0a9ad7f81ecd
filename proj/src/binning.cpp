#include "ssr/binning.hpp"

#include <map>
#include <utility>

namespace ssr {

SplitResult split_large_small(const Instance& inst, const Epsilon& eps) {
  const BigInt threshold_num = eps.num() * inst.max_element();  // compare a_i*q vs p*a_n
  std::vector<std::size_t> small_idx, large_idx;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    if (inst.at(i) * eps.den() < threshold_num) small_idx.push_back(i);
    else large_idx.push_back(i);
  }
  return SplitResult{make_subset(inst, std::move(large_idx)),
                     make_subset(inst, std::move(small_idx))};
}

BigInt BinGrid::index_of(const BigInt& sum) const {
  return sum * width_den / width_num;
}

BinGrid make_bin_grid(const Instance& inst, const Epsilon& eps) {
  BinGrid g;
  g.a_n = inst.max_element();
  g.p = eps.num();
  g.q = eps.den();
  g.width_num = g.p * g.p * g.a_n;
  g.width_den = g.q * g.q;
  BigInt num = BigInt(inst.n()) * g.width_den;
  BigInt den = g.p * g.p;
  g.bin_count = (num + den - 1) / den;  // ceil(n*q^2 / p^2)
  return g;
}

EnumerationOutcome enumerate_large_subsets(const Instance& inst, const SubsetSel& large,
                                           const BinGrid& grid) {
  const std::size_t m = large.size();
  std::map<BigInt, std::size_t> bin_to_entry;  // bin index -> position in entries
  std::vector<SubsetSel> entries;

  BigInt mask = 0;
  const BigInt subset_count = BigInt(1) << m;
  for (; mask < subset_count; ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < m; ++j)
      if (boost::multiprecision::bit_test(mask, unsigned(j))) idx.push_back(large.indices[j]);
    SubsetSel sub = make_subset(inst, std::move(idx));
    BigInt bin = grid.index_of(sub.sum);
    auto [it, inserted] = bin_to_entry.emplace(std::move(bin), entries.size());
    if (!inserted) {
      SubsetSel& other = entries[it->second];
      if (other.sum <= sub.sum) return Collision{std::move(other), std::move(sub)};
      return Collision{std::move(sub), std::move(other)};
    }
    entries.push_back(std::move(sub));
  }
  return AllDistinct{std::move(entries)};
}

CandidateSolution collision_solution(const Instance& inst, const SubsetSel& first,
                                     const SubsetSel& second) {
  if (first.sum > second.sum)
    throw Error(Errc::internal_invariant, "collision pair not ordered by sum");
  SubsetSel l1 = subset_difference(inst, first, second);
  SubsetSel l2 = subset_difference(inst, second, first);
  if (l1.empty())
    throw Error(Errc::internal_invariant,
                "collision produced a nested pair, contradicting the bin width bound");
  return make_candidate(std::move(l1), std::move(l2));
}

}  // namespace ssr
