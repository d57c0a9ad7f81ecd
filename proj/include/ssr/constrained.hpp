#pragma once

// Constrained solver: approximate the best solution whose union contains the
// current maximum element, combining collision detection, per-subset
// Partition solves and greedy small-element completion.

#include <cstdint>
#include <optional>
#include <variant>

#include "ssr/core.hpp"
#include "ssr/partition.hpp"

namespace ssr {

// t[k] = sum of the k smallest instance elements; t[0] = 0. Because the
// instance is sorted, this covers M_k for every prefix at once.
struct PartialSums {
  std::vector<BigInt> t;
};

PartialSums make_partial_sums(const Instance& inst);

// Outcomes of the greedy small-element completion.
struct CompletionK {
  std::size_t k;  // minimal k with lp_sum + t[k] >= bar_sum
};
struct UseAllSmall {};     // sum(M) too small to balance; add all of M
struct NoImprovement {};   // no small elements to add
struct ZeroDenominator {}; // empty L_p and empty M; caller discards
using SmallCompletion = std::variant<CompletionK, UseAllSmall, NoImprovement, ZeroDenominator>;

// Binary search over the partial-sum array for the minimal k such that
// lp_sum + t[k] >= bar_sum. Requires lp_sum <= bar_sum and bar_sum > 0.
SmallCompletion add_small_elements(const BigInt& lp_sum, const BigInt& bar_sum,
                                   std::size_t small_count, const PartialSums& t);

struct ConstrainedStats {
  std::size_t large_count = 0;
  BigInt bin_count = 0;
  std::uint64_t partition_calls = 0;
  std::uint64_t completions = 0;
  bool collision_exit = false;
};

// Returns a solution of ratio at most (1+eps) times the optimum over
// solutions whose union contains max(prefix); the returned sets themselves
// need not contain it. nullopt only for single-element prefixes.
std::optional<CandidateSolution> constrained_ssr(const Instance& prefix, const Epsilon& eps,
                                                 const PartialSums& t,
                                                 PartitionStrategy strategy,
                                                 const PartitionLimits& limits = {},
                                                 ConstrainedStats* stats = nullptr);

}  // namespace ssr
