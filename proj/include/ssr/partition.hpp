#pragma once

// Exact and approximate Partition solvers behind a common strategy slot.
// Every solver returns a witness subset, not just its sum, and breaks ties
// between optimal subsets by the lexicographically smallest bitmask.

#include <cstddef>

#include "ssr/core.hpp"

namespace ssr {

enum class PartitionTier { exact, approx };

enum class PartitionStrategy { meet_in_middle, dynamic_programming, trim_approx };

struct PartitionLimits {
  std::size_t mim_size_cap = 40;           // overridable via SSR_MIM_CAP in the CLI
  BigInt dp_capacity_cap = BigInt(10000000);
};

// x_p is the lighter side: sum(x_p) <= sum(complement), and for the exact
// tier sum(x_p) = max{ sum(Z) : Z subset of X, sum(Z) <= sum(X)/2 }.
struct PartitionResult {
  SubsetSel x_p;
  SubsetSel complement;
  PartitionTier tier;
};

// Horowitz-Sahni meet in the middle: split X in halves, enumerate each
// half's subset sums with masks, sort one side and binary-search partners.
// Throws Error(size_guard) beyond limits.mim_size_cap.
PartitionResult mim_partition_exact(const Instance& inst, const SubsetSel& x,
                                    const PartitionLimits& limits = {});

// Pseudopolynomial reachability table; used to cross-check the meet in the
// middle solver. Throws Error(capacity_guard) if sum(X) exceeds the cap.
PartitionResult dp_partition_exact(const Instance& inst, const SubsetSel& x,
                                   const PartitionLimits& limits = {});

// List-trimming FPTAS against target floor(sum(X)/2). The trim factor is
// 1 + delta with delta = eps'/(2|X|), so the compounded relative error over
// |X| merge rounds stays within eps':
//   (1 + eps'/(2|X|))^|X| <= e^(eps'/2) <= 1/(1 - eps').
// Guarantees (1-eps')*OPT <= sum(x_p) <= OPT, witness mask kept throughout.
PartitionResult approx_partition_trim(const Instance& inst, const SubsetSel& x,
                                      const Epsilon& eps_prime);

PartitionResult solve_partition(const Instance& inst, const SubsetSel& x,
                                PartitionStrategy strategy, const Epsilon& eps_prime,
                                const PartitionLimits& limits = {});

}  // namespace ssr
