#pragma once

// Unconstrained solver: run the constrained pass on every prefix of the
// sorted instance and keep the global best.

#include "ssr/constrained.hpp"

namespace ssr {

struct SsrStats {
  std::size_t large_count = 0;   // of the full-instance pass
  BigInt bin_count = 0;          // of the full-instance grid
  std::uint64_t partition_calls = 0;
  std::uint64_t completions = 0;
  bool collision_exit = false;   // any prefix exited via a bin collision
};

// Guarantee: returned ratio r satisfies r_opt <= r <= (1+eps) * r_opt.
// Iterates prefixes from n down to 1; exits early once a ratio-1 solution
// is found. Throws Error(instance_too_small) for n < 2.
CandidateSolution solve_ssr(const Instance& inst, const Epsilon& eps, PartitionStrategy strategy,
                      const PartitionLimits& limits = {}, SsrStats* stats = nullptr);

}  // namespace ssr
