#pragma once

// Exhaustive exact solvers used as ground truth in tests and exposed through
// the CLI for small instances.

#include "ssr/core.hpp"

namespace ssr {

struct OracleResult {
  RatioValue ratio;
  CandidateSolution witness;
};

// Enumerates every assignment of elements to {set1, set2, neither} (3^n),
// skipping assignments with an empty side. With require_max set, only
// solutions whose union contains the maximum element count. Throws
// Error(too_large) for n > 20 and Error(instance_too_small) for n < 2.
OracleResult brute_force_ssr(const Instance& inst, bool require_max = false);

// Exact Partition optimum by 2^|X| enumeration; |X| <= 20.
BigInt brute_force_partition(const Instance& inst, const SubsetSel& x);

}  // namespace ssr
