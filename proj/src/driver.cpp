#include "ssr/driver.hpp"

namespace ssr {

CandidateSolution solve_ssr(const Instance& inst, const Epsilon& eps, PartitionStrategy strategy,
                      const PartitionLimits& limits, SsrStats* stats) {
  if (inst.n() < 2)
    throw Error(Errc::instance_too_small, "need at least two elements");

  const PartialSums t = make_partial_sums(inst);
  std::optional<CandidateSolution> best;
  for (std::size_t i = inst.n(); i >= 1; --i) {
    ConstrainedStats cs;
    std::optional<CandidateSolution> cand =
        constrained_ssr(inst.prefix(i), eps, t, strategy, limits, &cs);
    if (stats) {
      if (i == inst.n()) {
        stats->large_count = cs.large_count;
        stats->bin_count = cs.bin_count;
      }
      stats->partition_calls += cs.partition_calls;
      stats->completions += cs.completions;
      stats->collision_exit |= cs.collision_exit;
    }
    if (cand && (!best || compare_ratio(cand->ratio, best->ratio) == std::strong_ordering::less))
      best = std::move(cand);
    if (best && best->ratio.is_one()) break;  // 1 is a global lower bound
  }
  return *best;
}

}  // namespace ssr
