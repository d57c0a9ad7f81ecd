#pragma once

// Seeded random instance generation shared by the CLI and the benchmark
// harness. Identical (seed, n, max_value) yields an identical instance.

#include <cstdint>

#include "ssr/core.hpp"

namespace ssr {

// n distinct integers sampled uniformly without replacement from
// [1, max_value], returned sorted ascending. Requires max_value >= n.
std::vector<std::uint64_t> generate_values(std::size_t n, std::uint64_t max_value,
                                           std::uint64_t seed);

Instance generate_instance(std::size_t n, std::uint64_t max_value, std::uint64_t seed);

// Mixes a master seed with per-run coordinates into an independent stream
// seed (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

}  // namespace ssr
