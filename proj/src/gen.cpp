#include "ssr/gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

namespace ssr {

std::vector<std::uint64_t> generate_values(std::size_t n, std::uint64_t max_value,
                                           std::uint64_t seed) {
  if (max_value < n)
    throw Error(Errc::too_large, "max_value must be at least n to allow distinct values");
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out;
  out.reserve(n);
  if (max_value <= 2 * std::uint64_t(n)) {
    // dense range: shuffle [1, max_value] and take a prefix
    std::vector<std::uint64_t> pool(max_value);
    std::iota(pool.begin(), pool.end(), std::uint64_t(1));
    std::shuffle(pool.begin(), pool.end(), rng);
    out.assign(pool.begin(), pool.begin() + n);
  } else {
    std::uniform_int_distribution<std::uint64_t> dist(1, max_value);
    std::unordered_set<std::uint64_t> seen;
    while (out.size() < n) {
      std::uint64_t v = dist(rng);
      if (seen.insert(v).second) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Instance generate_instance(std::size_t n, std::uint64_t max_value, std::uint64_t seed) {
  std::vector<std::uint64_t> vals = generate_values(n, max_value, seed);
  std::vector<BigInt> elems(vals.begin(), vals.end());
  return Instance(std::move(elems));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

}  // namespace ssr
