#include <doctest.h>

#include <random>
#include <set>

#include "ssr/oracle.hpp"
#include "ssr/partition.hpp"
#include "test_util.hpp"

using namespace ssr;
using ssrtest::make_inst;

namespace {

Instance random_instance(std::mt19937_64& rng, std::size_t max_n, long long max_val) {
  std::uniform_int_distribution<std::size_t> nd(1, max_n);
  std::size_t n = nd(rng);
  std::uniform_int_distribution<long long> vd(1, max_val);
  std::set<long long> vals;
  while (vals.size() < n) vals.insert(vd(rng));
  std::vector<BigInt> elems(vals.begin(), vals.end());
  return Instance(std::move(elems));
}

void check_witness(const Instance& inst, const SubsetSel& x, const PartitionResult& r) {
  // x_p and complement partition x, sums recompute, lighter side first
  CHECK(subsets_disjoint(r.x_p, r.complement));
  SubsetSel u = subset_union(inst, r.x_p, r.complement);
  CHECK(u.indices == x.indices);
  BigInt s = 0;
  for (std::size_t i : r.x_p.indices) s += inst.at(i);
  CHECK(s == r.x_p.sum);
  CHECK(r.x_p.sum <= r.complement.sum);
  CHECK(r.x_p.sum * 2 <= x.sum);
}

}  // namespace

TEST_CASE("meet in the middle on {1,4,9,16}") {
  auto inst = make_inst({1, 4, 9, 16});
  auto r = mim_partition_exact(inst, full_subset(inst));
  CHECK(r.x_p.sum == 14);  // {1,4,9}, total/2 = 15
  CHECK(r.x_p.indices == std::vector<std::size_t>{0, 1, 2});
  CHECK(r.tier == PartitionTier::exact);
  check_witness(inst, full_subset(inst), r);
}

TEST_CASE("meet in the middle on a singleton returns the empty side") {
  auto inst = make_inst({7});
  auto r = mim_partition_exact(inst, full_subset(inst));
  CHECK(r.x_p.sum == 0);
  CHECK(r.x_p.empty());
  CHECK(r.complement.sum == 7);
}

TEST_CASE("tie rule prefers the lexicographically smallest mask") {
  auto inst = make_inst({2, 4, 6});
  auto r = mim_partition_exact(inst, full_subset(inst));
  CHECK(r.x_p.sum == 6);
  CHECK(r.x_p.indices == std::vector<std::size_t>{0, 1});  // {2,4} beats {6}

  auto inst2 = make_inst({3, 5, 8});
  auto d = dp_partition_exact(inst2, full_subset(inst2));
  CHECK(d.x_p.sum == 8);
  CHECK(d.x_p.indices == std::vector<std::size_t>{0, 1});  // {3,5} beats {8}
  auto m = mim_partition_exact(inst2, full_subset(inst2));
  CHECK(m.x_p.indices == d.x_p.indices);
}

TEST_CASE("dp matches the examples") {
  auto inst = make_inst({1, 4, 9, 16});
  CHECK(dp_partition_exact(inst, full_subset(inst)).x_p.sum == 14);
  auto one = make_inst({1});
  CHECK(dp_partition_exact(one, full_subset(one)).x_p.sum == 0);
}

TEST_CASE("size and capacity guards") {
  std::vector<BigInt> many;
  for (int i = 1; i <= 41; ++i) many.emplace_back(i);
  Instance big(std::move(many));
  CHECK_THROWS_AS(mim_partition_exact(big, full_subset(big)), Error);

  PartitionLimits tight;
  tight.mim_size_cap = 50;
  CHECK_NOTHROW(mim_partition_exact(big, full_subset(big), tight));

  auto inst = make_inst({20000000});
  CHECK_THROWS_AS(dp_partition_exact(inst, full_subset(inst)), Error);
}

TEST_CASE("trim approximation on the worked examples") {
  auto inst = make_inst({1, 4, 9, 16});
  auto r = approx_partition_trim(inst, full_subset(inst), Epsilon(1, 5));
  CHECK(r.tier == PartitionTier::approx);
  CHECK(r.x_p.sum >= 12);  // ceil(0.8 * 14)
  CHECK(r.x_p.sum <= 14);
  check_witness(inst, full_subset(inst), r);

  auto single = make_inst({7});
  CHECK(approx_partition_trim(single, full_subset(single), Epsilon(1, 5)).x_p.sum == 0);

  auto even = make_inst({2, 4, 6});
  CHECK(approx_partition_trim(even, full_subset(even), Epsilon(1, 21)).x_p.sum == 6);
}

TEST_CASE("solve_partition dispatches by strategy") {
  auto inst = make_inst({1, 4, 9, 16});
  Epsilon ep(1, 5);
  auto x = full_subset(inst);
  auto e = solve_partition(inst, x, PartitionStrategy::meet_in_middle, ep);
  CHECK(e.tier == PartitionTier::exact);
  CHECK(e.x_p.sum == 14);
  auto a = solve_partition(inst, x, PartitionStrategy::trim_approx, ep);
  CHECK(a.tier == PartitionTier::approx);
  CHECK(a.x_p.sum >= 12);
  CHECK(a.x_p.sum <= 14);
  auto single = make_inst({7});
  CHECK(solve_partition(single, full_subset(single), PartitionStrategy::dynamic_programming, ep)
            .x_p.sum == 0);
}

TEST_CASE("exact solvers agree with brute force on random subsets") {
  std::mt19937_64 rng(101);
  for (int iter = 0; iter < 300; ++iter) {
    Instance inst = random_instance(rng, 16, 10000);
    SubsetSel x = full_subset(inst);
    BigInt opt = brute_force_partition(inst, x);
    auto m = mim_partition_exact(inst, x);
    auto d = dp_partition_exact(inst, x);
    CHECK(m.x_p.sum == opt);
    CHECK(d.x_p.sum == opt);
    CHECK(m.x_p.indices == d.x_p.indices);  // identical tie-break
    check_witness(inst, x, m);
    check_witness(inst, x, d);
  }
}

TEST_CASE("trim result stays within (1-eps') of the exact optimum") {
  std::mt19937_64 rng(202);
  const Epsilon margins[] = {Epsilon(1, 3), Epsilon(1, 5), Epsilon(1, 21)};
  for (int iter = 0; iter < 300; ++iter) {
    Instance inst = random_instance(rng, 16, 10000);
    SubsetSel x = full_subset(inst);
    BigInt opt = dp_partition_exact(inst, x).x_p.sum;
    for (const Epsilon& ep : margins) {
      auto r = approx_partition_trim(inst, x, ep);
      CHECK(r.x_p.sum <= opt);
      // (1-eps')*opt <= sum  <=>  (q-p)*opt <= sum*q
      CHECK((ep.den() - ep.num()) * opt <= r.x_p.sum * ep.den());
      check_witness(inst, x, r);
    }
  }
}
