#pragma once

// The large/small element split, the bin grid over [0, n*a_n], subset
// enumeration with first-collision early exit, and the collision-to-solution
// construction.

#include <variant>
#include <vector>

#include "ssr/core.hpp"

namespace ssr {

// large = elements >= eps*a_n (always includes a_n), small = the rest.
// small is a prefix of the sorted instance.
struct SplitResult {
  SubsetSel large;
  SubsetSel small;
};

// Membership decided by the exact integer test a_i*q < p*a_n.
SplitResult split_large_small(const Instance& inst, const Epsilon& eps);

// Half-open cells [k*l, (k+1)*l) of width l = eps^2 * a_n covering
// [0, n*a_n]; indexing is integer-exact: index(s) = floor(s*q^2 / (p^2*a_n)).
struct BinGrid {
  BigInt a_n;
  BigInt p, q;
  BigInt width_num;  // p^2 * a_n
  BigInt width_den;  // q^2
  BigInt bin_count;  // B = ceil(n * q^2 / p^2)

  BigInt index_of(const BigInt& sum) const;
};

BinGrid make_bin_grid(const Instance& inst, const Epsilon& eps);

// Two distinct subsets of L whose sums fell into the same bin.
struct Collision {
  SubsetSel first;   // the smaller-sum one
  SubsetSel second;
};

// Every subset of L landed in a distinct bin; by pigeonhole this implies
// 2^|L| <= B + 1.
struct AllDistinct {
  std::vector<SubsetSel> entries;
};

using EnumerationOutcome = std::variant<Collision, AllDistinct>;

// Enumerates subsets of `large` in ascending mask order (bit j = j-th
// large element), including the empty set, and stops at the first repeated
// bin. At most B+2 subsets are ever materialized.
EnumerationOutcome enumerate_large_subsets(const Instance& inst, const SubsetSel& large,
                                           const BinGrid& grid);

// Set-difference construction: L1' = first \ second, L2' = second \ first.
// The resulting disjoint pair has ratio <= 1 + eps for the eps that put the
// two sums in one bin. Throws Error(internal_invariant) if L1' is empty,
// which would signal a grid or enumeration bug.
CandidateSolution collision_solution(const Instance& inst, const SubsetSel& first,
                                     const SubsetSel& second);

}  // namespace ssr
