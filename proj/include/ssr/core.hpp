#pragma once

// Exact-arithmetic domain types shared by all solver modules: instances,
// rational error margins, subset selections and ratio comparison.
// No floating point appears in any decision path; doubles exist only for
// display rendering in the CLI.

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ssr {

using BigInt = boost::multiprecision::cpp_int;

enum class Errc {
  empty_input,
  non_positive_element,
  bad_epsilon,
  zero_sum,
  size_guard,
  capacity_guard,
  too_large,
  instance_too_small,
  internal_invariant,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Sorted set of distinct positive integers a_1 < a_2 < ... < a_n.
class Instance {
 public:
  // Requires strictly ascending positive elements; throws Error otherwise.
  explicit Instance(std::vector<BigInt> sorted_elements);

  std::size_t n() const { return elements_.size(); }
  const BigInt& at(std::size_t i) const { return elements_[i]; }
  const BigInt& max_element() const { return elements_.back(); }
  const std::vector<BigInt>& elements() const { return elements_; }

  // The sub-instance {a_1, ..., a_k}, 1 <= k <= n.
  Instance prefix(std::size_t k) const;

 private:
  std::vector<BigInt> elements_;
};

// Two equal input values; an optimal ratio-1 solution by themselves.
struct DuplicatePair {
  BigInt value;
  std::size_t first_pos;   // positions in the *sorted* input sequence
  std::size_t second_pos;
};

using ValidateResult = std::variant<Instance, DuplicatePair>;

// Sorts and checks the raw input. Equal values short-circuit to a
// DuplicatePair instead of erroring: two equal singletons are already an
// optimal solution. Throws Error(empty_input | non_positive_element).
ValidateResult validate_instance(std::span<const BigInt> raw);

// Error margin eps = p/q in the open interval (0,1), kept in lowest terms.
class Epsilon {
 public:
  Epsilon(BigInt p, BigInt q);

  const BigInt& num() const { return p_; }
  const BigInt& den() const { return q_; }

  // Accepts "p/q" or a decimal literal like "0.25" (converted exactly).
  static Epsilon parse(std::string_view text);

  std::string str() const;

 private:
  BigInt p_, q_;
};

// The maximal admissible Partition-level margin eps' = eps/(2+eps),
// i.e. p/(2q+p) reduced, which guarantees (1+eps')/(1-eps') <= 1+eps.
Epsilon derived_epsilon_prime(const Epsilon& eps);

// A ratio num/den >= 0 with den > 0. Deliberately not reduced: a reported
// solution ratio stays the literal max(sum)/min(sum) of its witness.
struct RatioValue {
  BigInt num;
  BigInt den;

  bool is_one() const { return num == den; }
  std::string str() const;
};

// max(sum1,sum2)/min(sum1,sum2). Throws Error(zero_sum) if either is 0.
RatioValue ratio_of(const BigInt& sum1, const BigInt& sum2);

// Cross-multiplied exact comparison; never rounds.
std::strong_ordering compare_ratio(const RatioValue& a, const RatioValue& b);

// Decimal rendering of a ratio, for display only.
std::string ratio_decimal(const RatioValue& r, int digits = 6);

// A subset of an Instance: ascending indices plus the exact element sum.
struct SubsetSel {
  std::vector<std::size_t> indices;
  BigInt sum;

  bool empty() const { return indices.empty(); }
  std::size_t size() const { return indices.size(); }
  bool contains(std::size_t idx) const;
};

SubsetSel make_subset(const Instance& inst, std::vector<std::size_t> indices);
SubsetSel full_subset(const Instance& inst);
SubsetSel subset_difference(const Instance& inst, const SubsetSel& a, const SubsetSel& b);
SubsetSel subset_union(const Instance& inst, const SubsetSel& a, const SubsetSel& b);
bool subsets_disjoint(const SubsetSel& a, const SubsetSel& b);

// Orders subsets by their bitmask value (bit i = index i). Lower indices
// weigh less, so {0,1} < {2}; used as the deterministic tie-break.
bool mask_less(const SubsetSel& a, const SubsetSel& b);

// Two disjoint nonempty subsets and their exact ratio >= 1.
struct CandidateSolution {
  SubsetSel set1;
  SubsetSel set2;
  RatioValue ratio;
};

// Builds a candidate, computing the ratio from the two sums.
CandidateSolution make_candidate(SubsetSel s1, SubsetSel s2);

}  // namespace ssr
