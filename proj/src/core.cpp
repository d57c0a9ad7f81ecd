#include "ssr/core.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace ssr {

namespace {

BigInt big_gcd(BigInt a, BigInt b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

}  // namespace

Instance::Instance(std::vector<BigInt> sorted_elements) : elements_(std::move(sorted_elements)) {
  if (elements_.empty()) throw Error(Errc::empty_input, "instance must contain at least one element");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] <= 0)
      throw Error(Errc::non_positive_element, "element " + elements_[i].str() + " is not positive");
    if (i > 0 && elements_[i - 1] >= elements_[i])
      throw Error(Errc::internal_invariant, "instance elements must be strictly ascending");
  }
}

Instance Instance::prefix(std::size_t k) const {
  return Instance(std::vector<BigInt>(elements_.begin(), elements_.begin() + k));
}

ValidateResult validate_instance(std::span<const BigInt> raw) {
  if (raw.empty()) throw Error(Errc::empty_input, "empty input");
  std::vector<BigInt> sorted(raw.begin(), raw.end());
  for (const BigInt& v : sorted) {
    if (v <= 0) throw Error(Errc::non_positive_element, "element " + v.str() + " is not positive");
  }
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i - 1] == sorted[i]) return DuplicatePair{sorted[i], i - 1, i};
  }
  return Instance(std::move(sorted));
}

Epsilon::Epsilon(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ <= 0 || q_ <= 0 || p_ >= q_)
    throw Error(Errc::bad_epsilon, "epsilon must satisfy 0 < p/q < 1");
  BigInt g = big_gcd(p_, q_);
  p_ /= g;
  q_ /= g;
}

Epsilon Epsilon::parse(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view ps = text.substr(0, slash), qs = text.substr(slash + 1);
    if (!is_digits(ps) || !is_digits(qs))
      throw Error(Errc::bad_epsilon, "epsilon must be 'p/q' or a decimal in (0,1)");
    return Epsilon(BigInt(std::string(ps)), BigInt(std::string(qs)));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (!is_digits(whole) || !is_digits(frac))
      throw Error(Errc::bad_epsilon, "epsilon must be 'p/q' or a decimal in (0,1)");
    BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    BigInt num = BigInt(std::string(whole)) * den + BigInt(std::string(frac));
    return Epsilon(num, den);
  }
  throw Error(Errc::bad_epsilon, "epsilon must be 'p/q' or a decimal in (0,1)");
}

std::string Epsilon::str() const { return p_.str() + "/" + q_.str(); }

Epsilon derived_epsilon_prime(const Epsilon& eps) {
  // eps/(2+eps) = p/(2q+p); the Epsilon constructor reduces.
  return Epsilon(eps.num(), 2 * eps.den() + eps.num());
}

std::string RatioValue::str() const { return num.str() + "/" + den.str(); }

RatioValue ratio_of(const BigInt& sum1, const BigInt& sum2) {
  if (sum1 == 0 || sum2 == 0) throw Error(Errc::zero_sum, "ratio undefined for zero sum");
  if (sum1 >= sum2) return RatioValue{sum1, sum2};
  return RatioValue{sum2, sum1};
}

std::strong_ordering compare_ratio(const RatioValue& a, const RatioValue& b) {
  BigInt lhs = a.num * b.den;
  BigInt rhs = b.num * a.den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ratio_decimal(const RatioValue& r, int digits) {
  BigInt whole = r.num / r.den;
  BigInt rem = r.num % r.den;
  std::string out = whole.str();
  if (digits <= 0) return out;
  out += '.';
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(rem / r.den));
    rem %= r.den;
  }
  return out;
}

bool SubsetSel::contains(std::size_t idx) const {
  return std::binary_search(indices.begin(), indices.end(), idx);
}

SubsetSel make_subset(const Instance& inst, std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end());
  SubsetSel s;
  s.sum = 0;
  for (std::size_t i : idx) {
    if (i >= inst.n()) throw Error(Errc::internal_invariant, "subset index out of range");
    s.sum += inst.at(i);
  }
  s.indices = std::move(idx);
  return s;
}

SubsetSel full_subset(const Instance& inst) {
  std::vector<std::size_t> idx(inst.n());
  std::iota(idx.begin(), idx.end(), 0);
  return make_subset(inst, std::move(idx));
}

SubsetSel subset_difference(const Instance& inst, const SubsetSel& a, const SubsetSel& b) {
  std::vector<std::size_t> idx;
  std::set_difference(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(),
                      std::back_inserter(idx));
  return make_subset(inst, std::move(idx));
}

SubsetSel subset_union(const Instance& inst, const SubsetSel& a, const SubsetSel& b) {
  std::vector<std::size_t> idx;
  std::set_union(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(),
                 std::back_inserter(idx));
  return make_subset(inst, std::move(idx));
}

bool subsets_disjoint(const SubsetSel& a, const SubsetSel& b) {
  std::size_t i = 0, j = 0;
  while (i < a.indices.size() && j < b.indices.size()) {
    if (a.indices[i] == b.indices[j]) return false;
    if (a.indices[i] < b.indices[j]) ++i; else ++j;
  }
  return true;
}

bool mask_less(const SubsetSel& a, const SubsetSel& b) {
  // Compare as bitmask integers: the highest differing index decides.
  auto ia = a.indices.rbegin();
  auto ib = b.indices.rbegin();
  for (; ia != a.indices.rend() && ib != b.indices.rend(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.indices.rend() && ib != b.indices.rend();
}

CandidateSolution make_candidate(SubsetSel s1, SubsetSel s2) {
  if (s1.empty() || s2.empty())
    throw Error(Errc::internal_invariant, "candidate sets must be nonempty");
  if (!subsets_disjoint(s1, s2))
    throw Error(Errc::internal_invariant, "candidate sets must be disjoint");
  RatioValue r = ratio_of(s1.sum, s2.sum);
  return CandidateSolution{std::move(s1), std::move(s2), std::move(r)};
}

}  // namespace ssr
