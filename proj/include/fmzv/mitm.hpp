#pragma once

// Meet-in-the-middle for the decipher problem and for bounded additive
// relations sum_d c[b_d] x_d = 0 over a finite abelian group.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fmzv/modarith.hpp"
#include "fmzv/parallel.hpp"

namespace fmzv {

// Z ∩ [-B, B] ordered 0, 1, -1, 2, -2, ..., B, -B.
class CoefficientArray {
 public:
  explicit CoefficientArray(std::uint32_t bound);

  std::uint32_t bound() const { return bound_; }
  std::size_t size() const { return values_.size(); }
  std::int64_t operator[](std::size_t b) const { return values_[b]; }
  std::span<const std::int64_t> values() const { return values_; }
  // Position of coefficient c, |c| <= B.
  std::size_t position(std::int64_t c) const;

 private:
  std::uint32_t bound_;
  std::vector<std::int64_t> values_;
};

template <class G>
concept AbelianGroup = requires(const G& g, const typename G::Element& a, const typename G::Element& b,
                                std::int64_t n) {
  typename G::Element;
  typename G::Key;
  { g.zero() } -> std::convertible_to<typename G::Element>;
  { g.add(a, b) } -> std::convertible_to<typename G::Element>;
  { g.neg(a) } -> std::convertible_to<typename G::Element>;
  { g.scale(n, a) } -> std::convertible_to<typename G::Element>;
  { g.key(a) } -> std::convertible_to<typename G::Key>;
  { std::hash<typename G::Key>{}(g.key(a)) } -> std::convertible_to<std::size_t>;
};

// Z/NZ with N in [2, 2^62).
class ModularGroup {
 public:
  using Element = std::uint64_t;
  using Key = std::uint64_t;

  explicit ModularGroup(Modulus n) : n_(n.value()) {}

  std::uint64_t modulus() const { return n_; }
  Element element(std::int64_t v) const { return reduce_signed(v, n_); }
  Element zero() const { return 0; }
  Element add(Element a, Element b) const { return add_mod(a, b, n_); }
  Element neg(Element a) const { return sub_mod(0, a, n_); }
  Element scale(std::int64_t c, Element a) const { return mul_mod(reduce_signed(c, n_), a, n_); }
  Key key(Element a) const { return a; }

 private:
  std::uint64_t n_;
};

// prod_l F_{p_l}, elements as residue tuples. Keys pack each residue into
// the minimal byte width of its prime, in prime order.
class ResidueTupleGroup {
 public:
  using Element = std::vector<std::uint64_t>;
  using Key = std::string;

  explicit ResidueTupleGroup(std::vector<Prime> primes);

  std::span<const Prime> primes() const { return primes_; }
  Element zero() const { return Element(primes_.size(), 0); }
  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element scale(std::int64_t c, const Element& a) const;
  Key key(const Element& a) const;

 private:
  std::vector<Prime> primes_;
  std::vector<int> widths_;
};

// Byte width needed for residues modulo m.
int residue_byte_width(std::uint64_t m);
void append_packed(std::string& key, std::uint64_t value, int width);

// A tuple b of coefficient positions with the integers c[b_d] it resolves to.
struct RelationSolution {
  std::vector<std::uint32_t> positions;
  std::vector<std::int64_t> coefficients;

  friend bool operator==(const RelationSolution&, const RelationSolution&) = default;
};

// Mixed-radix rank of tuples in [0, base)^length with entry 0 most significant,
// so ascending rank is ascending lexicographic tuple order.
std::uint64_t tuple_space_size(std::uint64_t base, std::size_t length);
void unrank_tuple(std::uint64_t rank, std::uint64_t base, std::span<std::uint32_t> out);

// Generic MITM over rank domains X0 = [0, n0) and X1 = [0, n1). Returns the
// first (x0, x1) with h(x0) == gprime(x1) and member(x0, x1), scanning X1
// ascending and each bucket in insertion order.
template <class H, class GPrime, class Member>
std::optional<std::pair<std::uint64_t, std::uint64_t>> mitm_decipher(std::uint64_t n0, std::uint64_t n1, H&& h,
                                                                      GPrime&& gprime, Member&& member,
                                                                      int workers = 1) {
  using Key = std::decay_t<decltype(h(std::uint64_t{}))>;
  std::unordered_map<Key, std::vector<std::uint64_t>> dictionary;
  for (std::uint64_t x0 = 0; x0 < n0; ++x0) dictionary[h(x0)].push_back(x0);

  auto probe = [&](std::uint64_t x1) -> std::optional<std::uint64_t> {
    auto it = dictionary.find(gprime(x1));
    if (it == dictionary.end()) return std::nullopt;
    for (std::uint64_t x0 : it->second) {
      if (member(x0, x1)) return x0;
    }
    return std::nullopt;
  };

  // A bucket's first admissible entry depends only on x1, so the least x1
  // with a hit identifies the same answer as the serial scan.
  auto x1 = find_first(n1, [&](std::uint64_t i) { return probe(i).has_value(); }, workers);
  if (!x1) return std::nullopt;
  return std::make_pair(*probe(*x1), *x1);
}

using TuplePredicate = std::function<bool(std::span<const std::uint32_t>)>;

struct SolveOptions {
  // Number of leading elements in the dictionary; defaults to floor(D/2).
  std::optional<std::size_t> left_length;
  int workers = 1;
};

// Finds b in S with sum_d c[b_d] x_d = 0, c = CoefficientArray(bound).
template <AbelianGroup G>
std::optional<RelationSolution> solve_bounded_relation(const G& group, std::span<const typename G::Element> x,
                                                       std::uint32_t bound, const TuplePredicate& admissible,
                                                       const SolveOptions& options = {}) {
  const CoefficientArray c(bound);
  const std::size_t D = x.size();
  const std::size_t left = options.left_length.value_or(D / 2);
  if (left > D) throw Error("left length exceeds the number of elements");
  const std::size_t right = D - left;
  const std::uint64_t base = c.size();
  const std::uint64_t n0 = tuple_space_size(base, left);
  const std::uint64_t n1 = tuple_space_size(base, right);

  // multiples[d][b] = c[b] * x_d
  std::vector<std::vector<typename G::Element>> multiples(D);
  for (std::size_t d = 0; d < D; ++d) {
    multiples[d].reserve(base);
    for (std::size_t b = 0; b < base; ++b) multiples[d].push_back(group.scale(c[b], x[d]));
  }
  auto partial_sum = [&](std::uint64_t rank, std::size_t offset, std::size_t length) {
    std::vector<std::uint32_t> digits(length);
    unrank_tuple(rank, base, digits);
    typename G::Element sum = group.zero();
    for (std::size_t d = 0; d < length; ++d) sum = group.add(sum, multiples[offset + d][digits[d]]);
    return sum;
  };
  auto h = [&](std::uint64_t r) { return group.key(partial_sum(r, 0, left)); };
  auto gprime = [&](std::uint64_t r) { return group.key(group.neg(partial_sum(r, left, right))); };
  auto member = [&](std::uint64_t r0, std::uint64_t r1) {
    std::vector<std::uint32_t> tuple(D);
    unrank_tuple(r0, base, std::span(tuple).first(left));
    unrank_tuple(r1, base, std::span(tuple).subspan(left));
    return admissible(tuple);
  };
  auto hit = mitm_decipher(n0, n1, h, gprime, member, options.workers);
  if (!hit) return std::nullopt;
  RelationSolution solution;
  solution.positions.resize(D);
  unrank_tuple(hit->first, base, std::span(solution.positions).first(left));
  unrank_tuple(hit->second, base, std::span(solution.positions).subspan(left));
  for (std::uint32_t b : solution.positions) solution.coefficients.push_back(c[b]);
  return solution;
}

// Not every coefficient zero.
bool not_all_zero(const CoefficientArray& c, std::span<const std::uint32_t> tuple);

// Does x generate y over c: some tuple with nonzero last coefficient kills x⌢y.
template <AbelianGroup G>
std::optional<RelationSolution> generates_over(const G& group, std::span<const typename G::Element> x,
                                               const CoefficientArray& c, const typename G::Element& y,
                                               const SolveOptions& options = {}) {
  std::vector<typename G::Element> extended(x.begin(), x.end());
  extended.push_back(y);
  TuplePredicate last_nonzero = [&c](std::span<const std::uint32_t> t) { return c[t.back()] != 0; };
  SolveOptions opts = options;
  if (!opts.left_length) opts.left_length = extended.size() / 2;
  return solve_bounded_relation(group, std::span<const typename G::Element>(extended), c.bound(), last_nonzero, opts);
}

}  // namespace fmzv
