#include "fmzv/mitm.hpp"

#include <bit>

namespace fmzv {

CoefficientArray::CoefficientArray(std::uint32_t bound) : bound_(bound) {
  values_.reserve(2 * static_cast<std::size_t>(bound) + 1);
  values_.push_back(0);
  for (std::int64_t a = 1; a <= bound; ++a) {
    values_.push_back(a);
    values_.push_back(-a);
  }
}

std::size_t CoefficientArray::position(std::int64_t c) const {
  if (c > static_cast<std::int64_t>(bound_) || c < -static_cast<std::int64_t>(bound_)) {
    throw Error("coefficient " + std::to_string(c) + " outside [-B, B]");
  }
  if (c == 0) return 0;
  return c > 0 ? static_cast<std::size_t>(2 * c - 1) : static_cast<std::size_t>(-2 * c);
}

int residue_byte_width(std::uint64_t m) {
  const int bits = std::bit_width(m - 1);
  return std::max(1, (bits + 7) / 8);
}

void append_packed(std::string& key, std::uint64_t value, int width) {
  for (int i = 0; i < width; ++i) key.push_back(static_cast<char>((value >> (8 * i)) & 0xff));
}

ResidueTupleGroup::ResidueTupleGroup(std::vector<Prime> primes) : primes_(std::move(primes)) {
  for (const Prime& p : primes_) widths_.push_back(residue_byte_width(p.value()));
}

ResidueTupleGroup::Element ResidueTupleGroup::add(const Element& a, const Element& b) const {
  Element out(primes_.size());
  for (std::size_t l = 0; l < primes_.size(); ++l) out[l] = add_mod(a[l], b[l], primes_[l].value());
  return out;
}

ResidueTupleGroup::Element ResidueTupleGroup::neg(const Element& a) const {
  Element out(primes_.size());
  for (std::size_t l = 0; l < primes_.size(); ++l) out[l] = sub_mod(0, a[l], primes_[l].value());
  return out;
}

ResidueTupleGroup::Element ResidueTupleGroup::scale(std::int64_t c, const Element& a) const {
  Element out(primes_.size());
  for (std::size_t l = 0; l < primes_.size(); ++l) {
    const std::uint64_t p = primes_[l].value();
    out[l] = mul_mod(reduce_signed(c, p), a[l], p);
  }
  return out;
}

ResidueTupleGroup::Key ResidueTupleGroup::key(const Element& a) const {
  Key key;
  for (std::size_t l = 0; l < primes_.size(); ++l) append_packed(key, a[l], widths_[l]);
  return key;
}

std::uint64_t tuple_space_size(std::uint64_t base, std::size_t length) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (base != 0 && size > std::numeric_limits<std::uint64_t>::max() / base) {
      throw TooLarge("tuple space exceeds 64-bit ranks");
    }
    size *= base;
  }
  return size;
}

void unrank_tuple(std::uint64_t rank, std::uint64_t base, std::span<std::uint32_t> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<std::uint32_t>(rank % base);
    rank /= base;
  }
}

bool not_all_zero(const CoefficientArray& c, std::span<const std::uint32_t> tuple) {
  return std::any_of(tuple.begin(), tuple.end(), [&c](std::uint32_t b) { return c[b] != 0; });
}

}  // namespace fmzv
