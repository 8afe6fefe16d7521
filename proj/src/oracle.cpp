#include "fmzv/oracle.hpp"

#include <string>

#include "fmzv/error.hpp"

namespace fmzv::oracle {

namespace {

using u128 = unsigned __int128;

std::uint64_t power(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  u128 result = 1, base = a % p;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

// Number of strictly increasing length-L sequences in [1, j], capped.
std::uint64_t sequence_count(std::uint64_t j, std::uint64_t L) {
  if (L > j) return 0;
  u128 c = 1;
  for (std::uint64_t i = 0; i < L; ++i) {
    c = c * (j - i) / (i + 1);
    if (c > kEnumerationLimit) return kEnumerationLimit + 1;
  }
  return static_cast<std::uint64_t>(c);
}

}  // namespace

std::uint64_t harmonic_oracle(std::uint64_t p, const Index& k, std::uint64_t j) {
  const std::size_t L = k.depth();
  if (L == 0) return 1 % p;
  if (sequence_count(j, L) > kEnumerationLimit) {
    throw TooLarge("harmonic oracle: too many sequences for depth " + std::to_string(L));
  }
  if (L > j) return 0;
  // Odometer over m_0 < m_1 < ... < m_{L-1} <= j, starting at 1, 2, ..., L.
  std::vector<std::uint64_t> m(L);
  for (std::size_t i = 0; i < L; ++i) m[i] = i + 1;
  // inverse[m][i] = m^{-k_i} = m^{(p-2) k_i} by Fermat.
  std::vector<std::vector<std::uint64_t>> inverse(j + 1, std::vector<std::uint64_t>(L));
  for (std::uint64_t v = 1; v <= j; ++v) {
    for (std::size_t i = 0; i < L; ++i) inverse[v][i] = power(v, (p - 2) * k[i], p);
  }
  u128 total = 0;
  while (true) {
    u128 term = 1;
    for (std::size_t i = 0; i < L; ++i) term = term * inverse[m[i]][i] % p;
    total = (total + term) % p;
    std::size_t pos = L;
    while (pos > 0 && m[pos - 1] == j - (L - pos)) --pos;
    if (pos == 0) break;
    ++m[pos - 1];
    for (std::size_t i = pos; i < L; ++i) m[i] = m[i - 1] + 1;
  }
  return static_cast<std::uint64_t>(total);
}

std::optional<Witness> brute_relation(const CyclicProduct& group, std::span<const Element> x, std::uint32_t bound,
                                      const Admissible& admissible) {
  const std::size_t D = x.size();
  const std::uint64_t base = 2 * static_cast<std::uint64_t>(bound) + 1;
  u128 space = 1;
  for (std::size_t d = 0; d < D; ++d) {
    space *= base;
    if (space > kEnumerationLimit) throw TooLarge("brute_relation: search space too large");
  }
  std::vector<std::int64_t> order;
  order.push_back(0);
  for (std::int64_t a = 1; a <= bound; ++a) {
    order.push_back(a);
    order.push_back(-a);
  }
  std::vector<std::uint64_t> digit(D, 0);
  std::vector<std::int64_t> coeffs(D, 0);
  while (true) {
    for (std::size_t d = 0; d < D; ++d) coeffs[d] = order[digit[d]];
    bool zero = true;
    for (std::size_t r = 0; r < group.moduli.size() && zero; ++r) {
      const std::int64_t n = static_cast<std::int64_t>(group.moduli[r]);
      __int128 sum = 0;
      for (std::size_t d = 0; d < D; ++d) sum += static_cast<__int128>(coeffs[d]) * static_cast<__int128>(x[d][r]);
      zero = sum % n == 0;
    }
    if (zero && admissible(coeffs)) return Witness{coeffs};
    std::size_t pos = D;
    while (pos > 0 && digit[pos - 1] + 1 == base) {
      digit[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) return std::nullopt;
    ++digit[pos - 1];
  }
}

std::vector<std::size_t> brute_generating_system(const CyclicProduct& group, std::span<const Element> S,
                                                 std::uint32_t bound) {
  std::vector<Element> x;
  std::vector<std::size_t> positions;
  const Admissible last_nonzero = [](std::span<const std::int64_t> c) { return c.back() != 0; };
  for (std::size_t h = 0; h < S.size(); ++h) {
    std::vector<Element> extended = x;
    extended.push_back(S[h]);
    if (!brute_relation(group, extended, bound, last_nonzero)) {
      x.push_back(S[h]);
      positions.push_back(h);
    }
  }
  return positions;
}

}  // namespace fmzv::oracle
