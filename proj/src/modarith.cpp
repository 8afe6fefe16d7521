#include "fmzv/modarith.hpp"

#include <numeric>
#include <string>

namespace fmzv {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mul = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = 1, base = a % n, e = d;
    while (e > 0) {
      if (e & 1) x = mul(x, base);
      base = mul(base, base);
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Modulus::Modulus(std::uint64_t value) : value_(value) {
  if (value < 2 || value >= kMaxModulus) {
    throw Error("modulus must lie in [2, 2^62): " + std::to_string(value));
  }
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (value < 3 || value >= kMaxModulus || !is_prime(value)) {
    throw NotPrime("not an odd prime below 2^62: " + std::to_string(value));
  }
}

ModResidue::ModResidue(std::uint64_t value, Modulus modulus)
    : value_(value % modulus.value()), modulus_(modulus.value()) {}

namespace {

void require_same(std::uint64_t a, std::uint64_t b) {
  if (a != b) throw Error("residue moduli differ");
}

}  // namespace

ModResidue operator+(ModResidue a, ModResidue b) {
  require_same(a.modulus_, b.modulus_);
  return ModResidue(add_mod(a.value_, b.value_, a.modulus_), Modulus(a.modulus_));
}

ModResidue operator-(ModResidue a, ModResidue b) {
  require_same(a.modulus_, b.modulus_);
  return ModResidue(sub_mod(a.value_, b.value_, a.modulus_), Modulus(a.modulus_));
}

ModResidue operator*(ModResidue a, ModResidue b) {
  require_same(a.modulus_, b.modulus_);
  return ModResidue(mul_mod(a.value_, b.value_, a.modulus_), Modulus(a.modulus_));
}

ModResidue operator-(ModResidue a) {
  return ModResidue(sub_mod(0, a.value_, a.modulus_), Modulus(a.modulus_));
}

Residue::Residue(std::uint64_t value, Prime prime) : value_(value % prime.value()), prime_(prime) {}

Residue operator+(Residue a, Residue b) {
  require_same(a.prime_.value(), b.prime_.value());
  return Residue(add_mod(a.value_, b.value_, a.prime_.value()), a.prime_);
}

Residue operator-(Residue a, Residue b) {
  require_same(a.prime_.value(), b.prime_.value());
  return Residue(sub_mod(a.value_, b.value_, a.prime_.value()), a.prime_);
}

Residue operator*(Residue a, Residue b) {
  require_same(a.prime_.value(), b.prime_.value());
  return Residue(mul_mod(a.value_, b.value_, a.prime_.value()), a.prime_);
}

Residue operator-(Residue a) { return Residue(sub_mod(0, a.value_, a.prime_.value()), a.prime_); }

std::uint64_t inverse_euclid(std::uint64_t a, std::uint64_t m) {
  // Extended Euclid on (m, a), tracking only the coefficient of a.
  std::int64_t t0 = 0, t1 = 1;
  std::uint64_t r0 = m, r1 = a % m;
  if (r1 == 0) throw ZeroInverse();
  while (r1 != 0) {
    std::uint64_t q = r0 / r1;
    std::uint64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - static_cast<std::int64_t>(q) * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw NotCoprime("no inverse: gcd(" + std::to_string(a) + ", " + std::to_string(m) + ") != 1");
  return t0 < 0 ? static_cast<std::uint64_t>(t0 + static_cast<std::int64_t>(m)) : static_cast<std::uint64_t>(t0);
}

std::uint64_t inverse_pow(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw ZeroInverse();
  return pow_mod(a, p - 2, p);
}

Residue inv_euclid(Residue a) {
  return Residue(inverse_euclid(a.value(), a.prime().value()), a.prime());
}

Residue inv_pow(Residue a) { return Residue(inverse_pow(a.value(), a.prime().value()), a.prime()); }

InverseTable::InverseTable(Prime p) : prime_(p), inverses_(p.value(), 0) {
  const std::uint64_t m = p.value();
  inverses_[1] = 1;
  for (std::uint64_t j = 2; j < m; ++j) {
    inverses_[j] = sub_mod(0, mul_mod(m / j, inverses_[m % j], m), m);
  }
}

InverseTable build_inverse_table(Prime p) { return InverseTable(p); }

BigInt garner(std::span<const std::pair<std::uint64_t, std::uint64_t>> residues) {
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (residues[i].second < 2 || residues[i].second >= kMaxModulus) {
      throw Error("garner modulus out of range");
    }
    if (residues[i].first >= residues[i].second) throw Error("garner residue not reduced");
    for (std::size_t k = 0; k < i; ++k) {
      if (std::gcd(residues[i].second, residues[k].second) != 1) {
        throw NotCoprime("moduli " + std::to_string(residues[k].second) + " and " +
                         std::to_string(residues[i].second) + " share a factor");
      }
    }
  }
  // Mixed-radix digits v_i with x = v_0 + v_1 m_0 + v_2 m_0 m_1 + ...
  std::vector<std::uint64_t> digits(residues.size());
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const std::uint64_t m = residues[i].second;
    std::uint64_t acc = residues[i].first;
    for (std::size_t k = 0; k < i; ++k) {
      const std::uint64_t mk = residues[k].second % m;
      acc = mul_mod(sub_mod(acc, digits[k] % m, m), inverse_euclid(mk, m), m);
    }
    digits[i] = acc;
  }
  BigInt x = 0;
  for (std::size_t i = residues.size(); i-- > 0;) {
    x = x * residues[i].second + digits[i];
  }
  return x;
}

}  // namespace fmzv
