#pragma once

// Exact arithmetic in F_p and Z/NZ for moduli below 2^62.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fmzv/error.hpp"

namespace fmzv {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

// a * b mod m for a, b < m < 2^62.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  if (m <= 0xffffffffu) return a * b % m;
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Reduces a signed integer into [0, m).
inline std::uint64_t reduce_signed(std::int64_t v, std::uint64_t m) {
  std::int64_t r = v % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

class Modulus {
 public:
  explicit Modulus(std::uint64_t value);
  std::uint64_t value() const { return value_; }
  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  std::uint64_t value_;
};

// Odd prime below 2^62; primality is checked on construction.
class Prime {
 public:
  explicit Prime(std::uint64_t value);
  std::uint64_t value() const { return value_; }
  operator Modulus() const { return Modulus(value_); }
  friend bool operator==(const Prime&, const Prime&) = default;
  friend auto operator<=>(const Prime&, const Prime&) = default;

 private:
  std::uint64_t value_;
};

// Element of Z/NZ.
class ModResidue {
 public:
  ModResidue(std::uint64_t value, Modulus modulus);
  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }

  friend ModResidue operator+(ModResidue a, ModResidue b);
  friend ModResidue operator-(ModResidue a, ModResidue b);
  friend ModResidue operator*(ModResidue a, ModResidue b);
  friend ModResidue operator-(ModResidue a);
  friend bool operator==(const ModResidue&, const ModResidue&) = default;

 private:
  std::uint64_t value_;
  std::uint64_t modulus_;
};

// Element of F_p.
class Residue {
 public:
  Residue(std::uint64_t value, Prime prime);
  std::uint64_t value() const { return value_; }
  Prime prime() const { return prime_; }

  friend Residue operator+(Residue a, Residue b);
  friend Residue operator-(Residue a, Residue b);
  friend Residue operator*(Residue a, Residue b);
  friend Residue operator-(Residue a);
  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  std::uint64_t value_;
  Prime prime_;
};

Residue inv_euclid(Residue a);
Residue inv_pow(Residue a);

// Raw-word variants used by the inner loops. `a` must be nonzero mod m.
std::uint64_t inverse_euclid(std::uint64_t a, std::uint64_t m);
std::uint64_t inverse_pow(std::uint64_t a, std::uint64_t p);

// All inverses 1..p-1 via inv[j] = -(p / j) * inv[p mod j].
class InverseTable {
 public:
  explicit InverseTable(Prime p);
  Prime prime() const { return prime_; }
  // j in [1, p).
  std::uint64_t operator[](std::uint64_t j) const { return inverses_[j]; }
  std::span<const std::uint64_t> values() const { return inverses_; }

 private:
  Prime prime_;
  std::vector<std::uint64_t> inverses_;
};

InverseTable build_inverse_table(Prime p);

// Default entry budget for bulk inverse tables.
inline constexpr std::uint64_t kInverseTableBudget = std::uint64_t{1} << 27;

// Unique x in [0, prod moduli) with x = value_i mod modulus_i.
BigInt garner(std::span<const std::pair<std::uint64_t, std::uint64_t>> residues);

}  // namespace fmzv
