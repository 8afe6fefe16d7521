#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fmzv/modarith.hpp"
#include "support.hpp"

using namespace fmzv;
using test_support::uniform;

TEST_CASE("inverse examples") {
  CHECK(inv_euclid(Residue(1, Prime(7))).value() == 1);
  CHECK(inv_euclid(Residue(2, Prime(5))).value() == 3);
  CHECK(inv_pow(Residue(3, Prime(5))).value() == 2);
  const Residue x = inv_euclid(Residue(4, Prime(10007)));
  CHECK((x * Residue(4, Prime(10007))).value() == 1);
  for (std::uint64_t p : {3u, 5u, 7u, 10007u, 1000000007u}) CHECK(inv_pow(Residue(1, Prime(p))).value() == 1);
}

TEST_CASE("zero has no inverse") {
  CHECK_THROWS_AS(inv_euclid(Residue(0, Prime(7))), ZeroInverse);
  CHECK_THROWS_AS(inv_pow(Residue(0, Prime(7))), ZeroInverse);
  CHECK_THROWS_AS(inverse_euclid(6, 9), Error);
}

TEST_CASE("inverse table examples") {
  const InverseTable t5(Prime(5));
  CHECK(t5[1] == 1);
  CHECK(t5[2] == 3);
  CHECK(t5[3] == 2);
  CHECK(t5[4] == 4);
  const InverseTable t3 = build_inverse_table(Prime(3));
  CHECK(t3[1] == 1);
  CHECK(t3[2] == 2);
}

TEST_CASE("all inverse methods agree for every prime below 10^4") {
  for (std::uint64_t p = 3; p < 10000; p += 2) {
    if (!is_prime(p)) continue;
    const Prime prime(p);
    const InverseTable table(prime);
    for (std::uint64_t j = 1; j < p; ++j) {
      const std::uint64_t a = table[j];
      if (mul_mod(a, j, p) != 1 || inverse_euclid(j, p) != a || inverse_pow(j, p) != a) {
        FAIL("inverse mismatch at p=" << p << " j=" << j);
      }
    }
  }
}

TEST_CASE("primality") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(10007));
  CHECK_FALSE(is_prime(10011));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_prime(4611686018427387847ULL));
  CHECK_THROWS_AS(Prime(9), NotPrime);
  CHECK_THROWS_AS(Prime(2), NotPrime);
  CHECK_THROWS_AS(Modulus(1), Error);
}

TEST_CASE("garner examples") {
  using P = std::pair<std::uint64_t, std::uint64_t>;
  std::vector<P> a{{0, 3}, {0, 5}};
  CHECK(garner(a) == 0);
  std::vector<P> b{{2, 3}, {3, 5}};
  CHECK(garner(b) == 8);
  std::vector<P> c{{1, 10007}, {1, 10009}};
  CHECK(garner(c) == 1);
  std::vector<P> bad{{1, 6}, {1, 9}};
  CHECK_THROWS_AS(garner(bad), NotCoprime);
}

TEST_CASE("garner reconstructs random integers") {
  const std::vector<std::uint64_t> moduli{10007, 10009, 10037, 10039, 1000000007, 998244353};
  BigInt product = 1;
  for (std::uint64_t m : moduli) product *= m;
  for (int trial = 0; trial < 200; ++trial) {
    BigInt x = 0;
    for (int limb = 0; limb < 3; ++limb) x = (x << 60) + uniform(0, (std::uint64_t{1} << 60) - 1);
    x %= product;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> residues;
    for (std::uint64_t m : moduli) residues.emplace_back(static_cast<std::uint64_t>(x % m), m);
    CHECK(garner(residues) == x);
  }
}

TEST_CASE("random arithmetic matches 128-bit reference") {
  for (int trial = 0; trial < 100000; ++trial) {
    const std::uint64_t m = uniform(2, kMaxModulus - 1);
    const std::uint64_t a = uniform(0, m - 1), b = uniform(0, m - 1);
    using u128 = unsigned __int128;
    const bool ok = add_mod(a, b, m) == static_cast<std::uint64_t>((u128(a) + b) % m) &&
                    sub_mod(a, b, m) == static_cast<std::uint64_t>((u128(a) + m - b) % m) &&
                    mul_mod(a, b, m) == static_cast<std::uint64_t>(u128(a) * b % m);
    if (!ok) FAIL("mismatch m=" << m << " a=" << a << " b=" << b);
  }
}

TEST_CASE("residue operators") {
  const Prime p(11);
  const Residue a(7, p), b(9, p);
  CHECK((a + b).value() == 5);
  CHECK((a - b).value() == 9);
  CHECK((a * b).value() == 8);
  CHECK((-a).value() == 4);
  const ModResidue x(7, Modulus(100)), y(98, Modulus(100));
  CHECK((x + y).value() == 5);
  CHECK((x * y).value() == 86);
  CHECK(reduce_signed(-3, 100) == 97);
  CHECK(pow_mod(3, 4, 100) == 81);
}
