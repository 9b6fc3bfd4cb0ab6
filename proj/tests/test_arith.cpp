#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>
#include <random>

#include "nsg/arith.hpp"

using nsg::Int;

TEST_CASE("mod_reduce returns the least nonnegative residue") {
  CHECK(nsg::mod_reduce(231, 12).value == 3);
  CHECK(nsg::mod_reduce(-77, 12).value == 7);
  CHECK(nsg::mod_reduce(0, 5).value == 0);
  CHECK(nsg::mod_reduce(-12, 12).value == 0);
  CHECK(nsg::mod_reduce(5, 1).value == 0);
  CHECK(nsg::mod_reduce(-77, 12).modulus == 12);
}

TEST_CASE("mod_reduce rejects non-positive moduli") {
  for (Int n : {0, -3}) {
    try {
      nsg::mod_reduce(4, n);
      FAIL("expected InvalidModulus");
    } catch (const nsg::Error& e) {
      CHECK(e.code() == nsg::ErrorCode::InvalidModulus);
    }
  }
}

TEST_CASE("ext_gcd satisfies the Bezout identity") {
  auto b = nsg::ext_gcd(12, 7);
  CHECK(b.gcd == 1);
  CHECK(12 * b.x + 7 * b.y == 1);

  b = nsg::ext_gcd(4, 6);
  CHECK(b.gcd == 2);
  CHECK(4 * b.x + 6 * b.y == 2);

  b = nsg::ext_gcd(5, 0);
  CHECK(b.gcd == 5);
  CHECK(b.x == 1);
  CHECK(b.y == 0);

  b = nsg::ext_gcd(0, 9);
  CHECK(b.gcd == 9);
  CHECK(9 * b.y == 9);
}

TEST_CASE("ext_gcd(0, 0) is an error") {
  try {
    nsg::ext_gcd(0, 0);
    FAIL("expected BothZero");
  } catch (const nsg::Error& e) {
    CHECK(e.code() == nsg::ErrorCode::BothZero);
  }
}

TEST_CASE("mod_inverse") {
  CHECK(nsg::mod_inverse(1, 5).value == 1);
  CHECK(nsg::mod_inverse(7, 12).value == 7);  // 49 = 4*12 + 1
  CHECK(nsg::mod_inverse(-5, 12).value == 7);  // -5 = 7 (mod 12)
  try {
    nsg::mod_inverse(4, 6);
    FAIL("expected NotCoprime");
  } catch (const nsg::Error& e) {
    CHECK(e.code() == nsg::ErrorCode::NotCoprime);
  }
  CHECK_THROWS_AS(nsg::mod_inverse(3, 1), nsg::Error);
}

TEST_CASE("checked arithmetic never wraps") {
  constexpr Int kMax = std::numeric_limits<Int>::max();
  CHECK(nsg::checked_mul(2, 3) == 6);
  CHECK(nsg::checked_mul(0, kMax) == 0);
  CHECK(nsg::checked_add(2, 3) == 5);
  try {
    nsg::checked_mul(kMax, kMax);
    FAIL("expected Overflow");
  } catch (const nsg::Error& e) {
    CHECK(e.code() == nsg::ErrorCode::Overflow);
  }
  CHECK_THROWS_AS(nsg::checked_add(kMax, 1), nsg::Error);
  CHECK_THROWS_AS(nsg::checked_sub(std::numeric_limits<Int>::min(), 1), nsg::Error);
  // The admissible bound keeps n1*n2*n3 representable.
  CHECK(nsg::checked_mul(nsg::checked_mul(nsg::kMaxGenerator, nsg::kMaxGenerator), nsg::kMaxGenerator) ==
        Int{8'000'000'000'000'000'000});
}

TEST_CASE("floor and ceiling division") {
  CHECK(nsg::floor_div(7, 5) == 1);
  CHECK(nsg::floor_div(-7, 5) == -2);
  CHECK(nsg::floor_div(10, 5) == 2);
  CHECK(nsg::ceil_div(35, 11) == 4);
  CHECK(nsg::ceil_div(20, 7) == 3);
  CHECK(nsg::ceil_div(0, 7) == 0);
  CHECK(nsg::ceil_div(14, 7) == 2);
}

TEST_CASE("property: residues, inverses and negation") {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<Int> mod_dist(1, 5000);
  std::uniform_int_distribution<Int> val_dist(-1'000'000'000, 1'000'000'000);
  for (int trial = 0; trial < 20000; ++trial) {
    const Int n = mod_dist(rng);
    const Int m = val_dist(rng);
    const Int r = nsg::mod_reduce(m, n).value;
    REQUIRE(r >= 0);
    REQUIRE(r < n);
    REQUIRE((m - r) % n == 0);

    const Int neg = nsg::mod_reduce(-m, n).value;
    if (r == 0) {
      REQUIRE(neg == 0);
    } else {
      REQUIRE(neg == n - r);
    }

    if (n >= 2 && nsg::gcd(m, n) == 1) {
      const Int u = nsg::mod_inverse(m, n).value;
      REQUIRE(u >= 0);
      REQUIRE(u < n);
      REQUIRE(nsg::mod_reduce(r * u, n).value == 1);
    }

    const Int a = m < 0 ? -m : m;
    if (a != 0 || n != 0) {
      const auto b = nsg::ext_gcd(a, n);
      REQUIRE(b.gcd == nsg::gcd(a, n));
      REQUIRE(static_cast<__int128>(a) * b.x + static_cast<__int128>(n) * b.y == b.gcd);
    }
  }
}

TEST_CASE("mul_mod handles operands near the width") {
  const Int big = Int{3'000'000'000'000'000'000};
  CHECK(nsg::mul_mod(big, big, 1'000'000'007).value ==
        static_cast<Int>(static_cast<__int128>(big % 1'000'000'007) * (big % 1'000'000'007) % 1'000'000'007));
}
