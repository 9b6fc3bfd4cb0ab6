#pragma once

// Exact integer kernel. Everything is int64_t with checked operations; no
// floating point is used anywhere in the library.

#include <cstdint>

#include "nsg/error.hpp"

namespace nsg {

using Int = std::int64_t;

/// Largest admissible generator. Chosen so that n1*n2*n3 < 2^63 for any
/// admissible triple: 2'000'000^3 = 8e18 < 9.22e18.
inline constexpr Int kMaxGenerator = 2'000'000;

/// Least nonnegative residue of some integer modulo `modulus`.
struct Residue {
  Int value = 0;
  Int modulus = 1;

  constexpr operator Int() const noexcept { return value; }
  friend constexpr bool operator==(const Residue&, const Residue&) = default;
};

struct BezoutResult {
  Int gcd;
  Int x;
  Int y;
};

Int checked_mul(Int a, Int b);
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);

/// [m]_n: the Euclidean remainder, always in [0, n) even for negative m.
Residue mod_reduce(Int m, Int n);

/// Returns g = gcd(a, b) together with a*x + b*y = g.
BezoutResult ext_gcd(Int a, Int b);

Int gcd(Int a, Int b);

/// Inverse of a modulo n (n >= 2) via extended Euclid; moduli need not be prime.
Residue mod_inverse(Int a, Int n);

/// [a * b]_n without intermediate overflow for operands below 2^63.
Residue mul_mod(Int a, Int b, Int n);

/// floor(a / b) for b > 0, rounding toward negative infinity.
Int floor_div(Int a, Int b);

/// ceil(a / b) for a >= 0, b > 0, as (a + b - 1) / b.
Int ceil_div(Int a, Int b);

}  // namespace nsg
