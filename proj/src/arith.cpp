#include "nsg/arith.hpp"

#include <string>

namespace nsg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotCoprimeOverall: return "NotCoprimeOverall";
    case ErrorCode::DegenerateGenerators: return "DegenerateGenerators";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::NotPairwiseCoprime: return "NotPairwiseCoprime";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::OracleCapExceeded: return "OracleCapExceeded";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, std::to_string(a) + " - " + std::to_string(b));
  }
  return out;
}

Residue mod_reduce(Int m, Int n) {
  if (n <= 0) {
    throw Error(ErrorCode::InvalidModulus, "modulus must be positive, got " + std::to_string(n));
  }
  Int r = m % n;
  if (r < 0) r += n;
  return {r, n};
}

BezoutResult ext_gcd(Int a, Int b) {
  if (a < 0 || b < 0) {
    throw Error(ErrorCode::PreconditionViolated, "ext_gcd expects nonnegative arguments");
  }
  if (a == 0 && b == 0) {
    throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  }
  // Invariant: old_r = a*old_x + b*old_y and r = a*x + b*y.
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    const Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
    t = old_y - q * y;
    old_y = y;
    y = t;
  }
  return {old_r, old_x, old_y};
}

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Residue mod_inverse(Int a, Int n) {
  if (n < 2) {
    throw Error(ErrorCode::InvalidModulus, "mod_inverse needs modulus >= 2, got " + std::to_string(n));
  }
  const Int reduced = mod_reduce(a, n).value;
  if (reduced == 0) {
    throw Error(ErrorCode::NotCoprime, std::to_string(a) + " has no inverse mod " + std::to_string(n));
  }
  const BezoutResult b = ext_gcd(reduced, n);
  if (b.gcd != 1) {
    throw Error(ErrorCode::NotCoprime,
                "gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") = " + std::to_string(b.gcd));
  }
  return mod_reduce(b.x, n);
}

Residue mul_mod(Int a, Int b, Int n) {
  const Int ra = mod_reduce(a, n).value;
  const Int rb = mod_reduce(b, n).value;
  const auto wide = static_cast<__int128>(ra) * rb % n;
  return {static_cast<Int>(wide), n};
}

Int floor_div(Int a, Int b) {
  if (b <= 0) {
    throw Error(ErrorCode::PreconditionViolated, "floor_div expects a positive divisor");
  }
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

Int ceil_div(Int a, Int b) {
  if (a < 0 || b <= 0) {
    throw Error(ErrorCode::PreconditionViolated, "ceil_div expects a >= 0 and b > 0");
  }
  return checked_add(a, b - 1) / b;
}

}  // namespace nsg
