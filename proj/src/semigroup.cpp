#include "nsg/semigroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace nsg {

namespace {

constexpr Int kUnreached = std::numeric_limits<Int>::max();

void require_gcd_one(std::span<const Int> gens) {
  if (gens.empty()) {
    throw Error(ErrorCode::InvalidInput, "at least one generator is required");
  }
  Int g = 0;
  for (Int x : gens) {
    if (x < 1) throw Error(ErrorCode::InvalidInput, "generators must be positive");
    g = gcd(g, x);
  }
  if (g != 1) {
    throw Error(ErrorCode::NotCoprimeOverall, "gcd of generators is " + std::to_string(g));
  }
}

}  // namespace

Int Triple::n(int index) const {
  if (index < 1 || index > 3) {
    throw Error(ErrorCode::PreconditionViolated, "generator index must be 1, 2 or 3");
  }
  return n_[static_cast<std::size_t>(index - 1)];
}

Triple make_triple(Int a, Int b, Int c) {
  std::array<Int, 3> v{a, b, c};
  for (Int x : v) {
    if (x < 1) throw Error(ErrorCode::InvalidInput, "generators must be positive");
    if (x > kMaxGenerator) {
      throw Error(ErrorCode::Overflow,
                  std::to_string(x) + " exceeds the admissible bound " + std::to_string(kMaxGenerator));
    }
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  if (gcd(gcd(v[0], v[1]), v[2]) != 1) {
    throw Error(ErrorCode::NotCoprimeOverall,
                "gcd(" + std::to_string(v[0]) + ", " + std::to_string(v[1]) + ", " + std::to_string(v[2]) + ") > 1");
  }
  if (v[0] == v[1] || v[1] == v[2]) {
    throw Error(ErrorCode::DegenerateGenerators, "duplicate generators");
  }
  if (v[2] == 1) {
    throw Error(ErrorCode::DegenerateGenerators, "generator 1 yields the full semigroup");
  }

  Triple t;
  t.n_ = v;
  t.g12_ = gcd(v[0], v[1]);
  t.g13_ = gcd(v[0], v[2]);
  t.g23_ = gcd(v[1], v[2]);
  t.pairwise_coprime_ = t.g12_ == 1 && t.g13_ == 1 && t.g23_ == 1;
  t.minimal_ = !representable_by_pair(v[0], v[1], v[2]) && !representable_by_pair(v[1], v[0], v[2]) &&
               !representable_by_pair(v[2], v[0], v[1]);
  return t;
}

bool member_two_gen(Int m, Int a, Int b) {
  if (a < 2 || b < 2) {
    throw Error(ErrorCode::PreconditionViolated, "member_two_gen expects generators >= 2");
  }
  if (gcd(a, b) != 1) {
    throw Error(ErrorCode::NotCoprime, "generators " + std::to_string(a) + ", " + std::to_string(b));
  }
  if (m < 0) return false;
  // m = x*a + y*b forces x = [m a^-1]_b + t*b; the smallest candidate decides.
  const Int x = mul_mod(m, mod_inverse(a, b), b).value;
  return x * a <= m;
}

bool representable_by_pair(Int m, Int a, Int b) {
  if (a < 1 || b < 1) {
    throw Error(ErrorCode::PreconditionViolated, "generators must be positive");
  }
  if (m < 0) return false;
  if (m == 0) return true;
  const Int g = gcd(a, b);
  if (m % g != 0) return false;
  m /= g;
  a /= g;
  b /= g;
  if (a == 1 || b == 1) return true;
  return member_two_gen(m, a, b);
}

Int oracle_cap() {
  if (const char* env = std::getenv("NSG_ORACLE_CAP")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<Int>(v);
  }
  return kDefaultOracleCap;
}

std::vector<Int> apery_set(std::span<const Int> gens, Int cap) {
  require_gcd_one(gens);
  const Int m = *std::min_element(gens.begin(), gens.end());
  if (m > cap) {
    throw Error(ErrorCode::OracleCapExceeded, "smallest generator " + std::to_string(m) +
                                                  " exceeds the oracle cap " + std::to_string(cap) +
                                                  " (set NSG_ORACLE_CAP to raise it)");
  }
  const auto size = static_cast<std::size_t>(m);
  std::vector<Int> table(size, kUnreached);
  table[0] = 0;

  // Round-robin relaxation: for each generator, walk every residue cycle of
  // step a mod m starting at its current minimum, so one lap settles the cycle.
  for (Int a : gens) {
    if (a == m) continue;
    const Int d = gcd(a, m);
    const Int step = a % m;
    for (Int p = 0; p < d; ++p) {
      Int start = p;
      for (Int q = p; q < m; q += d) {
        if (table[static_cast<std::size_t>(q)] < table[static_cast<std::size_t>(start)]) start = q;
      }
      Int cur = table[static_cast<std::size_t>(start)];
      if (cur == kUnreached) continue;
      Int r = start;
      for (Int i = 1; i < m / d; ++i) {
        cur = checked_add(cur, a);
        r += step;
        if (r >= m) r -= m;
        auto& slot = table[static_cast<std::size_t>(r)];
        cur = std::min(cur, slot);
        slot = cur;
      }
    }
  }

  // Relax until no entry improves.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Int r = 0; r < m; ++r) {
      const Int base = table[static_cast<std::size_t>(r)];
      if (base == kUnreached) continue;
      for (Int a : gens) {
        const Int cand = checked_add(base, a);
        auto& slot = table[static_cast<std::size_t>((r + a) % m)];
        if (cand < slot) {
          slot = cand;
          changed = true;
        }
      }
    }
  }
  return table;
}

Int frobenius_oracle(std::span<const Int> gens, Int cap) {
  const std::vector<Int> table = apery_set(gens, cap);
  const Int m = static_cast<Int>(table.size());
  return *std::max_element(table.begin(), table.end()) - m;
}

std::vector<Int> gaps(std::span<const Int> gens, Int cap) {
  const std::vector<Int> table = apery_set(gens, cap);
  const Int m = static_cast<Int>(table.size());
  const Int frob = *std::max_element(table.begin(), table.end()) - m;
  std::vector<Int> out;
  for (Int x = 1; x <= frob; ++x) {
    if (x < table[static_cast<std::size_t>(x % m)]) out.push_back(x);
  }
  return out;
}

Int min_relation_naive(Int g, Int a, Int b) {
  if (g < 1 || a < 1 || b < 1) {
    throw Error(ErrorCode::PreconditionViolated, "generators must be positive");
  }
  // c = a always works, so the scan is bounded.
  for (Int c = 1; c <= a; ++c) {
    if (representable_by_pair(checked_mul(c, g), a, b)) return c;
  }
  throw Error(ErrorCode::IdentityViolation, "no relation found below " + std::to_string(a));
}

RelationWitness min_relation_oracle(const Triple& t, int i) {
  if (!t.is_pairwise_coprime()) {
    throw Error(ErrorCode::NotPairwiseCoprime, "minimal relations need pairwise coprime generators");
  }
  const int j = i == 1 ? 2 : 1;
  const int k = i == 3 ? 2 : 3;
  const Int ni = t.n(i), nj = t.n(j), nk = t.n(k);

  RelationWitness w;
  w.c = min_relation_naive(ni, nj, nk);
  const Int target = w.c * ni;
  for (Int lk = 0; lk * nk <= target; ++lk) {
    const Int rest = target - lk * nk;
    if (rest % nj == 0) {
      w.lam_j = rest / nj;
      w.lam_k = lk;
      return w;
    }
  }
  throw Error(ErrorCode::IdentityViolation, "witness search failed");
}

}  // namespace nsg
