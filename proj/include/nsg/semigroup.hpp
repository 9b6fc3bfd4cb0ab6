#pragma once

// Generator-triple validation and the brute-force reference implementations
// (membership, Apéry set, Frobenius number, gaps, minimal relations) that every
// closed-form path is checked against.

#include <array>
#include <span>
#include <vector>

#include "nsg/arith.hpp"

namespace nsg {

/// Residue-table entries the oracle will allocate unless NSG_ORACLE_CAP says otherwise.
inline constexpr Int kDefaultOracleCap = 1'000'000;

/// Three generators sorted so that n1 > n2 > n3 >= 2, with gcd(n1, n2, n3) = 1.
class Triple {
 public:
  Int n1() const noexcept { return n_[0]; }
  Int n2() const noexcept { return n_[1]; }
  Int n3() const noexcept { return n_[2]; }

  /// 1-based access, matching the usual n_1, n_2, n_3 labelling.
  Int n(int index) const;

  Int g12() const noexcept { return g12_; }
  Int g13() const noexcept { return g13_; }
  Int g23() const noexcept { return g23_; }

  bool is_pairwise_coprime() const noexcept { return pairwise_coprime_; }
  /// No generator lies in the semigroup generated by the other two.
  bool is_minimal() const noexcept { return minimal_; }

  std::array<Int, 3> gens() const noexcept { return n_; }

  friend bool operator==(const Triple& a, const Triple& b) noexcept { return a.n_ == b.n_; }

 private:
  friend Triple make_triple(Int, Int, Int);
  Triple() = default;

  std::array<Int, 3> n_{};
  Int g12_ = 0, g13_ = 0, g23_ = 0;
  bool pairwise_coprime_ = false;
  bool minimal_ = false;
};

/// Validates and sorts three generators. Throws InvalidInput (non-positive),
/// Overflow (above kMaxGenerator), NotCoprimeOverall or DegenerateGenerators
/// (duplicates, or a generator equal to 1).
Triple make_triple(Int a, Int b, Int c);

/// c * n_i = lam_j * n_j + lam_k * n_k with j < k the two remaining indices.
struct RelationWitness {
  Int c = 0;
  Int lam_j = 0;
  Int lam_k = 0;
};

/// m in <a, b> for coprime a, b >= 2, decided by [m * a^-1]_b * a <= m.
bool member_two_gen(Int m, Int a, Int b);

/// m in <a, b> for arbitrary positive a, b (no coprimality requirement).
bool representable_by_pair(Int m, Int a, Int b);

/// Oracle cap in effect: NSG_ORACLE_CAP when set to a positive integer, else the default.
Int oracle_cap();

/// Apéry set w.r.t. the smallest generator m: entry r is the least element of
/// the semigroup congruent to r mod m.
std::vector<Int> apery_set(std::span<const Int> gens, Int cap = oracle_cap());

/// Largest integer not in <gens>; -1 when the semigroup is all of N.
Int frobenius_oracle(std::span<const Int> gens, Int cap = oracle_cap());

/// All gaps in increasing order.
std::vector<Int> gaps(std::span<const Int> gens, Int cap = oracle_cap());

/// Least c >= 1 with c * g in <a, b>, by incrementing c.
Int min_relation_naive(Int g, Int a, Int b);

/// c_i of a pairwise-coprime triple, by incremental search, plus coefficients.
RelationWitness min_relation_oracle(const Triple& t, int i);

}  // namespace nsg
