#pragma once

// Minimal relations of a pairwise-coprime minimal triple.
//
// For a permutation (i, j, k) of {1, 2, 3} the generator n_i decomposes as
//   n_i = n_j n_k - lambda_ij n_j - lambda_ik n_k,
// with lambda_ij = [-n_i n_j^-1]_{n_k} and lambda_ik = [-n_i n_k^-1]_{n_j}.
// The minimal relation c_k is then the minimum of
//   alpha n_j - lambda_ik floor(alpha n_k / (n_k - lambda_ij)),  alpha = 1..I_k,
// where I_k = ceil(lambda_ik (n_k - lambda_ij) / n_i).

#include <array>
#include <optional>

#include "nsg/semigroup.hpp"

namespace nsg {

/// A permutation (i, j, k) of {1, 2, 3}; the roles are not interchangeable.
struct IndexAssignment {
  int i = 1;
  int j = 2;
  int k = 3;

  /// Throws PreconditionViolated unless {i, j, k} = {1, 2, 3}.
  void validate() const;
  friend constexpr bool operator==(const IndexAssignment&, const IndexAssignment&) = default;
};

inline constexpr std::array<IndexAssignment, 6> kAllAssignments{{
    {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1},
}};

struct LambdaPair {
  IndexAssignment idx;
  Int n_i = 0;
  Int n_j = 0;
  Int n_k = 0;
  Int lambda_ij = 0;  // in (0, n_k)
  Int lambda_ik = 0;  // in (0, n_j)

  /// n_k - lambda_ij, which equals [n_i n_j^-1]_{n_k}.
  Int denom() const noexcept { return n_k - lambda_ij; }
};

struct MinSearchResult {
  Int c = 0;
  Int argmin_alpha = 0;  // smallest alpha attaining c
  Int bound_I = 0;
  bool via_corollary = false;
  Int alphas_scanned = 0;
};

/// Computes the decomposition and checks the identity and range invariants.
/// Throws NotPairwiseCoprime, NotMinimal or IdentityViolation.
LambdaPair lambda_pair(const Triple& t, IndexAssignment idx);

/// One term of the minimized sequence.
Int relation_term(Int alpha, Int n_j, Int n_k, Int lambda_ik, Int denom);

/// Minimum of relation_term over alpha = 1..bound. Terms are bounded below by
/// alpha n_i / denom, so the scan stops once that bound reaches the running
/// minimum; the result is the same as a full scan.
MinSearchResult min_over_alpha(Int n_j, Int n_k, Int lambda_ik, Int denom, Int bound);

/// The bound I_k for a decomposition.
Int alpha_bound(const LambdaPair& lp);

/// c_k (the minimal relation of the generator at index k).
MinSearchResult c_min_relation(const Triple& t, IndexAssignment idx);
MinSearchResult c_min_relation(const LambdaPair& lp);

/// Closed-form c_k when n_j >= lambda_ik (floor(n_k / denom) + 1); absent otherwise.
std::optional<Int> c_fast(const Triple& t, IndexAssignment idx);
std::optional<Int> c_fast(const LambdaPair& lp);

/// c_fast when it applies, otherwise the full minimization.
MinSearchResult c_relation(const LambdaPair& lp);

/// x in S_i, i.e. x n_i in <n_j, n_k>, via [x n_i n_k^-1]_{n_j} n_k <= x n_i.
bool s_i_member(Int x, const Triple& t, IndexAssignment idx);

/// Intermediate triple <n_j, n_k, N_i> with N_i = n_j n_k - lambda_ij n_j - n_k.
struct TState {
  Int N_i = 0;
  Int c_j = 0;  // n_k - lambda_ij
  Int c_k = 0;  // n_j - floor(n_k / (n_k - lambda_ij))
  Int n_j = 0;
  Int n_k = 0;
  Int lambda_ij = 0;

  /// alpha n_j + beta (alpha >= 0, 0 < beta <= n_j) lies in T_k, decided by
  /// (n_k - lambda_ij) beta >= N_i - alpha n_k.
  bool t_k_member(Int alpha, Int beta) const;
  /// Same predicate for a positive integer x, split as alpha n_j + beta.
  bool contains(Int x) const;
};

TState t_state(const LambdaPair& lp);

/// x - (lambda_ik - 1) [-x]_{n_j}; maps T_k onto S_k.
Int pass_map(Int x, const LambdaPair& lp);

}  // namespace nsg
