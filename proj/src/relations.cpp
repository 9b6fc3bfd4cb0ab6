#include "nsg/relations.hpp"

#include <string>

namespace nsg {

namespace {

void require_formula_input(const Triple& t) {
  if (!t.is_pairwise_coprime()) {
    throw Error(ErrorCode::NotPairwiseCoprime, "formula paths need pairwise coprime generators");
  }
  if (!t.is_minimal()) {
    throw Error(ErrorCode::NotMinimal, "formula paths need a minimal generating system");
  }
}

std::string describe(const LambdaPair& lp) {
  return "n_i=" + std::to_string(lp.n_i) + " n_j=" + std::to_string(lp.n_j) + " n_k=" + std::to_string(lp.n_k) +
         " lambda_ij=" + std::to_string(lp.lambda_ij) + " lambda_ik=" + std::to_string(lp.lambda_ik);
}

}  // namespace

void IndexAssignment::validate() const {
  const bool in_range = i >= 1 && i <= 3 && j >= 1 && j <= 3 && k >= 1 && k <= 3;
  if (!in_range || i == j || j == k || i == k) {
    throw Error(ErrorCode::PreconditionViolated, "index assignment must be a permutation of 1, 2, 3");
  }
}

LambdaPair lambda_pair(const Triple& t, IndexAssignment idx) {
  idx.validate();
  require_formula_input(t);
  LambdaPair lp;
  lp.idx = idx;
  lp.n_i = t.n(idx.i);
  lp.n_j = t.n(idx.j);
  lp.n_k = t.n(idx.k);
  lp.lambda_ij = mul_mod(-lp.n_i, mod_inverse(lp.n_j, lp.n_k), lp.n_k).value;
  lp.lambda_ik = mul_mod(-lp.n_i, mod_inverse(lp.n_k, lp.n_j), lp.n_j).value;

  if (lp.lambda_ij <= 0 || lp.lambda_ij >= lp.n_k || lp.lambda_ik <= 0 || lp.lambda_ik >= lp.n_j) {
    throw Error(ErrorCode::IdentityViolation, "lambda out of range: " + describe(lp));
  }
  const Int rebuilt = checked_sub(checked_sub(checked_mul(lp.n_j, lp.n_k), checked_mul(lp.lambda_ij, lp.n_j)),
                                  checked_mul(lp.lambda_ik, lp.n_k));
  if (rebuilt != lp.n_i) {
    throw Error(ErrorCode::IdentityViolation, "n_i != n_j n_k - lambda_ij n_j - lambda_ik n_k: " + describe(lp));
  }
  // Positivity of n_i forces one of the two coefficients below half its modulus.
  if (!(2 * lp.lambda_ij < lp.n_k || 2 * lp.lambda_ik < lp.n_j)) {
    throw Error(ErrorCode::IdentityViolation, "both lambdas at least half their modulus: " + describe(lp));
  }
  return lp;
}

Int relation_term(Int alpha, Int n_j, Int n_k, Int lambda_ik, Int denom) {
  return checked_sub(checked_mul(alpha, n_j), checked_mul(lambda_ik, checked_mul(alpha, n_k) / denom));
}

MinSearchResult min_over_alpha(Int n_j, Int n_k, Int lambda_ik, Int denom, Int bound) {
  if (bound < 1 || denom < 1) {
    throw Error(ErrorCode::PreconditionViolated, "alpha bound and denominator must be positive");
  }
  const Int n_i = checked_sub(checked_mul(n_j, denom), checked_mul(lambda_ik, n_k));
  MinSearchResult r;
  r.bound_I = bound;
  r.c = relation_term(1, n_j, n_k, lambda_ik, denom);
  r.argmin_alpha = 1;
  r.alphas_scanned = 1;
  for (Int alpha = 2; alpha <= bound; ++alpha) {
    // Every later term is >= alpha n_i / denom >= r.c.
    if (n_i > 0 && checked_mul(alpha, n_i) >= checked_mul(r.c, denom)) break;
    const Int term = relation_term(alpha, n_j, n_k, lambda_ik, denom);
    ++r.alphas_scanned;
    if (term < r.c) {
      r.c = term;
      r.argmin_alpha = alpha;
    }
  }
  return r;
}

Int alpha_bound(const LambdaPair& lp) {
  return ceil_div(checked_mul(lp.lambda_ik, lp.denom()), lp.n_i);
}

MinSearchResult c_min_relation(const LambdaPair& lp) {
  return min_over_alpha(lp.n_j, lp.n_k, lp.lambda_ik, lp.denom(), alpha_bound(lp));
}

MinSearchResult c_min_relation(const Triple& t, IndexAssignment idx) {
  return c_min_relation(lambda_pair(t, idx));
}

std::optional<Int> c_fast(const LambdaPair& lp) {
  const Int q = lp.n_k / lp.denom();
  if (lp.n_j >= checked_mul(lp.lambda_ik, q + 1)) {
    return lp.n_j - lp.lambda_ik * q;
  }
  return std::nullopt;
}

std::optional<Int> c_fast(const Triple& t, IndexAssignment idx) {
  return c_fast(lambda_pair(t, idx));
}

MinSearchResult c_relation(const LambdaPair& lp) {
  if (const auto fast = c_fast(lp)) {
    MinSearchResult r;
    r.c = *fast;
    r.argmin_alpha = 1;
    r.bound_I = alpha_bound(lp);
    r.via_corollary = true;
    r.alphas_scanned = 1;
    return r;
  }
  return c_min_relation(lp);
}

bool s_i_member(Int x, const Triple& t, IndexAssignment idx) {
  idx.validate();
  if (!t.is_pairwise_coprime()) {
    throw Error(ErrorCode::NotPairwiseCoprime, "membership test needs pairwise coprime generators");
  }
  if (x < 0) return false;
  const Int ni = t.n(idx.i), nj = t.n(idx.j), nk = t.n(idx.k);
  const Int xni = checked_mul(x, ni);
  const Int coeff = mul_mod(xni, mod_inverse(nk, nj), nj).value;
  return checked_mul(coeff, nk) <= xni;
}

bool TState::t_k_member(Int alpha, Int beta) const {
  if (alpha < 0 || beta < 1 || beta > n_j) {
    throw Error(ErrorCode::PreconditionViolated, "expected alpha >= 0 and 0 < beta <= n_j");
  }
  return checked_mul(n_k - lambda_ij, beta) >= checked_sub(N_i, checked_mul(alpha, n_k));
}

bool TState::contains(Int x) const {
  if (x < 1) return x == 0;
  const Int alpha = (x - 1) / n_j;
  return t_k_member(alpha, x - alpha * n_j);
}

TState t_state(const LambdaPair& lp) {
  TState s;
  s.n_j = lp.n_j;
  s.n_k = lp.n_k;
  s.lambda_ij = lp.lambda_ij;
  s.N_i = checked_sub(checked_sub(checked_mul(lp.n_j, lp.n_k), checked_mul(lp.lambda_ij, lp.n_j)), lp.n_k);
  s.c_j = lp.n_k - lp.lambda_ij;
  s.c_k = lp.n_j - lp.n_k / lp.denom();
  return s;
}

Int pass_map(Int x, const LambdaPair& lp) {
  const Int neg = mod_reduce(-x, lp.n_j).value;
  return checked_sub(x, checked_mul(lp.lambda_ik - 1, neg));
}

}  // namespace nsg
