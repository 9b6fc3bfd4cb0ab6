#include "nsg/frobenius.hpp"

#include <algorithm>
#include <functional>

namespace nsg {

namespace {

void require_formula_input(const Triple& t) {
  if (!t.is_pairwise_coprime()) {
    throw Error(ErrorCode::NotPairwiseCoprime, "formula needs pairwise coprime generators");
  }
  if (!t.is_minimal()) {
    throw Error(ErrorCode::NotMinimal, "formula needs a minimal generating system");
  }
}

std::string join(std::span<const Int> v) {
  std::string s = "<";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ">";
}

void validate_generators(std::span<const Int> gens) {
  if (gens.empty() || gens.size() > 3) {
    throw Error(ErrorCode::InvalidInput, "expected one to three generators");
  }
  Int g = 0;
  for (Int x : gens) {
    if (x < 1) throw Error(ErrorCode::InvalidInput, "generators must be positive");
    if (x > kMaxGenerator) {
      throw Error(ErrorCode::Overflow,
                  std::to_string(x) + " exceeds the admissible bound " + std::to_string(kMaxGenerator));
    }
    g = gcd(g, x);
  }
  if (g != 1) throw Error(ErrorCode::NotCoprimeOverall, "gcd of " + join(gens) + " is " + std::to_string(g));
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (gens[a] == gens[b]) throw Error(ErrorCode::DegenerateGenerators, "duplicate generators");
    }
  }
}

// Formula dispatch below the oracle; the oracle comparison happens at the top.
Int dispatch(std::vector<Int> gens, MethodChoice choice, FrobeniusResult& out) {
  std::sort(gens.begin(), gens.end(), std::greater<>());
  if (std::find(gens.begin(), gens.end(), 1) != gens.end()) {
    out.method = Method::Sylvester;
    out.decisions.push_back(join(gens) + " contains 1: F = -1");
    return -1;
  }
  if (gens.size() == 1) {
    throw Error(ErrorCode::NotCoprimeOverall, "single generator " + join(gens));
  }
  if (gens.size() == 2) {
    out.method = Method::Sylvester;
    const Int f = sylvester(gens[0], gens[1]);
    out.decisions.push_back(join(gens) + ": two generators, F = " + std::to_string(f));
    return f;
  }

  for (std::size_t drop = 0; drop < 3; ++drop) {
    std::vector<Int> rest;
    for (std::size_t a = 0; a < 3; ++a) {
      if (a != drop) rest.push_back(gens[a]);
    }
    if (representable_by_pair(gens[drop], rest[0], rest[1])) {
      out.decisions.push_back(std::to_string(gens[drop]) + " is redundant in " + join(gens));
      return dispatch(rest, choice, out);
    }
  }

  if (auto red = reduce_non_coprime(gens)) {
    const ReductionStep& step = red->step;
    out.decisions.push_back(join(gens) + ": divide " + join(step.divided_pair) + " by " + std::to_string(step.d) +
                            " -> " + join(red->reduced) + (step.reduced_minimal ? "" : " (not minimal)"));
    out.reduction_trace.push_back(step);
    const Int inner = dispatch(red->reduced, choice, out);
    return checked_add(checked_mul(step.d, inner), checked_mul(step.d - 1, step.untouched_gen));
  }

  const Triple t = make_triple(gens[0], gens[1], gens[2]);
  FrobeniusResult leaf;
  switch (choice) {
    case MethodChoice::AltFrob:
      leaf = frobenius_altfrob(t);
      break;
    case MethodChoice::Both: {
      leaf = frobenius_iterfrob(t);
      const FrobeniusResult alt = frobenius_altfrob(t);
      if (alt.value != leaf.value) {
        throw Error(ErrorCode::Mismatch, "closed formula gives " + std::to_string(leaf.value) +
                                             " but relation composition gives " + std::to_string(alt.value) +
                                             " on " + join(gens));
      }
      break;
    }
    default:
      leaf = frobenius_iterfrob(t);
      break;
  }
  out.method = leaf.method;
  if (out.reduction_trace.empty() && out.decisions.empty()) out.relations = leaf.relations;
  out.decisions.push_back(join(gens) + ": pairwise coprime and minimal, F = " + std::to_string(leaf.value));
  return leaf.value;
}

}  // namespace

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Sylvester: return "sylvester";
    case Method::AltFrob: return "altfrob";
    case Method::IterFrob: return "iterfrob";
    case Method::Oracle: return "oracle";
  }
  return "unknown";
}

Int sylvester(Int a, Int b) {
  if (a < 1 || b < 1) throw Error(ErrorCode::InvalidInput, "generators must be positive");
  if (gcd(a, b) != 1) {
    throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") > 1");
  }
  return checked_sub(checked_sub(checked_mul(a, b), a), b);
}

MinimalRelations minimal_relations(const Triple& t) {
  require_formula_input(t);
  MinimalRelations rel;
  rel.c1 = c_min_relation(t, {3, 2, 1}).c;
  rel.c2 = c_min_relation(t, {3, 1, 2}).c;
  rel.c3 = c_min_relation(t, {2, 1, 3}).c;
  return rel;
}

Int frobenius_from_relations(const Triple& t, const MinimalRelations& rel) {
  const Int n1 = t.n1(), n2 = t.n2(), n3 = t.n3();
  const Int via_n3 = checked_mul(mul_mod(checked_mul(rel.c2, n2), mod_inverse(n3, n1), n1).value, n3);
  const Int via_n2 = checked_mul(mul_mod(checked_mul(rel.c3, n3), mod_inverse(n2, n1), n1).value, n2);
  const Int sum = checked_add(checked_mul(rel.c1, n1), std::max(via_n3, via_n2));
  return checked_sub(sum, checked_add(checked_add(n1, n2), n3));
}

FrobeniusResult frobenius_altfrob(const Triple& t) {
  FrobeniusResult r;
  r.relations = minimal_relations(t);
  r.value = frobenius_from_relations(t, *r.relations);
  r.method = Method::AltFrob;
  return r;
}

FrobeniusResult frobenius_iterfrob(const Triple& t) {
  require_formula_input(t);
  const Int n1 = t.n1(), n2 = t.n2(), n3 = t.n3();

  const Int inv_n1_mod_n2 = mod_inverse(n1, n2);
  const Int inv_n2_mod_n1 = mod_inverse(n2, n1);
  const Int inv_n3_mod_n1 = mod_inverse(n3, n1);
  const Int inv_n1_mod_n3 = mod_inverse(n1, n3);

  // c_1: alpha n2 - [-n3 n1^-1]_{n2} floor(alpha n1 / [n3 n2^-1]_{n1})
  const Int lam1 = mul_mod(-n3, inv_n1_mod_n2, n2);
  const Int den1 = mul_mod(n3, inv_n2_mod_n1, n1);
  const Int c1 = min_over_alpha(n2, n1, lam1, den1, ceil_div(checked_mul(lam1, den1), n3)).c;

  // c_2: beta n1 - [-n3 n2^-1]_{n1} floor(beta n2 / [n3 n1^-1]_{n2})
  const Int lam2 = mul_mod(-n3, inv_n2_mod_n1, n1);
  const Int den2 = mul_mod(n3, inv_n1_mod_n2, n2);
  const Int c2 = min_over_alpha(n1, n2, lam2, den2, ceil_div(checked_mul(lam2, den2), n3)).c;

  // c_3: gamma n1 - [-n2 n3^-1]_{n1} floor(gamma n3 / [n2 n1^-1]_{n3})
  const Int lam3 = mul_mod(-n2, inv_n3_mod_n1, n1);
  const Int den3 = mul_mod(n2, inv_n1_mod_n3, n3);
  const Int c3 = min_over_alpha(n1, n3, lam3, den3, ceil_div(checked_mul(lam3, den3), n2)).c;

  const Int via_n3 = checked_mul(mul_mod(checked_mul(c2, n2), inv_n3_mod_n1, n1).value, n3);
  const Int via_n2 = checked_mul(mul_mod(checked_mul(c3, n3), inv_n2_mod_n1, n1).value, n2);

  FrobeniusResult r;
  r.value = checked_sub(checked_add(checked_mul(c1, n1), std::max(via_n3, via_n2)), n1 + n2 + n3);
  r.method = Method::IterFrob;
  r.relations = MinimalRelations{c1, c2, c3, std::nullopt};
  return r;
}

std::optional<Reduction> reduce_non_coprime(std::span<const Int> gens) {
  if (gens.size() != 3) {
    throw Error(ErrorCode::PreconditionViolated, "gcd reduction applies to three generators");
  }
  std::vector<Int> v(gens.begin(), gens.end());
  std::sort(v.begin(), v.end(), std::greater<>());
  if (gcd(gcd(v[0], v[1]), v[2]) != 1) {
    throw Error(ErrorCode::NotCoprimeOverall, "gcd of " + join(v) + " exceeds 1");
  }
  if (v[2] < 2 || v[0] == v[1] || v[1] == v[2] || representable_by_pair(v[0], v[1], v[2]) ||
      representable_by_pair(v[1], v[0], v[2]) || representable_by_pair(v[2], v[0], v[1])) {
    throw Error(ErrorCode::PreconditionViolated, join(v) + " is not a minimal generating system");
  }

  constexpr std::array<std::array<std::size_t, 3>, 3> kPairs{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  for (const auto& [a, b, rest] : kPairs) {
    const Int d = gcd(v[a], v[b]);
    if (d < 2) continue;
    Reduction out;
    out.step.d = d;
    out.step.divided_pair = {v[a], v[b]};
    out.step.untouched_gen = v[rest];
    out.reduced = {v[a] / d, v[b] / d, v[rest]};
    out.step.reduced_gens = out.reduced;
    std::vector<Int> sorted = out.reduced;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    out.step.reduced_minimal = sorted[2] >= 2 && sorted[0] != sorted[1] && sorted[1] != sorted[2] &&
                               !representable_by_pair(sorted[0], sorted[1], sorted[2]) &&
                               !representable_by_pair(sorted[1], sorted[0], sorted[2]) &&
                               !representable_by_pair(sorted[2], sorted[0], sorted[1]);
    return out;
  }
  return std::nullopt;
}

FrobeniusResult frobenius_general(std::span<const Int> gens, MethodChoice choice) {
  validate_generators(gens);
  std::vector<Int> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  const auto oracle_relations = [&](FrobeniusResult& r) {
    if (sorted.size() != 3 || sorted[2] < 2) return;
    const Triple t = make_triple(sorted[0], sorted[1], sorted[2]);
    if (!t.is_pairwise_coprime() || !t.is_minimal()) return;
    std::array<RelationWitness, 3> w{min_relation_oracle(t, 1), min_relation_oracle(t, 2), min_relation_oracle(t, 3)};
    r.relations = MinimalRelations{w[0].c, w[1].c, w[2].c, w};
  };

  if (choice == MethodChoice::Oracle) {
    FrobeniusResult r;
    r.value = frobenius_oracle(sorted);
    r.method = Method::Oracle;
    r.decisions.push_back(join(sorted) + ": Apery-set oracle, F = " + std::to_string(r.value));
    oracle_relations(r);
    return r;
  }

  FrobeniusResult r;
  r.value = dispatch(sorted, choice, r);
  if (choice == MethodChoice::Both) {
    const Int expected = frobenius_oracle(sorted);
    if (expected != r.value) {
      throw Error(ErrorCode::Mismatch, "formula gives " + std::to_string(r.value) + " but the oracle gives " +
                                           std::to_string(expected) + " on " + join(sorted));
    }
    if (r.relations) {
      FrobeniusResult check;
      oracle_relations(check);
      if (check.relations && check.relations->values() != r.relations->values()) {
        throw Error(ErrorCode::Mismatch, "minimal relations disagree with the oracle on " + join(sorted));
      }
      r.relations = check.relations;
    }
    r.decisions.push_back("oracle agrees: F = " + std::to_string(expected));
  }
  return r;
}

}  // namespace nsg
