#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/relations.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

enum class Method { Sylvester, AltFrob, IterFrob, Oracle };

/// What the caller wants computed. Both evaluates the closed formula, the
/// relation-based composition and the oracle, and throws Mismatch on disagreement.
enum class MethodChoice { Formula, AltFrob, Oracle, Both };

std::string_view to_string(Method m) noexcept;

struct MinimalRelations {
  Int c1 = 0;
  Int c2 = 0;
  Int c3 = 0;
  std::optional<std::array<RelationWitness, 3>> witnesses;

  std::array<Int, 3> values() const noexcept { return {c1, c2, c3}; }
};

/// One gcd reduction: F(S) = d F(T) + (d - 1) untouched_gen, where T divides
/// the pair by d.
struct ReductionStep {
  Int d = 0;
  std::array<Int, 2> divided_pair{};  // before division
  std::vector<Int> reduced_gens;      // T, in the order (a/d, b/d, untouched)
  Int untouched_gen = 0;
  bool reduced_minimal = false;       // whether T is still minimally 3-generated
};

struct FrobeniusResult {
  Int value = -1;
  Method method = Method::Sylvester;
  std::optional<MinimalRelations> relations;
  std::vector<ReductionStep> reduction_trace;
  std::vector<std::string> decisions;  // human-readable dispatch log
};

/// a b - a - b for coprime a, b >= 1 (so -1 when either is 1).
Int sylvester(Int a, Int b);

/// c_1, c_2, c_3 by the alpha minimization, with c_1 from (i,j,k) = (3,2,1),
/// c_2 from (3,1,2) and c_3 from (2,1,3).
MinimalRelations minimal_relations(const Triple& t);

/// c_1 n_1 + max([c_2 n_2 n_3^-1]_{n_1} n_3, [c_3 n_3 n_2^-1]_{n_1} n_2) - n_1 - n_2 - n_3.
Int frobenius_from_relations(const Triple& t, const MinimalRelations& rel);

FrobeniusResult frobenius_altfrob(const Triple& t);

/// The same quantity as a single expression over the generators, computing the
/// four modular inverses it needs once up front.
FrobeniusResult frobenius_iterfrob(const Triple& t);

struct Reduction {
  ReductionStep step;
  std::vector<Int> reduced;
};

/// One gcd-reduction step on a minimal triple with gcd 1, trying the pairs
/// (n1,n2), (n1,n3), (n2,n3) of the descending order. Empty when the triple is
/// already pairwise coprime. Throws PreconditionViolated if not minimal.
std::optional<Reduction> reduce_non_coprime(std::span<const Int> gens);

/// Total dispatch over one to three generators with gcd 1.
FrobeniusResult frobenius_general(std::span<const Int> gens, MethodChoice choice = MethodChoice::Formula);

}  // namespace nsg
