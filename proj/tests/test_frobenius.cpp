#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "nsg/frobenius.hpp"

using nsg::Int;

namespace {

template <class F>
nsg::ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const nsg::Error& e) {
    return e.code();
  }
  FAIL("expected an nsg::Error");
  return nsg::ErrorCode::InvalidInput;
}

Int general(std::vector<Int> gens, nsg::MethodChoice choice = nsg::MethodChoice::Formula) {
  return nsg::frobenius_general(gens, choice).value;
}

}  // namespace

TEST_CASE("sylvester") {
  CHECK(nsg::sylvester(5, 7) == 23);
  CHECK(nsg::sylvester(2, 3) == 1);
  CHECK(nsg::sylvester(1, 9) == -1);
  CHECK(error_of([] { nsg::sylvester(4, 6); }) == nsg::ErrorCode::NotCoprime);
}

TEST_CASE("altfrob and iterfrob on pinned triples") {
  const nsg::Triple t = nsg::make_triple(12, 11, 7);
  const auto alt = nsg::frobenius_altfrob(t);
  CHECK(alt.value == 27);
  CHECK(alt.method == nsg::Method::AltFrob);
  REQUIRE(alt.relations.has_value());
  CHECK(alt.relations->values() == std::array<Int, 3>{3, 3, 5});
  const auto iter = nsg::frobenius_iterfrob(t);
  CHECK(iter.value == 27);
  CHECK(iter.method == nsg::Method::IterFrob);
  CHECK(iter.relations->values() == std::array<Int, 3>{3, 3, 5});

  const nsg::Triple u = nsg::make_triple(5, 4, 3);
  CHECK(nsg::frobenius_altfrob(u).relations->values() == std::array<Int, 3>{2, 2, 3});
  CHECK(nsg::frobenius_altfrob(u).value == 2);
  CHECK(nsg::frobenius_iterfrob(u).value == 2);

  const nsg::Triple v = nsg::make_triple(7, 5, 3);
  CHECK(nsg::frobenius_altfrob(v).value == 4);
  CHECK(nsg::frobenius_iterfrob(v).value == 4);
}

TEST_CASE("formula paths refuse non-minimal or non-coprime triples") {
  CHECK(error_of([] { nsg::frobenius_iterfrob(nsg::make_triple(5, 3, 2)); }) == nsg::ErrorCode::NotMinimal);
  CHECK(error_of([] { nsg::frobenius_altfrob(nsg::make_triple(6, 5, 4)); }) == nsg::ErrorCode::NotPairwiseCoprime);
}

TEST_CASE("reduce_non_coprime") {
  auto r = nsg::reduce_non_coprime(std::vector<Int>{6, 5, 4});
  REQUIRE(r.has_value());
  CHECK(r->step.d == 2);
  CHECK(r->step.divided_pair == std::array<Int, 2>{6, 4});
  CHECK(r->step.untouched_gen == 5);
  CHECK(r->reduced == std::vector<Int>{3, 2, 5});
  CHECK_FALSE(r->step.reduced_minimal);

  r = nsg::reduce_non_coprime(std::vector<Int>{9, 6, 4});
  REQUIRE(r.has_value());
  CHECK(r->step.d == 3);
  CHECK(r->step.divided_pair == std::array<Int, 2>{9, 6});
  CHECK(r->step.untouched_gen == 4);

  CHECK_FALSE(nsg::reduce_non_coprime(std::vector<Int>{12, 11, 7}).has_value());
  CHECK(error_of([] { nsg::reduce_non_coprime(std::vector<Int>{6, 4, 10}); }) == nsg::ErrorCode::NotCoprimeOverall);
  CHECK(error_of([] { nsg::reduce_non_coprime(std::vector<Int>{10, 6, 4}); }) == nsg::ErrorCode::NotCoprimeOverall);
  CHECK(error_of([] { nsg::reduce_non_coprime(std::vector<Int>{10, 6, 5}); }) == nsg::ErrorCode::PreconditionViolated);
}

TEST_CASE("frobenius_general dispatch") {
  auto r = nsg::frobenius_general(std::vector<Int>{6, 5, 4});
  CHECK(r.value == 7);
  REQUIRE(r.reduction_trace.size() == 1);
  CHECK(r.reduction_trace[0].d == 2);
  CHECK_FALSE(r.relations.has_value());
  CHECK(r.method == nsg::Method::Sylvester);

  r = nsg::frobenius_general(std::vector<Int>{4, 6, 9});
  CHECK(r.value == 11);
  REQUIRE(r.reduction_trace.size() == 1);
  CHECK(r.reduction_trace[0].d == 3);

  r = nsg::frobenius_general(std::vector<Int>{20, 14, 9});
  CHECK(r.value == 53);
  REQUIRE(r.reduction_trace.size() == 1);
  CHECK(r.reduction_trace[0].d == 2);
  CHECK(r.reduction_trace[0].reduced_minimal);
  CHECK(r.method == nsg::Method::IterFrob);
  CHECK(r.value == 2 * nsg::frobenius_oracle(std::vector<Int>{10, 9, 7}) + 9);

  r = nsg::frobenius_general(std::vector<Int>{2, 3, 5});
  CHECK(r.value == 1);
  CHECK(r.reduction_trace.empty());
  CHECK(r.method == nsg::Method::Sylvester);

  CHECK(general({1, 7, 11}) == -1);
  CHECK(general({1}) == -1);
  CHECK(general({7, 5}) == 23);

  r = nsg::frobenius_general(std::vector<Int>{7, 11, 12});
  CHECK(r.value == 27);
  REQUIRE(r.relations.has_value());
  CHECK(r.relations->values() == std::array<Int, 3>{3, 3, 5});
}

TEST_CASE("frobenius_general errors") {
  CHECK(error_of([] { general({2, 4, 6}); }) == nsg::ErrorCode::NotCoprimeOverall);
  CHECK(error_of([] { general({4}); }) == nsg::ErrorCode::NotCoprimeOverall);
  CHECK(error_of([] { general({}); }) == nsg::ErrorCode::InvalidInput);
  CHECK(error_of([] { general({3, 5, 7, 11}); }) == nsg::ErrorCode::InvalidInput);
  CHECK(error_of([] { general({5, 5, 7}); }) == nsg::ErrorCode::DegenerateGenerators);
  CHECK(error_of([] { general({nsg::kMaxGenerator + 1, 3}); }) == nsg::ErrorCode::Overflow);
}

TEST_CASE("method choices agree") {
  for (const std::vector<Int>& gens : std::vector<std::vector<Int>>{{12, 11, 7}, {20, 14, 9}, {6, 5, 4}, {5, 7}}) {
    const Int f = general(gens);
    CHECK(general(gens, nsg::MethodChoice::AltFrob) == f);
    CHECK(general(gens, nsg::MethodChoice::Oracle) == f);
    CHECK(general(gens, nsg::MethodChoice::Both) == f);
  }
  const auto oracle = nsg::frobenius_general(std::vector<Int>{12, 11, 7}, nsg::MethodChoice::Oracle);
  CHECK(oracle.method == nsg::Method::Oracle);
  REQUIRE(oracle.relations.has_value());
  REQUIRE(oracle.relations->witnesses.has_value());
  CHECK(oracle.relations->values() == std::array<Int, 3>{3, 3, 5});
}

TEST_CASE("dispatch equals the oracle for every generator set up to 60") {
  for (Int a = 2; a <= 60; ++a) {
    for (Int b = 1; b < a; ++b) {
      if (nsg::gcd(a, b) == 1) REQUIRE(general({a, b}) == nsg::frobenius_oracle(std::vector<Int>{a, b}));
      for (Int c = 1; c < b; ++c) {
        if (nsg::gcd(nsg::gcd(a, b), c) != 1) continue;
        const std::vector<Int> gens{a, b, c};
        const auto r = nsg::frobenius_general(gens);
        const Int f = nsg::frobenius_oracle(gens);
        REQUIRE(r.value == f);
        if (f < 0) continue;
        // F is a gap and everything above it is representable.
        const auto table = nsg::apery_set(gens);
        const Int m = static_cast<Int>(table.size());
        REQUIRE(f < table[static_cast<std::size_t>(f % m)]);
        for (Int x = f + 1; x <= f + m; ++x) REQUIRE(x >= table[static_cast<std::size_t>(x % m)]);
        // Relations reassemble into F.
        if (r.relations) REQUIRE(nsg::frobenius_from_relations(nsg::make_triple(a, b, c), *r.relations) == f);
      }
    }
  }
}

TEST_CASE("gcd reduction unwinds level by level against the oracle") {
  for (Int a = 4; a <= 80; ++a) {
    for (Int b = 3; b < a; ++b) {
      for (Int c = 2; c < b; ++c) {
        if (nsg::gcd(nsg::gcd(a, b), c) != 1) continue;
        const nsg::Triple t = nsg::make_triple(a, b, c);
        if (!t.is_minimal() || t.is_pairwise_coprime()) continue;
        std::vector<Int> gens{a, b, c};
        while (auto red = nsg::reduce_non_coprime(gens)) {
          const Int outer = nsg::frobenius_oracle(gens);
          const Int inner = nsg::frobenius_oracle(red->reduced);
          REQUIRE(outer == red->step.d * inner + (red->step.d - 1) * red->step.untouched_gen);
          if (!red->step.reduced_minimal) break;
          gens = red->reduced;
        }
      }
    }
  }
}

TEST_CASE("iterfrob equals altfrob on coprime minimal triples up to 120") {
  for (Int a = 4; a <= 120; ++a) {
    for (Int b = 3; b < a; ++b) {
      if (nsg::gcd(a, b) != 1) continue;
      for (Int c = 2; c < b; ++c) {
        if (nsg::gcd(a, c) != 1 || nsg::gcd(b, c) != 1) continue;
        const nsg::Triple t = nsg::make_triple(a, b, c);
        if (!t.is_minimal()) continue;
        const auto alt = nsg::frobenius_altfrob(t);
        const auto iter = nsg::frobenius_iterfrob(t);
        REQUIRE(alt.value == iter.value);
        REQUIRE(alt.relations->values() == iter.relations->values());
      }
    }
  }
}

TEST_CASE("large admissible inputs stay exact") {
  // 2000000 = 2^7 5^6, 1999999 = 17 * 71 * 1657, 999983 prime.
  const std::vector<Int> gens{2'000'000, 1'999'999, 999'983};
  const auto r = nsg::frobenius_general(gens, nsg::MethodChoice::Both);
  // Frozen from an independent Dijkstra over residues mod 999983.
  CHECK(r.value == Int{58'884'999'993});
  const nsg::Triple t = nsg::make_triple(2'000'000, 1'999'999, 999'983);
  CHECK(nsg::frobenius_altfrob(t).value == r.value);
}
