#include "nsg/verify.hpp"

#include <atomic>
#include <cstdio>
#include <random>
#include <sstream>
#include <thread>

#include "nsg/frobenius.hpp"

namespace nsg {

namespace {

std::string triple_name(Int n1, Int n2, Int n3) {
  return "<" + std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(n3) + ">";
}

void note(std::optional<std::string>& failure, const std::string& msg) {
  if (!failure) failure = msg;
}

// Uniform integer in [lo, hi] from raw 64-bit draws, independent of the
// standard library's distribution implementation.
Int draw(std::mt19937_64& rng, Int lo, Int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % span + 1) % span;
  std::uint64_t x = rng();
  while (x > limit) x = rng();
  return lo + static_cast<Int>(x % span);
}

struct Item {
  std::vector<std::array<Int, 3>> triples;
  bool sampled = false;
  VerifyCounts counts;
  std::optional<std::string> failure;
};

std::string percent(Int num, Int den) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", den == 0 ? 0.0 : 100.0 * static_cast<double>(num) / static_cast<double>(den));
  return buf;
}

}  // namespace

VerifyCounts& VerifyCounts::operator+=(const VerifyCounts& o) {
  triples += o.triples;
  coprime_minimal += o.coprime_minimal;
  non_minimal += o.non_minimal;
  non_pairwise_coprime += o.non_pairwise_coprime;
  assignments += o.assignments;
  corollary_applied += o.corollary_applied;
  frobenius_mismatch += o.frobenius_mismatch;
  relation_mismatch += o.relation_mismatch;
  form_mismatch += o.form_mismatch;
  corollary_mismatch += o.corollary_mismatch;
  lambda_violation += o.lambda_violation;
  bound_violation += o.bound_violation;
  errors += o.errors;
  return *this;
}

VerifyCounts verify_triple(Int n1, Int n2, Int n3, std::optional<std::string>& failure) {
  VerifyCounts c;
  c.triples = 1;
  const std::string name = triple_name(n1, n2, n3);
  try {
    const std::array<Int, 3> gens{n1, n2, n3};
    const Int expected = frobenius_oracle(gens);
    const Int got = frobenius_general(gens).value;
    if (got != expected) {
      ++c.frobenius_mismatch;
      note(failure, name + ": F formula " + std::to_string(got) + " != oracle " + std::to_string(expected));
    }

    const Triple t = make_triple(n1, n2, n3);
    if (!t.is_minimal()) {
      ++c.non_minimal;
      return c;
    }
    if (!t.is_pairwise_coprime()) {
      ++c.non_pairwise_coprime;
      return c;
    }
    ++c.coprime_minimal;

    const FrobeniusResult alt = frobenius_altfrob(t);
    const FrobeniusResult iter = frobenius_iterfrob(t);
    if (alt.value != iter.value || alt.relations->values() != iter.relations->values()) {
      ++c.form_mismatch;
      note(failure, name + ": closed formula " + std::to_string(iter.value) + " != composition " +
                        std::to_string(alt.value));
    }

    const std::array<Int, 3> oracle_c{min_relation_oracle(t, 1).c, min_relation_oracle(t, 2).c,
                                      min_relation_oracle(t, 3).c};
    if (alt.relations->values() != oracle_c) {
      ++c.relation_mismatch;
      note(failure, name + ": scheduled relations disagree with the oracle");
    }

    for (const IndexAssignment& idx : kAllAssignments) {
      ++c.assignments;
      const std::string where = name + " (i,j,k)=(" + std::to_string(idx.i) + "," + std::to_string(idx.j) + "," +
                                std::to_string(idx.k) + ")";
      LambdaPair lp;
      try {
        lp = lambda_pair(t, idx);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::IdentityViolation) throw;
        ++c.lambda_violation;
        note(failure, where + ": " + e.what());
        continue;
      }
      const bool ranges = 0 < lp.lambda_ij && lp.lambda_ij < lp.n_k && 0 < lp.lambda_ik && lp.lambda_ik < lp.n_j;
      const bool identity = lp.n_i == lp.n_j * lp.n_k - lp.lambda_ij * lp.n_j - lp.lambda_ik * lp.n_k;
      const bool half = 2 * lp.lambda_ij < lp.n_k || 2 * lp.lambda_ik < lp.n_j;
      if (!ranges || !identity || !half) {
        ++c.lambda_violation;
        note(failure, where + ": lambda invariant broken");
      }

      const MinSearchResult m = c_min_relation(lp);
      const Int want = oracle_c[static_cast<std::size_t>(idx.k - 1)];
      if (m.c != want) {
        ++c.relation_mismatch;
        note(failure, where + ": c_k " + std::to_string(m.c) + " != oracle " + std::to_string(want));
      }
      if (m.argmin_alpha < 1 || m.argmin_alpha > m.bound_I) {
        ++c.bound_violation;
        note(failure, where + ": argmin alpha " + std::to_string(m.argmin_alpha) + " outside 1.." +
                          std::to_string(m.bound_I));
      }
      if (const auto fast = c_fast(lp)) {
        ++c.corollary_applied;
        if (*fast != m.c) {
          ++c.corollary_mismatch;
          note(failure, where + ": closed-form c_k " + std::to_string(*fast) + " != " + std::to_string(m.c));
        }
      }
    }
  } catch (const Error& e) {
    ++c.errors;
    note(failure, name + ": " + e.what());
  }
  return c;
}

std::vector<std::array<Int, 3>> sample_triples(Int count, Int lo, Int hi, std::uint64_t seed) {
  if (lo < 4 || lo > hi) {
    throw Error(ErrorCode::InvalidInput, "sample range must satisfy 4 <= lo <= hi");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::array<Int, 3>> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<Int>(out.size()) < count) {
    const Int n1 = draw(rng, lo, hi);
    const Int n2 = draw(rng, 3, n1 - 1);
    const Int n3 = draw(rng, 2, n2 - 1);
    if (gcd(gcd(n1, n2), n3) == 1) out.push_back({n1, n2, n3});
  }
  return out;
}

VerifySummary run_verify(const VerifyOptions& opts) {
  std::vector<Item> items;
  for (Int n1 = 4; n1 <= opts.max_n1; ++n1) {
    Item item;
    for (Int n2 = n1 - 1; n2 >= 3; --n2) {
      for (Int n3 = n2 - 1; n3 >= 2; --n3) {
        if (gcd(gcd(n1, n2), n3) == 1) item.triples.push_back({n1, n2, n3});
      }
    }
    items.push_back(std::move(item));
  }
  if (opts.sample > 0) {
    const auto drawn = sample_triples(opts.sample, std::max<Int>(opts.max_n1 + 1, 4), opts.sample_max, opts.seed);
    constexpr std::size_t kChunk = 64;
    for (std::size_t at = 0; at < drawn.size(); at += kChunk) {
      Item item;
      item.sampled = true;
      item.triples.assign(drawn.begin() + static_cast<std::ptrdiff_t>(at),
                          drawn.begin() + static_cast<std::ptrdiff_t>(std::min(drawn.size(), at + kChunk)));
      items.push_back(std::move(item));
    }
  }

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      Item& item = items[i];
      for (const auto& [a, b, c] : item.triples) item.counts += verify_triple(a, b, c, item.failure);
    }
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  VerifySummary s;
  for (const Item& item : items) {
    (item.sampled ? s.sampled : s.exhaustive) += item.counts;
    if (!s.counterexample && item.failure) s.counterexample = item.failure;
  }
  return s;
}

std::string summary_text(const VerifyOptions& opts, const VerifySummary& s) {
  std::ostringstream os;
  const auto block = [&os](const std::string& title, const VerifyCounts& c) {
    os << title << '\n';
    os << "  triples                      " << c.triples << '\n';
    os << "    pairwise coprime, minimal  " << c.coprime_minimal << '\n';
    os << "    not minimal                " << c.non_minimal << '\n';
    os << "    minimal, not pw. coprime   " << c.non_pairwise_coprime << '\n';
    os << "  index assignments checked    " << c.assignments << '\n';
    os << "  closed form for c_k applied  " << c.corollary_applied << " (" << percent(c.corollary_applied, c.assignments)
       << ")\n";
    os << "  F mismatches                 " << c.frobenius_mismatch << '\n';
    os << "  c_i mismatches               " << c.relation_mismatch << '\n';
    os << "  formula-form mismatches      " << c.form_mismatch << '\n';
    os << "  closed-form c_k mismatches   " << c.corollary_mismatch << '\n';
    os << "  lambda invariant violations  " << c.lambda_violation << '\n';
    os << "  alpha bound violations       " << c.bound_violation << '\n';
    os << "  unexpected errors            " << c.errors << '\n';
  };
  block("exhaustive n1 <= " + std::to_string(opts.max_n1), s.exhaustive);
  if (opts.sample > 0) {
    block("sampled " + std::to_string(opts.sample) + " triples, n1 <= " + std::to_string(opts.sample_max) +
              ", seed " + std::to_string(opts.seed),
          s.sampled);
  }
  os << "total mismatches: " << s.mismatches() << '\n';
  if (s.counterexample) os << "first counterexample: " << *s.counterexample << '\n';
  return os.str();
}

nlohmann::ordered_json summary_json(const VerifyOptions& opts, const VerifySummary& s) {
  const auto counts = [](const VerifyCounts& c) {
    nlohmann::ordered_json j;
    j["triples"] = c.triples;
    j["coprime_minimal"] = c.coprime_minimal;
    j["non_minimal"] = c.non_minimal;
    j["non_pairwise_coprime"] = c.non_pairwise_coprime;
    j["assignments"] = c.assignments;
    j["corollary_applied"] = c.corollary_applied;
    j["frobenius_mismatch"] = c.frobenius_mismatch;
    j["relation_mismatch"] = c.relation_mismatch;
    j["form_mismatch"] = c.form_mismatch;
    j["corollary_mismatch"] = c.corollary_mismatch;
    j["lambda_violation"] = c.lambda_violation;
    j["bound_violation"] = c.bound_violation;
    j["errors"] = c.errors;
    return j;
  };
  nlohmann::ordered_json j;
  j["max"] = opts.max_n1;
  j["exhaustive"] = counts(s.exhaustive);
  if (opts.sample > 0) {
    j["sample"] = opts.sample;
    j["seed"] = opts.seed;
    j["sample_max"] = opts.sample_max;
    j["sampled"] = counts(s.sampled);
  }
  j["mismatches"] = s.mismatches();
  j["counterexample"] = s.counterexample ? nlohmann::ordered_json(*s.counterexample) : nlohmann::ordered_json();
  return j;
}

}  // namespace nsg
