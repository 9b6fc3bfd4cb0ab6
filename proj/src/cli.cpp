#include "nsg/cli.hpp"

#include <charconv>
#include <chrono>
#include <istream>
#include <numeric>
#include <ostream>

#include "CLI11.hpp"
#include "nsg/frobenius.hpp"
#include "nsg/record.hpp"
#include "nsg/verify.hpp"

namespace nsg {

namespace {

Int parse_generator(const std::string& token) {
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec == std::errc::result_out_of_range) {
    throw Error(ErrorCode::Overflow, "'" + token + "' does not fit in 64 bits");
  }
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::InvalidInput, "not an integer: '" + token + "'");
  }
  if (v < 1) throw Error(ErrorCode::InvalidInput, "generators must be positive, got " + token);
  if (v > kMaxGenerator) {
    throw Error(ErrorCode::Overflow, token + " exceeds the admissible bound " + std::to_string(kMaxGenerator));
  }
  return v;
}

std::vector<Int> parse_generators(const std::vector<std::string>& tokens, std::size_t lo, std::size_t hi) {
  if (tokens.size() < lo || tokens.size() > hi) {
    throw Error(ErrorCode::InvalidInput, "expected " + std::to_string(lo) + " to " + std::to_string(hi) +
                                             " generators, got " + std::to_string(tokens.size()));
  }
  std::vector<Int> gens;
  for (const auto& t : tokens) gens.push_back(parse_generator(t));
  return gens;
}

MethodChoice parse_method(const std::string& s) {
  if (s == "formula") return MethodChoice::Formula;
  if (s == "altfrob") return MethodChoice::AltFrob;
  if (s == "oracle") return MethodChoice::Oracle;
  if (s == "both") return MethodChoice::Both;
  throw Error(ErrorCode::InvalidInput, "unknown method '" + s + "'");
}

int exit_code_for(const Error& e) { return e.code() == ErrorCode::Mismatch ? kExitMismatch : kExitInput; }

struct Timed {
  FrobeniusResult result;
  Int micros = 0;
};

Timed timed_frobenius(const std::vector<Int>& gens, MethodChoice choice, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  Timed t{frobenius_general(gens, choice), 0};
  if (timing) {
    t.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return t;
}

std::string angle(std::span<const Int> v) {
  std::string s = "<";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ">";
}

struct FrobArgs {
  std::vector<std::string> gens;
  std::string method = "formula";
  bool json = false;
  bool relations = false;
  bool trace = false;
  bool no_timing = false;
};

int cmd_frob(const FrobArgs& a, std::ostream& out) {
  const std::vector<Int> gens = parse_generators(a.gens, 2, 3);
  const Timed t = timed_frobenius(gens, parse_method(a.method), !a.no_timing);
  const OutputRecord rec = make_record(gens, t.result, t.micros);
  if (a.json) {
    out << to_json(rec).dump() << '\n';
    return kExitOk;
  }
  out << rec.frobenius << '\n';
  if (a.relations) {
    if (rec.relations) {
      out << "relations " << (*rec.relations)[0] << ' ' << (*rec.relations)[1] << ' ' << (*rec.relations)[2] << '\n';
    } else {
      out << "relations none\n";
    }
  }
  if (a.trace) {
    out << "method " << rec.method << '\n';
    for (const ReductionStep& s : t.result.reduction_trace) {
      out << "step d=" << s.d << " pair=" << s.divided_pair[0] << ',' << s.divided_pair[1] << " n3=" << s.untouched_gen
          << " reduced=" << angle(s.reduced_gens) << (s.reduced_minimal ? "" : " (not minimal)") << '\n';
    }
    for (const std::string& d : t.result.decisions) out << "# " << d << '\n';
  }
  return kExitOk;
}

struct RelationsArgs {
  std::vector<std::string> gens;
  std::string method = "formula";
  bool json = false;
};

int cmd_relations(const RelationsArgs& a, std::ostream& out) {
  const std::vector<Int> gens = parse_generators(a.gens, 3, 3);
  const Triple t = make_triple(gens[0], gens[1], gens[2]);
  if (!t.is_pairwise_coprime()) {
    throw Error(ErrorCode::NotPairwiseCoprime, angle(t.gens()) + " is not pairwise coprime");
  }
  if (!t.is_minimal()) throw Error(ErrorCode::NotMinimal, angle(t.gens()) + " is not minimally generated");

  const MethodChoice choice = parse_method(a.method);
  std::optional<MinimalRelations> formula;
  std::optional<std::array<RelationWitness, 3>> witnesses;
  if (choice != MethodChoice::Oracle) formula = minimal_relations(t);
  if (choice == MethodChoice::Oracle || choice == MethodChoice::Both) {
    witnesses = std::array<RelationWitness, 3>{min_relation_oracle(t, 1), min_relation_oracle(t, 2),
                                               min_relation_oracle(t, 3)};
  }
  std::array<Int, 3> c{};
  if (formula) {
    c = formula->values();
  } else {
    c = {(*witnesses)[0].c, (*witnesses)[1].c, (*witnesses)[2].c};
  }
  if (formula && witnesses) {
    const std::array<Int, 3> oc{(*witnesses)[0].c, (*witnesses)[1].c, (*witnesses)[2].c};
    if (oc != c) throw Error(ErrorCode::Mismatch, "minimal relations disagree with the oracle on " + angle(t.gens()));
  }

  if (a.json) {
    nlohmann::ordered_json j;
    j["gens"] = t.gens();
    j["relations"] = c;
    j["method"] = a.method;
    if (witnesses) {
      j["witnesses"] = nlohmann::ordered_json::array();
      for (const RelationWitness& w : *witnesses) {
        j["witnesses"].push_back({{"c", w.c}, {"lam_j", w.lam_j}, {"lam_k", w.lam_k}});
      }
    }
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
  if (witnesses) {
    for (int i = 1; i <= 3; ++i) {
      const int j = i == 1 ? 2 : 1;
      const int k = i == 3 ? 2 : 3;
      const RelationWitness& w = (*witnesses)[static_cast<std::size_t>(i - 1)];
      out << "c" << i << ": " << w.c << "*" << t.n(i) << " = " << w.lam_j << "*" << t.n(j) << " + " << w.lam_k << "*"
          << t.n(k) << '\n';
    }
  }
  return kExitOk;
}

struct GapsArgs {
  std::vector<std::string> gens;
  bool json = false;
};

int cmd_gaps(const GapsArgs& a, std::ostream& out) {
  const std::vector<Int> gens = parse_generators(a.gens, 1, 3);
  const std::vector<Int> g = gaps(gens);
  if (a.json) {
    out << nlohmann::ordered_json(g).dump() << '\n';
  } else {
    for (Int x : g) out << x << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  Int max = 150;
  Int sample = 0;
  std::uint64_t seed = 0;
  Int sample_max = 1000;
  unsigned threads = 0;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.max < 0 || a.sample < 0) throw Error(ErrorCode::InvalidInput, "--max and --sample must be nonnegative");
  if (a.max > kMaxGenerator) throw Error(ErrorCode::Overflow, "--max exceeds the admissible bound");
  VerifyOptions opts;
  opts.max_n1 = a.max;
  opts.sample = a.sample;
  opts.seed = a.seed;
  opts.sample_max = a.sample_max;
  opts.threads = a.threads;
  const VerifySummary s = run_verify(opts);
  if (a.json) {
    out << summary_json(opts, s).dump() << '\n';
  } else {
    out << summary_text(opts, s);
  }
  if (s.mismatches() > 0) {
    err << "verification failed: " << s.counterexample.value_or("unknown") << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

struct BatchArgs {
  std::string format = "text";
  std::string method = "formula";
  bool no_timing = false;
};

int cmd_batch(const BatchArgs& a, std::istream& in, std::ostream& out) {
  if (a.format != "text" && a.format != "jsonl" && a.format != "csv") {
    throw Error(ErrorCode::InvalidInput, "unknown format '" + a.format + "'");
  }
  const MethodChoice choice = parse_method(a.method);
  bool any_error = false;
  bool any_mismatch = false;
  bool header_done = false;
  std::string line;
  Int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (a.format == "csv" && !header_done) {
      out << kCsvHeader << '\n';
      header_done = true;
    }
    try {
      const std::vector<Int> gens = parse_generator_line(line);
      const Timed t = timed_frobenius(gens, choice, !a.no_timing);
      const OutputRecord rec = make_record(gens, t.result, t.micros);
      if (a.format == "jsonl") {
        out << to_json(rec).dump() << '\n';
      } else if (a.format == "csv") {
        out << to_csv(rec) << '\n';
      } else {
        out << to_text(rec) << '\n';
      }
    } catch (const Error& e) {
      any_error = true;
      any_mismatch = any_mismatch || e.code() == ErrorCode::Mismatch;
      const std::string code(to_string(e.code()));
      if (a.format == "jsonl") {
        nlohmann::ordered_json j;
        j["line"] = line_no;
        j["error"] = code;
        j["message"] = e.what();
        out << j.dump() << '\n';
      } else if (a.format == "csv") {
        out << ",,,,,,,error:" << code << "@line" << line_no << '\n';
      } else {
        out << "line=" << line_no << " error=" << code << '\n';
      }
    }
  }
  if (any_mismatch) return kExitMismatch;
  return any_error ? kExitInput : kExitOk;
}

}  // namespace

std::vector<Int> parse_generator_line(const std::string& line) {
  std::string normalized = line;
  for (char& ch : normalized) {
    if (ch == ',' || ch == '\t' || ch == '\r') ch = ' ';
  }
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < normalized.size()) {
    const std::size_t start = normalized.find_first_not_of(' ', pos);
    if (start == std::string::npos) break;
    const std::size_t end = normalized.find(' ', start);
    tokens.push_back(normalized.substr(start, end == std::string::npos ? std::string::npos : end - start));
    pos = end == std::string::npos ? normalized.size() : end;
  }
  return parse_generators(tokens, 2, 3);
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius numbers and minimal relations of numerical semigroups with up to three generators"};
  app.name("nsg");
  app.require_subcommand(1);

  FrobArgs frob;
  auto* frob_cmd = app.add_subcommand("frob", "Frobenius number of <gens>");
  frob_cmd->add_option("gens", frob.gens, "two or three positive integers")->required();
  frob_cmd->add_option("--method", frob.method, "formula|altfrob|oracle|both");
  frob_cmd->add_flag("--json", frob.json, "emit one JSON record");
  frob_cmd->add_flag("--relations", frob.relations, "print c1 c2 c3");
  frob_cmd->add_flag("--trace", frob.trace, "print gcd reduction steps and dispatch decisions");
  frob_cmd->add_flag("--no-timing", frob.no_timing, "report micros as 0");

  RelationsArgs rel;
  auto* rel_cmd = app.add_subcommand("relations", "minimal relations c1 c2 c3 of a pairwise coprime triple");
  rel_cmd->add_option("gens", rel.gens, "three positive integers")->required();
  rel_cmd->add_option("--method", rel.method, "formula|oracle|both");
  rel_cmd->add_flag("--json", rel.json, "emit JSON");

  GapsArgs gap;
  auto* gaps_cmd = app.add_subcommand("gaps", "list the gaps of <gens>");
  gaps_cmd->add_option("gens", gap.gens, "one to three positive integers")->required();
  gaps_cmd->add_flag("--json", gap.json, "emit a JSON array");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "cross-check every formula path against the oracle");
  verify_cmd->add_option("--max", ver.max, "exhaustive bound on n1");
  verify_cmd->add_option("--sample", ver.sample, "additional random triples above --max");
  verify_cmd->add_option("--seed", ver.seed, "seed for --sample");
  verify_cmd->add_option("--sample-max", ver.sample_max, "largest n1 drawn by --sample");
  verify_cmd->add_option("--threads", ver.threads, "worker threads (0: all cores)");
  verify_cmd->add_flag("--json", ver.json, "emit a JSON summary");

  BatchArgs batch;
  auto* batch_cmd = app.add_subcommand("batch", "one record per input line of 2-3 integers");
  batch_cmd->add_option("--format", batch.format, "text|jsonl|csv");
  batch_cmd->add_option("--method", batch.method, "formula|altfrob|oracle|both");
  batch_cmd->add_flag("--no-timing", batch.no_timing, "report micros as 0");

  std::vector<const char*> argv{"nsg"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*frob_cmd) return cmd_frob(frob, out);
    if (*rel_cmd) return cmd_relations(rel, out);
    if (*gaps_cmd) return cmd_gaps(gap, out);
    if (*verify_cmd) return cmd_verify(ver, out, err);
    if (*batch_cmd) return cmd_batch(batch, in, out);
  } catch (const Error& e) {
    err << "nsg: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitInput;
}

}  // namespace nsg
