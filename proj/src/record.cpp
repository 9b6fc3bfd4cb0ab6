#include "nsg/record.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace nsg {

namespace {

std::string join_ints(const Int* first, const Int* last, char sep) {
  std::string s;
  for (const Int* p = first; p != last; ++p) {
    if (p != first) s += sep;
    s += std::to_string(*p);
  }
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

Int parse_int(const std::string& s) {
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::InvalidInput, "not an integer: '" + s + "'");
  }
  return v;
}

}  // namespace

OutputRecord make_record(std::vector<Int> gens, const FrobeniusResult& result, Int micros) {
  std::sort(gens.begin(), gens.end(), std::greater<>());
  OutputRecord rec;
  rec.gens = std::move(gens);
  rec.frobenius = result.value;
  if (result.relations) rec.relations = result.relations->values();
  rec.method = std::string(to_string(result.method));
  for (const ReductionStep& s : result.reduction_trace) {
    rec.trace.push_back({s.d, s.divided_pair, s.untouched_gen});
  }
  rec.micros = micros;
  return rec;
}

nlohmann::ordered_json to_json(const OutputRecord& rec) {
  nlohmann::ordered_json j;
  j["gens"] = rec.gens;
  j["frobenius"] = rec.frobenius;
  if (rec.relations) {
    j["relations"] = *rec.relations;
  } else {
    j["relations"] = nullptr;
  }
  j["method"] = rec.method;
  j["trace"] = nlohmann::ordered_json::array();
  for (const TraceEntry& t : rec.trace) {
    nlohmann::ordered_json step;
    step["d"] = t.d;
    step["pair"] = t.pair;
    step["n3"] = t.n3;
    j["trace"].push_back(std::move(step));
  }
  j["micros"] = rec.micros;
  return j;
}

OutputRecord record_from_json(const nlohmann::ordered_json& j) {
  try {
    OutputRecord rec;
    rec.gens = j.at("gens").get<std::vector<Int>>();
    rec.frobenius = j.at("frobenius").get<Int>();
    if (!j.at("relations").is_null()) rec.relations = j.at("relations").get<std::array<Int, 3>>();
    rec.method = j.at("method").get<std::string>();
    for (const auto& step : j.at("trace")) {
      rec.trace.push_back({step.at("d").get<Int>(), step.at("pair").get<std::array<Int, 2>>(),
                           step.at("n3").get<Int>()});
    }
    rec.micros = j.at("micros").get<Int>();
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed record: ") + e.what());
  }
}

std::string to_text(const OutputRecord& rec) {
  std::ostringstream os;
  os << "gens=" << join_ints(rec.gens.data(), rec.gens.data() + rec.gens.size(), ',');
  os << " frobenius=" << rec.frobenius;
  os << " relations=";
  if (rec.relations) {
    os << join_ints(rec.relations->data(), rec.relations->data() + 3, ',');
  } else {
    os << '-';
  }
  os << " method=" << rec.method;
  os << " trace=";
  if (rec.trace.empty()) os << '-';
  for (std::size_t i = 0; i < rec.trace.size(); ++i) {
    const TraceEntry& t = rec.trace[i];
    if (i) os << ';';
    os << t.d << ':' << t.pair[0] << ',' << t.pair[1] << ':' << t.n3;
  }
  os << " micros=" << rec.micros;
  return os.str();
}

OutputRecord record_from_text(const std::string& line) {
  OutputRecord rec;
  std::istringstream is(line);
  std::string field;
  int seen = 0;
  while (is >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidInput, "expected key=value, got '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "gens") {
      for (const auto& part : split(value, ',')) rec.gens.push_back(parse_int(part));
    } else if (key == "frobenius") {
      rec.frobenius = parse_int(value);
    } else if (key == "relations") {
      if (value != "-") {
        const auto parts = split(value, ',');
        if (parts.size() != 3) throw Error(ErrorCode::InvalidInput, "relations need three values");
        rec.relations = std::array<Int, 3>{parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2])};
      }
    } else if (key == "method") {
      rec.method = value;
    } else if (key == "trace") {
      if (value != "-") {
        for (const auto& step : split(value, ';')) {
          const auto parts = split(step, ':');
          const auto pair = parts.size() == 3 ? split(parts[1], ',') : std::vector<std::string>{};
          if (pair.size() != 2) throw Error(ErrorCode::InvalidInput, "bad trace step '" + step + "'");
          rec.trace.push_back({parse_int(parts[0]), {parse_int(pair[0]), parse_int(pair[1])}, parse_int(parts[2])});
        }
      }
    } else if (key == "micros") {
      rec.micros = parse_int(value);
    } else {
      throw Error(ErrorCode::InvalidInput, "unknown field '" + key + "'");
    }
    ++seen;
  }
  if (seen != 6) throw Error(ErrorCode::InvalidInput, "expected six fields");
  return rec;
}

std::string to_csv(const OutputRecord& rec) {
  std::ostringstream os;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i < rec.gens.size()) os << rec.gens[i];
    os << ',';
  }
  os << rec.frobenius << ',';
  for (std::size_t i = 0; i < 3; ++i) {
    if (rec.relations) os << (*rec.relations)[i];
    os << ',';
  }
  os << rec.method;
  return os.str();
}

}  // namespace nsg
