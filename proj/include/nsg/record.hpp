#pragma once

// Serialized form of one query result: text line, JSON object and CSV row.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nsg/frobenius.hpp"

namespace nsg {

struct TraceEntry {
  Int d = 0;
  std::array<Int, 2> pair{};
  Int n3 = 0;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct OutputRecord {
  std::vector<Int> gens;  // sorted descending
  Int frobenius = -1;
  std::optional<std::array<Int, 3>> relations;
  std::string method;
  std::vector<TraceEntry> trace;
  Int micros = 0;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_record(std::vector<Int> gens, const FrobeniusResult& result, Int micros);

nlohmann::ordered_json to_json(const OutputRecord& rec);
OutputRecord record_from_json(const nlohmann::ordered_json& j);

/// One line of space-separated key=value fields; record_from_text inverts it.
std::string to_text(const OutputRecord& rec);
OutputRecord record_from_text(const std::string& line);

inline constexpr const char* kCsvHeader = "n1,n2,n3,frobenius,c1,c2,c3,method";
std::string to_csv(const OutputRecord& rec);

}  // namespace nsg
