#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace goedel {

enum class Status { Pass, Fail, Skipped, OracleIncomplete };
std::string_view status_name(Status s);

struct CheckRecord {
  std::string id;
  Status status = Status::Pass;
  nlohmann::json details = nlohmann::json::object();
};

struct Summary {
  std::size_t pass = 0, fail = 0, skipped = 0, oracle_incomplete = 0;
};

struct Report {
  std::string suite;
  std::optional<std::string> timestamp;
  std::vector<CheckRecord> checks;

  void add(std::string id, Status s, nlohmann::json details = nlohmann::json::object());
  void merge(const Report& other);
  Summary summary() const;
  bool ok() const { return summary().fail == 0; }
};

// {suite, timestamp?, checks: [{id, status, details}] sorted by id,
//  summary: {pass, fail, skipped, oracle_incomplete}}; keys sorted.
nlohmann::json to_json(const Report& r);
std::string render(const Report& r);
// Throws IoError.
void emit_report(const Report& r, const std::string& path);
std::string utc_timestamp();

}  // namespace goedel
