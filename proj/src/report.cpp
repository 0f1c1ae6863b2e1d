#include "goedel/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>

#include "goedel/errors.hpp"

namespace goedel {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::OracleIncomplete: return "oracle-incomplete";
  }
  return "?";
}

void Report::add(std::string id, Status s, nlohmann::json details) {
  checks.push_back({std::move(id), s, std::move(details)});
}

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

Summary Report::summary() const {
  Summary s;
  for (const auto& c : checks) switch (c.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail: ++s.fail; break;
      case Status::Skipped: ++s.skipped; break;
      case Status::OracleIncomplete: ++s.oracle_incomplete; break;
    }
  return s;
}

nlohmann::json to_json(const Report& r) {
  auto checks = r.checks;
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  nlohmann::json j;
  j["suite"] = r.suite;
  if (r.timestamp) j["timestamp"] = *r.timestamp;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"id", c.id}, {"status", status_name(c.status)}, {"details", c.details}});
  Summary s = r.summary();
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped},
                  {"oracle_incomplete", s.oracle_incomplete}};
  return j;
}

std::string render(const Report& r) { return to_json(r).dump(2) + "\n"; }

void emit_report(const Report& r, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << render(r);
  if (!f) throw IoError("write failed for " + path);
}

std::string utc_timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace goedel
