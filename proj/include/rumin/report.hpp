#pragma once

#include <algorithm>
#include <ctime>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rumin/gauss_rational.hpp"

namespace rumin {

using Json = nlohmann::ordered_json;

inline constexpr const char* kEngineVersion = "1.0.0";

enum class Status { Pass, Fail, SuspectedTypo };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::SuspectedTypo: return "suspected-typo";
  }
  return "?";
}

/// One verified statement. Values are exact strings ("num/den" for rationals).
struct CheckRecord {
  std::string id;
  Json params = Json::object();
  Status status = Status::Pass;
  std::optional<std::string> computed;
  std::optional<std::string> reference;
  std::optional<std::string> witness;

  Json to_json() const {
    Json j;
    j["id"] = id;
    j["params"] = params;
    j["status"] = status_name(status);
    j["computedValue"] = computed ? Json(*computed) : Json(nullptr);
    j["paperValue"] = reference ? Json(*reference) : Json(nullptr);
    j["witness"] = witness ? Json(*witness) : Json(nullptr);
    return j;
  }
};

inline CheckRecord equality_check(std::string id, Json params, const Rational& computed,
                                  const Rational& reference) {
  CheckRecord r{std::move(id), std::move(params), computed == reference ? Status::Pass : Status::Fail,
                to_exact_string(computed), to_exact_string(reference), std::nullopt};
  if (r.status == Status::Fail) r.witness = "computed " + *r.computed + " != " + *r.reference;
  return r;
}

struct Report {
  std::string suite;
  Json params = Json::object();
  std::vector<CheckRecord> checks;
  /// Values computed where no closed form is stated; listed, never counted.
  std::vector<Json> reported;
  /// Free-form remarks about conventions used by a suite.
  std::vector<std::string> notes;
  /// Suite-specific markdown placed after the summary.
  std::string appendix_md;
  bool include_timestamp = true;

  std::size_t count(Status s) const {
    std::size_t k = 0;
    for (const auto& c : checks) k += c.status == s;
    return k;
  }
  bool ok() const { return count(Status::Fail) == 0; }

  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    reported.insert(reported.end(), other.reported.begin(), other.reported.end());
    for (const auto& n : other.notes)
      if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(n);
    appendix_md += other.appendix_md;
  }

  Json to_json() const {
    Json j;
    j["suite"] = suite;
    j["params"] = params;
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back(c.to_json());
    j["checks"] = arr;
    Json suspected = Json::array();
    for (const auto& c : checks)
      if (c.status == Status::SuspectedTypo) suspected.push_back({{"id", c.id}, {"params", c.params}});
    j["suspectedTypos"] = suspected;
    j["reported"] = reported;
    j["notes"] = notes;
    j["summary"] = {{"pass", count(Status::Pass)},
                    {"fail", count(Status::Fail)},
                    {"suspected", count(Status::SuspectedTypo)}};
    j["version"] = kEngineVersion;
    if (include_timestamp) j["timestamp"] = utc_timestamp();
    return j;
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << "id,status,params,computedValue,paperValue,witness\n";
    for (const auto& c : checks)
      os << csv_field(c.id) << ',' << status_name(c.status) << ',' << csv_field(c.params.dump()) << ','
         << csv_field(c.computed.value_or("")) << ',' << csv_field(c.reference.value_or("")) << ','
         << csv_field(c.witness.value_or("")) << '\n';
    return os.str();
  }

  std::string to_markdown() const {
    std::ostringstream os;
    os << "# " << suite << "\n\n";
    os << "pass " << count(Status::Pass) << ", fail " << count(Status::Fail) << ", suspected "
       << count(Status::SuspectedTypo) << "\n\n";
    for (const auto& n : notes) os << "- " << n << "\n";
    if (!notes.empty()) os << "\n";
    os << appendix_md;
    table(os, "Checks", [](const CheckRecord&) { return true; });
    table(os, "Suspected typos", [](const CheckRecord& c) { return c.status == Status::SuspectedTypo; });
    if (!reported.empty()) {
      os << "## Reported values\n\n";
      for (const auto& r : reported) os << "- `" << r.dump() << "`\n";
      os << "\n";
    }
    return os.str();
  }

  static std::string utc_timestamp() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
  }

 private:
  template <class Pred>
  void table(std::ostringstream& os, const char* title, Pred keep) const {
    std::vector<const CheckRecord*> rows;
    for (const auto& c : checks)
      if (keep(c)) rows.push_back(&c);
    if (rows.empty()) return;
    os << "## " << title << "\n\n| id | params | status | computed | reference |\n|---|---|---|---|---|\n";
    for (const auto* c : rows)
      os << "| " << c->id << " | `" << c->params.dump() << "` | " << status_name(c->status) << " | "
         << c->computed.value_or("") << " | " << c->reference.value_or("") << " |\n";
    os << "\n";
  }
  static std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  }
};

}  // namespace rumin
