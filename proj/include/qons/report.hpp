#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qons/qcoeff.hpp"

namespace qons {

inline constexpr const char* kEngineVersion = "qonsager 1.0.0";

enum class Status { Pass, Fail, Inconclusive };

std::string_view status_name(Status s);

/// Outcome of a single check.
struct VerificationReport {
  enum class Kind { Identity, Check };

  Kind kind = Kind::Check;
  std::string name;    // identity id or check name
  std::string statement;  // the checked formula, in words
  Json params = Json::array();
  std::string mode = "symbolic";
  Status status = Status::Inconclusive;
  std::optional<Json> witness;
  std::optional<Json> trace;
  std::string detail;

  bool passed() const { return status == Status::Pass; }
};

Json to_json(const VerificationReport& r);

/// A suite run: ordered check records plus config echo.
struct Report {
  std::string suite;
  Json config = Json::object();
  std::vector<VerificationReport> records;

  void add(VerificationReport r) { records.push_back(std::move(r)); }
  void add(const std::vector<VerificationReport>& rs) { records.insert(records.end(), rs.begin(), rs.end()); }
  size_t count(Status s) const;
  /// 1 if any record failed, else 2 if any is inconclusive, else 0.
  int exit_code() const;
  Json to_json() const;
  std::string to_text() const;
};

}  // namespace qons
