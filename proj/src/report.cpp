#include "qons/report.hpp"

#include <sstream>

namespace qons {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

Json to_json(const VerificationReport& r) {
  Json j;
  j[r.kind == VerificationReport::Kind::Identity ? "identity" : "name"] = r.name;
  if (!r.statement.empty()) j["statement"] = r.statement;
  j["params"] = r.params;
  j["mode"] = r.mode;
  j["status"] = status_name(r.status);
  if (r.witness) j["witness"] = *r.witness;
  if (r.trace) j["trace"] = *r.trace;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

size_t Report::count(Status s) const {
  size_t n = 0;
  for (const auto& r : records) n += r.status == s ? 1 : 0;
  return n;
}

int Report::exit_code() const {
  if (count(Status::Fail) > 0) return 1;
  if (count(Status::Inconclusive) > 0) return 2;
  return 0;
}

Json Report::to_json() const {
  Json recs = Json::array();
  for (const auto& r : records) recs.push_back(qons::to_json(r));
  return Json{{"suite", suite},
              {"engine", kEngineVersion},
              {"config", config},
              {"records", recs},
              {"summary",
               {{"pass", count(Status::Pass)},
                {"fail", count(Status::Fail)},
                {"inconclusive", count(Status::Inconclusive)},
                {"total", records.size()}}}};
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << suite << " (" << kEngineVersion << ")\n";
  for (const auto& r : records) {
    os << "  [" << status_name(r.status) << "] " << r.name;
    if (!r.params.empty()) os << " " << r.params.dump();
    if (!r.detail.empty()) os << "  " << r.detail;
    os << "\n";
  }
  os << "summary: " << count(Status::Pass) << " pass, " << count(Status::Fail) << " fail, "
     << count(Status::Inconclusive) << " inconclusive\n";
  return os.str();
}

}  // namespace qons
