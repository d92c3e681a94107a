#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "pg/scanner.hpp"

namespace pg {

using ojson = nlohmann::ordered_json;

namespace {

ojson witness_list(const std::vector<std::pair<std::string, std::string>>& w) {
  ojson out = ojson::array();
  for (const auto& [a, b] : w) out.push_back({a, b});
  return out;
}

}  // namespace

std::string report_json(const OrderReport& r) {
  ojson j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "order_report";
  j["order"] = r.order;
  j["groups"] = r.ids;
  j["corpus_complete"] = r.corpus_complete;
  j["in_S"] = r.in_S;
  j["in_Sbar"] = r.in_Sbar;
  j["S_witnesses"] = witness_list(r.S_witnesses);
  j["Sbar_witnesses"] = witness_list(r.Sbar_witnesses);
  j["predicted_not_in_Sbar"] = r.predicted_not_in_Sbar;
  j["prediction_reason"] = r.prediction_reason;
  ojson pairs = ojson::array();
  for (const auto& p : r.pairs) {
    ojson q;
    q["a"] = p.a;
    q["b"] = p.b;
    q["conformal"] = p.conformal;
    q["pg_isomorphic"] = p.pg_tested ? ojson(p.pg_isomorphic) : ojson(nullptr);
    q["group_isomorphic"] = p.group_tested ? ojson(p.group_isomorphic) : ojson(nullptr);
    pairs.push_back(std::move(q));
  }
  j["pairs"] = std::move(pairs);
  j["defects"] = r.defects;
  return j.dump(2) + "\n";
}

std::string report_text(const OrderReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream out;
  out << "order " << r.order << ": " << r.ids.size() << " groups, corpus-complete: " << yn(r.corpus_complete) << "\n";
  for (const auto& p : r.pairs) {
    out << "  " << p.a << " / " << p.b << ": conformal=" << yn(p.conformal)
        << " pg-iso=" << (p.pg_tested ? yn(p.pg_isomorphic) : "-")
        << " iso=" << (p.group_tested ? yn(p.group_isomorphic) : "-") << "\n";
  }
  const char* scope = r.corpus_complete ? "" : " (over this corpus only)";
  out << "in S: " << yn(r.in_S) << scope << "\n";
  for (const auto& [a, b] : r.S_witnesses) out << "  witness " << a << " / " << b << "\n";
  out << "in S-bar: " << yn(r.in_Sbar) << scope << "\n";
  for (const auto& [a, b] : r.Sbar_witnesses) out << "  witness " << a << " / " << b << "\n";
  if (r.predicted_not_in_Sbar) out << "predicted not in S-bar: " << r.prediction_reason << "\n";
  for (const auto& d : r.defects) out << "DEFECT: " << d << "\n";
  return out.str();
}

std::string checks_json(const std::vector<CheckResult>& checks) {
  ojson j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "verification";
  bool all = true;
  ojson list = ojson::array();
  for (const auto& c : checks) {
    all = all && c.pass;
    ojson q;
    q["id"] = c.id;
    q["name"] = c.name;
    q["status"] = c.pass ? "PASS" : "FAIL";
    q["detail"] = c.detail;
    q["seconds"] = std::round(c.seconds * 1000) / 1000;
    list.push_back(std::move(q));
  }
  j["all_pass"] = all;
  j["checks"] = std::move(list);
  return j.dump(2) + "\n";
}

std::string checks_text(const std::vector<CheckResult>& checks) {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << c.id << "] " << c.name << " (" << std::fixed
        << std::setprecision(2) << c.seconds << " s): " << c.detail << "\n";
  }
  return out.str();
}

}  // namespace pg
