#include "cyclo/report.hpp"

namespace cyclo {

CheckResult from_report(const ValidationReport& r) { return {r.check, r.pass, r.witnesses}; }

bool Report::pass() const {
  for (auto& r : results)
    if (!r.pass && !r.extra.value("informational", false)) return false;
  return true;
}

std::string Report::json() const {
  ojson j;
  j["command"] = command;
  j["input"] = input;
  j["options"] = options;
  j["results"] = ojson::array();
  for (auto& r : results) {
    ojson e;
    e["check"] = r.check;
    e["status"] = r.pass ? "PASS" : "FAIL";
    e["residual_witnesses"] = r.witnesses;
    for (auto& [k, v] : r.extra.items()) e[k] = v;
    j["results"].push_back(e);
  }
  return j.dump(2) + "\n";
}

std::string Report::text() const {
  std::string out = command + " " + input + "\n";
  for (auto& [k, v] : options.items()) out += "  " + k + " = " + v.dump() + "\n";
  for (auto& r : results) {
    out += (r.pass ? "PASS " : "FAIL ") + r.check + "\n";
    for (auto& [k, v] : r.extra.items()) out += "    " + k + ": " + v.dump() + "\n";
    for (auto& w : r.witnesses) out += "    witness: " + w + "\n";
  }
  return out;
}

}  // namespace cyclo
