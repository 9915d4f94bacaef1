#pragma once

#include <string>
#include <vector>

#include "cyclo/ainf.hpp"
#include "json.hpp"

namespace cyclo {

using ojson = nlohmann::ordered_json;

struct CheckResult {
  std::string check;
  bool pass = true;
  std::vector<std::string> witnesses;
  ojson extra = ojson::object();
};

CheckResult from_report(const ValidationReport& r);

struct Report {
  std::string command;
  std::string input;
  ojson options = ojson::object();
  std::vector<CheckResult> results;

  bool pass() const;
  std::string json() const;
  std::string text() const;
};

}  // namespace cyclo
