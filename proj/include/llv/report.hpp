#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace llv {

enum class Verdict { pass, fail, skip };

const char* to_string(Verdict v);

/// One check: what was tested, the statement it tests, the outcome and witness data.
struct CheckRecord {
  std::string name;
  std::string anchor;
  Verdict verdict = Verdict::skip;
  std::string reason;  // required for fail and skip
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
};

/// Ordered list of check records. Rendering depends only on the records, so equal runs
/// give byte-identical output.
struct Report {
  std::string command;
  std::string subject;
  std::vector<CheckRecord> checks;

  CheckRecord& add(std::string name, std::string anchor, Verdict v, std::string reason = {},
                   nlohmann::ordered_json data = nlohmann::ordered_json::object());
  int count(Verdict v) const;
  bool any_fail() const { return count(Verdict::fail) > 0; }
  /// 0 when nothing failed, 1 otherwise.
  int exit_code() const { return any_fail() ? 1 : 0; }

  std::string to_text() const;
  std::string to_json() const;
  static Report from_json(const std::string& text);
};

}  // namespace llv
