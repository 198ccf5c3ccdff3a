#include "llv/report.hpp"

#include <cctype>
#include <sstream>

#include "llv/errors.hpp"

namespace llv {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skip:
      return "skip";
  }
  return "skip";
}

namespace {

Verdict verdict_from(const std::string& s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "skip") return Verdict::skip;
  throw ParseError("verdict", 0, "unknown verdict '" + s + "'");
}

}  // namespace

CheckRecord& Report::add(std::string name, std::string anchor, Verdict v, std::string reason,
                         nlohmann::ordered_json data) {
  if (v != Verdict::pass && reason.empty()) throw ValidationError("check '" + name + "' has no reason");
  checks.push_back({std::move(name), std::move(anchor), v, std::move(reason), std::move(data)});
  return checks.back();
}

int Report::count(Verdict v) const {
  int n = 0;
  for (const auto& c : checks) n += c.verdict == v;
  return n;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command << ": " << subject << "\n";
  for (const auto& c : checks) {
    std::string tag = to_string(c.verdict);
    for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << "[" << tag << "] " << c.name << " (" << c.anchor << ")\n";
    if (!c.reason.empty()) os << "       reason: " << c.reason << "\n";
    for (const auto& [k, v] : c.data.items()) os << "       " << k << ": " << v.dump() << "\n";
  }
  os << "summary: " << count(Verdict::pass) << " pass, " << count(Verdict::fail) << " fail, "
     << count(Verdict::skip) << " skip\n";
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["subject"] = subject;
  auto& list = doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json r;
    r["name"] = c.name;
    r["anchor"] = c.anchor;
    r["verdict"] = to_string(c.verdict);
    r["reason"] = c.reason;
    r["data"] = c.data;
    list.push_back(std::move(r));
  }
  doc["summary"] = {{"pass", count(Verdict::pass)}, {"fail", count(Verdict::fail)}, {"skip", count(Verdict::skip)}};
  return doc.dump(2) + "\n";
}

Report Report::from_json(const std::string& text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
    Report r;
    r.command = doc.at("command").get<std::string>();
    r.subject = doc.at("subject").get<std::string>();
    for (const auto& c : doc.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), c.at("anchor").get<std::string>(),
                          verdict_from(c.at("verdict").get<std::string>()), c.at("reason").get<std::string>(),
                          c.at("data")});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("", 0, std::string("malformed report: ") + e.what());
  }
}

}  // namespace llv
