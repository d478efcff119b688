#include "reflex/verify/report.hpp"

#include <cctype>
#include <cstdio>

#include "json.hpp"

namespace reflex::verify {

std::string toString(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Advisory: return "advisory";
    case Status::Skipped: return "skipped";
    case Status::Error: return "error";
  }
  return "error";
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (c.status == s) ++n;
  return n;
}

std::string Report::verdict() const {
  if (count(Status::Error)) return "error";
  if (count(Status::Fail)) return "fail";
  return "pass";
}

int Report::exitCode() const {
  if (count(Status::Error)) return 2;
  if (count(Status::Fail)) return 1;
  return 0;
}

std::string toJson(const Report& r, bool timing) {
  nlohmann::ordered_json j;
  j["scenario"] = r.scenario;
  nlohmann::ordered_json cfg;
  cfg["field"] = r.config.field;
  if (r.config.maxDegree) cfg["maxDegree"] = *r.config.maxDegree;
  else cfg["maxDegree"] = nullptr;
  cfg["maxRes"] = r.config.maxRes;
  cfg["seed"] = r.config.seed;
  j["config"] = cfg;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["kind"] = c.kind;
    e["expected"] = c.expected;
    e["computed"] = c.computed;
    e["status"] = toString(c.status);
    e["millis"] = timing ? static_cast<double>(static_cast<long long>(c.millis * 1000)) / 1000 : 0.0;
    j["checks"].push_back(e);
  }
  j["verdict"] = r.verdict();
  return j.dump(2) + "\n";
}

namespace {

std::string line(const CheckRecord& c, bool timing) {
  std::string s = toString(c.status);
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  s.resize(9, ' ');
  s += c.name + "  expected " + c.expected + ", computed " + c.computed + "  [" + c.kind;
  if (timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, ", %.1f ms", c.millis);
    s += buf;
  }
  return s + "]\n";
}

}  // namespace

std::string toText(const Report& r, bool timing) {
  std::string out = "scenario " + r.scenario + "\nfield " + r.config.field + ", max degree " +
                    (r.config.maxDegree ? std::to_string(*r.config.maxDegree) : std::string("auto")) +
                    ", max resolution " + std::to_string(r.config.maxRes) + ", seed " +
                    std::to_string(r.config.seed) + "\n";
  for (const auto& c : r.checks)
    if (c.status != Status::Advisory) out += line(c, timing);
  if (r.count(Status::Advisory)) {
    out += "advisory (bound-limited, not certified):\n";
    for (const auto& c : r.checks)
      if (c.status == Status::Advisory) out += line(c, timing);
  }
  out += "verdict " + r.verdict() + " (" + std::to_string(r.count(Status::Pass)) + " pass, " +
         std::to_string(r.count(Status::Fail)) + " fail, " + std::to_string(r.count(Status::Advisory)) +
         " advisory, " + std::to_string(r.count(Status::Skipped)) + " skipped, " +
         std::to_string(r.count(Status::Error)) + " error)\n";
  return out;
}

}  // namespace reflex::verify
