#ifndef REFLEX_VERIFY_REPORT_HPP
#define REFLEX_VERIFY_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace reflex::verify {

enum class Status { Pass, Fail, Advisory, Skipped, Error };

std::string toString(Status s);

/// Engine configuration shared by scenarios and property suites.
struct Config {
  /// "gf32003", "qq" or "both". Empty defers to the scenario's own field
  /// statement, then to gf32003.
  std::string field;
  /// Degree bound for Hilbert-function checks; per-module default when unset.
  std::optional<int> maxDegree;
  int maxRes = 8;
  std::uint64_t seed = 0;
  /// Worker threads for independent checks. Does not affect results.
  int jobs = 1;
};

struct CheckRecord {
  std::string name;
  /// Provenance tag (paper, trivial, derived, none) or the suite name.
  std::string kind;
  std::string expected;
  std::string computed;
  Status status = Status::Pass;
  double millis = 0;
};

struct Report {
  std::string scenario;
  Config config;
  std::vector<CheckRecord> checks;

  /// "error" if any check errored, else "fail" if any check failed, else "pass".
  /// Advisory and skipped checks never decide the verdict.
  std::string verdict() const;
  /// 0 pass, 1 fail, 2 error.
  int exitCode() const;
  std::size_t count(Status s) const;
};

/// JSON with keys scenario, config{field,maxDegree,maxRes,seed},
/// checks[{name,kind,expected,computed,status,millis}], verdict. With
/// `timing` false every millis field is written as 0.
std::string toJson(const Report& r, bool timing = true);

/// Human-readable listing; advisory checks are grouped after the others.
std::string toText(const Report& r, bool timing = true);

}  // namespace reflex::verify

#endif  // REFLEX_VERIFY_REPORT_HPP
