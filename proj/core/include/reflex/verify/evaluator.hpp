#ifndef REFLEX_VERIFY_EVALUATOR_HPP
#define REFLEX_VERIFY_EVALUATOR_HPP

#include <cstddef>
#include <functional>
#include <string>

#include "reflex/verify/report.hpp"
#include "reflex/verify/scenario.hpp"

namespace reflex::verify {

/// Evaluates a scenario: definitions in order, then every `require`, then
/// every `assert` (skipped when a requirement did not pass). Checks are
/// independent and run on config.jobs threads; records keep statement order.
/// With field "both" the scenario runs under both fields, records are
/// prefixed with the field name, and a final check compares the two runs.
Report runScenario(const Scenario& scenario, const Config& config);

/// Parses then runs. Parse errors propagate as ParseError.
Report runScenarioText(const std::string& text, const std::string& id, const Config& config);

/// Calls fn(i) for every i < n on up to `jobs` threads.
void parallelFor(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

/// Names of the functions available in scenario expressions.
const std::vector<std::string>& scenarioFunctions();

}  // namespace reflex::verify

#endif  // REFLEX_VERIFY_EVALUATOR_HPP
