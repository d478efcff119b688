#ifndef REFLEX_VERIFY_PAPER_HPP
#define REFLEX_VERIFY_PAPER_HPP

#include <optional>
#include <string>
#include <vector>

#include "reflex/verify/report.hpp"

namespace reflex::verify {

/// Built-in example ids: 2.4, 2.5, vasconcelos, thm-2.3-generic, cor-2.8.
const std::vector<std::string>& paperExampleIds();

/// Scenario text of a built-in example. For thm-2.3-generic this is the
/// default data (Example 2.4) followed by the generic hypothesis/conclusion
/// template. Throws InvalidArgument for an unknown id.
std::string paperScenarioText(const std::string& id);

/// The generic Theorem 2.3 template. It expects the data to define a ring R,
/// an ideal p, modules X and M, and an integer n.
std::string theorem23Template();

/// Runs a built-in example. For thm-2.3-generic, `data` replaces the default
/// Example 2.4 data.
Report runPaperExample(const std::string& id, const Config& config,
                       const std::optional<std::string>& data = std::nullopt);

}  // namespace reflex::verify

#endif  // REFLEX_VERIFY_PAPER_HPP
