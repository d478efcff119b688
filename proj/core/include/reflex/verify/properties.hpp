#ifndef REFLEX_VERIFY_PROPERTIES_HPP
#define REFLEX_VERIFY_PROPERTIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "reflex/invariants.hpp"
#include "reflex/verify/report.hpp"

namespace reflex::verify {

/// depth-formula, obs-2.6, tor-symmetry, ab-four-term, gb-oracle.
const std::vector<std::string>& propertySuiteNames();

/// Runs `trials` seeded trials. Trial i draws its instance from
/// (config.seed, suite, i) alone, so any trial can be re-derived in
/// isolation and results do not depend on config.jobs.
Report runPropertySuite(const std::string& suite, int trials, const Config& config);

/// Largest degreewise |HF Ext^1(Tr N, M) - HF(M (x) N) + HF Hom(N*, M) -
/// HF Ext^2(Tr N, M)| over the checked degree range.
struct FourTermResult {
  long long defect = 0;
  int low = 0;
  int high = 0;
};

template <class K>
FourTermResult fourTermDefect(const FPModule<K>& m, const FPModule<K>& n, int bound,
                              std::optional<int> maxDegree);

}  // namespace reflex::verify

#endif  // REFLEX_VERIFY_PROPERTIES_HPP
