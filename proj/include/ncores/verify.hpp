#pragma once

#include <string>
#include <vector>

#include "ncores/counting.hpp"

namespace ncores::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // filled in on failure
};

bool all_passed(const std::vector<CheckResult>& results);

/// The twelve set specs used by the cross-check suites; both recurrence
/// branches (0 in M and 0 outside M) are represented.
const std::vector<std::string>& spec_battery();

/// count_recurrence vs exhaustive abacus counting, per battery spec.
std::vector<CheckResult> oracle_vs_recurrence(int n_max, int work_limit = kDefaultWorkLimit);

/// count_series vs count_recurrence to the given order, per battery spec.
std::vector<CheckResult> gf_vs_recurrence(long long order);

/// The even/odd and single-column/multi-column identities, brute force.
std::vector<CheckResult> oddeven_identities(int n_max, int work_limit = kDefaultWorkLimit);

/// Image-level verification of the insertion bijection on distinct parts and
/// of the two-row insertions, the deletion map, and the bead-flip map.
std::vector<CheckResult> bijections(int n_max, int work_limit = kDefaultWorkLimit);

}  // namespace ncores::verify
