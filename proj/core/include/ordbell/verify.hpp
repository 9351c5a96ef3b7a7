#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ordbell {

// Outcome of a single cross-check. `name` is "<suite>/<check>"; `detail`
// tallies the comparisons made on success and carries the first
// counterexample on failure.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

enum class Suite {
    oracle,       // closed forms vs exhaustive enumeration
    matrix,       // Stirling matrix identities and transforms
    periodicity,  // residue engine vs exact values, period bounds
    lemma,        // block-counting recurrence on enumerated orderings
    all,
};

std::string suite_name(Suite suite);

// Parses the CLI spelling of a suite name. Throws std::domain_error on
// anything unrecognized.
Suite parse_suite(const std::string& name);

// Runs every check in the suite and reports each one, sorted by name.
// `limit` tightens the default input ceilings (it never raises them);
// Suite::all fans the four concrete suites out across threads.
std::vector<CheckResult> run_suite(Suite suite,
                                   std::optional<std::size_t> limit = std::nullopt);

}  // namespace ordbell
