#pragma once

#include <ostream>
#include <string>
#include <vector>

// The acceptance gate: every quantitative claim the project certifies,
// run end to end with pinned tolerances, one pass/fail line each.

namespace hypinvol::acceptance {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    // True when a clause of the criterion contradicts its own defining
    // expressions and was adjudicated against the expression; the
    // adjudication appears in the notes.
    bool adjudicated;
    double seconds;
    std::string notes;
};

std::vector<CriterionResult> run_all(std::ostream& log);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace hypinvol::acceptance
