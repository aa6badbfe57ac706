#pragma once

// Built-in acceptance suite: ten numbered regression criteria exercising the
// whole pipeline against the built-in example surface's closed forms, with
// tolerances pinned in code. Shared by the `verify` CLI subcommand and the
// standalone acceptance test binary.

#include <iosfwd>
#include <string>
#include <vector>

namespace lcf {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail; // measured extrema and the pinned tolerances
};

std::vector<CriterionResult> run_acceptance_suite();

// One line per criterion: "[PASS] 1/10 name -- detail". Returns true when
// every criterion passed.
bool print_acceptance(std::ostream& os);

} // namespace lcf
