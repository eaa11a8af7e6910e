#pragma once

#include <string>
#include <vector>

namespace decforge {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // summary when passing, first failure otherwise
};

// The golden suite: replays every worked example and randomized property
// battery behind the library, with fixed seeds.  Deterministic; safe to run
// repeatedly.
std::vector<CheckResult> run_verify_suite();

} // namespace decforge
