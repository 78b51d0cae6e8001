#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qwmem {

struct VerifyCheck {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    int cases = 0;

    bool passed() const { return max_deviation <= tolerance; }
};

/// Differential suite: recurrence engine vs dense oracle vs closed forms.
///  - constant coins theta in {0, pi/6, pi/4, pi/3}, t = 0 .. 12
///  - `disorder_cases` seeded disorder schedules with t = 1 .. 12
///  - literal collection-operator product vs summation for t <= 6
std::vector<VerifyCheck> run_differential_suite(int disorder_cases = 100);

/// One "[PASS]"/"[FAIL]" line per check. Returns the number of failures.
int print_checks(const std::vector<VerifyCheck>& checks, std::ostream& os);

}  // namespace qwmem
