#ifndef LOSC_REPORT_HPP
#define LOSC_REPORT_HPP

#include <cmath>
#include <string>
#include <vector>

namespace losc {

/// One verified identity: what was computed, what was expected, how far apart.
struct CheckResult {
    std::string name;
    double computed = 0.0;
    double expected = 0.0;
    double rel_err = 0.0;
    bool passed = false;
    std::string note;  // diagnostic or erratum commentary
};

inline double relative_error(double computed, double expected) {
    const double scale = std::abs(expected) > 1.0 ? std::abs(expected) : 1.0;
    return std::abs(computed - expected) / scale;
}

}  // namespace losc

#endif  // LOSC_REPORT_HPP
