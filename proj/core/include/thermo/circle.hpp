#pragma once

#include <cmath>

namespace thermo {

// Circle coordinates live in [0,1) with length-1 normalization; every
// reduction routes through here so there is a single canonical
// representative (1 == 0).
inline double mod1(double x) {
    double r = x - std::floor(x);
    return (r >= 1.0) ? r - 1.0 : r;
}

// Distance on the circle of circumference 1.
inline double circle_dist(double a, double b) {
    double d = std::fabs(mod1(a) - mod1(b));
    return d <= 0.5 ? d : 1.0 - d;
}

// Side selector for one-sided derivatives and one-sided limits of BV
// observables.
enum class Side { Left, Right };

} // namespace thermo
