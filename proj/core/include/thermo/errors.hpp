#pragma once

#include <stdexcept>
#include <string>

namespace thermo {

// Invalid input data: malformed JSON specs, maps outside the admissible
// class, degenerate intervals.  CLI exit code 2.
struct spec_error : std::runtime_error {
    explicit spec_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure: non-convergent root finds, overflow despite
// renormalization.  CLI exit code 3.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Configured resource cap exceeded (itinerary counts and the like).
// CLI exit code 4.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace thermo
