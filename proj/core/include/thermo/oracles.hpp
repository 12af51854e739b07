#pragma once

#include <cstdint>
#include <vector>

#include "thermo/circle_map.hpp"
#include "thermo/potential.hpp"

// Independent reference computations used by tests and acceptance.  These
// deliberately share no arithmetic with the estimator pipeline they check.
namespace thermo::oracles {

// Full-shift model with one constant weight per branch.
struct SymbolicModel {
    std::vector<double> weights; // w_m = e^{c_m} > 0
};

// Pressure of a locally-constant potential: log sum of weights.
double pressure_locally_constant(const std::vector<double>& weights);

// (1/n) log sum over itinerary-enumerated fixed points of f^n of
// exp(S_n phi), with phi read one-sidedly from the itinerary's branch.
double pressure_periodic_orbits(const CircleMap& map, const Potential& phi, int n,
                                std::uint64_t itinerary_cap = 1u << 21);

struct ConjugateValue {
    double value = 0.0;
    bool finite = true; // false: supremum attained at the t-grid boundary
};

// Discrete convex conjugate sup_t (s t - g(t)) by direct scan.
std::vector<ConjugateValue> conjugate_bruteforce(const std::vector<double>& t,
                                                 const std::vector<double>& g,
                                                 const std::vector<double>& s);

struct MPVerification {
    double a = 0.0, b = 0.0;
    double residual_g0 = 0.0;     // |g(0)|
    double residual_g_half = 0.0; // |g(1/2) - 1|
    double residual_dg0 = 0.0;    // |g'(0) - 1|
    double min_dg = 0.0;          // min of g' over a grid on (0, 1/2]
    bool exact = false;           // exact rational path (alpha in {0, 1})
    bool ok = false;
};

// Residuals of the intermittent-family coefficient identities; exact
// rational arithmetic for alpha in {0, 1}, long-double floats otherwise
// (residual bound 1e-14).
MPVerification verify_mp_coefficients(double alpha, int grid = 10000);

} // namespace thermo::oracles
