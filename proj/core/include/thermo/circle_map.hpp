#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "thermo/circle.hpp"

namespace thermo {

class Potential;

// Coefficients of the intermittent family: g(y) = y + a*y^(3+alpha) + b*y^(4+alpha)
// on [0, 1/2], normalized so that g(0) = 0, g'(0) = 1 and g(1/2) = 1.
struct MPParams {
    double alpha = 0.0;
    double a = 0.0;
    double b = 0.0;

    static MPParams for_alpha(double alpha);

    double g(double y) const;
    double dg(double y) const;
    // Monotone bisection of g on [0, 1/2]; target in [0, 1], tolerance 1e-14.
    double g_inverse(double x) const;
};

// Branch forward maps, evaluated as monotone lifts F on the branch domain
// [lo, hi] with F(lo) in [0, 1) and |F(hi) - F(lo)| = 1.
struct LinearForm {
    double intercept = 0.0; // F(y) = intercept + slope * y
    double slope = 1.0;
};
struct PolyForm {
    std::vector<double> coeffs; // F(y) = sum_i coeffs[i] * y^i
};
struct MPForm {
    MPParams params;
    bool upper = false; // lower: F(y) = g(y); upper: F(y) = 1 - g(1 - y)
};

struct Branch {
    int index = 1; // 1-based
    double lo = 0.0;
    double hi = 1.0;
    bool increasing = true;
    std::variant<LinearForm, PolyForm, MPForm> form;

    double lift(double y) const;
    double deriv(double y) const; // signed dF/dy
    double lift_lo() const { return lift(lo); }
    double lift_hi() const { return lift(hi); }
    // Unique y in [lo, hi] with lift(y) = target; target must lie in the
    // lift's range.  Closed form for linear branches, bisection otherwise.
    double invert_lift(double target) const;
};

struct PeriodicPoint {
    double point = 0.0;
    std::vector<int> itinerary; // 1-based branch symbols, length = period
};

// Transitive full-branch circle map with break points.  Immutable after
// construction; all operations are pure.
class CircleMap {
public:
    // Piecewise-linear full-branch map, branch m of slope slopes[m] on an
    // arc of width 1/slopes[m].  Requires every slope >= 1 and widths
    // summing to 1 within 1e-12.
    static CircleMap linear_full_branch(const std::vector<double>& slopes);

    // Two-branch intermittent map f(y) = g(y) on [0,1/2], 1 - g(1-y) on
    // (1/2,1], with a neutral fixed point at 0.  alpha in [0,1].
    static CircleMap manneville_pomeau(double alpha);

    struct PolyBranchSpec {
        double lo = 0.0;
        double hi = 1.0;
        std::vector<double> coeffs;
    };
    // Custom map from explicit polynomial branches.  Domains must tile
    // [0,1] in order; each branch must be monotone with image of length 1
    // and the branches must glue to a continuous circle map.
    static CircleMap piecewise_poly(const std::vector<PolyBranchSpec>& specs);

    int degree() const { return static_cast<int>(branches_.size()); }
    double h_top() const; // log(degree), via conjugacy to the degree map
    const std::vector<double>& break_points() const { return breaks_; }
    const std::vector<Branch>& branches() const { return branches_; }
    const std::vector<double>& neutral_fixed_points() const { return neutral_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    double eval(double x) const;
    // One-sided derivative of the branch containing x on that side.
    double deriv(double x, Side side) const;
    double deriv(double x) const { return deriv(x, Side::Right); }
    // Index (1-based) of the branch whose half-open arc [x_m, x_{m+1})
    // contains x.
    int branch_index_at(double x) const;
    // Unique y in J_m with f(y) = x.  x in [0,1]; x = 1 selects the top
    // end of the branch's lift (so for a branch starting at image 0 the
    // result is the branch's upper preimage, not the lower one).
    double inverse_branch(int m, double x) const;

    double lyapunov_avg(double x, int n) const;

    // One period-n point per itinerary in {1..k}^n: contraction iteration
    // of the composed inverse branches with bisection fallback on
    // f^n(x) - x inside the cylinder.  Throws resource_error when k^n
    // exceeds the cap.
    std::vector<PeriodicPoint> periodic_points(int n, std::uint64_t itinerary_cap = 1u << 21) const;

private:
    CircleMap() = default;
    void finalize(); // derive breaks metadata, neutral points, warnings

    std::vector<double> breaks_;
    std::vector<Branch> branches_;
    std::vector<double> neutral_;
    std::vector<std::string> warnings_;
};

// Sum of phi along the forward orbit, sum_{i=0}^{n-1} phi(f^i x).
double birkhoff_sum(const CircleMap& map, const Potential& phi, double x, int n);

// Distinct circle points from per-itinerary periodic entries, identifying
// points closer than tol (break-point identifications).
std::vector<double> unique_periodic_points(const std::vector<PeriodicPoint>& pts,
                                           double tol = 1e-9);

} // namespace thermo
