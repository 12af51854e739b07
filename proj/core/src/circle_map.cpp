#include "thermo/circle_map.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "thermo/errors.hpp"
#include "thermo/potential.hpp"

namespace thermo {

namespace {

constexpr double kBisectTol = 1e-14;
constexpr double kFixedPointTol = 1e-9;
constexpr double kNeutralTol = 1e-9;

double poly_eval(const std::vector<double>& c, double y) {
    double r = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * y + c[i];
    return r;
}

double poly_deriv_eval(const std::vector<double>& c, double y) {
    double r = 0.0;
    for (std::size_t i = c.size(); i-- > 1;) r = r * y + c[i] * static_cast<double>(i);
    return r;
}

} // namespace

MPParams MPParams::for_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw spec_error("manneville_pomeau: alpha must lie in [0,1]");
    MPParams p;
    p.alpha = alpha;
    const double half = 0.5;
    const double ratio = (4.0 + alpha) / (4.0 + 2.0 * alpha);
    p.b = 1.0 / (std::pow(half, 3.0 + alpha) - ratio * std::pow(half, 2.0 + alpha));
    p.a = -p.b * ratio;
    return p;
}

double MPParams::g(double y) const {
    return y + a * std::pow(y, 3.0 + alpha) + b * std::pow(y, 4.0 + alpha);
}

double MPParams::dg(double y) const {
    if (y == 0.0) return 1.0; // pow(0, 2+alpha) with alpha > 0 is fine, keep exact
    return 1.0 + a * (3.0 + alpha) * std::pow(y, 2.0 + alpha) +
           b * (4.0 + alpha) * std::pow(y, 3.0 + alpha);
}

double MPParams::g_inverse(double x) const {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 0.5;
    double lo = 0.0, hi = 0.5;
    for (int it = 0; it < 200 && hi - lo > kBisectTol; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < x ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double Branch::lift(double y) const {
    if (const auto* lin = std::get_if<LinearForm>(&form))
        return lin->intercept + lin->slope * y;
    if (const auto* poly = std::get_if<PolyForm>(&form))
        return poly_eval(poly->coeffs, y);
    const auto& mp = std::get<MPForm>(form);
    return mp.upper ? 1.0 - mp.params.g(1.0 - y) : mp.params.g(y);
}

double Branch::deriv(double y) const {
    if (const auto* lin = std::get_if<LinearForm>(&form)) return lin->slope;
    if (const auto* poly = std::get_if<PolyForm>(&form))
        return poly_deriv_eval(poly->coeffs, y);
    const auto& mp = std::get<MPForm>(form);
    return mp.upper ? mp.params.dg(1.0 - y) : mp.params.dg(y);
}

double Branch::invert_lift(double target) const {
    if (const auto* lin = std::get_if<LinearForm>(&form))
        return (target - lin->intercept) / lin->slope;
    if (const auto* mp = std::get_if<MPForm>(&form)) {
        return mp->upper ? 1.0 - mp->params.g_inverse(1.0 - target)
                         : mp->params.g_inverse(target);
    }
    // monotone bisection on [lo, hi]
    double a = lo, b = hi;
    double fa = lift(a) - target;
    if (!increasing) std::swap(a, b), fa = lift(a) - target;
    if (fa > 0.0) return a; // target at or below range edge
    for (int it = 0; it < 200 && std::fabs(b - a) > kBisectTol; ++it) {
        const double mid = 0.5 * (a + b);
        (lift(mid) < target ? a : b) = mid;
    }
    return 0.5 * (a + b);
}

// --- construction -----------------------------------------------------------

void CircleMap::finalize() {
    breaks_.clear();
    for (const Branch& b : branches_) breaks_.push_back(b.lo);

    // Image seams: every branch image must start at the first break point
    // (cylinders are then genuine intervals).  Built-ins satisfy this by
    // construction; custom maps were validated before entering here.
    for (const Branch& b : branches_) {
        const double seam = mod1(b.increasing ? b.lift_lo() : b.lift_hi());
        if (circle_dist(seam, 0.0) > 1e-9) {
            std::ostringstream os;
            os << "branch " << b.index << " image seam at " << seam
               << " (expected the break point 0)";
            throw spec_error(os.str());
        }
    }

    // |Df| >= 1 at break points is required of the built-in families; for
    // custom maps a violation is only a warning.
    for (const double x : breaks_) {
        const double dr = std::fabs(deriv(x, Side::Right));
        const double dl = std::fabs(deriv(x, Side::Left));
        if (std::min(dl, dr) < 1.0 - 1e-12) {
            std::ostringstream os;
            os << "|Df| < 1 at break point " << x;
            warnings_.push_back(os.str());
        }
    }

    // Fixed points: derivative well-definedness and neutral detection.
    neutral_.clear();
    const auto fixed = periodic_points(1);
    std::vector<double> seen;
    for (const PeriodicPoint& ppt : fixed) {
        const double p = ppt.point;
        bool dup = false;
        for (double q : seen) dup = dup || circle_dist(p, q) < kFixedPointTol;
        if (dup) continue;
        seen.push_back(p);

        const double dl = deriv(p, Side::Left);
        const double dr = deriv(p, Side::Right);
        bool at_break = false;
        for (double x : breaks_) at_break = at_break || circle_dist(p, x) < kFixedPointTol;
        if (at_break && std::fabs(dl - dr) > kNeutralTol) {
            std::ostringstream os;
            os << "fixed point " << p << " at a break point has one-sided derivatives "
               << dl << " / " << dr;
            warnings_.push_back(os.str());
        }
        if (std::fabs(std::fabs(dl) - 1.0) < kNeutralTol &&
            std::fabs(std::fabs(dr) - 1.0) < kNeutralTol) {
            neutral_.push_back(p);
        } else if (std::fabs(std::fabs(dl) - 1.0) < kNeutralTol ||
                   std::fabs(std::fabs(dr) - 1.0) < kNeutralTol) {
            std::ostringstream os;
            os << "fixed point " << p << " is neutral on one side only";
            warnings_.push_back(os.str());
        }
    }
    std::sort(neutral_.begin(), neutral_.end());
}

CircleMap CircleMap::linear_full_branch(const std::vector<double>& slopes) {
    const int k = static_cast<int>(slopes.size());
    if (k < 2) throw spec_error("linear_full_branch: need at least 2 branches");
    double width_sum = 0.0;
    for (double s : slopes) {
        if (!(s >= 1.0))
            throw spec_error("linear_full_branch: every slope must be >= 1");
        width_sum += 1.0 / s;
    }
    if (std::fabs(width_sum - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "linear_full_branch: branch widths 1/slope sum to " << width_sum
           << ", expected 1";
        throw spec_error(os.str());
    }

    CircleMap map;
    double lo = 0.0;
    for (int m = 0; m < k; ++m) {
        Branch b;
        b.index = m + 1;
        b.lo = lo;
        b.hi = (m + 1 == k) ? 1.0 : lo + 1.0 / slopes[m];
        b.increasing = true;
        // F(y) = slope*(y - lo): every branch image starts at 0
        b.form = LinearForm{-slopes[m] * lo, slopes[m]};
        map.branches_.push_back(b);
        lo = b.hi;
    }
    map.finalize();
    return map;
}

CircleMap CircleMap::manneville_pomeau(double alpha) {
    const MPParams params = MPParams::for_alpha(alpha);
    CircleMap map;
    Branch lower;
    lower.index = 1;
    lower.lo = 0.0;
    lower.hi = 0.5;
    lower.increasing = true;
    lower.form = MPForm{params, false};
    Branch upper;
    upper.index = 2;
    upper.lo = 0.5;
    upper.hi = 1.0;
    upper.increasing = true;
    upper.form = MPForm{params, true};
    map.branches_ = {lower, upper};
    map.finalize();
    return map;
}

CircleMap CircleMap::piecewise_poly(const std::vector<PolyBranchSpec>& specs) {
    const int k = static_cast<int>(specs.size());
    if (k < 2) throw spec_error("piecewise_poly: need at least 2 branches");

    CircleMap map;
    double expect_lo = 0.0;
    for (int m = 0; m < k; ++m) {
        const auto& s = specs[m];
        if (std::fabs(s.lo - expect_lo) > 1e-12)
            throw spec_error("piecewise_poly: branch domains must tile [0,1] in order, starting at 0");
        if (!(s.hi > s.lo))
            throw spec_error("piecewise_poly: empty branch domain");
        if (s.coeffs.empty())
            throw spec_error("piecewise_poly: branch needs coefficients");
        Branch b;
        b.index = m + 1;
        b.lo = s.lo;
        b.hi = s.hi;
        b.form = PolyForm{s.coeffs};

        const double flo = b.lift(b.lo), fhi = b.lift(b.hi);
        b.increasing = fhi > flo;
        if (std::fabs(std::fabs(fhi - flo) - 1.0) > 1e-9)
            throw spec_error("piecewise_poly: branch image must cover the circle exactly once");
        // monotone, no critical points
        const int probes = 512;
        for (int i = 0; i <= probes; ++i) {
            const double y = b.lo + (b.hi - b.lo) * i / probes;
            const double d = b.deriv(y);
            if (d == 0.0 || (d > 0.0) != b.increasing)
                throw spec_error("piecewise_poly: branch must be strictly monotone (no critical points)");
        }
        map.branches_.push_back(b);
        expect_lo = s.hi;
    }
    if (std::fabs(expect_lo - 1.0) > 1e-12)
        throw spec_error("piecewise_poly: branch domains must end at 1");

    // continuity across break points, as a circle map
    for (int m = 0; m < k; ++m) {
        const Branch& cur = map.branches_[m];
        const Branch& nxt = map.branches_[(m + 1) % k];
        const double a = mod1(cur.lift(cur.hi));
        const double b2 = mod1(nxt.lift(nxt.lo));
        if (circle_dist(a, b2) > 1e-9)
            throw spec_error("piecewise_poly: branches do not glue to a continuous circle map");
    }
    map.finalize();
    return map;
}

// --- evaluation --------------------------------------------------------------

double CircleMap::h_top() const { return std::log(static_cast<double>(degree())); }

int CircleMap::branch_index_at(double x) const {
    x = mod1(x);
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    return static_cast<int>(it - breaks_.begin()); // 1-based
}

double CircleMap::eval(double x) const {
    x = mod1(x);
    const Branch& b = branches_[branch_index_at(x) - 1];
    return mod1(b.lift(x));
}

double CircleMap::deriv(double x, Side side) const {
    x = mod1(x);
    const int m = branch_index_at(x); // 1-based, half-open arcs
    if (side == Side::Right) return branches_[m - 1].deriv(x);
    // Left limit: at a break point this is the previous branch at its top end.
    const Branch& b = branches_[m - 1];
    if (x == b.lo) {
        const Branch& prev = branches_[(m - 2 + degree()) % degree()];
        return prev.deriv(prev.hi);
    }
    return b.deriv(x);
}

double CircleMap::inverse_branch(int m, double x) const {
    if (m < 1 || m > degree()) throw spec_error("inverse_branch: branch index out of range");
    const Branch& b = branches_[m - 1];
    const double flo = b.increasing ? b.lift_lo() : b.lift_hi();
    // lift the target into [flo, flo+1]; x == 1 requests the top end
    double target = x + std::ceil(flo - x);
    if (target < flo) target += 1.0;
    if (target > flo + 1.0) target -= 1.0;
    if (x == 1.0 && target == flo) target += 1.0;
    const double y = b.invert_lift(target);
    return std::min(std::max(y, b.lo), b.hi);
}

double CircleMap::lyapunov_avg(double x, int n) const {
    if (n < 1) throw spec_error("lyapunov_avg: n must be >= 1");
    double sum = 0.0;
    double y = mod1(x);
    for (int i = 0; i < n; ++i) {
        sum += std::log(std::fabs(deriv(y, Side::Right)));
        y = eval(y);
    }
    return sum / n;
}

// --- periodic points ---------------------------------------------------------

namespace {

// Composed inverse along the itinerary: T_w = psi_{w0} o ... o psi_{w(n-1)}.
double composed_inverse(const CircleMap& map, const std::vector<int>& w, double y) {
    for (std::size_t i = w.size(); i-- > 0;) y = map.inverse_branch(w[i], y);
    return y;
}

} // namespace

std::vector<PeriodicPoint> CircleMap::periodic_points(int n, std::uint64_t itinerary_cap) const {
    if (n < 1) throw spec_error("periodic_points: period must be >= 1");
    const int k = degree();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(k);
        if (total > itinerary_cap) {
            std::ostringstream os;
            os << "periodic_points: k^n = " << k << "^" << n
               << " exceeds the itinerary cap " << itinerary_cap;
            throw resource_error(os.str());
        }
    }

    std::vector<PeriodicPoint> out;
    out.reserve(total);
    std::vector<int> w(n, 1);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        // cylinder of w by pulling the last branch domain through the
        // earlier inverse branches (image seams sit at 0, so each pullback
        // stays a single interval)
        double clo = branches_[w[n - 1] - 1].lo;
        double chi = branches_[w[n - 1] - 1].hi;
        for (int i = n - 2; i >= 0; --i) {
            double a = inverse_branch(w[i], clo);
            double b = (chi == 1.0) ? inverse_branch(w[i], 1.0) : inverse_branch(w[i], chi);
            if (a > b) std::swap(a, b);
            clo = a;
            chi = b;
        }

        // contraction iteration of the composed inverse
        double y = 0.5 * (clo + chi);
        bool converged = false;
        double prev_step = 1.0;
        for (int it = 0; it < 200; ++it) {
            const double yn = composed_inverse(*this, w, y);
            const double step = circle_dist(yn, y);
            y = yn;
            if (step < kBisectTol) {
                converged = true;
                break;
            }
            if (it > 24 && step > 0.9 * prev_step) break; // stalling near a neutral cylinder
            prev_step = step;
        }

        if (!converged) {
            // bisection fallback on H(y) = T_w(y) - y inside the cylinder;
            // T_w maps the cylinder into itself, so H brackets a root
            double a = clo, b = chi;
            double ha = composed_inverse(*this, w, a) - a;
            double hb = composed_inverse(*this, w, b == 1.0 ? 1.0 : b) - b;
            if (std::fabs(ha) < kBisectTol) {
                y = a;
            } else if (std::fabs(hb) < kBisectTol) {
                y = b;
            } else if (ha > 0.0 && hb < 0.0) {
                for (int it = 0; it < 200 && b - a > kBisectTol; ++it) {
                    const double mid = 0.5 * (a + b);
                    const double hm = composed_inverse(*this, w, mid) - mid;
                    (hm > 0.0 ? a : b) = mid;
                }
                y = 0.5 * (a + b);
            } else {
                std::ostringstream os;
                os << "periodic_points: no convergence for itinerary (";
                for (int i = 0; i < n; ++i) os << (i ? "," : "") << w[i];
                os << ")";
                throw numeric_error(os.str());
            }
        }

        PeriodicPoint ppt;
        ppt.point = mod1(y);
        // canonical representative at the 1 == 0 identification
        if (circle_dist(ppt.point, 0.0) < 1e-12) ppt.point = 0.0;
        ppt.itinerary = w;
        out.push_back(std::move(ppt));

        // odometer
        for (int i = n - 1; i >= 0; --i) {
            if (++w[i] <= k) break;
            w[i] = 1;
        }
    }
    return out;
}

std::vector<double> unique_periodic_points(const std::vector<PeriodicPoint>& pts, double tol) {
    std::vector<double> out;
    for (const auto& p : pts) {
        bool dup = false;
        for (double q : out) dup = dup || circle_dist(p.point, q) < tol;
        if (!dup) out.push_back(p.point);
    }
    std::sort(out.begin(), out.end());
    return out;
}

double birkhoff_sum(const CircleMap& map, const Potential& phi, double x, int n) {
    if (n < 1) throw spec_error("birkhoff_sum: n must be >= 1");
    double sum = 0.0;
    double y = mod1(x);
    for (int i = 0; i < n; ++i) {
        sum += phi(y);
        y = map.eval(y);
    }
    return sum;
}

} // namespace thermo
