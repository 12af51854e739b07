#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "thermo/transfer_op.hpp"

namespace thermo {

struct PressureConfig {
    UlamConfig ulam;          // the comparison grid doubles ulam.cells
    EigenConfig eigen;
    NormGrowthConfig growth;
    bool use_norm_growth = true;
};

struct PressureEstimate {
    double value = 0.0;       // reconciled: Ulam log-eigenvalue on the doubled grid
    double ulam_coarse = 0.0; // log lambda at N
    double ulam_fine = 0.0;   // log lambda at 2N
    double norm_growth = 0.0;
    double confidence = 0.0;  // max pairwise discrepancy among trusted estimators
    bool eigen_converged = true;
    bool growth_trusted = true;
};

// Shared skeletons for sweeps over t of one (map, phi): assembly geometry,
// phi caches and the preimage grid are built once.
class PressureEngine {
public:
    PressureEngine(const CircleMap& map, const Potential& phi,
                   const PressureConfig& cfg = {});
    PressureEstimate at(double t) const; // pressure of t*phi
    const PressureConfig& config() const { return cfg_; }
    const CircleMap& map() const { return *map_; }
    const Potential& potential() const { return phi_; }

private:
    const CircleMap* map_;
    Potential phi_;
    PressureConfig cfg_;
    UlamAssembler coarse_, fine_;
    std::vector<double> cache_coarse_, cache_fine_;
    GridOperator growth_op_;
    std::vector<double> cache_growth_;
};

PressureEstimate pressure(const CircleMap& map, const Potential& phi,
                          const PressureConfig& cfg = {});

// Local convexity diagnostic from second differences only; the
// authoritative zone classification lives in TransitionReport.
enum class LocalShape { Convex, Flat, Ambiguous };

struct PressureCurve {
    std::vector<double> t;            // sorted, always contains 0
    std::vector<double> p_growth;
    std::vector<double> p_ulam;       // fine-grid estimate
    std::vector<double> p;            // reconciled
    std::vector<double> d1, d2;       // finite differences of p
    std::vector<double> confidence;
    std::vector<LocalShape> shape;
    double h_top = 0.0;
    bool affine = false;              // short-circuited: p = h_top + t*c
    double affine_constant = 0.0;
    std::string potential_desc;

    double scale() const; // max(1, max |p|)
    double value_at(double t) const; // linear interpolation inside the window
    double slope_at(double t) const; // interpolated central divided difference
};

struct SweepConfig {
    double t_lo = -6.0;
    double t_hi = 6.0;
    int samples = 121;
    bool densify = false;  // one midpoint-insertion round around slope breaks
    int densify_points = 8;
    int max_period = 12;              // cohomology / affine short-circuit probe
    std::uint64_t itinerary_cap = 1u << 21;
    double cohomology_tol = 1e-9;
};

std::vector<double> make_t_grid(const SweepConfig& cfg);

PressureCurve pressure_curve(const CircleMap& map, const Potential& phi,
                             const std::vector<double>& t_grid,
                             const PressureConfig& pcfg = {},
                             const SweepConfig& scfg = {});

struct BetaResult {
    double beta = 0.0;
    double witness_point = 0.0;
    std::vector<int> witness_itinerary;
    int period = 0;
};

// Maximum ergodic average over periodic orbits of period <= max_period,
// with early exit when a neutral fixed point attains the sample sup of phi.
BetaResult beta_max(const CircleMap& map, const Potential& phi, int max_period,
                    std::uint64_t itinerary_cap = 1u << 21);

struct Verdict {
    bool value = false;
    double margin = 0.0;
    bool undetermined = false; // |margin| below the decision tolerance
};

struct ClassifyConfig {
    PressureConfig pressure;
    int max_period = 12;
    std::uint64_t itinerary_cap = 1u << 21;
    double decision_tol = 1e-3; // floored by 10x pressure confidence
};

// beta(phi) < P(phi): no zero-entropy equilibrium maximizer.
Verdict is_hyperbolic(const CircleMap& map, const Potential& phi,
                      const ClassifyConfig& cfg = {});
// max over neutral fixed points p of phi(p) < P(phi); expanding
// unconditionally when the neutral set is empty.
Verdict is_expanding(const CircleMap& map, const Potential& phi,
                     const ClassifyConfig& cfg = {});

struct CohomologyResult {
    bool cohomologous = false;
    double spread = 0.0;     // max - min of periodic orbit averages
    double constant = 0.0;   // midpoint of the sampled averages
};

CohomologyResult cohomologous_to_constant(const CircleMap& map, const Potential& phi,
                                          int max_period,
                                          std::uint64_t itinerary_cap = 1u << 21);

enum class Zone { StrictlyConvex, Linear, Undetermined };

constexpr double neg_inf = -std::numeric_limits<double>::infinity();
constexpr double pos_inf = std::numeric_limits<double>::infinity();

struct TransitionConfig {
    double tol_flat = 1e-4;   // raw |second difference| bound for linear zones
    double tol_strict = 1e-4; // raw second difference bound for strict convexity
    double gap_tol = 1e-3;    // P(t phi) - t beta below this counts as closed
    double root_resolution = 1e-3;
};

struct TransitionReport {
    double t1 = neg_inf; // sup{t<0 : t phi not expanding}; -inf when none in window
    double t2 = pos_inf; // inf{t>0 : t phi not expanding}; +inf when none in window
    double beta_plus = 0.0;  // beta(phi): pressure slope for t -> +inf
    double beta_minus = 0.0; // -beta(-phi): pressure slope for t -> -inf
    bool cohomologous = false;
    double cohomology_spread = 0.0;
    bool no_phase_transition = false;
    std::vector<double> t_samples;
    std::vector<Zone> zone;   // per t-sample classification
    double window_lo = 0.0, window_hi = 0.0;
    double gap_tol_used = 0.0;
};

TransitionReport transition_points(const PressureEngine& engine,
                                   const PressureCurve& curve,
                                   const TransitionConfig& tcfg = {},
                                   const SweepConfig& scfg = {});

struct GapSweepRow {
    double t = 0.0;
    double lambda1 = 0.0;
    double lambda2_abs = 0.0;
    double ratio = 0.0;
    double ess_bound = 0.0;
    bool certificate = false;
    bool converged = true;
};

// Per-t spectral diagnostics for the transitions report: Ulam eigendata
// plus the gap certificate P(t phi) > P(t phi - alpha log|Df|) at the
// reconciled-pressure level (1e-3 margin).
std::vector<GapSweepRow> gap_sweep(const CircleMap& map, const Potential& phi,
                                   const std::vector<double>& t_grid,
                                   double hoelder_alpha,
                                   const PressureConfig& cfg = {});

} // namespace thermo
