#pragma once

#include <string>
#include <vector>

#include "thermo/pressure.hpp"

namespace thermo {

struct SpectraConfig {
    int s_samples = 201;     // interior rate-function grid
    int min_zone_samples = 5;
    double degenerate_tol = 1e-9; // spectrum width below this is a point
};

struct FreeEnergy {
    std::vector<double> t;     // strictly-convex zone within the window
    std::vector<double> value; // P(t phi) - h_top
    double h_top = 0.0;
};

FreeEnergy free_energy(const PressureCurve& curve, const TransitionReport& tr);

// Legendre data of the pressure curve.  The interior grid spans
// [lambda_min, lambda_max] (closed, endpoints included) and always contains
// s_star, so I(s_star) = 0 holds exactly along the pipeline.  Flanks are
// affine with slopes t1 / t2 when those are finite, otherwise unresolved.
struct RateFunction {
    std::vector<double> s;  // increasing
    std::vector<double> I;  // convex, nonnegative
    double lambda_min = 0.0, lambda_max = 0.0; // one-sided P' at the zone ends
    double beta_min = 0.0, beta_max = 0.0;     // spectrum S_phi endpoints
    double s_star = 0.0;                       // P'(0): mean under mu_0
    double t1 = neg_inf, t2 = pos_inf;         // flank slopes of I
    bool left_flank_resolved = false;          // finite t1 and positive width
    bool right_flank_resolved = false;
    double left_junction_gap = 0.0;  // continuity diagnostics at lambda_min/max
    double right_junction_gap = 0.0;
    double h_top = 0.0;
    bool degenerate = false; // S_phi is a single point

    // Interpolated value, using affine flanks where resolved.  Throws
    // spec_error outside [beta_min, beta_max] and numeric_error on an
    // unresolved flank.
    double value_at(double s) const;
};

RateFunction rate_function(const PressureCurve& curve, const TransitionReport& tr,
                           const SpectraConfig& cfg = {});

struct LdDiagnostics {
    bool clamped = false;      // [a,b] clamped to S_phi
    std::string warning;
};

// LD_{phi,a,b} = -inf_{[a,b]} I over the interior grid plus affine
// extensions.  Throws spec_error when [a,b] misses S_phi entirely and
// numeric_error when the query needs an unresolved flank.
double ld_interval(const RateFunction& rate, double a, double b,
                   LdDiagnostics* diag = nullptr);

enum class DeltaRegion { D1, D2, D3, Mixed };
const char* to_string(DeltaRegion r);

struct DeltaPartition {
    double lambda_min = 0.0, lambda_max = 0.0;
    double s_star = 0.0;
    double beta_min = 0.0, beta_max = 0.0;
    DeltaRegion classify(double a, double b) const;
};

DeltaPartition delta_regions(const RateFunction& rate);

struct SpectrumResult {
    double a = 0.0, b = 0.0;
    double ld = 0.0;           // <= 0
    double h_x = 0.0;          // h_top + ld, same arithmetic path
    DeltaRegion region = DeltaRegion::Mixed;
    bool clamped = false;
    std::string warning;
};

SpectrumResult birkhoff_spectrum(const RateFunction& rate, double a, double b);

struct TauHatSample {
    double s = 0.0;
    double I = 0.0;
    double tau_hat = 0.0; // h_top - I
    const char* zone = "";
};

// Samples over H = S_phi: interior grid plus resolved affine flanks.
std::vector<TauHatSample> tau_hat_table(const RateFunction& rate);

} // namespace thermo
