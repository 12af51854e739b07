#pragma once

#include <string>
#include <vector>

#include "thermo/circle_map.hpp"
#include "thermo/grid.hpp"
#include "thermo/potential.hpp"

namespace thermo {

struct UlamConfig {
    int cells = 1024;          // base uniform resolution
    int quad_points = 4;       // midpoint subdivisions per intersection piece
    bool refine_neutral = true;
    int neutral_refine_depth = 12;

    PartitionConfig partition_config() const {
        return PartitionConfig{cells, refine_neutral, neutral_refine_depth};
    }
};

struct EigenConfig {
    double tol = 1e-12;       // successive Rayleigh-quotient difference
    int max_iter = 100000;
    int subleading_max_iter = 20000;
    int subleading_window = 20;
};

struct NormGrowthConfig {
    int n_max = 60;
    int window = 10;          // averaging window for the final slope
    int cells = 2048;         // evaluation grid resolution
    bool refine_neutral = true;
    int neutral_refine_depth = 12;
    double drift_tol = 1e-3;  // slope drift above this flags low confidence
};

// Finite-rank Ulam discretization of the transfer operator: sparse
// nonnegative matrix whose entry (i, j) is the relative e^phi-weight of
// cell_j ∩ f^{-1}(cell_i).  Rows are target cells.
class UlamMatrix {
public:
    UlamMatrix(Partition part, std::vector<int> row_ptr, std::vector<int> col,
               std::vector<double> val);

    const Partition& partition() const { return part_; }
    int size() const { return part_.cells(); }
    std::size_t nonzeros() const { return val_.size(); }

    void apply(const std::vector<double>& x, std::vector<double>& y) const;
    void apply_transpose(const std::vector<double>& x, std::vector<double>& y) const;

    struct Triplet {
        int row, col;
        double value;
    };
    std::vector<Triplet> triplets() const;
    // Dense copy, for small-N cross-checks against full eigensolvers.
    std::vector<double> dense() const; // row-major size*size

private:
    Partition part_;
    std::vector<int> row_ptr_, col_;
    std::vector<double> val_;
};

// Quadrature skeleton for one (map, partition): preimage geometry and
// |Df|-weights are potential-independent, so parameter sweeps only
// re-exponentiate.  Weights are assembled in image coordinates, which keeps
// row sums exactly equal to the degree when phi == 0.
class UlamAssembler {
public:
    UlamAssembler(const CircleMap& map, Partition part, int quad_points = 4);

    const Partition& partition() const { return part_; }
    UlamMatrix assemble(const Potential& phi) const;

    // Values of phi at all quadrature preimages, for assemble_scaled.
    std::vector<double> cache_values(const Potential& phi) const;
    UlamMatrix assemble_scaled(const std::vector<double>& phi_cache, double t) const;

private:
    Partition part_;
    std::vector<int> row_ptr_, col_;        // CSR pattern (entries may repeat a column)
    std::vector<double> quad_w_;            // per quad node: dx / |c_row|
    std::vector<double> quad_y_;            // per quad node: preimage point
    int quad_points_;
};

UlamMatrix ulam_matrix(const CircleMap& map, const Potential& phi,
                       const UlamConfig& cfg = {});

struct EigenResult {
    double lambda = 0.0;
    std::vector<double> h;   // right eigenvector (cell values), <h, nu> = 1
    std::vector<double> nu;  // left eigenvector, nonnegative, sums to 1
    int iterations = 0;
    bool converged = false;  // cap reached without convergence is reported, not raised
    double residual = 0.0;   // ||U h - lambda h||_inf / (lambda ||h||_inf)
};

// Power iteration on U and its transpose with sup-norm renormalization;
// Rayleigh quotients are Aitken-accelerated before reporting lambda.
EigenResult leading_eigenpair(const UlamMatrix& U, const EigenConfig& cfg = {});

struct SubleadingResult {
    double modulus = 0.0;
    double gap_ratio = 0.0; // modulus / lambda_1
    int iterations = 0;
    bool converged = false;
    double deflation_residual = 0.0;
    bool flagged = false;
};

// Power iteration on the rank-one deflation U - lambda h (x) nu; the
// modulus estimate is the windowed geometric mean of step factors, which
// also handles complex subleading pairs.
SubleadingResult subleading_modulus(const UlamMatrix& U, const EigenResult& leading,
                                    const EigenConfig& cfg = {});

// Node-wise exact preimage sum (L g)(x) = sum_{f(y)=x} e^{phi(y)} g(y)
// with interpolated g values at the preimages.
GridFunction apply_transfer(const CircleMap& map, const Potential& phi,
                            const GridFunction& g);

// Cached preimage geometry for repeated transfer applications on one grid.
class GridOperator {
public:
    GridOperator(const CircleMap& map, Partition part);
    const Partition& partition() const { return part_; }
    std::vector<double> cache_values(const Potential& phi) const;
    // g <- L_{t phi} g, returning log of the sup-norm factor taken out.
    double apply_scaled(const std::vector<double>& phi_cache, double t,
                        std::vector<double>& g) const;

private:
    const CircleMap* map_;
    Partition part_;
    std::vector<double> pre_y_;     // node x branch preimages
    std::vector<Side> pre_side_;
    std::vector<int> pre_cell_;     // interpolation cell of each preimage
    std::vector<double> pre_frac_;  // interpolation fraction within the cell
};

struct GrowthEstimate {
    double pressure = 0.0; // averaged slope of n -> log ||L^n 1||_inf
    double drift = 0.0;    // max spread of per-step factors in the window
    bool low_confidence = false;
    int steps = 0;
};

GrowthEstimate growth_rate_pressure(const CircleMap& map, const Potential& phi,
                                    const NormGrowthConfig& cfg = {});

struct EssRadiusBound {
    double value = 0.0;
    bool upper_bound_only = false; // BV route: sup of periodic Birkhoff averages
    std::string method;            // "holder-norm-growth" | "bv-periodic-sup"
};

// exp(P(phi - alpha log|Df|)) for Hoelder/smooth phi via the norm-growth
// estimator; for BV phi the bound exp(sup periodic average of phi),
// flagged as an upper bound only.
EssRadiusBound ess_radius_bound(const CircleMap& map, const Potential& phi,
                                double alpha, const NormGrowthConfig& cfg = {});

struct SpectralReport {
    double lambda = 0.0;
    double log_lambda = 0.0;
    GridFunction eigenfunction;           // node values from cell averages
    std::vector<double> conformal_weights; // per cell, sums to 1
    double subleading_modulus = 0.0;
    double gap_ratio = 0.0;
    double ess_bound = 0.0;
    bool ess_upper_only = false;
    bool certificate = false; // P(phi) > P(phi - alpha log|Df|) + margin
    double certificate_margin = 0.0;
    EigenResult leading;
    SubleadingResult subleading;
};

SpectralReport spectral_report(const CircleMap& map, const Potential& phi,
                               double hoelder_alpha = 1.0,
                               const UlamConfig& ucfg = {},
                               const EigenConfig& ecfg = {},
                               const NormGrowthConfig& gcfg = {});

} // namespace thermo
