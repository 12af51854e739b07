#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "thermo/circle.hpp"

namespace thermo {

class CircleMap;

// Observable on the circle with regularity metadata.  Evaluation is
// pointwise on demand (no stored discretization) and supports one-sided
// limits so BV potentials can be read consistently with branch membership.
// Immutable; cheap to copy.
class Potential {
public:
    enum class Regularity { Smooth, Hoelder, BoundedVariation };

    // phi(x) = -log|Df(x)|, side convention matching the containing branch.
    // The map must outlive the potential.
    static Potential geometric(const CircleMap& map);
    static Potential constant(double value);
    // 1 on [a, b), 0 elsewhere; 0 <= a < b <= 1.
    static Potential indicator(double a, double b);
    // sum_j cos_coeffs[j] cos(2 pi (j+1) x) + sin_coeffs[j] sin(2 pi (j+1) x)
    static Potential trig_series(std::vector<double> cos_coeffs,
                                 std::vector<double> sin_coeffs);
    static Potential scale(const Potential& phi, double t);
    static Potential combine(const std::vector<std::pair<double, Potential>>& terms);

    double operator()(double x) const { return eval_side(x, Side::Right); }
    double eval_side(double x, Side side) const;

    // Weakest tag among terms: BV < Hoelder < Smooth.
    Regularity regularity() const;
    // Metadata only (not verified); defaults to 1.
    double hoelder_exponent() const;

    // Descriptor-level constant detection (used by the affine pressure
    // short-circuit; cohomologous-to-constant detection is separate).
    bool is_constant() const;
    double constant_value() const;

    // Jump locations of BV terms, for aligning discretization grids.
    std::vector<double> discontinuities() const;

    std::string describe() const;

private:
    struct Impl;
    explicit Potential(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

} // namespace thermo
