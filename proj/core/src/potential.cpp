#include "thermo/potential.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <variant>

#include "thermo/circle_map.hpp"
#include "thermo/errors.hpp"

namespace thermo {

namespace {

struct GeometricNode {
    const CircleMap* map;
};
struct ConstantNode {
    double value;
};
struct TrigNode {
    std::vector<double> cos_coeffs, sin_coeffs;
};
struct IndicatorNode {
    double a, b;
};
struct ComboNode {
    std::vector<std::pair<double, Potential>> terms;
};

} // namespace

struct Potential::Impl {
    std::variant<GeometricNode, ConstantNode, TrigNode, IndicatorNode, ComboNode> node;
};

Potential Potential::geometric(const CircleMap& map) {
    return Potential(std::make_shared<Impl>(Impl{GeometricNode{&map}}));
}

Potential Potential::constant(double value) {
    if (!std::isfinite(value)) throw spec_error("constant potential: value must be finite");
    return Potential(std::make_shared<Impl>(Impl{ConstantNode{value}}));
}

Potential Potential::indicator(double a, double b) {
    if (!(a >= 0.0 && a < b && b <= 1.0))
        throw spec_error("indicator potential: need 0 <= a < b <= 1");
    return Potential(std::make_shared<Impl>(Impl{IndicatorNode{a, b}}));
}

Potential Potential::trig_series(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs) {
    for (double c : cos_coeffs)
        if (!std::isfinite(c)) throw spec_error("trig_series: non-finite coefficient");
    for (double c : sin_coeffs)
        if (!std::isfinite(c)) throw spec_error("trig_series: non-finite coefficient");
    return Potential(std::make_shared<Impl>(
        Impl{TrigNode{std::move(cos_coeffs), std::move(sin_coeffs)}}));
}

Potential Potential::scale(const Potential& phi, double t) {
    if (!std::isfinite(t)) throw spec_error("scale: weight must be finite");
    if (const auto* c = std::get_if<ConstantNode>(&phi.impl_->node))
        return constant(t * c->value);
    return combine({{t, phi}});
}

Potential Potential::combine(const std::vector<std::pair<double, Potential>>& terms) {
    for (const auto& [w, p] : terms) {
        (void)p;
        if (!std::isfinite(w)) throw spec_error("combine: weight must be finite");
    }
    return Potential(std::make_shared<Impl>(Impl{ComboNode{terms}}));
}

double Potential::eval_side(double x, Side side) const {
    x = mod1(x);
    const auto& node = impl_->node;
    if (const auto* g = std::get_if<GeometricNode>(&node))
        return -std::log(std::fabs(g->map->deriv(x, side)));
    if (const auto* c = std::get_if<ConstantNode>(&node)) return c->value;
    if (const auto* t = std::get_if<TrigNode>(&node)) {
        double sum = 0.0;
        const double w = 2.0 * std::numbers::pi * x;
        for (std::size_t j = 0; j < t->cos_coeffs.size(); ++j)
            sum += t->cos_coeffs[j] * std::cos(w * static_cast<double>(j + 1));
        for (std::size_t j = 0; j < t->sin_coeffs.size(); ++j)
            sum += t->sin_coeffs[j] * std::sin(w * static_cast<double>(j + 1));
        return sum;
    }
    if (const auto* ind = std::get_if<IndicatorNode>(&node)) {
        if (side == Side::Right) return (x >= ind->a && x < ind->b) ? 1.0 : 0.0;
        const double xl = (x == 0.0) ? 1.0 : x; // left limit at 0 reads from 1^-
        return (xl > ind->a && xl <= ind->b) ? 1.0 : 0.0;
    }
    const auto& combo = std::get<ComboNode>(node);
    double sum = 0.0;
    for (const auto& [w, p] : combo.terms) sum += w * p.eval_side(x, side);
    return sum;
}

Potential::Regularity Potential::regularity() const {
    const auto& node = impl_->node;
    if (const auto* g = std::get_if<GeometricNode>(&node)) {
        // Hoelder when Df is continuous across every break point, BV otherwise.
        const CircleMap& m = *g->map;
        for (double x : m.break_points())
            if (std::fabs(m.deriv(x, Side::Left) - m.deriv(x, Side::Right)) > 1e-9)
                return Regularity::BoundedVariation;
        return Regularity::Hoelder;
    }
    if (std::holds_alternative<ConstantNode>(node)) return Regularity::Smooth;
    if (std::holds_alternative<TrigNode>(node)) return Regularity::Smooth;
    if (std::holds_alternative<IndicatorNode>(node)) return Regularity::BoundedVariation;
    auto weakest = Regularity::Smooth;
    for (const auto& [w, p] : std::get<ComboNode>(node).terms) {
        (void)w;
        const auto r = p.regularity();
        if (r == Regularity::BoundedVariation) return Regularity::BoundedVariation;
        if (r == Regularity::Hoelder) weakest = Regularity::Hoelder;
    }
    return weakest;
}

double Potential::hoelder_exponent() const { return 1.0; }

bool Potential::is_constant() const {
    const auto& node = impl_->node;
    if (std::holds_alternative<ConstantNode>(node)) return true;
    if (const auto* t = std::get_if<TrigNode>(&node))
        return t->cos_coeffs.empty() && t->sin_coeffs.empty();
    if (const auto* combo = std::get_if<ComboNode>(&node)) {
        for (const auto& [w, p] : combo->terms) {
            (void)w;
            if (!p.is_constant()) return false;
        }
        return true;
    }
    return false;
}

double Potential::constant_value() const {
    const auto& node = impl_->node;
    if (const auto* c = std::get_if<ConstantNode>(&node)) return c->value;
    if (const auto* t = std::get_if<TrigNode>(&node)) {
        if (t->cos_coeffs.empty() && t->sin_coeffs.empty()) return 0.0;
    }
    if (const auto* combo = std::get_if<ComboNode>(&node)) {
        double sum = 0.0;
        for (const auto& [w, p] : combo->terms) sum += w * p.constant_value();
        return sum;
    }
    throw spec_error("constant_value: potential is not descriptor-constant");
}

std::vector<double> Potential::discontinuities() const {
    std::vector<double> out;
    const auto& node = impl_->node;
    if (const auto* ind = std::get_if<IndicatorNode>(&node)) {
        out.push_back(mod1(ind->a));
        out.push_back(mod1(ind->b));
    } else if (const auto* g = std::get_if<GeometricNode>(&node)) {
        out = g->map->break_points();
    } else if (const auto* combo = std::get_if<ComboNode>(&node)) {
        for (const auto& [w, p] : combo->terms) {
            (void)w;
            for (double d : p.discontinuities()) out.push_back(d);
        }
    }
    return out;
}

std::string Potential::describe() const {
    const auto& node = impl_->node;
    if (std::holds_alternative<GeometricNode>(node)) return "geometric";
    if (const auto* c = std::get_if<ConstantNode>(&node)) {
        std::ostringstream os;
        os << "constant(" << c->value << ")";
        return os.str();
    }
    if (const auto* t = std::get_if<TrigNode>(&node)) {
        std::ostringstream os;
        os << "trig_series(" << t->cos_coeffs.size() << " cos, " << t->sin_coeffs.size()
           << " sin)";
        return os.str();
    }
    if (const auto* ind = std::get_if<IndicatorNode>(&node)) {
        std::ostringstream os;
        os << "indicator[" << ind->a << "," << ind->b << ")";
        return os.str();
    }
    const auto& combo = std::get<ComboNode>(node);
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, p] : combo.terms) {
        if (!first) os << " + ";
        os << w << "*" << p.describe();
        first = false;
    }
    if (first) os << "empty-combo";
    return os.str();
}

} // namespace thermo
