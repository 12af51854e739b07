#include "thermo/grid.hpp"

#include <algorithm>
#include <cmath>

#include "thermo/circle_map.hpp"
#include "thermo/errors.hpp"
#include "thermo/potential.hpp"

namespace thermo {

Partition::Partition(std::vector<double> nodes)
    : nodes_(std::make_shared<const std::vector<double>>(std::move(nodes))) {}

Partition Partition::build(const CircleMap& map, const Potential* phi,
                           const PartitionConfig& cfg) {
    if (cfg.base_cells < map.degree())
        throw spec_error("partition: base cell count must be at least the degree");

    std::vector<double> nodes;
    nodes.reserve(cfg.base_cells + 64);
    for (int i = 0; i < cfg.base_cells; ++i)
        nodes.push_back(static_cast<double>(i) / cfg.base_cells);
    for (double x : map.break_points()) nodes.push_back(mod1(x));
    if (phi != nullptr)
        for (double x : phi->discontinuities()) nodes.push_back(mod1(x));

    if (cfg.refine_neutral) {
        const double h = 1.0 / cfg.base_cells;
        for (double p : map.neutral_fixed_points()) {
            double step = h;
            for (int l = 0; l < cfg.neutral_refine_depth; ++l) {
                step *= 0.5;
                nodes.push_back(mod1(p + step));
                nodes.push_back(mod1(p - step));
            }
        }
    }

    std::sort(nodes.begin(), nodes.end());
    std::vector<double> dedup;
    dedup.reserve(nodes.size());
    for (double x : nodes) {
        if (dedup.empty() || x - dedup.back() > 1e-13) dedup.push_back(x);
    }
    if (dedup.empty() || dedup.front() != 0.0) dedup.insert(dedup.begin(), 0.0);
    // drop a node indistinguishable from the wrap at 1
    while (!dedup.empty() && 1.0 - dedup.back() <= 1e-13) dedup.pop_back();
    return Partition(std::move(dedup));
}

int Partition::locate(double x) const {
    x = mod1(x);
    const auto& n = *nodes_;
    auto it = std::upper_bound(n.begin(), n.end(), x);
    return static_cast<int>(it - n.begin()) - 1;
}

GridFunction::GridFunction(Partition part, std::vector<double> values)
    : part_(std::move(part)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != part_.cells())
        throw spec_error("grid function: value count must match node count");
}

GridFunction GridFunction::constant(const Partition& part, double c) {
    return GridFunction(part, std::vector<double>(part.cells(), c));
}

double GridFunction::operator()(double x) const {
    x = mod1(x);
    const int i = part_.locate(x);
    const double lo = part_.cell_lo(i);
    const double w = part_.cell_width(i);
    const double frac = w > 0.0 ? (x - lo) / w : 0.0;
    const double v0 = values_[i];
    const double v1 = values_[(i + 1) % part_.cells()]; // wraps by circle continuity
    return v0 + frac * (v1 - v0);
}

double GridFunction::sup_norm() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::fabs(v));
    return m;
}

double GridFunction::cell_average(int i) const {
    const double v0 = values_[i];
    const double v1 = values_[(i + 1) % part_.cells()];
    return 0.5 * (v0 + v1);
}

} // namespace thermo
