#pragma once

#include <memory>
#include <vector>

#include "thermo/circle.hpp"

namespace thermo {

class CircleMap;
class Potential;

struct PartitionConfig {
    int base_cells = 1024;
    // Geometric refinement (ratio 0.5) of the cells adjacent to each
    // neutral fixed point; the polynomial tangency there dominates the
    // discretization error for intermittent maps.
    bool refine_neutral = true;
    int neutral_refine_depth = 12;
};

// Sorted circle nodes x_0 = 0 < x_1 < ... < x_{n-1} < 1; cell i is
// [x_i, x_{i+1}) with x_n = 1.  Always contains every break point of the
// map and every discontinuity of the potential it was built for.
class Partition {
public:
    static Partition build(const CircleMap& map, const Potential* phi,
                           const PartitionConfig& cfg);

    const std::vector<double>& nodes() const { return *nodes_; }
    int cells() const { return static_cast<int>(nodes_->size()); }
    double cell_lo(int i) const { return (*nodes_)[i]; }
    double cell_hi(int i) const {
        return i + 1 < cells() ? (*nodes_)[i + 1] : 1.0;
    }
    double cell_width(int i) const { return cell_hi(i) - cell_lo(i); }
    double cell_mid(int i) const { return 0.5 * (cell_lo(i) + cell_hi(i)); }
    int locate(double x) const; // cell containing mod1(x)

    bool operator==(const Partition& o) const { return nodes_ == o.nodes_ || *nodes_ == *o.nodes_; }

private:
    explicit Partition(std::vector<double> nodes);
    std::shared_ptr<const std::vector<double>> nodes_;
};

// Node values with piecewise-linear interpolation between nodes (the last
// segment wraps to node 0 by circle continuity).
class GridFunction {
public:
    GridFunction(Partition part, std::vector<double> values);
    static GridFunction constant(const Partition& part, double c);

    const Partition& partition() const { return part_; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }
    double operator()(double x) const; // interpolated
    double sup_norm() const;
    double cell_average(int i) const;

private:
    Partition part_;
    std::vector<double> values_;
};

} // namespace thermo
