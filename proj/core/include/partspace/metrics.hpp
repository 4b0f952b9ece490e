#pragma once

#include <vector>

#include "partspace/assignment.hpp"
#include "partspace/partition.hpp"

namespace partspace {

// Order of the underlying l_p matrix norm.
struct MetricSpec {
    double p = 2.0;

    explicit MetricSpec(double order = 2.0) : p(order) {
        if (p < 1.0) throw InvalidOrder(p);
    }
};

// l_p distance between partitions: the minimum matrix l_p distance over all
// relabelings, i.e. (optimal_alignment objective)^(1/p).
double delta_p(const Partition& x, const Partition& y, const MetricSpec& spec = MetricSpec());

// Geodesic midpoint M with delta_2(X, M) = delta_2(Y, M) = delta_2(X, Y) / 2:
// average of the delta_2-optimally aligned representatives.
Partition midpoint(const Partition& x, const Partition& y);

// One-sided set distance: max over u in U of min over v in V of delta_p.
// Throws EmptySet, ShapeMismatch.
double set_distance(const std::vector<Partition>& u_set, const std::vector<Partition>& v_set,
                    const MetricSpec& spec = MetricSpec());

}  // namespace partspace
