#include "partspace/metrics.hpp"

#include <cmath>
#include <limits>

namespace partspace {

double delta_p(const Partition& x, const Partition& y, const MetricSpec& spec) {
    const AssignmentResult aligned = optimal_alignment(x, y, spec.p);
    if (spec.p == 1.0) return aligned.objective;
    if (spec.p == 2.0) return std::sqrt(aligned.objective);
    return std::pow(aligned.objective, 1.0 / spec.p);
}

Partition midpoint(const Partition& x, const Partition& y) {
    const AssignmentResult aligned = optimal_alignment(x, y, 2.0);
    const PartitionMatrix& xc = x.canonical();
    const PartitionMatrix yc = y.canonical().permuted(aligned.permutation);

    const std::size_t l = xc.n_clusters();
    const std::size_t m = xc.n_points();
    std::vector<double> mid(l * m);
    for (std::size_t k = 0; k < l; ++k) {
        const auto rx = xc.row(k);
        const auto ry = yc.row(k);
        for (std::size_t j = 0; j < m; ++j) mid[k * m + j] = 0.5 * (rx[j] + ry[j]);
    }
    return Partition(PartitionMatrix::unchecked(l, m, std::move(mid)));
}

double set_distance(const std::vector<Partition>& u_set, const std::vector<Partition>& v_set,
                    const MetricSpec& spec) {
    if (u_set.empty() || v_set.empty()) throw EmptySet();
    double worst = 0.0;
    for (const Partition& u : u_set) {
        double best = std::numeric_limits<double>::infinity();
        for (const Partition& v : v_set) {
            best = std::min(best, delta_p(u, v, spec));
            if (best == 0.0) break;
        }
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace partspace
