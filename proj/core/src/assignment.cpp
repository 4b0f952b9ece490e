#include "partspace/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace partspace {

CostMatrix::CostMatrix(std::size_t size, std::vector<double> entries)
    : size_(size), entries_(std::move(entries)) {
    if (size_ == 0 || entries_.size() != size_ * size_) {
        throw InvalidShape("cost matrix must be square and non-empty");
    }
    for (double v : entries_) {
        if (!std::isfinite(v)) throw NonFiniteCost();
    }
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Shortest augmenting path Hungarian on an n x n cost matrix (minimization).
// Fills row->col assignment and the dual potentials u (rows), v (cols) with
// u[i] + v[j] <= cost(i, j) and equality on matched edges.
void hungarian(std::size_t n, const std::vector<double>& cost, std::vector<std::size_t>& row_to_col,
               std::vector<double>& u, std::vector<double>& v) {
    // 1-based working arrays; index 0 is the virtual unmatched column.
    std::vector<double> pu(n + 1, 0.0), pv(n + 1, 0.0);
    std::vector<std::size_t> match(n + 1, 0);  // match[j] = row matched to column j
    std::vector<std::size_t> way(n + 1, 0);

    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = match[j0];
            double delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[(i0 - 1) * n + (j - 1)] - pu[i0] - pv[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    pu[match[j]] += delta;
                    pv[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    row_to_col.assign(n, 0);
    u.assign(n, 0.0);
    v.assign(n, 0.0);
    for (std::size_t j = 1; j <= n; ++j) row_to_col[match[j] - 1] = j - 1;
    for (std::size_t i = 1; i <= n; ++i) u[i - 1] = pu[i];
    for (std::size_t j = 1; j <= n; ++j) v[j - 1] = pv[j];
}

// Kuhn's algorithm: true iff the bipartite graph restricted to free rows
// >= first_row and unused columns admits a perfect matching.
class TightMatcher {
public:
    TightMatcher(std::size_t n, const std::vector<std::vector<std::size_t>>& adj)
        : n_(n), adj_(adj) {}

    bool feasible(std::size_t first_row, const std::vector<char>& col_used) {
        col_match_.assign(n_, n_);
        for (std::size_t i = first_row; i < n_; ++i) {
            visited_.assign(n_, 0);
            if (!augment(i, col_used)) return false;
        }
        return true;
    }

private:
    bool augment(std::size_t row, const std::vector<char>& col_used) {
        for (std::size_t col : adj_[row]) {
            if (col_used[col] || visited_[col]) continue;
            visited_[col] = 1;
            if (col_match_[col] == n_ || augment(col_match_[col], col_used)) {
                col_match_[col] = row;
                return true;
            }
        }
        return false;
    }

    std::size_t n_;
    const std::vector<std::vector<std::size_t>>& adj_;
    std::vector<std::size_t> col_match_;
    std::vector<char> visited_;
};

}  // namespace

AssignmentResult solve_assignment(const CostMatrix& cost, OptimizeSense sense) {
    const std::size_t n = cost.size();
    std::vector<double> work(cost.entries().begin(), cost.entries().end());
    if (sense == OptimizeSense::maximize) {
        for (double& v : work) v = -v;
    }

    std::vector<std::size_t> row_to_col;
    std::vector<double> u, v;
    hungarian(n, work, row_to_col, u, v);

    // Optimal assignments are exactly the perfect matchings of the tight
    // subgraph (zero reduced cost under the optimal duals). Pick the
    // lexicographically smallest mapping among them.
    double max_abs = 0.0;
    for (double c : work) max_abs = std::max(max_abs, std::abs(c));
    const double tie_tol = 1e-12 * std::max(1.0, max_abs) * static_cast<double>(n);

    std::vector<std::vector<std::size_t>> tight(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (work[i * n + j] - u[i] - v[j] <= tie_tol) tight[i].push_back(j);
        }
    }

    TightMatcher matcher(n, tight);
    std::vector<char> col_used(n, 0);
    std::vector<std::size_t> mapping(n);
    for (std::size_t i = 0; i < n; ++i) {
        bool fixed = false;
        for (std::size_t j : tight[i]) {
            if (col_used[j]) continue;
            col_used[j] = 1;
            if (matcher.feasible(i + 1, col_used)) {
                mapping[i] = j;
                fixed = true;
                break;
            }
            col_used[j] = 0;
        }
        if (!fixed) {
            // Tight graph too thin for the tolerance; keep the solver's edge.
            mapping[i] = row_to_col[i];
            col_used[row_to_col[i]] = 1;
        }
    }

    double objective = 0.0;
    for (std::size_t i = 0; i < n; ++i) objective += cost(i, mapping[i]);
    return {Permutation(std::move(mapping)), objective};
}

CostMatrix alignment_costs(const PartitionMatrix& a, const PartitionMatrix& b, double p) {
    const std::size_t l = a.n_clusters();
    const std::size_t m = a.n_points();
    std::vector<double> cost(l * l);
    const bool p1 = (p == 1.0);
    const bool p2 = (p == 2.0);
    for (std::size_t k = 0; k < l; ++k) {
        const auto ra = a.row(k);
        for (std::size_t t = 0; t < l; ++t) {
            const auto rb = b.row(t);
            double acc = 0.0;
            if (p2) {
                for (std::size_t j = 0; j < m; ++j) {
                    const double d = ra[j] - rb[j];
                    acc += d * d;
                }
            } else if (p1) {
                for (std::size_t j = 0; j < m; ++j) acc += std::abs(ra[j] - rb[j]);
            } else {
                for (std::size_t j = 0; j < m; ++j) acc += std::pow(std::abs(ra[j] - rb[j]), p);
            }
            cost[k * l + t] = acc;
        }
    }
    return CostMatrix(l, std::move(cost));
}

namespace {

void check_alignment_args(const Partition& x, const Partition& y, double p) {
    if (x.n_clusters() != y.n_clusters() || x.n_points() != y.n_points()) {
        throw ShapeMismatch();
    }
    if (p < 1.0) throw InvalidOrder(p);
}

}  // namespace

AssignmentResult optimal_alignment(const Partition& x, const Partition& y, double p) {
    check_alignment_args(x, y, p);
    return solve_assignment(alignment_costs(x.canonical(), y.canonical(), p));
}

AssignmentResult brute_force_alignment(const Partition& x, const Partition& y, double p) {
    check_alignment_args(x, y, p);
    constexpr std::size_t kMaxClusters = 8;
    const std::size_t l = x.n_clusters();
    if (l > kMaxClusters) throw TooManyClusters(l, kMaxClusters);

    const CostMatrix cost = alignment_costs(x.canonical(), y.canonical(), p);
    std::vector<std::size_t> perm(l);
    std::iota(perm.begin(), perm.end(), std::size_t{0});

    std::vector<std::size_t> best = perm;
    double best_objective = kInf;
    do {
        double objective = 0.0;
        for (std::size_t k = 0; k < l; ++k) objective += cost(k, perm[k]);
        if (objective < best_objective) {
            best_objective = objective;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {Permutation(std::move(best)), best_objective};
}

}  // namespace partspace
