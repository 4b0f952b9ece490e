#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "partspace/criteria.hpp"
#include "partspace/metrics.hpp"
#include "partspace/partition.hpp"

namespace partspace {

// A sample of partitions of uniform shape.
class Sample {
public:
    explicit Sample(std::vector<Partition> members);

    const std::vector<Partition>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    std::size_t n_clusters() const { return members_.front().n_clusters(); }
    std::size_t n_points() const { return members_.front().n_points(); }
    const Partition& operator[](std::size_t i) const { return members_[i]; }

private:
    std::vector<Partition> members_;
};

// The dissimilarity rho driving a Fréchet function: either a metric with a
// power loss (rho = delta_p^q) or a cluster-comparison criterion.
class FrechetSpec {
public:
    static FrechetSpec metric(double p, double loss_exponent);
    static FrechetSpec criterion(CriterionSpec spec,
                                 InfoNormalizer normalizer = InfoNormalizer::points);

    bool is_metric() const { return !criterion_.has_value(); }
    // The consensus function of the mean partition: squared l_2 distance.
    bool is_squared_l2() const {
        return is_metric() && metric_.p == 2.0 && loss_exponent_ == 2.0;
    }
    double metric_order() const { return metric_.p; }
    double loss_exponent() const { return loss_exponent_; }
    const CriterionSpec& criterion_spec() const { return *criterion_; }

    double rho(const Partition& x, const Partition& z) const;

private:
    FrechetSpec() = default;
    MetricSpec metric_{2.0};
    double loss_exponent_ = 2.0;
    std::optional<CriterionSpec> criterion_;
    InfoNormalizer normalizer_ = InfoNormalizer::points;
};

struct ConsensusResult {
    Partition mean;
    double variation = 0.0;
    // Per-member alignment onto the mean's canonical form (delta_2 solver only).
    std::vector<Permutation> alignments;
    std::vector<double> trace;  // Fréchet value per iteration, non-increasing
    int restarts_used = 0;
    bool converged = false;
};

struct MeanOptions {
    int restarts = 10;
    int max_iter = 100;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    // Members scored when ranking initializers; caps the O(n^2) candidate
    // scan on large samples.
    std::size_t max_scored_members = 64;
};

struct SearchOptions {
    int restarts = 10;
    std::uint64_t seed = 0;
    int max_moves = 10000;
};

// Mean of per-member dissimilarities at candidate Z.
double frechet_value(const Sample& sample, const Partition& z, const FrechetSpec& spec);

// Mean partition under rho = delta_2^2 by majorize-minimize: alternate
// aligning every member to the current candidate and averaging the aligned
// representatives. Returns the best of `restarts` seeded initializations.
ConsensusResult mean_partition_l2(const Sample& sample, const MeanOptions& opts = {});

// Mean partition for an arbitrary rho by seeded local search over hard
// partitions (single-point reassignment moves).
ConsensusResult mean_partition_search(const Sample& sample, const FrechetSpec& spec,
                                      const SearchOptions& opts = {});

// Exact hard-partition minimizer by exhaustive enumeration of all orbit-
// distinct hard partitions with at most l clusters. Desk-scale oracle;
// throws TooLarge beyond max_points points or 3 clusters.
ConsensusResult brute_force_mean(const Sample& sample, const FrechetSpec& spec,
                                 std::size_t max_points = 8);

// Variation (attained Fréchet minimum) of the solver matching the spec:
// majorize-minimize for squared delta_2, local search otherwise.
double variation(const Sample& sample, const FrechetSpec& spec, std::uint64_t seed = 0);

// Per-column argmax rounding of a soft mean (ties to the lowest cluster).
Partition harden(const Partition& x);

// Enumerates the restricted-growth label strings of all orbit-distinct hard
// partitions of m points into at most l clusters. Exposed for oracles.
std::vector<std::vector<int>> enumerate_hard_labelings(std::size_t m, std::size_t l);

}  // namespace partspace
