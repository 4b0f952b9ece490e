#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "partspace/consensus.hpp"
#include "partspace/sampling.hpp"
#include "partspace/stats.hpp"

namespace partspace {

// Consensus solver parameters used by every replication.
struct SolverConfig {
    int restarts = 10;
    int max_iter = 100;
    double tol = 1e-9;
};

// Shared experiment input: the sampled distribution, the dissimilarity, and
// a label for it in reports.
struct ExperimentConfig {
    DistributionSpec dist;
    FrechetSpec rho;
    std::string rho_name;
    SolverConfig solver;

    ExperimentConfig(DistributionSpec dist, FrechetSpec rho, std::string rho_name)
        : dist(std::move(dist)), rho(std::move(rho)), rho_name(std::move(rho_name)) {}
};

// One sample-size cell of a consistency run.
struct ExperimentCell {
    std::size_t n = 0;
    std::vector<double> variations;      // V_n per replication, replication order
    std::vector<double> mean_distances;  // delta_2(M_n, M*) per replication
    SummaryStats variation_stats;
    SummaryStats distance_stats;
    double median_variation_gap = 0.0;   // median |V_n - V_ref|
};

struct ConsistencyReport {
    ConsistencyReport(ExperimentConfig config, std::vector<std::size_t> n_grid,
                      std::size_t replications, std::size_t n_ref, double reference_variation,
                      Partition reference_mean)
        : config(std::move(config)), n_grid(std::move(n_grid)), replications(replications),
          n_ref(n_ref), reference_variation(reference_variation),
          reference_mean(std::move(reference_mean)) {}

    ExperimentConfig config;
    std::vector<std::size_t> n_grid;
    std::size_t replications = 0;
    std::size_t n_ref = 0;
    double reference_variation = 0.0;
    Partition reference_mean;
    std::vector<ExperimentCell> cells;
    bool vgap_nonincreasing = false;        // median |V_n - V_ref| over the grid
    bool vgap_strictly_decreasing = false;
    bool distance_nonincreasing = false;    // median delta_2(M_n, M*) over the grid
};

struct CltReport {
    CltReport(ExperimentConfig config, std::size_t n, std::size_t replications,
              std::size_t n_ref, double reference_variation, Partition reference_mean)
        : config(std::move(config)), n(n), replications(replications), n_ref(n_ref),
          reference_variation(reference_variation), reference_mean(std::move(reference_mean)) {}

    ExperimentConfig config;
    std::size_t n = 0;
    std::size_t replications = 0;
    std::size_t n_ref = 0;
    double reference_variation = 0.0;
    Partition reference_mean;
    std::vector<double> variations;  // V_n per replication
    std::vector<double> t_values;    // sqrt(n) * (V_n - V_ref)
    double mean_t = 0.0;
    double sigma_hat = 0.0;          // sqrt of the sample variance of t_values
    bool zero_variance = false;
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
    // Against the centered normal N(0, sigma_hat^2). Carries the finite-n
    // offset of the minimum statistic, mean_t, on top of the shape.
    double ks_stat = 0.0;
    double ks_p_value = 0.0;
    // Against the location-and-scale fitted normal N(mean_t, sigma_hat^2):
    // a pure shape (normality) check.
    double ks_stat_fitted = 0.0;
    double ks_p_value_fitted = 0.0;
};

// Solves one sample with the solver the rho calls for (majorize-minimize for
// squared delta_2, hard local search otherwise).
ConsensusResult consensus_solve(const Sample& sample, const FrechetSpec& rho,
                                const SolverConfig& solver, std::uint64_t seed);

// Estimates the expected variation and an expected partition from one
// reference sample of size n_ref, then replicates the consensus solve R
// times per grid cell, recording variations and distances to the reference
// mean. Pre: n_grid ascending, R >= 10, n_ref >= max(n_grid).
ConsistencyReport run_consistency_experiment(const ExperimentConfig& config,
                                             const std::vector<std::size_t>& n_grid,
                                             std::size_t replications, std::size_t n_ref);

// Replicates the consensus solve at fixed n and studies the distribution of
// sqrt(n) * (V_n - V_ref) against a fitted centered normal.
// Pre: R >= 100, n_ref >= n.
CltReport run_clt_experiment(const ExperimentConfig& config, std::size_t n,
                             std::size_t replications, std::size_t n_ref);

// Stable-schema serializations. JSON is byte-deterministic for a fixed
// config; the CSV holds the raw per-replication values.
std::string to_json(const ConsistencyReport& report);
std::string to_csv(const ConsistencyReport& report);
std::string to_json(const CltReport& report);
std::string to_csv(const CltReport& report);

}  // namespace partspace
