#include "partspace/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "partspace/io.hpp"
#include "partspace/metrics.hpp"
#include "partspace/rng.hpp"

namespace partspace {

namespace {

constexpr std::uint64_t kReferenceTag = 0x726566ULL;  // reference-sample stream

Sample draw(const DistributionSpec& dist, std::size_t n, std::uint64_t seed) {
    DistributionSpec derived = dist;
    derived.seed = seed;
    return sample(derived, n);
}

struct Reference {
    double variation;
    Partition mean;
};

Reference estimate_reference(const ExperimentConfig& config, std::size_t n_ref) {
    const Sample ref_sample =
        draw(config.dist, n_ref, derive_seed(config.dist.seed, kReferenceTag));
    const ConsensusResult solved = consensus_solve(ref_sample, config.rho, config.solver,
                                                   derive_seed(config.dist.seed, kReferenceTag, 1));
    return {solved.variation, solved.mean};
}

bool nonincreasing(const std::vector<double>& values, double tol = 0.0) {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[i - 1] + tol) return false;
    }
    return true;
}

bool strictly_decreasing(const std::vector<double>& values) {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] >= values[i - 1]) return false;
    }
    return true;
}

}  // namespace

ConsensusResult consensus_solve(const Sample& sample, const FrechetSpec& rho,
                                const SolverConfig& solver, std::uint64_t seed) {
    if (rho.is_squared_l2()) {
        MeanOptions opts;
        opts.restarts = solver.restarts;
        opts.max_iter = solver.max_iter;
        opts.tol = solver.tol;
        opts.seed = seed;
        return mean_partition_l2(sample, opts);
    }
    SearchOptions opts;
    opts.restarts = solver.restarts;
    opts.seed = seed;
    return mean_partition_search(sample, rho, opts);
}

ConsistencyReport run_consistency_experiment(const ExperimentConfig& config,
                                             const std::vector<std::size_t>& n_grid,
                                             std::size_t replications, std::size_t n_ref) {
    if (n_grid.empty() || !std::is_sorted(n_grid.begin(), n_grid.end())) {
        throw InvalidParameter("n grid must be non-empty and ascending");
    }
    if (replications < 10) throw InvalidParameter("consistency runs need >= 10 replications");
    if (n_ref < n_grid.back()) throw InvalidParameter("n_ref must be >= max(n grid)");
    config.dist.validate();

    const Reference reference = estimate_reference(config, n_ref);

    ConsistencyReport report(config, n_grid, replications, n_ref, reference.variation,
                             reference.mean);

    std::vector<double> median_gaps;
    std::vector<double> median_distances;
    for (const std::size_t n : n_grid) {
        ExperimentCell cell;
        cell.n = n;
        for (std::size_t r = 0; r < replications; ++r) {
            const std::uint64_t rep_seed = derive_seed(config.dist.seed, n, r);
            const Sample replication = draw(config.dist, n, rep_seed);
            const ConsensusResult solved =
                consensus_solve(replication, config.rho, config.solver,
                                derive_seed(rep_seed, 0x736f6cULL));
            cell.variations.push_back(solved.variation);
            cell.mean_distances.push_back(delta_p(solved.mean, reference.mean, MetricSpec(2.0)));
        }
        cell.variation_stats = summarize(cell.variations);
        cell.distance_stats = summarize(cell.mean_distances);

        std::vector<double> gaps;
        gaps.reserve(cell.variations.size());
        for (double v : cell.variations) gaps.push_back(std::abs(v - reference.variation));
        std::sort(gaps.begin(), gaps.end());
        cell.median_variation_gap = quantile_sorted(gaps, 0.5);

        median_gaps.push_back(cell.median_variation_gap);
        median_distances.push_back(cell.distance_stats.median);
        report.cells.push_back(std::move(cell));
    }

    report.vgap_nonincreasing = nonincreasing(median_gaps);
    report.vgap_strictly_decreasing = strictly_decreasing(median_gaps);
    report.distance_nonincreasing = nonincreasing(median_distances);
    return report;
}

CltReport run_clt_experiment(const ExperimentConfig& config, std::size_t n,
                             std::size_t replications, std::size_t n_ref) {
    if (replications < 100) throw InvalidParameter("CLT runs need >= 100 replications");
    if (n == 0) throw InvalidParameter("n must be >= 1");
    if (n_ref < n) throw InvalidParameter("n_ref must be >= n");
    config.dist.validate();

    const Reference reference = estimate_reference(config, n_ref);

    CltReport report(config, n, replications, n_ref, reference.variation, reference.mean);
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    for (std::size_t r = 0; r < replications; ++r) {
        const std::uint64_t rep_seed = derive_seed(config.dist.seed, n, r);
        const Sample replication = draw(config.dist, n, rep_seed);
        const ConsensusResult solved = consensus_solve(replication, config.rho, config.solver,
                                                       derive_seed(rep_seed, 0x736f6cULL));
        report.variations.push_back(solved.variation);
        report.t_values.push_back(sqrt_n * (solved.variation - reference.variation));
    }

    const double variance = sample_variance(report.t_values);
    report.mean_t = sample_mean(report.t_values);
    report.sigma_hat = std::sqrt(variance);
    report.zero_variance = !(variance > 0.0);
    if (!report.zero_variance) {
        report.skewness = partspace::skewness(report.t_values);
        report.excess_kurtosis = partspace::excess_kurtosis(report.t_values);
        report.ks_stat = ks_statistic_normal(report.t_values, 0.0, report.sigma_hat);
        report.ks_p_value = partspace::ks_p_value(report.ks_stat, report.t_values.size());
        report.ks_stat_fitted =
            ks_statistic_normal(report.t_values, report.mean_t, report.sigma_hat);
        report.ks_p_value_fitted =
            partspace::ks_p_value(report.ks_stat_fitted, report.t_values.size());
    }
    return report;
}

// --- serialization -----------------------------------------------------------

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json config_to_json(const ExperimentConfig& config) {
    ordered_json out;
    out["model"] = config.dist.model == DistributionModel::label_noise ? "label_noise"
                                                                       : "dirichlet_soft";
    if (config.dist.model == DistributionModel::label_noise) {
        out["epsilon"] = config.dist.epsilon;
    } else {
        out["concentration"] = config.dist.concentration;
    }
    out["base"] = ordered_json::parse(write_partition_json(config.dist.base.canonical()));
    out["seed"] = config.dist.seed;
    out["rho"] = config.rho_name;
    out["solver"] = {{"restarts", config.solver.restarts},
                     {"max_iter", config.solver.max_iter},
                     {"tol", config.solver.tol}};
    return out;
}

ordered_json summary_to_json(const SummaryStats& stats) {
    return {{"mean", stats.mean}, {"std", stats.std_dev}, {"q05", stats.q05},
            {"q25", stats.q25},   {"median", stats.median}, {"q75", stats.q75},
            {"q95", stats.q95}};
}

ordered_json reference_to_json(std::size_t n_ref, double variation, const Partition& mean) {
    ordered_json out;
    out["n_ref"] = n_ref;
    out["variation"] = variation;
    out["mean"] = ordered_json::parse(write_partition_json(mean.canonical()));
    return out;
}

}  // namespace

std::string to_json(const ConsistencyReport& report) {
    ordered_json out;
    out["experiment"] = "consistency";
    out["config"] = config_to_json(report.config);
    out["config"]["n_grid"] = report.n_grid;
    out["config"]["replications"] = report.replications;
    out["reference"] = reference_to_json(report.n_ref, report.reference_variation,
                                         report.reference_mean);
    ordered_json cells = ordered_json::array();
    for (const ExperimentCell& cell : report.cells) {
        ordered_json c;
        c["n"] = cell.n;
        c["variations"] = cell.variations;
        c["mean_distances"] = cell.mean_distances;
        c["variation_summary"] = summary_to_json(cell.variation_stats);
        c["distance_summary"] = summary_to_json(cell.distance_stats);
        c["median_variation_gap"] = cell.median_variation_gap;
        cells.push_back(std::move(c));
    }
    out["cells"] = std::move(cells);
    out["verdicts"] = {{"median_variation_gap_nonincreasing", report.vgap_nonincreasing},
                       {"median_variation_gap_strictly_decreasing",
                        report.vgap_strictly_decreasing},
                       {"median_mean_distance_nonincreasing", report.distance_nonincreasing}};
    return out.dump(2) + "\n";
}

std::string to_csv(const ConsistencyReport& report) {
    std::ostringstream out;
    out.precision(17);
    out << "n,replication,variation,mean_distance\n";
    for (const ExperimentCell& cell : report.cells) {
        for (std::size_t r = 0; r < cell.variations.size(); ++r) {
            out << cell.n << ',' << r << ',' << cell.variations[r] << ','
                << cell.mean_distances[r] << '\n';
        }
    }
    return out.str();
}

std::string to_json(const CltReport& report) {
    ordered_json out;
    out["experiment"] = "clt";
    out["config"] = config_to_json(report.config);
    out["config"]["n"] = report.n;
    out["config"]["replications"] = report.replications;
    // T = sqrt(n) * (V_n - V_ref); the multiplicative scaling keeps the
    // statistic non-degenerate as n grows.
    out["config"]["statistic"] = "sqrt_n_times_variation_gap";
    out["reference"] = reference_to_json(report.n_ref, report.reference_variation,
                                         report.reference_mean);
    out["variations"] = report.variations;
    out["t_values"] = report.t_values;
    out["mean_t"] = report.mean_t;
    out["sigma_hat"] = report.sigma_hat;
    out["zero_variance"] = report.zero_variance;
    if (!report.zero_variance) {
        out["skewness"] = report.skewness;
        out["excess_kurtosis"] = report.excess_kurtosis;
        out["ks_stat"] = report.ks_stat;
        out["ks_p_value"] = report.ks_p_value;
        out["ks_stat_fitted"] = report.ks_stat_fitted;
        out["ks_p_value_fitted"] = report.ks_p_value_fitted;
    }
    return out.dump(2) + "\n";
}

std::string to_csv(const CltReport& report) {
    std::ostringstream out;
    out.precision(17);
    out << "replication,variation,t_value\n";
    for (std::size_t r = 0; r < report.variations.size(); ++r) {
        out << r << ',' << report.variations[r] << ',' << report.t_values[r] << '\n';
    }
    return out.str();
}

}  // namespace partspace
