// partspace CLI: partition distances, cluster-comparison criteria, consensus
// solves, distribution sampling, and Monte-Carlo experiment runs.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "partspace/consensus.hpp"
#include "partspace/criteria.hpp"
#include "partspace/experiments.hpp"
#include "partspace/io.hpp"
#include "partspace/metrics.hpp"
#include "partspace/sampling.hpp"

namespace {

using namespace partspace;
using ordered_json = nlohmann::ordered_json;

FrechetSpec parse_rho(const std::string& name, InfoNormalizer normalizer) {
    if (name == "l2sq") return FrechetSpec::metric(2.0, 2.0);
    if (name == "l2") return FrechetSpec::metric(2.0, 1.0);
    if (name == "l1") return FrechetSpec::metric(1.0, 1.0);
    return FrechetSpec::criterion(CriterionSpec(criterion_from_name(name)), normalizer);
}

std::vector<std::size_t> parse_grid(const std::string& text) {
    std::vector<std::size_t> grid;
    std::istringstream cells(text);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
        if (cell.empty()) continue;
        grid.push_back(static_cast<std::size_t>(std::stoull(cell)));
    }
    if (grid.empty()) throw InvalidParameter("empty n grid");
    return grid;
}

std::vector<double> parse_reals(const std::string& text) {
    std::vector<double> values;
    std::istringstream cells(text);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
        if (cell.empty()) continue;
        values.push_back(std::stod(cell));
    }
    return values;
}

std::string sibling_csv_path(const std::string& json_path) {
    const std::size_t dot = json_path.find_last_of('.');
    const std::size_t slash = json_path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return json_path + ".csv";
    }
    return json_path.substr(0, dot) + ".csv";
}

std::vector<Partition> load_members(const std::vector<std::string>& paths) {
    std::vector<Partition> members;
    for (const std::string& path : paths) {
        const std::string text = read_text_file(path);
        // A file may hold either one partition or a bundle array.
        if (text.find_first_not_of(" \t\r\n") != std::string::npos &&
            text[text.find_first_not_of(" \t\r\n")] == '[') {
            for (const PartitionMatrix& matrix : read_bundle_json(text)) {
                members.emplace_back(matrix);
            }
        } else if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
            members.emplace_back(read_partition_csv(text));
        } else {
            members.emplace_back(read_partition_json(text));
        }
    }
    return members;
}

struct DistOptions {
    double p = 2.0;
    std::string file_x, file_y;
};

int run_dist(const DistOptions& opt) {
    const Partition x(read_partition_file(opt.file_x));
    const Partition y(read_partition_file(opt.file_y));
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", delta_p(x, y, MetricSpec(opt.p)));
    std::cout << buffer << "\n";
    return 0;
}

struct CompareOptions {
    std::string criterion = "rand";
    bool all = false;
    bool paper_normalizer = false;
    std::string file_x, file_y;
};

int run_compare(const CompareOptions& opt) {
    const Partition x(read_partition_file(opt.file_x));
    const Partition y(read_partition_file(opt.file_y));
    const InfoNormalizer normalizer =
        opt.paper_normalizer ? InfoNormalizer::pairs : InfoNormalizer::points;

    if (!opt.all) {
        const double value = criterion_value(x, y, criterion_from_name(opt.criterion),
                                             normalizer);
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%.12g", value);
        std::cout << buffer << "\n";
        return 0;
    }

    ordered_json out;
    for (CriterionKind kind :
         {CriterionKind::wallace1, CriterionKind::wallace2, CriterionKind::rand,
          CriterionKind::fowlkes_mallows, CriterionKind::jaccard, CriterionKind::mirkin,
          CriterionKind::meila_heckerman, CriterionKind::van_dongen, CriterionKind::mutual_info,
          CriterionKind::nmi}) {
        try {
            out[criterion_name(kind)] = criterion_value(x, y, kind, normalizer);
        } catch (const DegeneratePartition&) {
            out[criterion_name(kind)] = nullptr;
        }
    }
    const InfoMeasures info = info_measures(x, y, normalizer);
    out["info_measures"] = {{"h_x", info.h_x},
                            {"h_y", info.h_y},
                            {"h_joint", info.h_joint},
                            {"h_x_given_y", info.h_x_given_y},
                            {"mutual_info", info.mutual_info}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

struct ConsensusOptions {
    std::string rho = "l2sq";
    int restarts = 10;
    std::uint64_t seed = 0;
    bool harden_mean = false;
    bool paper_normalizer = false;
    std::string out_path;
    std::vector<std::string> files;
};

int run_consensus(const ConsensusOptions& opt) {
    const InfoNormalizer normalizer =
        opt.paper_normalizer ? InfoNormalizer::pairs : InfoNormalizer::points;
    const FrechetSpec rho = parse_rho(opt.rho, normalizer);
    const Sample sample(load_members(opt.files));

    SolverConfig solver;
    solver.restarts = opt.restarts;
    const ConsensusResult result = consensus_solve(sample, rho, solver, opt.seed);

    ordered_json out;
    out["rho"] = opt.rho;
    out["n"] = sample.size();
    out["seed"] = opt.seed;
    out["restarts"] = result.restarts_used;
    out["converged"] = result.converged;
    out["variation"] = result.variation;
    out["mean"] = ordered_json::parse(write_partition_json(result.mean.canonical()));
    out["trace"] = result.trace;
    out["note"] = "reported mean is the best minimizer found; mean partitions need not be unique";
    if (opt.harden_mean) {
        const Partition hard = harden(result.mean);
        out["hardened_mean"] = ordered_json::parse(write_partition_json(hard.canonical()));
        out["hardened_variation"] = frechet_value(sample, hard, rho);
    }

    const std::string text = out.dump(2) + "\n";
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(opt.out_path, text);
    }
    return 0;
}

struct SampleOptions {
    std::string model = "label_noise";
    std::string base_path;
    double eps = 0.0;
    std::string concentration;
    std::uint64_t seed = 0;
    std::size_t n = 1;
    std::string out_path;
};

DistributionSpec make_distribution(const std::string& model, const std::string& base_path,
                                   double eps, const std::string& concentration,
                                   std::uint64_t seed) {
    const DistributionModel kind = [&] {
        if (model == "label_noise") return DistributionModel::label_noise;
        if (model == "dirichlet_soft") return DistributionModel::dirichlet_soft;
        throw InvalidParameter("unknown model '" + model + "'");
    }();
    DistributionSpec spec(kind, Partition(read_partition_file(base_path)), seed);
    spec.epsilon = eps;
    if (!concentration.empty()) spec.concentration = parse_reals(concentration);
    spec.validate();
    return spec;
}

int run_sample(const SampleOptions& opt) {
    const DistributionSpec spec =
        make_distribution(opt.model, opt.base_path, opt.eps, opt.concentration, opt.seed);
    const Sample drawn = sample(spec, opt.n);
    std::vector<PartitionMatrix> matrices;
    matrices.reserve(drawn.size());
    for (const Partition& member : drawn.members()) matrices.push_back(member.canonical());
    const std::string text = write_bundle_json(matrices) + "\n";
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(opt.out_path, text);
    }
    return 0;
}

struct ExpOptions {
    std::string model = "label_noise";
    std::string base_path;
    double eps = 0.0;
    std::string concentration;
    std::string rho = "l2sq";
    bool paper_normalizer = false;
    std::string grid = "10,100,1000";
    std::size_t n = 200;
    std::size_t reps = 50;
    std::size_t n_ref = 10000;
    std::uint64_t seed = 0;
    int restarts = 10;
    std::string out_path;
    std::string csv_path;
};

ExperimentConfig make_experiment_config(const ExpOptions& opt) {
    const InfoNormalizer normalizer =
        opt.paper_normalizer ? InfoNormalizer::pairs : InfoNormalizer::points;
    ExperimentConfig config(
        make_distribution(opt.model, opt.base_path, opt.eps, opt.concentration, opt.seed),
        parse_rho(opt.rho, normalizer), opt.rho);
    config.solver.restarts = opt.restarts;
    return config;
}

void emit_report(const std::string& json_text, const std::string& csv_text,
                 const std::string& out_path, const std::string& csv_path) {
    if (out_path.empty()) {
        std::cout << json_text;
        return;
    }
    write_text_file(out_path, json_text);
    write_text_file(csv_path.empty() ? sibling_csv_path(out_path) : csv_path, csv_text);
}

int run_exp_consistency(const ExpOptions& opt) {
    const ExperimentConfig config = make_experiment_config(opt);
    const ConsistencyReport report =
        run_consistency_experiment(config, parse_grid(opt.grid), opt.reps, opt.n_ref);
    emit_report(to_json(report), to_csv(report), opt.out_path, opt.csv_path);
    return 0;
}

int run_exp_clt(const ExpOptions& opt) {
    const ExperimentConfig config = make_experiment_config(opt);
    const CltReport report = run_clt_experiment(config, opt.n, opt.reps, opt.n_ref);
    emit_report(to_json(report), to_csv(report), opt.out_path, opt.csv_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition-space geometry, cluster criteria and consensus experiments"};
    app.require_subcommand(1);

    DistOptions dist_opt;
    CLI::App* dist = app.add_subcommand("dist", "l_p distance between two partitions");
    dist->add_option("--p", dist_opt.p, "norm order (p >= 1)")->capture_default_str();
    dist->add_option("fileX", dist_opt.file_x)->required();
    dist->add_option("fileY", dist_opt.file_y)->required();

    CompareOptions cmp_opt;
    CLI::App* cmp = app.add_subcommand("compare", "cluster-comparison criteria");
    cmp->add_option("--criterion", cmp_opt.criterion, "criterion name")->capture_default_str();
    cmp->add_flag("--all", cmp_opt.all, "emit every criterion and info measure as JSON");
    cmp->add_flag("--paper-normalizer", cmp_opt.paper_normalizer,
                  "normalize info measures by m(m-1)/2 instead of m");
    cmp->add_option("fileX", cmp_opt.file_x)->required();
    cmp->add_option("fileY", cmp_opt.file_y)->required();

    ConsensusOptions cons_opt;
    CLI::App* cons = app.add_subcommand("consensus", "mean partition of a sample");
    cons->add_option("--rho", cons_opt.rho, "l2sq, l2, l1 or a criterion name")
        ->capture_default_str();
    cons->add_option("--restarts", cons_opt.restarts)->capture_default_str();
    cons->add_option("--seed", cons_opt.seed)->capture_default_str();
    cons->add_flag("--harden", cons_opt.harden_mean,
                   "also report the argmax-rounded mean and its value");
    cons->add_flag("--paper-normalizer", cons_opt.paper_normalizer);
    cons->add_option("--out", cons_opt.out_path, "write the JSON result here");
    cons->add_option("files", cons_opt.files, "partition files or bundle files")->required();

    SampleOptions smp_opt;
    CLI::App* smp = app.add_subcommand("sample", "draw partitions from a distribution");
    smp->add_option("--model", smp_opt.model, "label_noise or dirichlet_soft")
        ->capture_default_str();
    smp->add_option("--base", smp_opt.base_path, "base partition file")->required();
    smp->add_option("--eps", smp_opt.eps, "label_noise flip probability")
        ->capture_default_str();
    smp->add_option("--conc", smp_opt.concentration,
                    "dirichlet concentration 'strength[,floor]'");
    smp->add_option("--seed", smp_opt.seed)->capture_default_str();
    smp->add_option("--n", smp_opt.n, "number of draws")->capture_default_str();
    smp->add_option("--out", smp_opt.out_path, "bundle file to write");

    CLI::App* exp = app.add_subcommand("exp", "Monte-Carlo experiments");
    exp->require_subcommand(1);
    ExpOptions exp_opt;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--model", exp_opt.model)->capture_default_str();
        sub->add_option("--base", exp_opt.base_path)->required();
        sub->add_option("--eps", exp_opt.eps)->capture_default_str();
        sub->add_option("--conc", exp_opt.concentration);
        sub->add_option("--rho", exp_opt.rho)->capture_default_str();
        sub->add_flag("--paper-normalizer", exp_opt.paper_normalizer);
        sub->add_option("--reps", exp_opt.reps)->capture_default_str();
        sub->add_option("--nref", exp_opt.n_ref)->capture_default_str();
        sub->add_option("--seed", exp_opt.seed)->capture_default_str();
        sub->add_option("--restarts", exp_opt.restarts)->capture_default_str();
        sub->add_option("--out", exp_opt.out_path, "report JSON path");
        sub->add_option("--csv", exp_opt.csv_path,
                        "raw replication CSV path (default: next to --out)");
    };
    CLI::App* exp_cons = exp->add_subcommand("consistency", "variation convergence over n");
    add_common(exp_cons);
    exp_cons->add_option("--n", exp_opt.grid, "comma-separated n grid")->capture_default_str();
    CLI::App* exp_clt = exp->add_subcommand("clt", "normality of sqrt(n)-scaled variations");
    add_common(exp_clt);
    exp_clt->add_option("--n", exp_opt.n, "sample size per replication")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*dist) return run_dist(dist_opt);
        if (*cmp) return run_compare(cmp_opt);
        if (*cons) return run_consensus(cons_opt);
        if (*smp) return run_sample(smp_opt);
        if (*exp_cons) return run_exp_consistency(exp_opt);
        if (*exp_clt) return run_exp_clt(exp_opt);
    } catch (const partspace::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
