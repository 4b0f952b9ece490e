#include "partspace/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "partspace/assignment.hpp"
#include "partspace/rng.hpp"

namespace partspace {

Sample::Sample(std::vector<Partition> members) : members_(std::move(members)) {
    if (members_.empty()) throw EmptySample();
    const std::size_t l = members_.front().n_clusters();
    const std::size_t m = members_.front().n_points();
    for (const Partition& member : members_) {
        if (member.n_clusters() != l || member.n_points() != m) {
            throw ShapeMismatch("sample members have mixed shapes");
        }
    }
}

FrechetSpec FrechetSpec::metric(double p, double loss_exponent) {
    if (loss_exponent < 1.0) {
        throw InvalidParameter("loss exponent must be >= 1");
    }
    FrechetSpec spec;
    spec.metric_ = MetricSpec(p);
    spec.loss_exponent_ = loss_exponent;
    return spec;
}

FrechetSpec FrechetSpec::criterion(CriterionSpec criterion, InfoNormalizer normalizer) {
    FrechetSpec spec;
    spec.criterion_ = criterion;
    spec.normalizer_ = normalizer;
    return spec;
}

double FrechetSpec::rho(const Partition& x, const Partition& z) const {
    if (criterion_) return partspace::dissimilarity(x, z, *criterion_, normalizer_);
    const double d = delta_p(x, z, metric_);
    if (loss_exponent_ == 1.0) return d;
    if (loss_exponent_ == 2.0) return d * d;
    return std::pow(d, loss_exponent_);
}

double frechet_value(const Sample& sample, const Partition& z, const FrechetSpec& spec) {
    if (z.n_clusters() != sample.n_clusters() || z.n_points() != sample.n_points()) {
        throw ShapeMismatch();
    }
    double total = 0.0;
    for (const Partition& member : sample.members()) total += spec.rho(member, z);
    return total / static_cast<double>(sample.size());
}

namespace {

// Alignment of `member` onto working matrix `target` under squared l_2:
// permutation phi minimizing sum_k ||target_k - member_phi(k)||^2.
Permutation align_to(const PartitionMatrix& target, const PartitionMatrix& member) {
    return solve_assignment(alignment_costs(target, member, 2.0)).permutation;
}

double squared_l2_gap(const PartitionMatrix& a, const PartitionMatrix& b,
                      const Permutation& perm_b) {
    double acc = 0.0;
    for (std::size_t k = 0; k < a.n_clusters(); ++k) {
        const auto ra = a.row(k);
        const auto rb = b.row(perm_b[k]);
        for (std::size_t j = 0; j < a.n_points(); ++j) {
            const double d = ra[j] - rb[j];
            acc += d * d;
        }
    }
    return acc;
}

struct MmState {
    PartitionMatrix z;
    std::vector<Permutation> perms;
    std::vector<double> trace;
    double value = 0.0;
    bool converged = false;
};

// One alignment pass: optimal permutations of every member against z and the
// resulting Fréchet value (mean squared aligned distance).
void align_pass(const PartitionMatrix& z, const std::vector<PartitionMatrix>& members,
                std::vector<Permutation>& perms, double& value) {
    perms.clear();
    perms.reserve(members.size());
    double total = 0.0;
    for (const PartitionMatrix& member : members) {
        Permutation perm = align_to(z, member);
        total += squared_l2_gap(z, member, perm);
        perms.push_back(std::move(perm));
    }
    value = total / static_cast<double>(members.size());
}

PartitionMatrix average_aligned(const std::vector<PartitionMatrix>& members,
                                const std::vector<Permutation>& perms) {
    const std::size_t l = members.front().n_clusters();
    const std::size_t m = members.front().n_points();
    std::vector<double> acc(l * m, 0.0);
    for (std::size_t i = 0; i < members.size(); ++i) {
        const PartitionMatrix& member = members[i];
        const Permutation& perm = perms[i];
        for (std::size_t k = 0; k < l; ++k) {
            const auto row = member.row(perm[k]);
            for (std::size_t j = 0; j < m; ++j) acc[k * m + j] += row[j];
        }
    }
    const double inv = 1.0 / static_cast<double>(members.size());
    for (double& v : acc) v *= inv;
    return PartitionMatrix::unchecked(l, m, std::move(acc));
}

MmState run_mm(PartitionMatrix init, const std::vector<PartitionMatrix>& members,
               const MeanOptions& opts) {
    MmState state{std::move(init), {}, {}, 0.0, false};
    align_pass(state.z, members, state.perms, state.value);
    state.trace.push_back(state.value);

    for (int iter = 0; iter < opts.max_iter; ++iter) {
        PartitionMatrix next = average_aligned(members, state.perms);
        std::vector<Permutation> next_perms;
        double next_value = 0.0;
        align_pass(next, members, next_perms, next_value);

        state.trace.push_back(next_value);
        const double decrease = state.value - next_value;
        const bool same_alignments = next_perms == state.perms;
        state.z = std::move(next);
        state.perms = std::move(next_perms);
        state.value = next_value;
        if (decrease < opts.tol || same_alignments) {
            state.converged = true;
            break;
        }
    }
    return state;
}

// Lexicographic canonical-matrix order; total among equal-shape partitions.
bool canonical_less(const Partition& a, const Partition& b) {
    const auto da = a.canonical().data();
    const auto db = b.canonical().data();
    return std::lexicographical_compare(da.begin(), da.end(), db.begin(), db.end());
}

// Merge rule for restarts: strictly better value wins; near-equal values are
// resolved by canonical order so the outcome is schedule-independent.
bool improves(double value, const Partition& mean, double best_value,
              const std::optional<Partition>& best_mean) {
    if (!best_mean) return true;
    if (value < best_value - 1e-12) return true;
    if (value > best_value + 1e-12) return false;
    return canonical_less(mean, *best_mean);
}

std::vector<std::size_t> pick_distinct(Rng& rng, std::size_t count, std::size_t limit) {
    std::vector<std::size_t> all(limit);
    std::iota(all.begin(), all.end(), std::size_t{0});
    rng.shuffle(all);
    all.resize(std::min(count, limit));
    return all;
}

}  // namespace

ConsensusResult mean_partition_l2(const Sample& sample, const MeanOptions& opts) {
    const std::size_t n = sample.size();
    const std::size_t l = sample.n_clusters();
    const std::size_t m = sample.n_points();
    const int restarts = std::max(1, opts.restarts);

    std::vector<PartitionMatrix> members;
    members.reserve(n);
    for (const Partition& member : sample.members()) members.push_back(member.canonical());

    Rng rng(derive_seed(opts.seed, 0x6d65616eULL));  // init stream

    // Rank a pool of members by their Fréchet value and keep the best
    // ceil(restarts/2); the rest of the restarts start from random convex
    // mixtures of members.
    const std::size_t member_inits = static_cast<std::size_t>((restarts + 1) / 2);
    std::vector<std::size_t> pool = pick_distinct(rng, std::max(opts.max_scored_members,
                                                                member_inits), n);
    std::vector<std::pair<double, std::size_t>> scored;
    scored.reserve(pool.size());
    for (std::size_t idx : pool) {
        std::vector<Permutation> perms;
        double value = 0.0;
        align_pass(members[idx], members, perms, value);
        scored.emplace_back(value, idx);
    }
    std::sort(scored.begin(), scored.end());

    std::vector<PartitionMatrix> inits;
    inits.reserve(static_cast<std::size_t>(restarts));
    for (std::size_t i = 0; i < scored.size() && inits.size() < member_inits; ++i) {
        inits.push_back(members[scored[i].second]);
    }
    while (inits.size() < static_cast<std::size_t>(restarts)) {
        const std::size_t mix_count = std::min<std::size_t>(n, 8);
        const std::vector<std::size_t> chosen = pick_distinct(rng, mix_count, n);
        const std::vector<double> weights =
            rng.dirichlet(std::vector<double>(chosen.size(), 1.0));
        std::vector<double> acc(l * m, 0.0);
        for (std::size_t c = 0; c < chosen.size(); ++c) {
            const PartitionMatrix& member = members[chosen[c]];
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += weights[c] * member.data()[i];
        }
        inits.push_back(PartitionMatrix::unchecked(l, m, std::move(acc)));
    }

    std::optional<Partition> best_mean;
    std::optional<MmState> best_state;
    double best_value = std::numeric_limits<double>::infinity();
    for (PartitionMatrix& init : inits) {
        MmState state = run_mm(std::move(init), members, opts);
        Partition mean(state.z);
        if (improves(state.value, mean, best_value, best_mean)) {
            best_value = state.value;
            best_mean = std::move(mean);
            best_state = std::move(state);
        }
    }

    // Alignments are reported against the canonical mean: canonical row k is
    // working row sort(k), so the member row aligned to it is perm[sort(k)].
    const PartitionMatrix& z = best_state->z;
    std::vector<std::size_t> sort_perm_map(l);
    {
        std::vector<std::size_t> order(l);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const auto ra = z.row(a);
            const auto rb = z.row(b);
            return std::lexicographical_compare(rb.begin(), rb.end(), ra.begin(), ra.end());
        });
        sort_perm_map = order;
    }
    const Permutation sort_perm(sort_perm_map);
    std::vector<Permutation> alignments;
    alignments.reserve(n);
    for (const Permutation& perm : best_state->perms) {
        alignments.push_back(sort_perm.compose(perm));
    }

    return {std::move(*best_mean), best_state->value, std::move(alignments),
            std::move(best_state->trace), restarts, best_state->converged};
}

ConsensusResult mean_partition_search(const Sample& sample, const FrechetSpec& spec,
                                      const SearchOptions& opts) {
    const std::size_t n = sample.size();
    const std::size_t l = sample.n_clusters();
    const std::size_t m = sample.n_points();
    const int restarts = std::max(1, opts.restarts);

    Rng rng(derive_seed(opts.seed, 0x736561ULL));  // search stream

    const auto evaluate = [&](const std::vector<int>& labels) {
        return frechet_value(sample, partition_from_labels(labels, l), spec);
    };

    std::optional<Partition> best_mean;
    double best_value = std::numeric_limits<double>::infinity();
    std::vector<double> best_trace;
    bool best_converged = false;

    for (int restart = 0; restart < restarts; ++restart) {
        // Half the restarts descend from sample members, half from uniform
        // random hard labelings.
        std::vector<int> labels;
        if (restart % 2 == 0) {
            const std::size_t idx = rng.uniform_index(n);
            labels = sample[idx].labels();
        } else {
            labels.resize(m);
            for (std::size_t j = 0; j < m; ++j) {
                labels[j] = static_cast<int>(rng.uniform_index(l));
            }
        }

        std::vector<std::size_t> scan(m);
        std::iota(scan.begin(), scan.end(), std::size_t{0});
        rng.shuffle(scan);

        double value = evaluate(labels);
        std::vector<double> trace{value};
        int moves = 0;
        bool converged = false;
        bool capped = false;
        while (!capped) {
            bool improved = false;
            for (std::size_t j : scan) {
                if (moves >= opts.max_moves) {
                    capped = true;
                    break;
                }
                const int current = labels[j];
                int best_label = current;
                double best_move_value = value;
                for (int target = 0; target < static_cast<int>(l); ++target) {
                    if (target == current) continue;
                    labels[j] = target;
                    const double candidate = evaluate(labels);
                    if (candidate < best_move_value - 1e-12) {
                        best_move_value = candidate;
                        best_label = target;
                    }
                }
                labels[j] = best_label;
                if (best_label != current) {
                    value = best_move_value;
                    trace.push_back(value);
                    improved = true;
                    ++moves;
                }
            }
            if (!capped && !improved) {
                converged = true;
                break;
            }
        }

        Partition mean = partition_from_labels(labels, l);
        if (improves(value, mean, best_value, best_mean)) {
            best_value = value;
            best_mean = std::move(mean);
            best_trace = std::move(trace);
            best_converged = converged;
        }
    }

    return {std::move(*best_mean), best_value, {}, std::move(best_trace), restarts,
            best_converged};
}

std::vector<std::vector<int>> enumerate_hard_labelings(std::size_t m, std::size_t l) {
    // Restricted growth strings: labels[0] = 0 and labels[j] <= max(prefix)+1,
    // capped at l-1. One string per orbit of hard partitions.
    std::vector<std::vector<int>> out;
    if (m == 0 || l == 0) return out;
    std::vector<int> labels(m, 0);
    const auto recurse = [&](auto&& self, std::size_t j, int used) -> void {
        if (j == m) {
            out.push_back(labels);
            return;
        }
        const int limit = std::min(used + 1, static_cast<int>(l));
        for (int k = 0; k < limit; ++k) {
            labels[j] = k;
            self(self, j + 1, std::max(used, k + 1));
        }
    };
    recurse(recurse, 1, 1);
    return out;
}

ConsensusResult brute_force_mean(const Sample& sample, const FrechetSpec& spec,
                                 std::size_t max_points) {
    const std::size_t l = sample.n_clusters();
    const std::size_t m = sample.n_points();
    if (m > max_points) {
        throw TooLarge("brute force mean refused: " + std::to_string(m) + " points (limit " +
                       std::to_string(max_points) + ")");
    }
    if (l > 3) {
        throw TooLarge("brute force mean refused: " + std::to_string(l) + " clusters (limit 3)");
    }

    std::optional<Partition> best_mean;
    double best_value = std::numeric_limits<double>::infinity();
    for (const std::vector<int>& labels : enumerate_hard_labelings(m, l)) {
        Partition candidate = partition_from_labels(labels, l);
        const double value = frechet_value(sample, candidate, spec);
        if (improves(value, candidate, best_value, best_mean)) {
            best_value = value;
            best_mean = std::move(candidate);
        }
    }
    return {std::move(*best_mean), best_value, {}, {best_value}, 0, true};
}

double variation(const Sample& sample, const FrechetSpec& spec, std::uint64_t seed) {
    if (spec.is_squared_l2()) {
        MeanOptions opts;
        opts.seed = seed;
        return mean_partition_l2(sample, opts).variation;
    }
    SearchOptions opts;
    opts.seed = seed;
    return mean_partition_search(sample, spec, opts).variation;
}

Partition harden(const Partition& x) {
    const std::vector<int> labels = x.labels();
    return partition_from_labels(labels, x.n_clusters());
}

}  // namespace partspace
