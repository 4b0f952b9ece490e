#include "partspace/sampling.hpp"

#include "partspace/rng.hpp"

namespace partspace {

void DistributionSpec::validate() const {
    switch (model) {
        case DistributionModel::label_noise:
            if (epsilon < 0.0 || epsilon > 1.0) {
                throw InvalidParameter("epsilon must lie in [0, 1]");
            }
            if (!base.is_hard()) {
                throw InvalidParameter("label_noise requires a hard base partition");
            }
            break;
        case DistributionModel::dirichlet_soft:
            if (concentration.empty() || concentration.size() > 2) {
                throw InvalidParameter(
                    "dirichlet_soft takes concentration {strength} or {strength, floor}");
            }
            for (double v : concentration) {
                if (!(v > 0.0)) throw InvalidParameter("concentration entries must be > 0");
            }
            break;
    }
}

Partition sample_one(const DistributionSpec& spec, std::uint64_t index) {
    const std::size_t l = spec.base.n_clusters();
    const std::size_t m = spec.base.n_points();
    Rng rng(derive_seed(spec.seed, 0x73616d70ULL, index));

    if (spec.model == DistributionModel::label_noise) {
        std::vector<int> labels = spec.base.labels();
        for (std::size_t j = 0; j < m; ++j) {
            if (rng.bernoulli(spec.epsilon)) {
                labels[j] = static_cast<int>(rng.uniform_index(l));
            }
        }
        return partition_from_labels(labels, l);
    }

    const double strength = spec.concentration[0];
    const double floor = spec.concentration.size() > 1 ? spec.concentration[1] : 1.0;
    const PartitionMatrix& base = spec.base.canonical();
    std::vector<double> entries(l * m);
    std::vector<double> alpha(l);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < l; ++k) alpha[k] = strength * base(k, j) + floor;
        const std::vector<double> column = rng.dirichlet(alpha);
        for (std::size_t k = 0; k < l; ++k) entries[k * m + j] = column[k];
    }
    return Partition(PartitionMatrix::unchecked(l, m, std::move(entries)));
}

Sample sample(const DistributionSpec& spec, std::size_t n) {
    if (n == 0) throw InvalidParameter("sample size must be >= 1");
    spec.validate();
    std::vector<Partition> members;
    members.reserve(n);
    for (std::size_t i = 0; i < n; ++i) members.push_back(sample_one(spec, i));
    return Sample(std::move(members));
}

}  // namespace partspace
