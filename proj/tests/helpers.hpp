#pragma once

#include <vector>

#include "partspace/partition.hpp"
#include "partspace/rng.hpp"

namespace partspace::testing {

inline std::vector<int> random_labels(Rng& rng, std::size_t m, std::size_t l) {
    std::vector<int> labels(m);
    for (std::size_t j = 0; j < m; ++j) labels[j] = static_cast<int>(rng.uniform_index(l));
    return labels;
}

inline Partition random_hard(Rng& rng, std::size_t m, std::size_t l) {
    return partition_from_labels(random_labels(rng, m, l), l);
}

// Soft partition with Dirichlet(1,...,1) columns (uniform on the simplex).
inline Partition random_soft(Rng& rng, std::size_t m, std::size_t l) {
    std::vector<double> entries(l * m);
    const std::vector<double> alpha(l, 1.0);
    for (std::size_t j = 0; j < m; ++j) {
        const std::vector<double> column = rng.dirichlet(alpha);
        for (std::size_t k = 0; k < l; ++k) entries[k * m + j] = column[k];
    }
    return Partition(PartitionMatrix::unchecked(l, m, std::move(entries)));
}

inline Partition random_partition(Rng& rng, std::size_t m, std::size_t l) {
    return rng.bernoulli(0.5) ? random_hard(rng, m, l) : random_soft(rng, m, l);
}

inline Permutation random_permutation(Rng& rng, std::size_t l) {
    std::vector<std::size_t> mapping(l);
    for (std::size_t k = 0; k < l; ++k) mapping[k] = k;
    rng.shuffle(mapping);
    return Permutation(std::move(mapping));
}

// A representative of the same orbit under a random relabeling.
inline Partition shuffled_representative(Rng& rng, const Partition& x) {
    return Partition(x.canonical().permuted(random_permutation(rng, x.n_clusters())));
}

}  // namespace partspace::testing
