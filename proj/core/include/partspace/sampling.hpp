#pragma once

#include <cstdint>
#include <vector>

#include "partspace/consensus.hpp"
#include "partspace/partition.hpp"

namespace partspace {

enum class DistributionModel { label_noise, dirichlet_soft };

// A sampleable distribution over partition space, anchored at a base
// partition.
//
//  label_noise    each point keeps its base label with probability 1-epsilon
//                 and otherwise draws uniformly from all l labels. Base must
//                 be hard.
//  dirichlet_soft column j is Dirichlet with concentration
//                 strength * base_column_j + floor, so columns center on the
//                 base column and sharpen as strength/floor grows.
//                 concentration = {strength} or {strength, floor};
//                 floor defaults to 1.
struct DistributionSpec {
    DistributionModel model = DistributionModel::label_noise;
    Partition base;
    double epsilon = 0.0;                  // label_noise flip probability
    std::vector<double> concentration{};   // dirichlet_soft parameters
    std::uint64_t seed = 0;

    DistributionSpec(DistributionModel model, Partition base, std::uint64_t seed)
        : model(model), base(std::move(base)), seed(seed) {}

    void validate() const;  // throws InvalidParameter
};

// One draw. Member i depends only on (spec.seed, i), so extending n keeps
// earlier members unchanged.
Partition sample_one(const DistributionSpec& spec, std::uint64_t index);

// n i.i.d. draws. Throws InvalidParameter.
Sample sample(const DistributionSpec& spec, std::size_t n);

}  // namespace partspace
