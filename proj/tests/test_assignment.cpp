#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "partspace/assignment.hpp"

using namespace partspace;
using namespace partspace::testing;

TEST_CASE("zero diagonal picks the identity") {
    const AssignmentResult res = solve_assignment(CostMatrix(2, {0, 1, 1, 0}));
    CHECK(res.permutation == Permutation::identity(2));
    CHECK(res.objective == 0.0);
}

TEST_CASE("off-diagonal optimum picks the swap") {
    const AssignmentResult res = solve_assignment(CostMatrix(2, {2, 1, 1, 2}));
    CHECK(res.permutation == Permutation({1, 0}));
    CHECK(res.objective == 2.0);
}

TEST_CASE("all-equal costs tie-break to the identity") {
    const AssignmentResult res = solve_assignment(CostMatrix(2, {1, 1, 1, 1}));
    CHECK(res.permutation == Permutation::identity(2));
    CHECK(res.objective == 2.0);
    const AssignmentResult res4 = solve_assignment(CostMatrix(4, std::vector<double>(16, 3.0)));
    CHECK(res4.permutation == Permutation::identity(4));
}

TEST_CASE("maximize negates and keeps the tie-break") {
    const AssignmentResult res =
        solve_assignment(CostMatrix(2, {2, 1, 1, 2}), OptimizeSense::maximize);
    CHECK(res.permutation == Permutation::identity(2));
    CHECK(res.objective == 4.0);
}

TEST_CASE("non-finite costs are rejected") {
    CHECK_THROWS_AS(CostMatrix(2, {0, 1, std::nan(""), 0}), NonFiniteCost);
    CHECK_THROWS_AS(CostMatrix(2, {0, 1, INFINITY, 0}), NonFiniteCost);
}

TEST_CASE("alignment of a partition with itself is free") {
    Rng rng(11);
    const Partition x = random_partition(rng, 9, 3);
    const AssignmentResult res = optimal_alignment(x, x, 2.0);
    CHECK(res.objective == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("alignment objective on the worked pair") {
    const Partition x = partition_from_labels(std::vector<int>{0, 0, 1}, 2);
    const Partition y = partition_from_labels(std::vector<int>{0, 1, 1}, 2);
    const AssignmentResult l1 = optimal_alignment(x, y, 1.0);
    CHECK(l1.objective == doctest::Approx(2.0));
    const AssignmentResult l2 = optimal_alignment(x, y, 2.0);
    CHECK(l2.objective == doctest::Approx(2.0));
}

TEST_CASE("alignment argument checks") {
    const Partition x = partition_from_labels(std::vector<int>{0, 1}, 2);
    const Partition y = partition_from_labels(std::vector<int>{0, 1, 0}, 2);
    CHECK_THROWS_AS(optimal_alignment(x, y, 2.0), ShapeMismatch);
    CHECK_THROWS_AS(optimal_alignment(x, x, 0.5), InvalidOrder);
}

TEST_CASE("brute force handles the single-cluster case and guards factorials") {
    const Partition x = partition_from_labels(std::vector<int>{0, 0, 0}, 1);
    const AssignmentResult res = brute_force_alignment(x, x, 2.0);
    CHECK(res.permutation == Permutation::identity(1));
    CHECK(res.objective == 0.0);

    Rng rng(5);
    const Partition big = random_hard(rng, 12, 9);
    CHECK_THROWS_AS(brute_force_alignment(big, big, 2.0), TooManyClusters);
}

TEST_CASE("solver matches the factorial oracle on random pairs") {
    Rng rng(20240518);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t l = 2 + rng.uniform_index(5);  // 2..6
        const std::size_t m = l + rng.uniform_index(10);
        const Partition x = random_partition(rng, m, l);
        const Partition y = random_partition(rng, m, l);
        const double p = rng.bernoulli(0.5) ? 1.0 : 2.0;
        const AssignmentResult fast = optimal_alignment(x, y, p);
        const AssignmentResult slow = brute_force_alignment(x, y, p);
        REQUIRE(std::abs(fast.objective - slow.objective) <= 1e-9);
    }
}

TEST_CASE("returned objective beats random permutations") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t l = 3 + rng.uniform_index(4);
        const std::size_t m = l + rng.uniform_index(8);
        const Partition x = random_partition(rng, m, l);
        const Partition y = random_partition(rng, m, l);
        const CostMatrix cost = alignment_costs(x.canonical(), y.canonical(), 2.0);
        const AssignmentResult best = optimal_alignment(x, y, 2.0);
        for (int probe = 0; probe < 100; ++probe) {
            const Permutation perm = random_permutation(rng, l);
            double objective = 0.0;
            for (std::size_t k = 0; k < l; ++k) objective += cost(k, perm[k]);
            REQUIRE(best.objective <= objective + 1e-9);
        }
    }
}

TEST_CASE("alignment objective is symmetric") {
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t l = 2 + rng.uniform_index(4);
        const std::size_t m = l + rng.uniform_index(8);
        const Partition x = random_partition(rng, m, l);
        const Partition y = random_partition(rng, m, l);
        const double fwd = optimal_alignment(x, y, 2.0).objective;
        const double bwd = optimal_alignment(y, x, 2.0).objective;
        REQUIRE(std::abs(fwd - bwd) <= 1e-9);
    }
}

TEST_CASE("objective equals the sum of selected cost entries") {
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t l = 2 + rng.uniform_index(6);
        std::vector<double> entries(l * l);
        for (double& v : entries) v = rng.uniform(-5.0, 5.0);
        const CostMatrix cost(l, entries);
        const AssignmentResult res = solve_assignment(cost);
        double recomputed = 0.0;
        for (std::size_t k = 0; k < l; ++k) recomputed += cost(k, res.permutation[k]);
        REQUIRE(std::abs(res.objective - recomputed) <= 1e-9);
    }
}
