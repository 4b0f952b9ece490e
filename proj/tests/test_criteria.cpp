#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "partspace/assignment.hpp"
#include "partspace/criteria.hpp"

using namespace partspace;
using namespace partspace::testing;

namespace {

const Partition kX = partition_from_labels(std::vector<int>{0, 0, 1}, 2);
const Partition kY = partition_from_labels(std::vector<int>{0, 1, 1}, 2);

// Pair-enumeration oracle for hard partitions: counts of co-clustered pairs
// read straight off the label vectors. Independent of the chi formulas.
struct PairCountOracle {
    long m11 = 0, m10 = 0, m01 = 0, m00 = 0;
    PairCountOracle(const std::vector<int>& lx, const std::vector<int>& ly) {
        for (std::size_t r = 0; r < lx.size(); ++r) {
            for (std::size_t s = r + 1; s < lx.size(); ++s) {
                const bool together_x = lx[r] == lx[s];
                const bool together_y = ly[r] == ly[s];
                if (together_x && together_y) ++m11;
                else if (together_x) ++m10;
                else if (together_y) ++m01;
                else ++m00;
            }
        }
    }
};

// Set-cardinality oracle for hard partitions.
struct SetCountOracle {
    std::vector<long> x, y, z;  // z row-major l x l
    SetCountOracle(const std::vector<int>& lx, const std::vector<int>& ly, std::size_t l)
        : x(l, 0), y(l, 0), z(l * l, 0) {
        for (std::size_t j = 0; j < lx.size(); ++j) {
            ++x[lx[j]];
            ++y[ly[j]];
            ++z[static_cast<std::size_t>(lx[j]) * l + static_cast<std::size_t>(ly[j])];
        }
    }
};

Partition uniform_soft(std::size_t m, std::size_t l) {
    std::vector<double> entries(l * m, 1.0 / static_cast<double>(l));
    return Partition(PartitionMatrix::unchecked(l, m, std::move(entries)));
}

}  // namespace

TEST_CASE("compatibility matrix of a hard partition is the co-membership indicator") {
    const std::vector<double> c = compatibility_matrix(kX);
    const std::vector<double> expected{1, 1, 0, 1, 1, 0, 0, 0, 1};
    REQUIRE(c.size() == expected.size());
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i] == doctest::Approx(expected[i]));
}

TEST_CASE("compatibility matrix of the uniform soft partition") {
    const std::vector<double> c = compatibility_matrix(uniform_soft(2, 2));
    for (double v : c) CHECK(v == doctest::Approx(0.5));
}

TEST_CASE("compatibility entries stay inside the unit interval") {
    Rng rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t l = 2 + rng.uniform_index(4);
        const std::size_t m = l + rng.uniform_index(8);
        const Partition x = random_partition(rng, m, l);
        for (double v : compatibility_matrix(x)) {
            REQUIRE(v >= -1e-12);
            REQUIRE(v <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("confusion counts on the worked pair") {
    const ConfusionCounts c = confusion(kX, kY);
    CHECK(c.m11 == doctest::Approx(0.0));
    CHECK(c.m10 == doctest::Approx(1.0));
    CHECK(c.m01 == doctest::Approx(1.0));
    CHECK(c.m00 == doctest::Approx(1.0));
    CHECK(c.n_pairs == doctest::Approx(3.0));
}

TEST_CASE("confusion of identical partitions with clusters {1,2},{3}") {
    const ConfusionCounts c = confusion(kX, kX);
    CHECK(c.m11 == doctest::Approx(1.0));
    CHECK(c.m10 == doctest::Approx(0.0));
    CHECK(c.m01 == doctest::Approx(0.0));
    CHECK(c.m00 == doctest::Approx(2.0));
}

TEST_CASE("confusion of the uniform soft pair") {
    const Partition u = uniform_soft(2, 2);
    const ConfusionCounts c = confusion(u, u);
    CHECK(c.m11 == doctest::Approx(0.25));
    CHECK(c.m11 + c.m10 + c.m01 + c.m00 == doctest::Approx(1.0));
    CHECK(c.n_pairs == doctest::Approx(1.0));
}

TEST_CASE("confusion guards") {
    CHECK_THROWS_AS(confusion(kX, partition_from_labels(std::vector<int>{0, 1}, 2)),
                    PointCountMismatch);
    const Partition single = partition_from_labels(std::vector<int>{0}, 1);
    CHECK_THROWS_AS(confusion(single, single), SinglePoint);
}

TEST_CASE("confusion equals the pair-enumeration oracle on hard pairs") {
    Rng rng(20240521);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t l = 2 + rng.uniform_index(4);
        const std::size_t m = std::max<std::size_t>(2, l + rng.uniform_index(10));
        const std::vector<int> lx = random_labels(rng, m, l);
        const std::vector<int> ly = random_labels(rng, m, l);
        const PairCountOracle oracle(lx, ly);
        const ConfusionCounts c =
            confusion(partition_from_labels(lx, l), partition_from_labels(ly, l));
        REQUIRE(c.m11 == doctest::Approx(static_cast<double>(oracle.m11)));
        REQUIRE(c.m10 == doctest::Approx(static_cast<double>(oracle.m10)));
        REQUIRE(c.m01 == doctest::Approx(static_cast<double>(oracle.m01)));
        REQUIRE(c.m00 == doctest::Approx(static_cast<double>(oracle.m00)));
    }
}

TEST_CASE("confusion masses are non-negative and sum to the pair count") {
    Rng rng(67);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t l = 2 + rng.uniform_index(4);
        const std::size_t m = std::max<std::size_t>(2, l + rng.uniform_index(10));
        const Partition x = random_soft(rng, m, l);
        const Partition y = random_soft(rng, m, l);
        const ConfusionCounts c = confusion(x, y);
        REQUIRE(c.m11 >= -1e-12);
        REQUIRE(c.m10 >= -1e-12);
        REQUIRE(c.m01 >= -1e-12);
        REQUIRE(c.m00 >= -1e-12);
        REQUIRE(std::abs(c.m11 + c.m10 + c.m01 + c.m00 - c.n_pairs) <= 1e-9);
    }
}

TEST_CASE("streaming chi sums match the materialized ones") {
    Rng rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t l = 2 + rng.uniform_index(4);
        const std::size_t m = std::max<std::size_t>(2, l + rng.uniform_index(20));
        const Partition x = random_partition(rng, m, l);
        const Partition y = random_partition(rng, m, l);
        const ConfusionCounts a = confusion(x, y, ChiMode::materialize);
        const ConfusionCounts b = confusion(x, y, ChiMode::stream);
        REQUIRE(std::abs(a.m11 - b.m11) <= 1e-9);
        REQUIRE(std::abs(a.m10 - b.m10) <= 1e-9);
        REQUIRE(std::abs(a.m01 - b.m01) <= 1e-9);
        REQUIRE(std::abs(a.m00 - b.m00) <= 1e-9);
    }
}

TEST_CASE("pair criteria on identical and worked pairs") {
    CHECK(pair_criterion(kX, kX, CriterionKind::rand) == doctest::Approx(1.0));
    CHECK(pair_criterion(kX, kX, CriterionKind::jaccard) == doctest::Approx(1.0));
    CHECK(pair_criterion(kX, kY, CriterionKind::rand) == doctest::Approx(1.0 / 3.0));
    // m11 = 0 but the denominator is 2, so jaccard is 0 and raises nothing.
    CHECK(pair_criterion(kX, kY, CriterionKind::jaccard) == doctest::Approx(0.0));
}

TEST_CASE("degenerate denominators raise a typed error") {
    const Partition a = partition_from_labels(std::vector<int>{0, 1}, 2);
    const Partition b = partition_from_labels(std::vector<int>{0, 1}, 2);
    const ConfusionCounts c = confusion(a, b);
    CHECK(c.m11 == doctest::Approx(0.0));  // the single pair is split in both
    CHECK(c.m00 == doctest::Approx(1.0));
    // Singleton clusters everywhere leave m11 + m10 = 0, so wallace2 hits a
    // zero denominator.
    CHECK_THROWS_AS(pair_criterion(a, b, CriterionKind::wallace2), DegeneratePartition);
}

TEST_CASE("the two wallace indices condition on different partitions") {
    // X = {z1,z2},{z3} against the all-in-one partition: every X-co-clustered
    // pair is Y-co-clustered (wallace2 = 1) but not vice versa.
    const Partition all_in_one = partition_from_labels(std::vector<int>{0, 0, 0}, 2);
    const ConfusionCounts c = confusion(kX, all_in_one);
    CHECK(c.m11 == doctest::Approx(1.0));
    CHECK(c.m10 == doctest::Approx(0.0));
    CHECK(c.m01 == doctest::Approx(2.0));
    CHECK(pair_criterion(kX, all_in_one, CriterionKind::wallace1) ==
          doctest::Approx(1.0 / 3.0));
    CHECK(pair_criterion(kX, all_in_one, CriterionKind::wallace2) == doctest::Approx(1.0));
}

TEST_CASE("match counts on the worked pair") {
    const MatchCounts c = match_counts(kX, kY);
    REQUIRE(c.n_clusters == 2);
    CHECK(c.x[0] == doctest::Approx(2.0));
    CHECK(c.x[1] == doctest::Approx(1.0));
    CHECK(c.y[0] == doctest::Approx(1.0));
    CHECK(c.y[1] == doctest::Approx(2.0));
    CHECK(c.z[0] == doctest::Approx(1.0));
    CHECK(c.z[1] == doctest::Approx(1.0));
    CHECK(c.z[2] == doctest::Approx(0.0));
    CHECK(c.z[3] == doctest::Approx(1.0));
}

TEST_CASE("self overlap of a hard partition puts the cluster mass on the diagonal") {
    Rng rng(73);
    const Partition x = random_hard(rng, 9, 3);
    const MatchCounts c = match_counts(x, x);
    for (std::size_t p = 0; p < c.n_clusters; ++p) {
        CHECK(c.z[p * c.n_clusters + p] == doctest::Approx(c.x[p]));
    }
}

TEST_CASE("uniform soft partition against itself") {
    const Partition u = uniform_soft(4, 2);
    const MatchCounts c = match_counts(u, u);
    CHECK(c.x[0] == doctest::Approx(2.0));
    CHECK(c.x[1] == doctest::Approx(2.0));
    for (double v : c.z) CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("match counts equal the set-cardinality oracle on hard pairs") {
    Rng rng(20240522);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t l = 2 + rng.uniform_index(4);
        const std::size_t m = l + rng.uniform_index(10);
        const Partition x = partition_from_labels(random_labels(rng, m, l), l);
        const Partition y = partition_from_labels(random_labels(rng, m, l), l);
        // Count set cardinalities on the canonical labelings, which is what
        // match_counts computes its inner products on.
        const SetCountOracle oracle(x.labels(), y.labels(), l);
        const MatchCounts c = match_counts(x, y);
        for (std::size_t p = 0; p < l; ++p) {
            REQUIRE(c.x[p] == doctest::Approx(static_cast<double>(oracle.x[p])));
            REQUIRE(c.y[p] == doctest::Approx(static_cast<double>(oracle.y[p])));
        }
        for (std::size_t i = 0; i < l * l; ++i) {
            REQUIRE(c.z[i] == doctest::Approx(static_cast<double>(oracle.z[i])));
        }
    }
}

TEST_CASE("cluster masses conserve the point count, rows and columns of z") {
    Rng rng(79);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t l = 2 + rng.uniform_index(4);
        const std::size_t m = l + rng.uniform_index(10);
        const Partition x = random_soft(rng, m, l);
        const Partition y = random_soft(rng, m, l);
        const MatchCounts c = match_counts(x, y);
        double sx = 0.0, sy = 0.0;
        for (double v : c.x) sx += v;
        for (double v : c.y) sy += v;
        REQUIRE(std::abs(sx - c.m) <= 1e-9);
        REQUIRE(std::abs(sy - c.m) <= 1e-9);
        for (std::size_t p = 0; p < l; ++p) {
            double row = 0.0, col = 0.0;
            for (std::size_t q = 0; q < l; ++q) {
                row += c.z[p * l + q];
                col += c.z[q * l + p];
            }
            REQUIRE(std::abs(row - c.x[p]) <= 1e-9);
            REQUIRE(std::abs(col - c.y[p]) <= 1e-9);
        }
    }
}

TEST_CASE("match criteria on the worked pair") {
    CHECK(match_criterion(kX, kX, CriterionKind::mirkin) == doctest::Approx(0.0));
    CHECK(match_criterion(kX, kY, CriterionKind::mirkin) == doctest::Approx(4.0));
    CHECK(match_criterion(kX, kY, CriterionKind::meila_heckerman) ==
          doctest::Approx(2.0 / 3.0));
    CHECK(match_criterion(kX, kY, CriterionKind::van_dongen) == doctest::Approx(2.0));
}

TEST_CASE("mirkin equals twice the disagreement mass on hard pairs") {
    Rng rng(83);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t l = 2 + rng.uniform_index(4);
        const std::size_t m = std::max<std::size_t>(2, l + rng.uniform_index(10));
        const Partition x = random_hard(rng, m, l);
        const Partition y = random_hard(rng, m, l);
        const double mirkin = match_criterion(x, y, CriterionKind::mirkin);
        const ConfusionCounts c = confusion(x, y);
        REQUIRE(std::abs(mirkin - 2.0 * (c.m10 + c.m01)) <= 1e-9);
    }
}

TEST_CASE("matched-cluster mass equals factorial enumeration") {
    Rng rng(20240523);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t l = 2 + rng.uniform_index(5);  // 2..6
        const std::size_t m = l + rng.uniform_index(8);
        const Partition x = random_partition(rng, m, l);
        const Partition y = random_partition(rng, m, l);
        const MatchCounts c = match_counts(x, y);

        std::vector<std::size_t> perm(l);
        for (std::size_t k = 0; k < l; ++k) perm[k] = k;
        double best = -1.0;
        do {
            double total = 0.0;
            for (std::size_t p = 0; p < l; ++p) total += c.z[p * l + perm[p]];
            best = std::max(best, total);
        } while (std::next_permutation(perm.begin(), perm.end()));

        const double solved = match_criterion(x, y, CriterionKind::meila_heckerman);
        REQUIRE(std::abs(solved - best / c.m) <= 1e-12);
    }
}

TEST_CASE("information measures on a hard partition with cluster sizes (2,1)") {
    const InfoMeasures info = info_measures(kX, kX);
    const double expected = -(2.0 / 3.0) * std::log(2.0 / 3.0) - (1.0 / 3.0) * std::log(1.0 / 3.0);
    CHECK(info.h_x == doctest::Approx(expected).epsilon(1e-9));
    CHECK(expected == doctest::Approx(0.6365142).epsilon(1e-6));
    CHECK(info.mutual_info == doctest::Approx(info.h_x).epsilon(1e-9));
}

TEST_CASE("mutual information of the worked pair") {
    const InfoMeasures info = info_measures(kX, kY);
    const double expected = (1.0 / 3.0) * (2.0 * std::log(1.5) + std::log(0.75));
    CHECK(info.mutual_info == doctest::Approx(expected).epsilon(1e-9));
    CHECK(expected == doctest::Approx(0.1744160).epsilon(1e-6));
}

TEST_CASE("information identities hold on random pairs") {
    Rng rng(89);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t l = 2 + rng.uniform_index(4);
        const std::size_t m = l + rng.uniform_index(10);
        const Partition x = random_partition(rng, m, l);
        const Partition y = random_partition(rng, m, l);
        const InfoMeasures info = info_measures(x, y);
        REQUIRE(std::abs(info.h_joint - (info.h_y + info.h_x_given_y)) <= 1e-9);
        REQUIRE(std::abs(info.mutual_info - (info.h_x - info.h_x_given_y)) <= 1e-9);
        REQUIRE(info.mutual_info >= -1e-9);
    }
}

TEST_CASE("pairs normalizer reproduces the alternative formulas") {
    const InfoMeasures info = info_measures(kX, kX, InfoNormalizer::pairs);
    const double n = 3.0;  // m(m-1)/2 for m = 3
    const double expected = -(2.0 / n) * std::log(2.0 / n) - (1.0 / n) * std::log(1.0 / n);
    CHECK(info.h_x == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("criterion values are representative-invariant") {
    Rng rng(20240524);
    const CriterionKind kinds[] = {
        CriterionKind::wallace1,   CriterionKind::wallace2,        CriterionKind::rand,
        CriterionKind::fowlkes_mallows, CriterionKind::jaccard,    CriterionKind::mirkin,
        CriterionKind::meila_heckerman, CriterionKind::van_dongen,
        CriterionKind::mutual_info, CriterionKind::nmi};
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t l = 2 + rng.uniform_index(3);
        const std::size_t m = 2 + l + rng.uniform_index(8);
        const Partition x = random_soft(rng, m, l);
        const Partition y = random_soft(rng, m, l);
        const Partition xr = shuffled_representative(rng, x);
        const Partition yr = shuffled_representative(rng, y);
        for (CriterionKind kind : kinds) {
            const double base = criterion_value(x, y, kind);
            const double moved = criterion_value(xr, yr, kind);
            REQUIRE(std::abs(base - moved) <= 1e-9);
        }
    }
}

TEST_CASE("rand moves continuously under column perturbations") {
    Rng rng(97);
    for (double eta : {1e-3, 1e-5}) {
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t l = 2 + rng.uniform_index(3);
            const std::size_t m = 2 + l + rng.uniform_index(8);
            const Partition x = random_soft(rng, m, l);
            const Partition y = random_soft(rng, m, l);
            const double base = pair_criterion(x, y, CriterionKind::rand);

            // Perturb every entry by up to eta, renormalize the columns.
            std::vector<double> entries(x.canonical().data().begin(),
                                        x.canonical().data().end());
            for (double& v : entries) {
                v = std::max(0.0, v + rng.uniform(-eta, eta));
            }
            const Partition moved(PartitionMatrix::unchecked(l, m, std::move(entries)));
            const double shifted = pair_criterion(moved, y, CriterionKind::rand);
            REQUIRE(std::abs(shifted - base) <= 10.0 * eta);
        }
    }
}

TEST_CASE("dissimilarity flips similarities and keeps dissimilarities") {
    CHECK(dissimilarity(kX, kX, CriterionSpec(CriterionKind::rand)) == doctest::Approx(-1.0));
    CHECK(dissimilarity(kX, kY, CriterionSpec(CriterionKind::mirkin)) ==
          doctest::Approx(match_criterion(kX, kY, CriterionKind::mirkin)));
    CHECK(dissimilarity(kX, kY, CriterionSpec(CriterionKind::rand)) ==
          doctest::Approx(-1.0 / 3.0));
}

TEST_CASE("criterion specs reject inconsistent orientations") {
    CHECK_THROWS_AS(CriterionSpec(CriterionKind::rand, Orientation::dissimilarity),
                    InvalidParameter);
    CHECK_NOTHROW(CriterionSpec(CriterionKind::mirkin, Orientation::dissimilarity));
}

TEST_CASE("criterion names round-trip") {
    for (CriterionKind kind :
         {CriterionKind::wallace1, CriterionKind::wallace2, CriterionKind::rand,
          CriterionKind::fowlkes_mallows, CriterionKind::jaccard, CriterionKind::mirkin,
          CriterionKind::meila_heckerman, CriterionKind::van_dongen, CriterionKind::mutual_info,
          CriterionKind::nmi}) {
        CHECK(criterion_from_name(criterion_name(kind)) == kind);
    }
    CHECK_THROWS_AS(criterion_from_name("adjusted_rand"), InvalidParameter);
}

TEST_CASE("confusion tolerates different cluster counts") {
    // Same labeling, one padded with an extra (empty) cluster.
    const Partition narrow = partition_from_labels(std::vector<int>{0, 0, 1}, 2);
    const Partition wide = partition_from_labels(std::vector<int>{0, 0, 1}, 3);
    const ConfusionCounts c = confusion(narrow, wide);
    CHECK(c.m11 == doctest::Approx(1.0));
    CHECK(c.m10 == doctest::Approx(0.0));
    CHECK(c.m01 == doctest::Approx(0.0));
    CHECK(pair_criterion(narrow, wide, CriterionKind::rand) == doctest::Approx(1.0));
}
