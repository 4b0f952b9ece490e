#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "partspace/partition.hpp"

namespace partspace {

// Generalized 2x2 confusion quantities: co-membership mass of point pairs
// under both, one, or neither partition. On hard inputs these are the
// classical pair counts; they always sum to n_pairs = m(m-1)/2.
struct ConfusionCounts {
    double m11 = 0.0;
    double m10 = 0.0;
    double m01 = 0.0;
    double m00 = 0.0;
    double n_pairs = 0.0;
};

// Cluster masses and the overlap (inner product) matrix of two partitions.
// Row sums of z equal x, column sums equal y, and both sum to m.
struct MatchCounts {
    std::vector<double> x;  // length l
    std::vector<double> y;  // length l
    std::vector<double> z;  // l x l, row-major: z[p*l+q] = <x_row_p, y_row_q>
    std::size_t n_clusters = 0;
    double m = 0.0;
};

// Entropies in nats of the cluster-mass distributions.
struct InfoMeasures {
    double h_x = 0.0;
    double h_y = 0.0;
    double h_joint = 0.0;
    double h_x_given_y = 0.0;
    double mutual_info = 0.0;
};

enum class CriterionKind {
    wallace1,
    wallace2,
    rand,
    fowlkes_mallows,
    jaccard,
    mirkin,
    meila_heckerman,
    van_dongen,
    mutual_info,
    nmi,
};

enum class Orientation { similarity, dissimilarity };

// Native sense of each criterion: do larger values mean more agreement?
Orientation native_orientation(CriterionKind kind);

const char* criterion_name(CriterionKind kind);
CriterionKind criterion_from_name(const std::string& name);  // throws InvalidParameter

struct CriterionSpec {
    CriterionKind kind;
    Orientation orientation;

    explicit CriterionSpec(CriterionKind k) : kind(k), orientation(native_orientation(k)) {}
    CriterionSpec(CriterionKind k, Orientation o) : kind(k), orientation(o) {
        if (o != native_orientation(k)) {
            throw InvalidParameter("orientation conflicts with the criterion's native sense");
        }
    }
};

// How the chi sums over point pairs are evaluated. `materialize` builds the
// m x m compatibility matrices; `stream` computes column inner products on
// the fly in O(1) extra memory. `automatic` picks by m.
enum class ChiMode { automatic, materialize, stream };

// Normalizer used inside the information measures: `points` divides masses
// by m (masses then sum to 1), `pairs` divides by m(m-1)/2.
enum class InfoNormalizer { points, pairs };

// Compatibility matrix C = X^T X (m x m, row-major): entry (r, s) is the
// co-membership strength of points r and s. Representative-independent,
// symmetric, entries in [0, 1].
std::vector<double> compatibility_matrix(const Partition& x);

// Generalized confusion counts of two partitions over the same points.
// Cluster counts may differ (missing clusters act as empty).
// Throws PointCountMismatch, SinglePoint (m < 2).
ConfusionCounts confusion(const Partition& x, const Partition& y,
                          ChiMode mode = ChiMode::automatic);

// Pair-counting criteria evaluated from the generalized confusion counts:
// wallace1, wallace2, rand, fowlkes_mallows, jaccard.
// Throws DegeneratePartition when the criterion's denominator vanishes.
double pair_criterion(const Partition& x, const Partition& y, CriterionKind kind,
                      ChiMode mode = ChiMode::automatic);
double pair_criterion(const ConfusionCounts& counts, CriterionKind kind);

// Cluster masses and overlaps. Requires identical shape (l and m).
MatchCounts match_counts(const Partition& x, const Partition& y);

// Cluster-matching criteria: mirkin, meila_heckerman (exact, by assignment
// solve), van_dongen.
double match_criterion(const Partition& x, const Partition& y, CriterionKind kind);
double match_criterion(const MatchCounts& counts, CriterionKind kind);

// Entropy, joint and conditional entropy, and mutual information of the
// cluster-mass distributions. 0 log 0 := 0; natural log.
InfoMeasures info_measures(const Partition& x, const Partition& y,
                           InfoNormalizer normalizer = InfoNormalizer::points);

// Criterion value of any kind, in its native orientation.
double criterion_value(const Partition& x, const Partition& y, CriterionKind kind,
                       InfoNormalizer normalizer = InfoNormalizer::points);

// The rho consumed by the consensus engine: criterion value negated for
// similarities, unchanged for dissimilarities.
double dissimilarity(const Partition& x, const Partition& y, const CriterionSpec& spec,
                     InfoNormalizer normalizer = InfoNormalizer::points);

}  // namespace partspace
