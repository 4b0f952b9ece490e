#include "partspace/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "partspace/assignment.hpp"

namespace partspace {

Orientation native_orientation(CriterionKind kind) {
    switch (kind) {
        case CriterionKind::mirkin:
        case CriterionKind::van_dongen:
            return Orientation::dissimilarity;
        default:
            return Orientation::similarity;
    }
}

const char* criterion_name(CriterionKind kind) {
    switch (kind) {
        case CriterionKind::wallace1: return "wallace1";
        case CriterionKind::wallace2: return "wallace2";
        case CriterionKind::rand: return "rand";
        case CriterionKind::fowlkes_mallows: return "fowlkes_mallows";
        case CriterionKind::jaccard: return "jaccard";
        case CriterionKind::mirkin: return "mirkin";
        case CriterionKind::meila_heckerman: return "meila_heckerman";
        case CriterionKind::van_dongen: return "van_dongen";
        case CriterionKind::mutual_info: return "mutual_info";
        case CriterionKind::nmi: return "nmi";
    }
    return "?";
}

CriterionKind criterion_from_name(const std::string& name) {
    static const std::pair<const char*, CriterionKind> table[] = {
        {"wallace1", CriterionKind::wallace1},
        {"wallace2", CriterionKind::wallace2},
        {"rand", CriterionKind::rand},
        {"fowlkes_mallows", CriterionKind::fowlkes_mallows},
        {"jaccard", CriterionKind::jaccard},
        {"mirkin", CriterionKind::mirkin},
        {"meila_heckerman", CriterionKind::meila_heckerman},
        {"van_dongen", CriterionKind::van_dongen},
        {"mutual_info", CriterionKind::mutual_info},
        {"nmi", CriterionKind::nmi},
    };
    for (const auto& [key, kind] : table) {
        if (name == key) return kind;
    }
    throw InvalidParameter("unknown criterion '" + name + "'");
}

std::vector<double> compatibility_matrix(const Partition& x) {
    const PartitionMatrix& mat = x.canonical();
    const std::size_t l = mat.n_clusters();
    const std::size_t m = mat.n_points();
    std::vector<double> c(m * m, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t s = r; s < m; ++s) {
            double dot = 0.0;
            for (std::size_t k = 0; k < l; ++k) dot += mat(k, r) * mat(k, s);
            c[r * m + s] = dot;
            c[s * m + r] = dot;
        }
    }
    return c;
}

namespace {

// Column inner product <x_:r, x_:s>.
inline double column_dot(const PartitionMatrix& mat, std::size_t r, std::size_t s) {
    double dot = 0.0;
    for (std::size_t k = 0; k < mat.n_clusters(); ++k) dot += mat(k, r) * mat(k, s);
    return dot;
}

ConfusionCounts chi_sums_streaming(const PartitionMatrix& xm, const PartitionMatrix& ym) {
    ConfusionCounts out;
    const std::size_t m = xm.n_points();
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t s = r + 1; s < m; ++s) {
            const double cx = column_dot(xm, r, s);
            const double cy = column_dot(ym, r, s);
            out.m11 += cx * cy;
            out.m10 += cx * (1.0 - cy);
            out.m01 += (1.0 - cx) * cy;
            out.m00 += (1.0 - cx) * (1.0 - cy);
        }
    }
    return out;
}

ConfusionCounts chi_sums_materialized(const Partition& x, const Partition& y) {
    const std::vector<double> cx = compatibility_matrix(x);
    const std::vector<double> cy = compatibility_matrix(y);
    const std::size_t m = x.n_points();
    ConfusionCounts out;
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t s = r + 1; s < m; ++s) {
            const double a = cx[r * m + s];
            const double b = cy[r * m + s];
            out.m11 += a * b;
            out.m10 += a * (1.0 - b);
            out.m01 += (1.0 - a) * b;
            out.m00 += (1.0 - a) * (1.0 - b);
        }
    }
    return out;
}

}  // namespace

ConfusionCounts confusion(const Partition& x, const Partition& y, ChiMode mode) {
    if (x.n_points() != y.n_points()) throw PointCountMismatch(x.n_points(), y.n_points());
    const std::size_t m = x.n_points();
    if (m < 2) throw SinglePoint();

    // Above this size the two m x m compatibility matrices stop being cheap.
    constexpr std::size_t kMaterializeLimit = 2048;
    const bool materialize =
        mode == ChiMode::materialize || (mode == ChiMode::automatic && m <= kMaterializeLimit);

    ConfusionCounts out = materialize ? chi_sums_materialized(x, y)
                                      : chi_sums_streaming(x.canonical(), y.canonical());
    out.n_pairs = 0.5 * static_cast<double>(m) * static_cast<double>(m - 1);
    return out;
}

double pair_criterion(const ConfusionCounts& c, CriterionKind kind) {
    const auto guarded = [](double numerator, double denominator, const char* name) {
        if (denominator == 0.0) {
            throw DegeneratePartition(std::string(name) + " denominator is zero");
        }
        return numerator / denominator;
    };
    switch (kind) {
        case CriterionKind::wallace1:
            return guarded(c.m11, c.m11 + c.m01, "wallace1");
        case CriterionKind::wallace2:
            return guarded(c.m11, c.m11 + c.m10, "wallace2");
        case CriterionKind::rand:
            return guarded(c.m11 + c.m00, c.n_pairs, "rand");
        case CriterionKind::fowlkes_mallows:
            return guarded(c.m11, std::sqrt((c.m11 + c.m10) * (c.m11 + c.m01)),
                           "fowlkes_mallows");
        case CriterionKind::jaccard:
            return guarded(c.m11, c.m11 + c.m10 + c.m01, "jaccard");
        default:
            throw InvalidParameter("not a pair-counting criterion");
    }
}

double pair_criterion(const Partition& x, const Partition& y, CriterionKind kind, ChiMode mode) {
    return pair_criterion(confusion(x, y, mode), kind);
}

MatchCounts match_counts(const Partition& x, const Partition& y) {
    if (x.n_clusters() != y.n_clusters() || x.n_points() != y.n_points()) {
        throw ShapeMismatch();
    }
    const PartitionMatrix& xm = x.canonical();
    const PartitionMatrix& ym = y.canonical();
    const std::size_t l = xm.n_clusters();
    const std::size_t m = xm.n_points();

    MatchCounts out;
    out.n_clusters = l;
    out.m = static_cast<double>(m);
    out.x.assign(l, 0.0);
    out.y.assign(l, 0.0);
    out.z.assign(l * l, 0.0);
    for (std::size_t p = 0; p < l; ++p) {
        const auto rx = xm.row(p);
        for (std::size_t j = 0; j < m; ++j) out.x[p] += rx[j];
        for (std::size_t q = 0; q < l; ++q) {
            const auto ry = ym.row(q);
            double dot = 0.0;
            for (std::size_t j = 0; j < m; ++j) dot += rx[j] * ry[j];
            out.z[p * l + q] = dot;
        }
    }
    for (std::size_t q = 0; q < l; ++q) {
        const auto ry = ym.row(q);
        for (std::size_t j = 0; j < m; ++j) out.y[q] += ry[j];
    }
    return out;
}

double match_criterion(const MatchCounts& c, CriterionKind kind) {
    const std::size_t l = c.n_clusters;
    switch (kind) {
        case CriterionKind::mirkin: {
            double sx = 0.0, sy = 0.0, sz = 0.0;
            for (double v : c.x) sx += v * v;
            for (double v : c.y) sy += v * v;
            for (double v : c.z) sz += v * v;
            return sx + sy - 2.0 * sz;
        }
        case CriterionKind::meila_heckerman: {
            // Exact matched-cluster mass: assignment maximizing sum_p z[p, phi(p)].
            const AssignmentResult best =
                solve_assignment(CostMatrix(l, c.z), OptimizeSense::maximize);
            return best.objective / c.m;
        }
        case CriterionKind::van_dongen: {
            double row_max_sum = 0.0, col_max_sum = 0.0;
            for (std::size_t p = 0; p < l; ++p) {
                double best = 0.0;
                for (std::size_t q = 0; q < l; ++q) best = std::max(best, c.z[p * l + q]);
                row_max_sum += best;
            }
            for (std::size_t q = 0; q < l; ++q) {
                double best = 0.0;
                for (std::size_t p = 0; p < l; ++p) best = std::max(best, c.z[p * l + q]);
                col_max_sum += best;
            }
            return 2.0 * c.m - row_max_sum - col_max_sum;
        }
        default:
            throw InvalidParameter("not a cluster-matching criterion");
    }
}

double match_criterion(const Partition& x, const Partition& y, CriterionKind kind) {
    return match_criterion(match_counts(x, y), kind);
}

namespace {

inline double xlogx(double v) { return v > 0.0 ? v * std::log(v) : 0.0; }

}  // namespace

InfoMeasures info_measures(const Partition& x, const Partition& y, InfoNormalizer normalizer) {
    const MatchCounts c = match_counts(x, y);
    const std::size_t l = c.n_clusters;
    const double n = normalizer == InfoNormalizer::points
                         ? c.m
                         : 0.5 * c.m * (c.m - 1.0);
    if (n <= 0.0) throw SinglePoint();

    InfoMeasures out;
    for (double v : c.x) out.h_x -= xlogx(v / n);
    for (double v : c.y) out.h_y -= xlogx(v / n);
    for (double v : c.z) out.h_joint -= xlogx(v / n);
    for (std::size_t p = 0; p < l; ++p) {
        for (std::size_t q = 0; q < l; ++q) {
            const double zpq = c.z[p * l + q];
            if (zpq > 0.0 && c.y[q] > 0.0) {
                out.h_x_given_y -= (zpq / n) * std::log(zpq / c.y[q]);
            }
            if (zpq > 0.0 && c.x[p] > 0.0 && c.y[q] > 0.0) {
                out.mutual_info += (zpq / n) * std::log((zpq * n) / (c.x[p] * c.y[q]));
            }
        }
    }
    return out;
}

double criterion_value(const Partition& x, const Partition& y, CriterionKind kind,
                       InfoNormalizer normalizer) {
    switch (kind) {
        case CriterionKind::wallace1:
        case CriterionKind::wallace2:
        case CriterionKind::rand:
        case CriterionKind::fowlkes_mallows:
        case CriterionKind::jaccard:
            return pair_criterion(x, y, kind);
        case CriterionKind::mirkin:
        case CriterionKind::meila_heckerman:
        case CriterionKind::van_dongen:
            return match_criterion(x, y, kind);
        case CriterionKind::mutual_info:
            return info_measures(x, y, normalizer).mutual_info;
        case CriterionKind::nmi: {
            const InfoMeasures info = info_measures(x, y, normalizer);
            const double denom = std::sqrt(info.h_x * info.h_y);
            if (denom == 0.0) {
                throw DegeneratePartition("nmi is undefined when an entropy vanishes");
            }
            return info.mutual_info / denom;
        }
    }
    throw InvalidParameter("unknown criterion");
}

double dissimilarity(const Partition& x, const Partition& y, const CriterionSpec& spec,
                     InfoNormalizer normalizer) {
    const double value = criterion_value(x, y, spec.kind, normalizer);
    return spec.orientation == Orientation::similarity ? -value : value;
}

}  // namespace partspace
