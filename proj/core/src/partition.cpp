#include "partspace/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace partspace {

PartitionMatrix PartitionMatrix::validated(std::size_t n_clusters, std::size_t n_points,
                                           std::vector<double> entries) {
    if (n_clusters == 0 || n_points == 0) {
        throw InvalidShape("matrix must have at least one row and one column");
    }
    if (entries.size() != n_clusters * n_points) {
        throw InvalidShape("entry buffer has " + std::to_string(entries.size()) +
                           " values, expected " + std::to_string(n_clusters * n_points));
    }
    for (std::size_t k = 0; k < n_clusters; ++k) {
        for (std::size_t j = 0; j < n_points; ++j) {
            const double v = entries[k * n_points + j];
            if (!(v >= -kAlgebraTol && v <= 1.0 + kAlgebraTol)) {
                throw EntryOutOfRange(k, j, v);
            }
        }
    }
    for (std::size_t j = 0; j < n_points; ++j) {
        double sum = 0.0;
        for (std::size_t k = 0; k < n_clusters; ++k) sum += entries[k * n_points + j];
        if (std::abs(sum - 1.0) > kAlgebraTol) {
            throw ColumnSumViolation(j, sum);
        }
    }
    return PartitionMatrix(n_clusters, n_points, std::move(entries));
}

PartitionMatrix PartitionMatrix::from_labels(std::span<const int> labels,
                                             std::size_t n_clusters) {
    if (labels.empty()) throw EmptyInput();
    if (n_clusters == 0) throw InvalidShape("need at least one cluster");
    const std::size_t m = labels.size();
    std::vector<double> entries(n_clusters * m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        const int label = labels[j];
        if (label < 0 || static_cast<std::size_t>(label) >= n_clusters) {
            throw LabelOutOfRange(j, label, n_clusters);
        }
        entries[static_cast<std::size_t>(label) * m + j] = 1.0;
    }
    return PartitionMatrix(n_clusters, m, std::move(entries));
}

PartitionMatrix PartitionMatrix::unchecked(std::size_t n_clusters, std::size_t n_points,
                                           std::vector<double> entries) {
    for (std::size_t j = 0; j < n_points; ++j) {
        double sum = 0.0;
        for (std::size_t k = 0; k < n_clusters; ++k) sum += entries[k * n_points + j];
        for (std::size_t k = 0; k < n_clusters; ++k) entries[k * n_points + j] /= sum;
    }
    return PartitionMatrix(n_clusters, n_points, std::move(entries));
}

bool PartitionMatrix::almost_equal(const PartitionMatrix& other, double tol) const {
    if (n_clusters_ != other.n_clusters_ || n_points_ != other.n_points_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (std::abs(data_[i] - other.data_[i]) > tol) return false;
    }
    return true;
}

bool PartitionMatrix::is_hard(double tol) const {
    for (double v : data_) {
        if (std::abs(v) > tol && std::abs(v - 1.0) > tol) return false;
    }
    return true;
}

std::vector<int> PartitionMatrix::argmax_labels() const {
    std::vector<int> labels(n_points_);
    for (std::size_t j = 0; j < n_points_; ++j) {
        std::size_t best = 0;
        double best_value = data_[j];
        for (std::size_t k = 1; k < n_clusters_; ++k) {
            const double v = data_[k * n_points_ + j];
            if (v > best_value) {
                best_value = v;
                best = k;
            }
        }
        labels[j] = static_cast<int>(best);
    }
    return labels;
}

PartitionMatrix PartitionMatrix::permuted(const Permutation& perm) const {
    std::vector<double> out(data_.size());
    for (std::size_t k = 0; k < n_clusters_; ++k) {
        const std::size_t src = perm[k];
        std::copy_n(data_.data() + src * n_points_, n_points_, out.data() + k * n_points_);
    }
    return PartitionMatrix(n_clusters_, n_points_, std::move(out));
}

Permutation::Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
    std::vector<char> seen(mapping_.size(), 0);
    for (std::size_t v : mapping_) {
        if (v >= mapping_.size() || seen[v]) {
            throw InvalidParameter("mapping is not a bijection on {0..l-1}");
        }
        seen[v] = 1;
    }
}

Permutation Permutation::identity(std::size_t size) {
    std::vector<std::size_t> mapping(size);
    std::iota(mapping.begin(), mapping.end(), std::size_t{0});
    return Permutation(std::move(mapping));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(mapping_.size());
    for (std::size_t k = 0; k < mapping_.size(); ++k) inv[mapping_[k]] = k;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& inner) const {
    // (this.compose(inner)).apply(X) == this.apply(inner.apply(X)):
    // row k of the result takes input row inner[this[k]].
    std::vector<std::size_t> out(mapping_.size());
    for (std::size_t k = 0; k < mapping_.size(); ++k) out[k] = inner[mapping_[k]];
    return Permutation(std::move(out));
}

namespace {

// Strictly-descending lexicographic row order; equal rows keep input order.
std::vector<std::size_t> canonical_row_order(const PartitionMatrix& matrix) {
    std::vector<std::size_t> order(matrix.n_clusters());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto ra = matrix.row(a);
        const auto rb = matrix.row(b);
        return std::lexicographical_compare(rb.begin(), rb.end(), ra.begin(), ra.end());
    });
    return order;
}

}  // namespace

Partition::Partition(const PartitionMatrix& matrix)
    : canonical_(matrix.permuted(Permutation(canonical_row_order(matrix)))),
      is_hard_(canonical_.is_hard()) {}

bool Partition::operator==(const Partition& other) const {
    return canonical_.almost_equal(other.canonical_);
}

Partition canonicalize(const PartitionMatrix& matrix) { return Partition(matrix); }

bool orbit_equal(const Partition& x, const Partition& y) {
    if (x.n_clusters() != y.n_clusters() || x.n_points() != y.n_points()) {
        throw ShapeMismatch();
    }
    return x == y;
}

Partition partition_from_labels(std::span<const int> labels, std::size_t n_clusters) {
    return Partition(PartitionMatrix::from_labels(labels, n_clusters));
}

}  // namespace partspace
