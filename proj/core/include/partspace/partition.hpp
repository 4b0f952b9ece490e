#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "partspace/errors.hpp"

namespace partspace {

// Tolerance for exact-algebra checks (column sums, entry bounds, orbit equality).
inline constexpr double kAlgebraTol = 1e-12;

class Permutation;

// A stochastic-column membership matrix: l x m, entries in [0, 1], every
// column sums to 1. Rows are clusters, columns are data points. One such
// matrix is a single labeling of a partition; relabelings of the same
// partition are row permutations of each other.
class PartitionMatrix {
public:
    // Validates and adopts row-major entries.
    // Throws InvalidShape, EntryOutOfRange or ColumnSumViolation.
    static PartitionMatrix validated(std::size_t n_clusters, std::size_t n_points,
                                     std::vector<double> entries);

    // Indicator matrix of a hard labeling. labels[j] is the cluster of point j.
    // Throws EmptyInput or LabelOutOfRange.
    static PartitionMatrix from_labels(std::span<const int> labels, std::size_t n_clusters);

    std::size_t n_clusters() const { return n_clusters_; }
    std::size_t n_points() const { return n_points_; }

    double operator()(std::size_t k, std::size_t j) const { return data_[k * n_points_ + j]; }
    std::span<const double> row(std::size_t k) const {
        return {data_.data() + k * n_points_, n_points_};
    }
    std::span<const double> data() const { return data_; }

    // Entrywise comparison within tol.
    bool almost_equal(const PartitionMatrix& other, double tol = kAlgebraTol) const;

    // True iff every entry is within tol of 0 or 1.
    bool is_hard(double tol = kAlgebraTol) const;

    // Per-column argmax, ties resolved to the lowest cluster index.
    std::vector<int> argmax_labels() const;

    // Row-permuted copy: row k of the result is row perm[k] of this matrix.
    PartitionMatrix permuted(const Permutation& perm) const;

    // Escape hatch for matrices that are valid by construction (averages,
    // midpoints). Columns are renormalized to kill accumulated rounding.
    static PartitionMatrix unchecked(std::size_t n_clusters, std::size_t n_points,
                                     std::vector<double> entries);

private:
    PartitionMatrix(std::size_t n_clusters, std::size_t n_points, std::vector<double> entries)
        : n_clusters_(n_clusters), n_points_(n_points), data_(std::move(entries)) {}

    std::size_t n_clusters_;
    std::size_t n_points_;
    std::vector<double> data_;  // row-major
};

// A permutation of {0, ..., l-1}. Applied to a matrix, output row k takes
// input row mapping[k].
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> mapping);
    static Permutation identity(std::size_t size);

    std::size_t size() const { return mapping_.size(); }
    std::size_t operator[](std::size_t k) const { return mapping_[k]; }
    std::span<const std::size_t> mapping() const { return mapping_; }

    Permutation inverse() const;
    // this after other: result[k] = other[this[k]] ... see apply order below.
    Permutation compose(const Permutation& inner) const;

    bool operator==(const Permutation& other) const { return mapping_ == other.mapping_; }

private:
    std::vector<std::size_t> mapping_;
};

// A partition: the orbit of a membership matrix under row permutations,
// stored via its canonical representative (rows sorted in non-increasing
// lexicographic order, stable in the original row index).
class Partition {
public:
    explicit Partition(const PartitionMatrix& matrix);

    const PartitionMatrix& canonical() const { return canonical_; }
    std::size_t n_clusters() const { return canonical_.n_clusters(); }
    std::size_t n_points() const { return canonical_.n_points(); }
    bool is_hard() const { return is_hard_; }

    // Per-column argmax of the canonical representative.
    std::vector<int> labels() const { return canonical_.argmax_labels(); }

    // Entrywise equality of canonical forms within kAlgebraTol.
    // Different shapes compare unequal.
    bool operator==(const Partition& other) const;
    bool operator!=(const Partition& other) const { return !(*this == other); }

private:
    PartitionMatrix canonical_;
    bool is_hard_;
};

// Orbit identification (the projection from labelings to partitions).
Partition canonicalize(const PartitionMatrix& matrix);

// True iff some row permutation maps one partition onto the other within
// kAlgebraTol, decided on canonical forms. Throws ShapeMismatch.
bool orbit_equal(const Partition& x, const Partition& y);

// Convenience: canonical partition of a hard labeling.
Partition partition_from_labels(std::span<const int> labels, std::size_t n_clusters);

}  // namespace partspace
