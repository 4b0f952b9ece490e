#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace partspace {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- validation -------------------------------------------------------------

class LabelOutOfRange : public Error {
public:
    LabelOutOfRange(std::size_t position, int label, std::size_t n_clusters)
        : Error("label " + std::to_string(label) + " at position " + std::to_string(position) +
                " is outside [0, " + std::to_string(n_clusters) + ")"),
          position(position), label(label), n_clusters(n_clusters) {}
    std::size_t position;
    int label;
    std::size_t n_clusters;
};

class EmptyInput : public Error {
public:
    EmptyInput() : Error("input sequence is empty") {}
};

class ColumnSumViolation : public Error {
public:
    ColumnSumViolation(std::size_t column, double sum)
        : Error("column " + std::to_string(column) + " sums to " + std::to_string(sum) +
                ", expected 1"),
          column(column), sum(sum) {}
    std::size_t column;
    double sum;
};

class EntryOutOfRange : public Error {
public:
    EntryOutOfRange(std::size_t row, std::size_t column, double value)
        : Error("entry (" + std::to_string(row) + ", " + std::to_string(column) + ") = " +
                std::to_string(value) + " is outside [0, 1]"),
          row(row), column(column), value(value) {}
    std::size_t row;
    std::size_t column;
    double value;
};

class InvalidShape : public Error {
public:
    InvalidShape(const std::string& what) : Error(what) {}
};

class ShapeMismatch : public Error {
public:
    ShapeMismatch(const std::string& what = "operands have different shapes") : Error(what) {}
};

// --- alignment --------------------------------------------------------------

class NonFiniteCost : public Error {
public:
    NonFiniteCost() : Error("cost matrix contains a non-finite entry") {}
};

class InvalidOrder : public Error {
public:
    explicit InvalidOrder(double p) : Error("norm order p = " + std::to_string(p) + " is < 1"), p(p) {}
    double p;
};

class TooManyClusters : public Error {
public:
    TooManyClusters(std::size_t n_clusters, std::size_t limit)
        : Error("brute force over " + std::to_string(n_clusters) +
                "! permutations refused (limit " + std::to_string(limit) + ")") {}
};

// --- criteria ---------------------------------------------------------------

class PointCountMismatch : public Error {
public:
    PointCountMismatch(std::size_t mx, std::size_t my)
        : Error("partitions cover " + std::to_string(mx) + " and " + std::to_string(my) +
                " points") {}
};

class SinglePoint : public Error {
public:
    SinglePoint() : Error("pair counts need at least two points") {}
};

class DegeneratePartition : public Error {
public:
    explicit DegeneratePartition(const std::string& what) : Error(what) {}
};

// --- consensus / experiments ------------------------------------------------

class EmptySet : public Error {
public:
    EmptySet() : Error("partition set is empty") {}
};

class EmptySample : public Error {
public:
    EmptySample() : Error("sample is empty") {}
};

class TooLarge : public Error {
public:
    explicit TooLarge(const std::string& what) : Error(what) {}
};

class InvalidParameter : public Error {
public:
    explicit InvalidParameter(const std::string& what) : Error(what) {}
};

}  // namespace partspace
