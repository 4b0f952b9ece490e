#pragma once

#include <cstddef>
#include <vector>

#include "partspace/partition.hpp"

namespace partspace {

// Square matrix of finite row->column costs.
class CostMatrix {
public:
    CostMatrix(std::size_t size, std::vector<double> entries);

    std::size_t size() const { return size_; }
    double operator()(std::size_t row, std::size_t col) const {
        return entries_[row * size_ + col];
    }
    std::span<const double> entries() const { return entries_; }

private:
    std::size_t size_;
    std::vector<double> entries_;
};

enum class OptimizeSense { minimize, maximize };

struct AssignmentResult {
    Permutation permutation;  // row k is assigned column permutation[k]
    double objective;         // sum of selected cost entries
};

// Exact assignment solve (Hungarian, O(l^3) shortest augmenting path).
// Among optimal permutations, returns the lexicographically smallest mapping.
// Throws NonFiniteCost.
AssignmentResult solve_assignment(const CostMatrix& cost,
                                  OptimizeSense sense = OptimizeSense::minimize);

// Permutation P minimizing ||X_c - P * Y_c||_p over all row permutations of
// Y's canonical representative; the objective is the p-th power cost
// sum_k ||x_k - y_perm(k)||_p^p. Throws ShapeMismatch, InvalidOrder.
AssignmentResult optimal_alignment(const Partition& x, const Partition& y, double p);

// Same contract as optimal_alignment, by exhaustive enumeration of all l!
// permutations. Test oracle; refuses l > 8.
AssignmentResult brute_force_alignment(const Partition& x, const Partition& y, double p);

// Row-wise l_p assignment costs between two matrices of identical shape:
// cost(k, l) = ||a_k - b_l||_p^p.
CostMatrix alignment_costs(const PartitionMatrix& a, const PartitionMatrix& b, double p);

}  // namespace partspace
