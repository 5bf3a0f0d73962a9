#pragma once

#include <span>
#include <vector>

namespace forchfem {

struct Triplet {
    int row;
    int col;
    double value;
};

// Compressed-row sparse matrix. Built from triplets: duplicates are summed in
// insertion order (deterministic), exact zeros are dropped after finalization.
class SparseMatrix {
public:
    SparseMatrix() = default;

    static SparseMatrix from_triplets(int dim, std::vector<Triplet> triplets, bool symmetric);

    // alpha*A + beta*B for matrices of equal dimension (pattern union).
    static SparseMatrix weighted_sum(double alpha, const SparseMatrix& a, double beta,
                                     const SparseMatrix& b);

    int dim() const { return dim_; }
    bool is_symmetric() const { return symmetric_; }
    std::size_t nonzeros() const { return values_.size(); }

    void apply(std::span<const double> x, std::span<double> y) const;  // y = A x
    std::vector<double> apply(std::span<const double> x) const;

    std::vector<double> diagonal() const;
    double value_at(int row, int col) const;  // 0 if absent

    std::span<const int> row_offsets() const { return row_offsets_; }
    std::span<const int> columns() const { return columns_; }
    std::span<const double> values() const { return values_; }

private:
    int dim_ = 0;
    bool symmetric_ = false;
    std::vector<int> row_offsets_;
    std::vector<int> columns_;
    std::vector<double> values_;
};

}  // namespace forchfem
