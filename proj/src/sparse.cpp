#include "forchfem/sparse.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace forchfem {

SparseMatrix SparseMatrix::from_triplets(int dim, std::vector<Triplet> triplets,
                                         bool symmetric) {
    // Stable sort keeps duplicate (row, col) entries in insertion order, so
    // the summation order (and hence the result bits) is reproducible.
    std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseMatrix m;
    m.dim_ = dim;
    m.symmetric_ = symmetric;
    m.row_offsets_.assign(static_cast<std::size_t>(dim) + 1, 0);

    std::size_t i = 0;
    while (i < triplets.size()) {
        const int row = triplets[i].row;
        const int col = triplets[i].col;
        double sum = 0.0;
        while (i < triplets.size() && triplets[i].row == row && triplets[i].col == col)
            sum += triplets[i++].value;
        if (sum != 0.0) {
            m.columns_.push_back(col);
            m.values_.push_back(sum);
            ++m.row_offsets_[row + 1];
        }
    }
    for (int r = 0; r < dim; ++r) m.row_offsets_[r + 1] += m.row_offsets_[r];
    return m;
}

SparseMatrix SparseMatrix::weighted_sum(double alpha, const SparseMatrix& a, double beta,
                                        const SparseMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("sparse: dimension mismatch in sum");

    SparseMatrix m;
    m.dim_ = a.dim_;
    m.symmetric_ = a.symmetric_ && b.symmetric_;
    m.row_offsets_.assign(static_cast<std::size_t>(a.dim_) + 1, 0);
    m.columns_.reserve(a.columns_.size() + b.columns_.size());
    m.values_.reserve(a.columns_.size() + b.columns_.size());

    for (int r = 0; r < a.dim_; ++r) {
        int ia = a.row_offsets_[r], ea = a.row_offsets_[r + 1];
        int ib = b.row_offsets_[r], eb = b.row_offsets_[r + 1];
        while (ia < ea || ib < eb) {
            int col;
            double v = 0.0;
            if (ib >= eb || (ia < ea && a.columns_[ia] <= b.columns_[ib])) {
                col = a.columns_[ia];
                v += alpha * a.values_[ia++];
                if (ib < eb && b.columns_[ib] == col) v += beta * b.values_[ib++];
            } else {
                col = b.columns_[ib];
                v += beta * b.values_[ib++];
            }
            m.columns_.push_back(col);
            m.values_.push_back(v);
            ++m.row_offsets_[r + 1];
        }
    }
    for (int r = 0; r < a.dim_; ++r) m.row_offsets_[r + 1] += m.row_offsets_[r];
    return m;
}

void SparseMatrix::apply(std::span<const double> x, std::span<double> y) const {
    assert(static_cast<int>(x.size()) == dim_ && static_cast<int>(y.size()) == dim_);
    for (int r = 0; r < dim_; ++r) {
        double sum = 0.0;
        for (int k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k)
            sum += values_[k] * x[columns_[k]];
        y[r] = sum;
    }
}

std::vector<double> SparseMatrix::apply(std::span<const double> x) const {
    std::vector<double> y(static_cast<std::size_t>(dim_));
    apply(x, y);
    return y;
}

std::vector<double> SparseMatrix::diagonal() const {
    std::vector<double> d(static_cast<std::size_t>(dim_), 0.0);
    for (int r = 0; r < dim_; ++r)
        for (int k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k)
            if (columns_[k] == r) d[r] = values_[k];
    return d;
}

double SparseMatrix::value_at(int row, int col) const {
    for (int k = row_offsets_[row]; k < row_offsets_[row + 1]; ++k)
        if (columns_[k] == col) return values_[k];
    return 0.0;
}

}  // namespace forchfem
