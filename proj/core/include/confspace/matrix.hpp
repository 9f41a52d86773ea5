#pragma once

#include <utility>
#include <vector>

#include "confspace/integer.hpp"

namespace confspace {

// Column-major sparse integer matrix. Entries within a column are sorted by row.
class SparseIntegerMatrix {
public:
    using Entry = std::pair<int, Integer>;

    SparseIntegerMatrix() = default;
    SparseIntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Entry>& column(int c) const { return data_[c]; }

    // Adds to an existing entry, dropping it if it becomes zero.
    void add(int row, int col, const Integer& value);
    Integer at(int row, int col) const;
    std::size_t nonzeros() const;

    std::vector<Integer> multiply(const std::vector<Integer>& x) const;
    std::vector<Integer> multiply_transpose(const std::vector<Integer>& y) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::vector<Entry>> data_;
};

using DenseIntegerMatrix = std::vector<std::vector<Integer>>;

DenseIntegerMatrix to_dense(const SparseIntegerMatrix& m);
DenseIntegerMatrix multiply(const DenseIntegerMatrix& a, const DenseIntegerMatrix& b);
SparseIntegerMatrix from_dense(const DenseIntegerMatrix& m);

}  // namespace confspace
