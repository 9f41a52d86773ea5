#include "confspace/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace confspace {

void SparseIntegerMatrix::add(int row, int col, const Integer& value) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_) throw std::out_of_range("matrix index");
    if (value == 0) return;
    auto& c = data_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const Entry& e, int r) { return e.first < r; });
    if (it != c.end() && it->first == row) {
        it->second += value;
        if (it->second == 0) c.erase(it);
    } else {
        c.insert(it, {row, value});
    }
}

Integer SparseIntegerMatrix::at(int row, int col) const {
    const auto& c = data_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const Entry& e, int r) { return e.first < r; });
    if (it != c.end() && it->first == row) return it->second;
    return 0;
}

std::size_t SparseIntegerMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : data_) n += c.size();
    return n;
}

std::vector<Integer> SparseIntegerMatrix::multiply(const std::vector<Integer>& x) const {
    std::vector<Integer> y(rows_);
    for (int c = 0; c < cols_; ++c) {
        if (x[c] == 0) continue;
        for (const auto& [r, v] : data_[c]) y[r] += v * x[c];
    }
    return y;
}

std::vector<Integer> SparseIntegerMatrix::multiply_transpose(const std::vector<Integer>& y) const {
    std::vector<Integer> x(cols_);
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : data_[c]) x[c] += v * y[r];
    return x;
}

DenseIntegerMatrix to_dense(const SparseIntegerMatrix& m) {
    DenseIntegerMatrix d(m.rows(), std::vector<Integer>(m.cols()));
    for (int c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c)) d[r][c] = v;
    return d;
}

SparseIntegerMatrix from_dense(const DenseIntegerMatrix& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    SparseIntegerMatrix s(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) s.add(r, c, m[r][c]);
    return s;
}

DenseIntegerMatrix multiply(const DenseIntegerMatrix& a, const DenseIntegerMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    DenseIntegerMatrix out(n, std::vector<Integer>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

}  // namespace confspace
