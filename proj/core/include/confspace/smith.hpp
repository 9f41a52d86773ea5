#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "confspace/integer.hpp"
#include "confspace/matrix.hpp"

namespace confspace {

// Elementary unimodular operation on rows (or columns) in original indexing.
//   add:    line[dst] += factor * line[src]
//   swap:   exchange lines src and dst
//   negate: line[src] = -line[src]
struct ElementaryOp {
    enum Kind { add, swap, negate };
    Kind kind;
    int src;
    int dst;
    Integer factor;
};

struct SmithOptions {
    bool row_transform = false;
    bool col_transform = false;
};

// U * M * V = D, where D carries factors[i] at pivots[i] and is zero elsewhere.
class SmithForm {
public:
    int rows = 0;
    int cols = 0;
    std::vector<Integer> factors;               // d_1 | d_2 | ... , all positive
    std::vector<std::pair<int, int>> pivots;    // (row, col) of each factor
    std::vector<ElementaryOp> row_ops;          // U = product, first op applied first
    std::vector<ElementaryOp> col_ops;

    int rank() const { return static_cast<int>(factors.size()); }
    std::vector<Integer> torsion() const;

    // x <- U x
    template <class T> void apply_u(std::vector<T>& x) const {
        for (const auto& op : row_ops) apply_forward(op, x);
    }
    // y <- U^T y
    template <class T> void apply_u_transpose(std::vector<T>& y) const {
        for (auto it = row_ops.rbegin(); it != row_ops.rend(); ++it) apply_transpose(*it, y);
    }
    // y <- V y
    template <class T> void apply_v(std::vector<T>& y) const {
        for (auto it = col_ops.rbegin(); it != col_ops.rend(); ++it) apply_transpose(*it, y);
    }

    DenseIntegerMatrix u_matrix() const;
    DenseIntegerMatrix v_matrix() const;
    DenseIntegerMatrix diagonal() const;

private:
    template <class T> static void apply_forward(const ElementaryOp& op, std::vector<T>& x) {
        switch (op.kind) {
            case ElementaryOp::add: x[op.dst] += T(op.factor) * x[op.src]; break;
            case ElementaryOp::swap: std::swap(x[op.src], x[op.dst]); break;
            case ElementaryOp::negate: x[op.src] = -x[op.src]; break;
        }
    }
    template <class T> static void apply_transpose(const ElementaryOp& op, std::vector<T>& x) {
        switch (op.kind) {
            case ElementaryOp::add: x[op.src] += T(op.factor) * x[op.dst]; break;
            case ElementaryOp::swap: std::swap(x[op.src], x[op.dst]); break;
            case ElementaryOp::negate: x[op.src] = -x[op.src]; break;
        }
    }
};

SmithForm smith_normal_form(const SparseIntegerMatrix& m, SmithOptions options = {});
SmithForm smith_normal_form(const DenseIntegerMatrix& m, SmithOptions options = {});

// Rational solution u of A u = c (mod 1) componentwise, or nullopt when none exists.
std::optional<std::vector<Rational>> solve_mod_one(const SparseIntegerMatrix& a, const std::vector<Rational>& c);

}  // namespace confspace
