#include "confspace/smith.hpp"

#include <algorithm>
#include <limits>

namespace confspace {

namespace {

using RowEntry = std::pair<int, Integer>;
using Row = std::vector<RowEntry>;

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

bool is_unit(const Integer& x) { return x == 1 || x == -1; }

class Reducer {
public:
    Reducer(const SparseIntegerMatrix& m, SmithOptions opt, SmithForm& out)
        : opt_(opt), out_(out), rows_(m.rows()), cols_(m.cols()) {
        for (int c = 0; c < m.cols(); ++c)
            for (const auto& [r, v] : m.column(c)) {
                rows_[r].push_back({c, v});
                cols_[c].push_back(r);
            }
    }

    void run() {
        sparse_phase();
        dense_phase();
    }

private:
    void log_row(ElementaryOp::Kind k, int src, int dst, const Integer& f = 0) {
        if (opt_.row_transform) out_.row_ops.push_back({k, src, dst, f});
    }
    void log_col(ElementaryOp::Kind k, int src, int dst, const Integer& f = 0) {
        if (opt_.col_transform) out_.col_ops.push_back({k, src, dst, f});
    }

    static const Integer* find(const Row& row, int col) {
        auto it = std::lower_bound(row.begin(), row.end(), col,
                                   [](const RowEntry& e, int c) { return e.first < c; });
        return it != row.end() && it->first == col ? &it->second : nullptr;
    }

    void drop_from_col(int col, int row) {
        auto& c = cols_[col];
        auto it = std::find(c.begin(), c.end(), row);
        if (it != c.end()) {
            *it = c.back();
            c.pop_back();
        }
    }

    // row j <- row j + f * row r
    void add_row(int r, int j, const Integer& f) {
        const Row& src = rows_[r];
        Row& dst = rows_[j];
        Row merged;
        merged.reserve(src.size() + dst.size());
        std::size_t a = 0, b = 0;
        while (a < src.size() || b < dst.size()) {
            if (b == dst.size() || (a < src.size() && src[a].first < dst[b].first)) {
                merged.push_back({src[a].first, f * src[a].second});
                cols_[src[a].first].push_back(j);
                ++a;
            } else if (a == src.size() || dst[b].first < src[a].first) {
                merged.push_back(std::move(dst[b]));
                ++b;
            } else {
                Integer v = dst[b].second + f * src[a].second;
                if (v == 0)
                    drop_from_col(src[a].first, j);
                else
                    merged.push_back({src[a].first, std::move(v)});
                ++a;
                ++b;
            }
        }
        dst = std::move(merged);
    }

    void sparse_phase() {
        const auto n_rows = static_cast<int>(rows_.size());
        for (;;) {
            int best_r = -1, best_c = -1;
            std::size_t best_cost = std::numeric_limits<std::size_t>::max();
            for (int r = 0; r < n_rows && best_cost > 0; ++r) {
                const Row& row = rows_[r];
                if (row.empty()) continue;
                for (const auto& [c, v] : row) {
                    if (!is_unit(v)) continue;
                    std::size_t cost = (row.size() - 1) * (cols_[c].size() - 1);
                    if (cost < best_cost) {
                        best_cost = cost;
                        best_r = r;
                        best_c = c;
                        if (cost == 0) break;
                    }
                }
            }
            if (best_r < 0) return;
            eliminate(best_r, best_c);
        }
    }

    void eliminate(int r, int c) {
        const Integer p = *find(rows_[r], c);
        std::vector<int> others;
        for (int j : cols_[c])
            if (j != r) others.push_back(j);
        for (int j : others) {
            Integer f = -(*find(rows_[j], c)) * p;
            add_row(r, j, f);
            log_row(ElementaryOp::add, r, j, f);
        }
        for (const auto& [k, b] : rows_[r]) {
            if (k == c) continue;
            log_col(ElementaryOp::add, c, k, Integer(-b * p));
            drop_from_col(k, r);
        }
        cols_[c].clear();
        rows_[r].clear();
        if (p < 0) log_row(ElementaryOp::negate, r, r);
        out_.factors.push_back(1);
        out_.pivots.push_back({r, c});
    }

    void dense_phase() {
        std::vector<int> R, C;
        for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
            if (!rows_[r].empty()) R.push_back(r);
        for (int c = 0; c < static_cast<int>(cols_.size()); ++c)
            if (!cols_[c].empty()) C.push_back(c);
        if (R.empty()) return;
        const std::size_t m = R.size(), n = C.size();
        std::vector<int> col_pos(cols_.size(), -1);
        for (std::size_t j = 0; j < n; ++j) col_pos[C[j]] = static_cast<int>(j);
        std::vector<std::vector<Integer>> a(m, std::vector<Integer>(n));
        for (std::size_t i = 0; i < m; ++i)
            for (const auto& [c, v] : rows_[R[i]]) a[i][col_pos[c]] = v;

        auto swap_rows = [&](std::size_t i, std::size_t j) {
            if (i == j) return;
            std::swap(a[i], a[j]);
            log_row(ElementaryOp::swap, R[i], R[j]);
        };
        auto swap_cols = [&](std::size_t i, std::size_t j) {
            if (i == j) return;
            for (auto& row : a) std::swap(row[i], row[j]);
            log_col(ElementaryOp::swap, C[i], C[j]);
        };
        auto add_row_d = [&](std::size_t src, std::size_t dst, const Integer& f) {
            for (std::size_t k = 0; k < n; ++k)
                if (a[src][k] != 0) a[dst][k] += f * a[src][k];
            log_row(ElementaryOp::add, R[src], R[dst], f);
        };
        auto add_col_d = [&](std::size_t src, std::size_t dst, const Integer& f) {
            for (std::size_t k = 0; k < m; ++k)
                if (a[k][src] != 0) a[k][dst] += f * a[k][src];
            log_col(ElementaryOp::add, C[src], C[dst], f);
        };

        for (std::size_t t = 0; t < std::min(m, n); ++t) {
            // smallest nonzero in the trailing block
            std::size_t bi = m, bj = n;
            Integer best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a[i][j] != 0 && (bi == m || abs_value(a[i][j]) < best)) {
                        best = abs_value(a[i][j]);
                        bi = i;
                        bj = j;
                    }
            if (bi == m) break;
            swap_rows(t, bi);
            swap_cols(t, bj);
            for (;;) {
                bool dirty = false;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (a[i][t] == 0) continue;
                    Integer q = a[i][t] / a[t][t];
                    if (q != 0) add_row_d(t, i, Integer(-q));
                    if (a[i][t] != 0) dirty = true;
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (a[t][j] == 0) continue;
                    Integer q = a[t][j] / a[t][t];
                    if (q != 0) add_col_d(t, j, Integer(-q));
                    if (a[t][j] != 0) dirty = true;
                }
                if (dirty) {
                    std::size_t pi = t, pj = t;
                    Integer small = abs_value(a[t][t]);
                    for (std::size_t i = t + 1; i < m; ++i)
                        if (a[i][t] != 0 && abs_value(a[i][t]) < small) {
                            small = abs_value(a[i][t]);
                            pi = i;
                            pj = t;
                        }
                    for (std::size_t j = t + 1; j < n; ++j)
                        if (a[t][j] != 0 && abs_value(a[t][j]) < small) {
                            small = abs_value(a[t][j]);
                            pi = t;
                            pj = j;
                        }
                    swap_rows(t, pi);
                    swap_cols(t, pj);
                    continue;
                }
                std::size_t fix = m;
                for (std::size_t i = t + 1; i < m && fix == m; ++i)
                    for (std::size_t j = t + 1; j < n; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            fix = i;
                            break;
                        }
                if (fix == m) break;
                add_row_d(fix, t, 1);
            }
            if (a[t][t] < 0) {
                for (auto& v : a[t]) v = -v;
                log_row(ElementaryOp::negate, R[t], R[t]);
            }
            out_.factors.push_back(a[t][t]);
            out_.pivots.push_back({R[t], C[t]});
        }
    }

    SmithOptions opt_;
    SmithForm& out_;
    std::vector<Row> rows_;
    std::vector<std::vector<int>> cols_;
};

}  // namespace

std::vector<Integer> SmithForm::torsion() const {
    std::vector<Integer> t;
    for (const auto& d : factors)
        if (d > 1) t.push_back(d);
    return t;
}

DenseIntegerMatrix SmithForm::u_matrix() const {
    DenseIntegerMatrix u(rows, std::vector<Integer>(rows));
    for (int i = 0; i < rows; ++i) u[i][i] = 1;
    for (const auto& op : row_ops) {
        switch (op.kind) {
            case ElementaryOp::add:
                for (int k = 0; k < rows; ++k) u[op.dst][k] += op.factor * u[op.src][k];
                break;
            case ElementaryOp::swap: std::swap(u[op.src], u[op.dst]); break;
            case ElementaryOp::negate:
                for (auto& v : u[op.src]) v = -v;
                break;
        }
    }
    return u;
}

DenseIntegerMatrix SmithForm::v_matrix() const {
    DenseIntegerMatrix v(cols, std::vector<Integer>(cols));
    for (int i = 0; i < cols; ++i) v[i][i] = 1;
    for (const auto& op : col_ops) {
        switch (op.kind) {
            case ElementaryOp::add:
                for (int k = 0; k < cols; ++k) v[k][op.dst] += op.factor * v[k][op.src];
                break;
            case ElementaryOp::swap:
                for (int k = 0; k < cols; ++k) std::swap(v[k][op.src], v[k][op.dst]);
                break;
            case ElementaryOp::negate:
                for (int k = 0; k < cols; ++k) v[k][op.src] = -v[k][op.src];
                break;
        }
    }
    return v;
}

DenseIntegerMatrix SmithForm::diagonal() const {
    DenseIntegerMatrix d(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < factors.size(); ++i) d[pivots[i].first][pivots[i].second] = factors[i];
    return d;
}

SmithForm smith_normal_form(const SparseIntegerMatrix& m, SmithOptions options) {
    SmithForm out;
    out.rows = m.rows();
    out.cols = m.cols();
    Reducer(m, options, out).run();
    return out;
}

SmithForm smith_normal_form(const DenseIntegerMatrix& m, SmithOptions options) {
    return smith_normal_form(from_dense(m), options);
}

std::optional<std::vector<Rational>> solve_mod_one(const SparseIntegerMatrix& a, const std::vector<Rational>& c) {
    const SmithForm s = smith_normal_form(a, {true, true});
    std::vector<Rational> uc = c;
    s.apply_u(uc);
    std::vector<bool> pivot_row(a.rows(), false);
    for (const auto& p : s.pivots) pivot_row[p.first] = true;
    for (int r = 0; r < a.rows(); ++r)
        if (!pivot_row[r] && !is_integer(uc[r])) return std::nullopt;
    std::vector<Rational> y(a.cols());
    for (std::size_t i = 0; i < s.factors.size(); ++i)
        y[s.pivots[i].second] = uc[s.pivots[i].first] / Rational(s.factors[i]);
    s.apply_v(y);
    return y;
}

}  // namespace confspace
