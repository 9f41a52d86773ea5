#include "confspace/homology.hpp"

#include <deque>
#include <regex>
#include <stdexcept>

namespace confspace {

std::string AbelianGroup::to_string() const {
    std::string out;
    if (rank == 1)
        out = "Z";
    else if (rank > 1)
        out = "Z^" + std::to_string(rank);
    for (const auto& t : torsion) {
        if (!out.empty()) out += " + ";
        out += "Z_" + t.str();
    }
    return out.empty() ? "0" : out;
}

AbelianGroup parse_group(const std::string& text) {
    AbelianGroup g;
    if (text == "0") return g;
    static const std::regex term(R"(\s*(Z(\^(\d+))?|Z_(\d+))\s*(\+|$))");
    auto begin = std::sregex_iterator(text.begin(), text.end(), term);
    std::size_t consumed = 0;
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        if (static_cast<std::size_t>(m.position()) != consumed) break;
        consumed += m.length();
        if (m[4].matched)
            g.torsion.push_back(Integer(m[4].str()));
        else
            g.rank += m[3].matched ? std::stoi(m[3].str()) : 1;
    }
    if (consumed != text.size()) throw std::invalid_argument("malformed group: '" + text + "'");
    return g;
}

HomologyPresentation::HomologyPresentation(const CellComplex& c, bool with_coordinates)
    : complex_(&c), coords_(with_coordinates) {
    const auto& cells0 = c.cells0();
    const auto& cells1 = c.cells1();
    const SparseIntegerMatrix& d1 = c.boundary1();

    // adjacency of the 1-skeleton: 0-cell -> incident 1-cells
    std::vector<std::vector<int>> incident(cells0.size());
    for (int k = 0; k < d1.cols(); ++k)
        for (const auto& [r, v] : d1.column(k)) incident[r].push_back(k);

    std::vector<bool> seen(cells0.size(), false), tree(cells1.size(), false);
    std::deque<int> queue;
    for (std::size_t s = 0; s < cells0.size(); ++s) {
        if (seen[s]) continue;
        ++components_;
        seen[s] = true;
        queue.push_back(static_cast<int>(s));
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int k : incident[x]) {
                for (const auto& [y, v] : d1.column(k)) {
                    if (seen[y]) continue;
                    seen[y] = true;
                    tree[k] = true;
                    queue.push_back(y);
                }
            }
        }
    }

    row_of_.assign(cells1.size(), -1);
    for (std::size_t k = 0; k < cells1.size(); ++k)
        if (!tree[k]) {
            row_of_[k] = static_cast<int>(cell_of_row_.size());
            cell_of_row_.push_back(static_cast<int>(k));
        }

    const SparseIntegerMatrix& d2 = c.boundary2();
    SparseIntegerMatrix reduced(static_cast<int>(cell_of_row_.size()), d2.cols());
    for (int col = 0; col < d2.cols(); ++col)
        for (const auto& [r, v] : d2.column(col))
            if (row_of_[r] >= 0) reduced.add(row_of_[r], col, v);

    smith_ = smith_normal_form(reduced, {with_coordinates, false});

    std::vector<Integer> factor_of_row(reduced.rows(), 0);
    for (std::size_t i = 0; i < smith_.factors.size(); ++i) factor_of_row[smith_.pivots[i].first] = smith_.factors[i];
    for (int r = 0; r < reduced.rows(); ++r)
        if (factor_of_row[r] == 0) free_rows_.push_back(r);
    for (std::size_t i = 0; i < smith_.factors.size(); ++i)
        if (smith_.factors[i] > 1) {
            torsion_rows_.push_back(smith_.pivots[i].first);
            torsion_.push_back(smith_.factors[i]);
        }
}

int HomologyPresentation::rank_boundary1() const {
    return static_cast<int>(complex_->cells0().size()) - components_;
}

AbelianGroup HomologyPresentation::group() const {
    return {static_cast<int>(free_rows_.size()), torsion_};
}

std::vector<Integer> HomologyPresentation::reduced(const std::vector<Integer>& z) const {
    if (!coords_) throw std::logic_error("presentation built without coordinates");
    if (z.size() != complex_->cells1().size()) throw std::invalid_argument("chain length mismatch");
    for (const Integer& x : complex_->boundary1().multiply(z))
        if (x != 0) throw std::invalid_argument("chain is not a cycle");
    std::vector<Integer> r(cell_of_row_.size());
    for (std::size_t i = 0; i < cell_of_row_.size(); ++i) r[i] = z[cell_of_row_[i]];
    smith_.apply_u(r);
    return r;
}

std::vector<Integer> HomologyPresentation::coordinates(const std::vector<Integer>& z) const {
    const std::vector<Integer> r = reduced(z);
    std::vector<Integer> out;
    for (int row : free_rows_) out.push_back(r[row]);
    for (std::size_t i = 0; i < torsion_rows_.size(); ++i) out.push_back(mod_floor(r[torsion_rows_[i]], torsion_[i]));
    return out;
}

std::vector<Integer> HomologyPresentation::coordinates(const CellChain& z) const {
    return coordinates(complex_->to_vector(z));
}

std::vector<Rational> HomologyPresentation::cocycle(const std::vector<Rational>& free_phases,
                                                    const std::vector<Rational>& torsion_phases) const {
    if (!coords_) throw std::logic_error("presentation built without coordinates");
    if (free_phases.size() != free_rows_.size() || torsion_phases.size() != torsion_rows_.size())
        throw std::invalid_argument("phase count does not match the group");
    std::vector<Rational> y(cell_of_row_.size());
    for (std::size_t i = 0; i < free_rows_.size(); ++i) y[free_rows_[i]] = free_phases[i];
    for (std::size_t i = 0; i < torsion_rows_.size(); ++i) y[torsion_rows_[i]] = torsion_phases[i];
    smith_.apply_u_transpose(y);
    std::vector<Rational> out(complex_->cells1().size());
    for (std::size_t i = 0; i < cell_of_row_.size(); ++i) out[cell_of_row_[i]] = y[i];
    return out;
}

std::optional<std::vector<Rational>> HomologyPresentation::realize(const std::vector<CellChain>& cycles,
                                                                   const std::vector<Rational>& targets) const {
    if (cycles.size() != targets.size()) throw std::invalid_argument("cycle and target counts differ");
    const int nf = static_cast<int>(free_rows_.size());
    const int nt = static_cast<int>(torsion_rows_.size());
    const int nc = static_cast<int>(cycles.size());
    // unknowns: free phases, torsion phases; rows: targets, then n_i * psi_i = 0 (mod 1)
    SparseIntegerMatrix a(nc + nt, nf + nt);
    std::vector<Rational> rhs(nc + nt);
    for (int t = 0; t < nc; ++t) {
        const std::vector<Integer> x = coordinates(cycles[t]);
        for (int j = 0; j < nf + nt; ++j) a.add(t, j, x[j]);
        rhs[t] = targets[t];
    }
    for (int i = 0; i < nt; ++i) a.add(nc + i, nf + i, torsion_[i]);
    auto sol = solve_mod_one(a, rhs);
    if (!sol) return std::nullopt;
    std::vector<Rational> f(sol->begin(), sol->begin() + nf), t(sol->begin() + nf, sol->end());
    return cocycle(f, t);
}

AbelianGroup h0(const CellComplex& c) {
    if (c.cells0().empty()) return {};
    return {HomologyPresentation(c, false).components(), {}};
}

AbelianGroup h1(const CellComplex& c) { return HomologyPresentation(c, false).group(); }

std::vector<Integer> homology_coordinates(const CellComplex& c, const CellChain& z) {
    return HomologyPresentation(c, true).coordinates(z);
}

}  // namespace confspace
