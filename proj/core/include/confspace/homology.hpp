#pragma once

#include <string>
#include <vector>

#include "confspace/configspace.hpp"
#include "confspace/smith.hpp"

namespace confspace {

struct AbelianGroup {
    int rank = 0;
    std::vector<Integer> torsion;  // each >= 2, each divides the next

    // "0", "Z", "Z^k", torsion appended as " + Z_n".
    std::string to_string() const;
    bool operator==(const AbelianGroup&) const = default;
};

AbelianGroup parse_group(const std::string& text);

// H1 of the complex, presented on the fundamental cycles of a breadth-first spanning forest.
class HomologyPresentation {
public:
    // With coordinates = false no transforms are recorded and only group() is usable.
    explicit HomologyPresentation(const CellComplex& c, bool with_coordinates = true);

    const CellComplex& complex() const { return *complex_; }
    AbelianGroup group() const;
    int components() const { return components_; }
    int rank_boundary1() const;
    int rank_boundary2() const { return smith_.rank(); }

    // Free part (integers) followed by torsion residues in [0, n_i).
    // Throws "chain is not a cycle".
    std::vector<Integer> coordinates(const CellChain& z) const;
    std::vector<Integer> coordinates(const std::vector<Integer>& z) const;

    // Values on all 1-cells of a cochain whose flux on a cycle is the dot product of its
    // coordinates with (free_phases, torsion_phases).
    std::vector<Rational> cocycle(const std::vector<Rational>& free_phases,
                                  const std::vector<Rational>& torsion_phases) const;

    // Values on 1-cells whose flux on each target cycle is the target mod 1 and whose
    // 2-cell fluxes are integers; nullopt when the targets violate a torsion constraint.
    std::optional<std::vector<Rational>> realize(const std::vector<CellChain>& cycles,
                                                 const std::vector<Rational>& targets) const;

    bool in_tree(int cell1) const { return row_of_[cell1] < 0; }

private:
    std::vector<Integer> reduced(const std::vector<Integer>& z) const;

    const CellComplex* complex_;
    int components_ = 0;
    std::vector<int> row_of_;      // 1-cell -> row of the reduced matrix, -1 for tree cells
    std::vector<int> cell_of_row_;
    std::vector<int> free_rows_;
    std::vector<int> torsion_rows_;
    std::vector<Integer> torsion_;
    SmithForm smith_;
    bool coords_ = false;
};

AbelianGroup h0(const CellComplex& c);
AbelianGroup h1(const CellComplex& c);
std::vector<Integer> homology_coordinates(const CellComplex& c, const CellChain& z);

}  // namespace confspace
