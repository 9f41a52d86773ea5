#pragma once

#include <vector>

#include "confspace/graph.hpp"
#include "confspace/homology.hpp"

namespace confspace::testing {

// Naive dense Smith normal form; nonzero invariant factors in divisibility order.
std::vector<Integer> naive_smith_factors(std::vector<std::vector<Integer>> m);

struct NaiveCounts {
    long c0 = 0, c1 = 0, c2 = 0;
};

// H1 of the discrete configuration space, built and reduced without the library's complex
// or Smith code. Small inputs only.
AbelianGroup naive_h1(const Graph& g, int n, NaiveCounts* counts = nullptr);

}  // namespace confspace::testing
