#pragma once

#include "mirror/curve/rcheck.hpp"
#include "mirror/curve/spectral.hpp"
#include "mirror/recursion/graphs.hpp"
#include "mirror/recursion/multidiff.hpp"

#include <vector>

namespace mirror {

// Vertex, edge and leaf data of the B-model graph sum, read off the curve.
struct GraphWeights {
    int max_height = 0;
    std::vector<Field> h1;
    FieldSeriesMatrix r_check;
    BCheckTable b_check;
};
GraphWeights graph_weights(const GenusZeroCurve& curve, int g, int n);

// Weight of one decorated graph in the theta basis: (coefficient, leaf index). The sqrt(-2)
// powers are tallied and must total 2 - 2g; RecursionError otherwise.
std::pair<Field, FormIndex> graph_weight(const GraphWeights& w, const StableGraph& graph);

// sum over decorated graphs of w_B / |Aut|. Threads from MIRROR_RECURSION_THREADS (default 1).
Multidifferential graph_sum_B(const GenusZeroCurve& curve, int g, int n);
// The same sum arranged over bare graphs and labeled decorations (orbit-stabilizer form).
Multidifferential graph_sum_labeled(const GenusZeroCurve& curve, int g, int n);

// Worker count from MIRROR_RECURSION_THREADS, at least 1.
int recursion_threads();

}  // namespace mirror
