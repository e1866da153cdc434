#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "lozenge/regions.hpp"

namespace lozenge {

struct DualEdge {
    int down = 0;
    Lozenge lozenge;
    LaurentPoly weight;
};

// Bipartite adjacency between UP cells (ups) and DOWN cells (downs), both row-major.
struct DualGraph {
    std::vector<Cell> ups;
    std::vector<Cell> downs;
    std::vector<std::vector<DualEdge>> adj;  // indexed by UP

    std::size_t edge_count() const;
    bool balanced() const { return ups.size() == downs.size(); }
};

DualGraph dual_graph(const Region& r);

// Visits every tiling once, branching on the lowest uncovered UP cell and trying
// its partners in row-major order. Returning false from the visitor stops the walk.
void for_each_tiling(const Region& r, const std::function<bool(const Tiling&)>& visit);
std::vector<Tiling> enumerate_tilings(const Region& r,
                                      std::size_t limit = std::numeric_limits<std::size_t>::max());
bool has_tiling(const Region& r);

// Sum of tiling weights by memoized search over the matching frontier.
LaurentPoly tgf(const Region& r);

// Sum of weights (with X = Y = 1) of the tilings fixed by the region's reflection.
LaurentPoly tgf_symmetric(const Region& r);

// Nonintersecting lozenge paths and a determinant of path generating functions.
LaurentPoly tgf_fast(const Region& r);

enum class Engine { Brute, Fast };
LaurentPoly tgf_with(const Region& r, Engine e);

// Plane partitions in an a x b box with entries at most c, weighted by q^{sum}.
LaurentPoly pp_box_oracle(int a, int b, int c);

}  // namespace lozenge
