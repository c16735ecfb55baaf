#pragma once

#include <string>
#include <vector>

#include "collinear/curves.hpp"
#include "collinear/plane_graph.hpp"

namespace col {

struct OracleOptions {
    int budget = -1;        // max points per curve; -1 means V + E
    int edge_limit = 24;    // guard
    bool internal_only = false;  // count only vertices off the outer face
};

struct OracleResult {
    int max_vertices = 0;
    GoodCurve witness;
    long long explored = 0;  // curves visited, a curve and its reversal counted once
    bool certified = false;  // budget large enough for the search to be exhaustive
};

// Exhaustive search over proper good curves. Faces whose boundary repeats a
// point are only entered through their unambiguous points.
OracleResult enumerate_curves(const PlaneGraph& g, const OracleOptions& opt = {});

// Embedding code invariant under relabelling, rotation of the outer face and
// mirroring.
std::string embedding_code(const PlaneGraph& g);

// All plane 3-trees with m internal vertices up to (possibly mirrored)
// embedding isomorphism; outer face 0 2 1.
std::vector<PlaneGraph> catalog_plane_3trees(int m);

std::string serialize(const OracleResult& r);

}  // namespace col
