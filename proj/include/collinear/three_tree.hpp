#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "collinear/curves.hpp"
#include "collinear/plane_graph.hpp"

namespace col {

struct TTNode {
    std::array<int, 3> t{};               // outer triangle, counter-clockwise
    int w = -1;                            // central vertex, -1 if empty
    std::array<int, 3> child{-1, -1, -1};  // on edges t0t1, t1t2, t2t0; child k is (t[k], t[k+1], w)
    int parent = -1;
    char type = 'E';                       // A, B, C, D, or E for empty
    int na = 0, nb = 0, nc = 0, nd = 0, m = 0, h = 0;
};

struct ThreeTreeDecomp {
    PlaneGraph g;
    std::vector<TTNode> nodes;
    int root = 0;
    std::vector<std::vector<int>> b_chains;  // vertex sequences, outermost first
    std::vector<int> node_of;                // node whose central vertex is v, -1 for outer vertices
};

// Throws input_error("three_tree", ...) if g is not a plane 3-tree.
ThreeTreeDecomp decompose(const PlaneGraph& g);
std::string dump(const ThreeTreeDecomp& d);

struct Augmentation {
    PlaneGraph g;
    std::vector<Edge> added;
};
// Adds edges inside faces until g is a plane 3-tree; throws
// input_error("three_tree", ...) naming the vertices left when no greedy step applies.
Augmentation augment_to_plane_3tree(const PlaneGraph& g);

// Good curve from p1 to p2 inside a cycle whose interior has no vertices.
// cycle is listed with its interior on the left. Endpoints are Vertex or Cross
// stations on the cycle.
std::vector<Station> lemma1_chord(const PlaneGraph& g, const std::vector<int>& cycle, const Station& p1,
                                  const Station& p2);

struct CurveBundle {
    std::array<GoodCurve, 3> lambda;  // lambda[i] avoids t[i] and ends on the two edges at t[i]
    int s = 0;                         // vertex visits with multiplicity
    int x = 0;                         // type-B vertices on no curve
    int best() const;                  // index of the curve with most vertices, first on ties
};

CurveBundle build_curve_bundle(const ThreeTreeDecomp& d);
// bundles of every node, indexed like d.nodes
std::vector<CurveBundle> build_all_bundles(const ThreeTreeDecomp& d);

struct Lemma3Report {
    std::array<bool, 7> holds{};  // items 1..6, then s >= 3m/8
    int first_violation = 0;      // 0 if all hold
    std::string summary() const;
};
Lemma3Report check_lemma3(const ThreeTreeDecomp& d, const CurveBundle& cb, int node);

struct DpTable {
    // per node: EE[i] cuts off t[i] entering and leaving through its two edges,
    // VE[i] runs from t[i] to the opposite edge; values count internal vertices
    std::vector<std::array<int, 3>> ee, ve;
};

struct DpResult {
    DpTable table;
    GoodCurve best_curve;
    int best_count = 0;          // all vertices
    GoodCurve best_internal_curve;
    int best_internal = 0;       // internal vertices only
};
// uniform random face stacking from a triangle; outer face 0 2 1
PlaneGraph random_plane_3tree(std::uint64_t seed, int n);

DpResult dp_optimal_collinear(const ThreeTreeDecomp& d);
std::string serialize(const DpResult& r, const ThreeTreeDecomp& d);

}  // namespace col
