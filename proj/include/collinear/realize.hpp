#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "collinear/drawing.hpp"
#include "collinear/linsolve.hpp"
#include "collinear/plane_graph.hpp"

namespace col {

struct GoodCurve;

enum class SolveMode { Auto, Exact, Float };

struct SolveOptions {
    SolveMode mode = SolveMode::Auto;
    int exact_limit = 300;  // Auto: exact elimination up to this many unknowns
};

// Tutte barycentric drawing. polygon[i] is the position of g.outer_walk()[i];
// the outer walk must be a simple cycle drawn as a convex polygon (collinear
// runs allowed).
Drawing tutte_convex(const PlaneGraph& g, const std::vector<Pt>& polygon, const SolveOptions& opt = {});

// Solve a convex-combination system: every vertex without a fixed position is
// placed at sum_j w_ij p_j / sum_j w_ij over its neighbours. Weights default to 1.
// The callback decides per attempt whether a candidate solution is accepted;
// Auto mode tries double, long double, then exact. With snap, an exact
// solution is first offered rounded to 64, 128, ... fractional bits.
using WeightFn = std::function<Q(int, int)>;
std::vector<Pt> convex_combination(const PlaneGraph& g, const std::vector<const Pt*>& fixed, const WeightFn& w,
                                   const std::function<bool(const std::vector<Pt>&)>& accept,
                                   const SolveOptions& opt = {}, bool snap = false);

// Straight-line drawing of g with every Vertex station of c on y = 0.
Drawing curve_to_drawing(const PlaneGraph& g, const GoodCurve& c, const SolveOptions& opt = {});

// Keep each vertex's y and recompute x so that the drawing of the plane
// triangulation t is straight-line and planar. The outer face of t must be a
// quadrilateral a, top, b, bottom with a and b on y = 0. Every vertex must have
// neighbours both strictly above and below or lie on the outer face.
std::vector<Pt> straighten_preserving_y(const PlaneGraph& t, const std::vector<Q>& y, const std::vector<Pt>& outer_pos,
                                        const SolveOptions& opt = {});

// every bounded face of t is a counter-clockwise triangle in p
bool triangles_positive(const PlaneGraph& t, const std::vector<Pt>& p);

// Vertices above ('^'), below ('v') or on ('=') the horizontal line y = line_y,
// and the left-to-right order of the on-line vertices and crossing edges.
struct LabelingOrder {
    struct Item {
        int v = -1;        // vertex on the line, or -1
        Edge e{-1, -1};    // crossing edge when v < 0
    };
    std::vector<char> labels;
    std::vector<int> S;
    std::vector<Edge> E;
    std::vector<Item> order;
    Q line_y = 0;
    std::vector<Q> target_x;  // one per item, strictly increasing
};

// labels and order read off a drawing; targets are the drawing's own crossings
LabelingOrder labeling_from_drawing(const PlaneGraph& g, const Drawing& psi, const Q& line_y = 0);
// replace the targets; throws input_error("labeling") unless strictly increasing
void set_targets(LabelingOrder& lab, const std::vector<Q>& xs);

// Drawing of the plane 3-tree g in which every vertex keeps its label, every
// on-line vertex sits at its target and every crossing edge crosses the line at
// its target. Throws input_error("labeling") naming the triangle where the
// labels or the order are inconsistent.
Drawing place_free(const PlaneGraph& g, const LabelingOrder& lab);

// For a triangulation t: move each vertex in new_y, all lying on y = line_y,
// to its new height, keeping every x-coordinate, and stretch the rest of the
// drawing vertically so that no face flips. The result has no designated set.
Drawing lift_designated(const PlaneGraph& t, const Drawing& d, const Q& line_y, const std::map<int, Q>& new_y);

}  // namespace col
