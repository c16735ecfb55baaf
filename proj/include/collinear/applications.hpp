#pragma once

#include <vector>

#include "collinear/drawing.hpp"
#include "collinear/plane_graph.hpp"

namespace col {

struct PointSet {
    std::vector<Pt> points;
};

// cos = a/c, sin = b/c for a Pythagorean triple
struct Rotation {
    Q c = 1, s = 0;
    Pt apply(const Pt& p) const { return {c * p.x - s * p.y, s * p.x + c * p.y}; }
    Pt undo(const Pt& p) const { return {c * p.x + s * p.y, -s * p.x + c * p.y}; }
};
// first rational rotation after which the points have pairwise distinct x
Rotation separating_rotation(const std::vector<Pt>& pts);

int point_bound(int n);  // ceil((n - 3) / 8), at least 0

struct Placement {
    Drawing drawing;
    std::vector<int> vertex_of_point;  // indexed like the input points
};
// Planar drawing of g (treewidth at most 3) with a vertex exactly on each point.
// Throws input_error("points", ...) when |p| exceeds point_bound(n) or points repeat.
Placement universal_placement(const PlaneGraph& g, const PointSet& p);

struct UntangleResult {
    std::vector<int> fixed;  // vertices left at their input coordinates
    Drawing drawing;
    std::vector<int> line_order;  // free collinear set in its order on the line
    Rotation axis;                // fixed vertices have increasing axis.apply(p).x along line_order
};
// Planar drawing of the plane 3-tree g keeping at least ceil(sqrt(point_bound(n)))
// vertices of bad in place.
UntangleResult untangle(const PlaneGraph& g, const std::vector<Pt>& bad);

// longest strictly increasing subsequence, as indices into xs
std::vector<int> longest_increasing(const std::vector<Q>& xs);

}  // namespace col
