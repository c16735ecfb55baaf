#pragma once

#include <string>
#include <vector>

#include "collinear/geometry.hpp"
#include "collinear/plane_graph.hpp"

namespace col {

struct Drawing {
    std::vector<Pt> coords;
    std::vector<int> designated;
};

Drawing parse_drawing(const std::string& text);
std::string serialize(const Drawing& d);
std::string to_svg(const PlaneGraph& g, const Drawing& d);

struct DrawingReport {
    bool planar = true;
    bool rotation_ok = true;
    bool outer_ok = true;
    bool collinear_ok = true;
    std::vector<std::string> witnesses;
    bool ok() const { return planar && rotation_ok && outer_ok && collinear_ok; }
    std::string summary() const;
};

// Exact checks: planarity, rotation fidelity, outer face, collinearity of the
// designated vertices.
DrawingReport verify_drawing(const PlaneGraph& g, const Drawing& d);

// neighbours of v sorted clockwise, starting from the first one clockwise
// after direction (-1,0)
std::vector<int> clockwise_neighbours(const PlaneGraph& g, const Drawing& d, int v);
// neighbours of v sorted clockwise starting strictly after direction dir; a
// neighbour exactly in direction dir comes last
std::vector<int> clockwise_from(const PlaneGraph& g, const Drawing& d, int v, const Pt& dir);

}  // namespace col
