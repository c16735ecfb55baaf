#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "collinear/curves.hpp"
#include "collinear/plane_graph.hpp"

namespace col {

// (g, u, v, X) with X listed along the counter-clockwise boundary path from u to v
struct Quadruple {
    PlaneGraph g;
    int u = -1, v = -1;
    std::vector<int> x;
};

// "(letter) detail" for the first violated property, empty if well-formed
std::string quadruple_violation(const PlaneGraph& g, int u, int v, const std::vector<int>& x);
// throws input_error("quadruple", ...) naming the violated property
Quadruple make_quadruple(PlaneGraph g, int u, int v, std::vector<int> x);

struct ChainDecomposition {
    bool is_path = false;  // the component is the boundary path from a to b
    std::vector<int> p0;   // a .. u1 (the whole path when is_path)
    std::vector<Quadruple> blocks;
    std::vector<std::vector<int>> block_vertices;  // parent id of each block vertex
    std::vector<std::vector<int>> links;           // v_i .. u_{i+1}
    std::vector<int> pk;                           // v_k .. b
};
// {a, b} must be a separation pair on the counter-clockwise path from u to v
ChainDecomposition chain_decompose(const Quadruple& q, int a, int b);

struct ChargedCurve {
    GoodCurve curve;
    std::map<int, int> charges;  // off-curve vertex -> on-curve vertex
};

struct CubicOptions {
    bool audit = true;  // re-check the quadruple, curve properties and charges at every level
};
struct CubicAudit {
    int levels = 0;
    std::map<std::string, int> cases;  // base, 1, 2, 3a, 3b, 4, 5a, 5b
};

ChargedCurve build_cubic_curve(const Quadruple& q, const CubicOptions& opt = {}, CubicAudit* audit = nullptr);
// Proper good curve through at least ceil(n/4) vertices of a triconnected cubic plane graph.
ChargedCurve theorem4(const PlaneGraph& g, const CubicOptions& opt = {}, CubicAudit* audit = nullptr);

PlaneGraph generate_triconnected_cubic(std::uint64_t seed, int n);
PlaneGraph dodecahedron_graph();

std::string serialize_charges(const ChargedCurve& c);

}  // namespace col
