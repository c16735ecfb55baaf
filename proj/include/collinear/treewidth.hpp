#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "collinear/curves.hpp"
#include "collinear/plane_graph.hpp"

namespace col {

using Index = std::pair<int, int>;  // (i, j), 1-based; i grows to the right, j upwards

// g x g grid minor: branch set G_{i,j} per grid vertex, plus one reference edge
// per grid edge. refh[(i,j)] joins G_{i,j} to G_{i+1,j}, refv[(i,j)] joins
// G_{i,j} to G_{i,j+1}; the first endpoint lies in G_{i,j}.
struct GridMinorModel {
    int g = 0;
    std::map<Index, std::vector<int>> branch;
    std::map<Index, Edge> refh, refv;
};

GridMinorModel parse_grid_model(const std::string& text);
std::string serialize(const GridMinorModel& m);
// swap i and j; turns a mirrored model into a correctly oriented one
GridMinorModel transpose(const GridMinorModel& m);

struct ModelReport {
    bool valid = true;
    bool mirrored = false;  // cells only close up after transposing
    std::string problem;    // first violated condition
};
ModelReport validate_model(const PlaneGraph& g, const GridMinorModel& m);

// reference edge e_{i,j} (H) or e'_{i,j} (V)
struct RefPoint {
    enum Kind { H, V } kind;
    int i, j;
    bool operator==(const RefPoint& o) const { return kind == o.kind && i == o.i && j == o.j; }
};
std::string to_string(const RefPoint& r);

// Faces of each cell C_{i,j}, 1 <= i,j <= g-1, found by flooding the dual
// without crossing branch-set edges or reference edges.
struct CellMap {
    int g = 0;
    std::vector<Index> owner;  // per face; (0,0) outside every cell
    std::map<Index, std::vector<int>> faces;
    std::vector<int> branch_of;  // per vertex: flat branch index or -1
    std::vector<char> wall;      // per edge id
    std::vector<std::vector<std::pair<int, int>>> dual;  // (edge, face), neighbours by face key
};
// throws input_error("model", ...) when the cells overlap or are unbounded
CellMap build_cells(const PlaneGraph& g, const GridMinorModel& m);

struct SubCurve {
    char type = 'A';  // A, B or C
    RefPoint p, q;
    std::vector<Index> cells;  // region: these cells, plus the branch set for type C
    Index blob{0, 0};
    std::vector<Station> stations;  // Cross(p) .. Cross(q)
};

// Dual shortest path through one cell between two of its reference edges.
// A: opposite sides, B: adjacent sides.
SubCurve route_type_a(const PlaneGraph& g, const GridMinorModel& m, const CellMap& cells, RefPoint from, RefPoint to);
SubCurve route_type_b(const PlaneGraph& g, const GridMinorModel& m, const CellMap& cells, RefPoint from, RefPoint to);
// Through a vertex of G_{i+1,j}: from e'_{i,j-1} to e'_{i+2,j} when up,
// otherwise from e'_{i,j} to e'_{i+2,j-1}.
SubCurve route_type_c(const PlaneGraph& g, const GridMinorModel& m, const CellMap& cells, int i, int j, bool up);

// number of branch sets G_{i,j} the construction visits
int grid_bound(int g);

struct Theorem5Options {
    int jobs = 1;
};
struct Theorem5Result {
    GoodCurve closed;  // on the input graph
    PlaneGraph cut_graph;  // input graph with the outer face moved into the cut face
    GoodCurve curve;       // proper good curve on cut_graph
    std::vector<SubCurve> pieces;
    std::vector<Index> visited;  // branch sets with a vertex on the curve
    bool transposed = false;
};
// throws input_error("model", ...) for invalid models or g too small
Theorem5Result theorem5_curve(const PlaneGraph& g, const GridMinorModel& m, const Theorem5Options& opt = {});

// empty when every piece stays in its region, consecutive pieces meet at a
// reference point and regions are disjoint
std::string region_violation(const PlaneGraph& g, const GridMinorModel& m, const CellMap& cells,
                             const std::vector<SubCurve>& pieces);

// g x g grid with vertex (i,j) at id (j-1)*g + (i-1)
PlaneGraph grid_graph(int g);
GridMinorModel identity_model(int g);

struct GridInstance {
    PlaneGraph g;
    GridMinorModel m;
};
// Grid whose branch sets are rectangles of random sizes in a finer grid, with
// random diagonals, stacked faces and dropped non-reference edges.
GridInstance random_grid_instance(std::uint64_t seed, int g, int max_block = 3);

}  // namespace col
