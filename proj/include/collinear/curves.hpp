#pragma once

#include <string>
#include <utility>
#include <vector>

#include "collinear/drawing.hpp"
#include "collinear/plane_graph.hpp"

namespace col {

struct Station {
    enum Kind { Vertex, Cross, Face, Edge } kind;
    int a = -1, b = -1;   // vertex id, or edge endpoints (a < b)
    std::string face;     // face key for Face stations

    static Station vertex(int v) { return {Vertex, v, -1, {}}; }
    static Station cross(int x, int y) { return {Cross, std::min(x, y), std::max(x, y), {}}; }
    static Station hop(std::string key) { return {Face, -1, -1, std::move(key)}; }
    static Station edge(int x, int y) { return {Edge, std::min(x, y), std::max(x, y), {}}; }
    bool is_point() const { return kind == Vertex || kind == Cross; }
    bool operator==(const Station& o) const { return kind == o.kind && a == o.a && b == o.b && face == o.face; }
};

struct GoodCurve {
    std::vector<Station> stations;
    bool closed = false;

    std::vector<int> vertices() const;
    std::vector<Edge> contained_edges() const;
    bool operator==(const GoodCurve& o) const { return closed == o.closed && stations == o.stations; }
};

GoodCurve parse_curve(const std::string& text);
std::string serialize(const GoodCurve& c);

struct CurveReport {
    int vertex_count_on_curve = 0;
    std::vector<int> vertices_on_curve;
    bool good = true;
    bool proper = false;
    std::vector<std::pair<Edge, int>> violations;
};

// structure only: throws input_error("curve", ...) on dangling references or
// malformed adjacency
void check_well_formed(const PlaneGraph& g, const GoodCurve& c);
// per-edge common-point tallies (contained edges excluded)
std::vector<std::pair<Edge, int>> edge_tallies(const PlaneGraph& g, const GoodCurve& c);
CurveReport validate_curve(const PlaneGraph& g, const GoodCurve& c);

struct Augmented {
    PlaneGraph h;
    int n_orig = 0;
    std::vector<int> station_vertex;  // per station; -1 for Face/Edge stations
    std::vector<int> path;            // curve as a vertex walk in h (closed: first not repeated)
    int a = -1, b = -1;               // endpoint vertices (open curves)
    std::vector<Edge> subdivided;     // original edge of each subdivision vertex, indexed from n_orig
    std::vector<int> sub_vertex;      // vertex id of subdivision points, same order as subdivided
    bool proper = false;
};

// Adds the curve to g: crossings subdivide edges, dangling ends and crossing
// ends get new endpoint vertices, hops become edges. For open curves the
// outer face of h is a piece of g's outer face incident to both endpoints
// when one exists.
Augmented augment_with_curve(const PlaneGraph& g, const GoodCurve& c);
bool is_proper(const PlaneGraph& g, const GoodCurve& c);

struct CutResult {
    PlaneGraph g;
    GoodCurve curve;
};
CutResult cut_closed_curve(const PlaneGraph& g, const GoodCurve& c);

// line a*x + b*y = c
struct Line {
    Q a, b, c;
};
GoodCurve curve_from_drawing(const PlaneGraph& g, const Drawing& d, const Line& line);

// face of g containing the sector at vertex v around direction dir
int face_in_direction(const PlaneGraph& g, const Drawing& d, int v, const Pt& dir);

}  // namespace col
