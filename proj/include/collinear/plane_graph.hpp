#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace col {

using Edge = std::pair<int, int>;  // normalized so first < second

inline Edge norm_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Combinatorial plane embedding. rot[v] lists neighbours of v in clockwise
// order. Faces are traced with the face on the left of every dart, so
// bounded faces come out counter-clockwise and the outer face clockwise.
class PlaneGraph {
public:
    PlaneGraph() = default;
    PlaneGraph(std::vector<std::vector<int>> rot, std::vector<int> outer_walk);
    // outer face = the face left of dart u->v
    static PlaneGraph with_outer_dart(std::vector<std::vector<int>> rot, int u, int v);
    PlaneGraph with_outer_face(int f) const;

    int n() const { return static_cast<int>(rot_.size()); }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& rot(int v) const { return rot_[v]; }
    const std::vector<std::vector<int>>& rotations() const { return rot_; }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    int max_degree() const;
    bool has_edge(int a, int b) const { return dart(a, b) >= 0; }

    // darts: id = off_[u] + position of v in rot[u]
    int num_darts() const { return static_cast<int>(tail_.size()); }
    int dart(int u, int v) const;
    int tail(int d) const { return tail_[d]; }
    int head(int d) const { return head_[d]; }
    int twin(int d) const { return twin_[d]; }
    int next(int d) const { return next_[d]; }
    int face_of(int d) const { return face_of_[d]; }
    // clockwise successor of w in rot[v]
    int cw_next(int v, int w) const;
    int cw_prev(int v, int w) const;
    int rot_index(int v, int w) const;

    const std::vector<Edge>& edges() const { return edges_; }
    int edge_id(int a, int b) const;

    int num_faces() const { return static_cast<int>(faces_.size()); }
    const std::vector<int>& face_darts(int f) const { return faces_[f]; }
    std::vector<int> face_vertices(int f) const;
    int outer_face() const { return outer_; }
    const std::vector<int>& outer_walk() const { return outer_walk_; }
    std::string face_key(int f) const;
    int face_by_key(const std::string& key) const;  // -1 if absent
    bool face_simple(int f) const;
    bool on_outer_face(int v) const;
    std::vector<int> outer_vertices() const;
    bool outer_is_simple_cycle() const;
    // faces on the two sides of an edge: left of a->b, left of b->a
    std::pair<int, int> edge_faces(int a, int b) const;
    // dual: per face, list of (edge id, neighbouring face)
    std::vector<std::vector<std::pair<int, int>>> dual() const;

    bool operator==(const PlaneGraph& o) const {
        return rot_ == o.rot_ && outer_walk_ == o.outer_walk_;
    }

private:
    void build();

    std::vector<std::vector<int>> rot_;
    std::vector<int> outer_walk_;
    std::vector<int> off_, tail_, head_, twin_, next_, face_of_;
    std::unordered_map<std::int64_t, int> dart_index_;
    std::vector<Edge> edges_;
    std::unordered_map<std::int64_t, int> edge_index_;
    std::vector<std::vector<int>> faces_;
    std::unordered_map<std::string, int> face_keys_;
    std::vector<char> on_outer_;
    int outer_ = -1;
};

PlaneGraph parse_plane_graph(const std::string& text);
std::string serialize(const PlaneGraph& g);

enum class PathKind { Tau, Beta };
struct BoundaryPath {
    PathKind kind;
    int u, v;
    std::vector<int> walk;  // vertices u .. v
};
BoundaryPath boundary_path(const PlaneGraph& g, int u, int v, PathKind kind);

struct PairComponent {
    bool trivial;
    std::vector<int> vertices;  // includes a and b
    std::vector<Edge> edges;
};
struct SeparationStructure {
    std::vector<int> cut_vertices;
    std::vector<Edge> separation_pairs;
};
SeparationStructure separation_pairs(const PlaneGraph& g);
std::vector<int> cut_vertices(const PlaneGraph& g);
std::vector<PairComponent> pair_components(const PlaneGraph& g, int a, int b);
bool is_biconnected(const PlaneGraph& g);
bool is_triconnected(const PlaneGraph& g);

struct Subgraph {
    std::vector<int> vertices;
    std::vector<Edge> edges;
};
struct Bridge {
    bool trivial;
    std::vector<int> inner;        // vertices not in H
    std::vector<Edge> edges;
    std::vector<int> attachments;  // V(H) ∩ V(B)
};
std::vector<Bridge> h_bridges(const PlaneGraph& g, const Subgraph& h);

// Subgraph with the inherited embedding. Vertex ids are remapped densely;
// to_parent[i] is the parent id of sub vertex i. The outer face is the face
// containing the parent's outer region. Throws if the result is disconnected.
struct Extracted {
    PlaneGraph g;
    std::vector<int> to_parent;
    std::vector<int> from_parent;  // -1 for dropped vertices
};
Extracted extract_subgraph(const PlaneGraph& g, const std::vector<int>& vertices,
                           const std::vector<Edge>& edges);
Extracted delete_vertices(const PlaneGraph& g, const std::vector<int>& gone);

bool connected_without(const PlaneGraph& g, const std::vector<char>& removed);

// builders
// rotations from a straight-line layout (double coordinates, y up)
PlaneGraph from_layout(const std::vector<std::pair<double, double>>& pts,
                       const std::vector<Edge>& edges, std::vector<int> outer_walk);
// same, with the outer face left of dart u->v
PlaneGraph from_layout(const std::vector<std::pair<double, double>>& pts, const std::vector<Edge>& edges, int u, int v);
// insert a new vertex into the bounded face a,b,c (counter-clockwise) of a raw
// rotation system; returns its id
int stack_vertex(std::vector<std::vector<int>>& rot, int a, int b, int c);
PlaneGraph triangle_graph();        // outer 0 2 1, inner face 0 1 2
PlaneGraph cycle_graph(int k);      // outer 0 1 .. k-1
PlaneGraph k4_graph();              // outer 0 1 2, vertex 3 inside
PlaneGraph octahedron_graph();
PlaneGraph cube_graph();
PlaneGraph prism_graph();           // outer 0 1 2

}  // namespace col
