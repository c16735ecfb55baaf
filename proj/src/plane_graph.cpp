#include "collinear/plane_graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "collinear/error.hpp"

namespace col {

namespace {

std::int64_t key2(int a, int b) { return (static_cast<std::int64_t>(a) << 32) | static_cast<std::uint32_t>(b); }

std::string join(const std::vector<int>& xs, char sep) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

std::vector<int> min_rotation(const std::vector<int>& w) {
    std::vector<int> best = w;
    for (size_t s = 1; s < w.size(); ++s) {
        std::vector<int> r(w.begin() + s, w.end());
        r.insert(r.end(), w.begin(), w.begin() + s);
        if (r < best) best = r;
    }
    return best;
}

}  // namespace

PlaneGraph::PlaneGraph(std::vector<std::vector<int>> rot, std::vector<int> outer_walk)
    : rot_(std::move(rot)), outer_walk_(std::move(outer_walk)) {
    build();
}

PlaneGraph PlaneGraph::with_outer_dart(std::vector<std::vector<int>> rot, int u, int v) {
    std::vector<int> walk;
    int x = u, y = v;
    const size_t limit = 4 * rot.size() * rot.size() + 8;
    do {
        walk.push_back(x);
        auto& r = rot[y];
        auto it = std::find(r.begin(), r.end(), x);
        if (it == r.end()) throw input_error("embedding", "asymmetric rotation system");
        int z = (it + 1 == r.end()) ? r.front() : *(it + 1);
        x = y;
        y = z;
        if (walk.size() > limit) throw input_error("embedding", "face walk does not close");
    } while (!(x == u && y == v));
    return PlaneGraph(std::move(rot), std::move(walk));
}

PlaneGraph PlaneGraph::with_outer_face(int f) const {
    if (faces_[f].empty()) return *this;
    int d = faces_[f].front();
    return with_outer_dart(rot_, tail_[d], head_[d]);
}

void PlaneGraph::build() {
    const int N = n();
    if (N == 0) throw input_error("embedding", "graph has no vertices");
    off_.assign(N + 1, 0);
    for (int v = 0; v < N; ++v) off_[v + 1] = off_[v] + static_cast<int>(rot_[v].size());
    const int D = off_[N];
    tail_.resize(D);
    head_.resize(D);
    dart_index_.clear();
    dart_index_.reserve(D * 2);
    for (int v = 0; v < N; ++v) {
        for (size_t i = 0; i < rot_[v].size(); ++i) {
            int w = rot_[v][i];
            if (w < 0 || w >= N) throw input_error("embedding", "neighbour id out of range at vertex " + std::to_string(v));
            if (w == v) throw input_error("embedding", "loop at vertex " + std::to_string(v));
            int d = off_[v] + static_cast<int>(i);
            tail_[d] = v;
            head_[d] = w;
            if (!dart_index_.emplace(key2(v, w), d).second)
                throw input_error("embedding", "multi-edge " + std::to_string(v) + "-" + std::to_string(w));
        }
    }
    twin_.resize(D);
    edges_.clear();
    edge_index_.clear();
    for (int d = 0; d < D; ++d) {
        auto it = dart_index_.find(key2(head_[d], tail_[d]));
        if (it == dart_index_.end())
            throw input_error("embedding", "asymmetric rotation: " + std::to_string(tail_[d]) + " lists " +
                                               std::to_string(head_[d]) + " but not conversely");
        twin_[d] = it->second;
        if (tail_[d] < head_[d]) edges_.push_back({tail_[d], head_[d]});
    }
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 0; i < edges_.size(); ++i) edge_index_[key2(edges_[i].first, edges_[i].second)] = static_cast<int>(i);

    next_.resize(D);
    for (int d = 0; d < D; ++d) next_[d] = dart(head_[d], cw_next(head_[d], tail_[d]));

    faces_.clear();
    face_of_.assign(D, -1);
    for (int d = 0; d < D; ++d) {
        if (face_of_[d] >= 0) continue;
        int f = static_cast<int>(faces_.size());
        faces_.emplace_back();
        int e = d;
        do {
            face_of_[e] = f;
            faces_[f].push_back(e);
            e = next_[e];
        } while (e != d);
    }
    if (D == 0) faces_.emplace_back();  // single vertex: one empty face

    // connectivity
    {
        std::vector<char> seen(N, 0);
        std::vector<int> st{0};
        seen[0] = 1;
        int cnt = 1;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int w : rot_[v])
                if (!seen[w]) seen[w] = 1, ++cnt, st.push_back(w);
        }
        if (cnt != N) throw input_error("embedding", "graph is disconnected");
    }
    if (N - m() + num_faces() != 2)
        throw input_error("embedding", "rotation system fails Euler check: V-E+F = " +
                                           std::to_string(N - m() + num_faces()));

    face_keys_.clear();
    for (int f = 0; f < num_faces(); ++f) face_keys_[face_key(f)] = f;

    // outer face
    outer_ = -1;
    if (D == 0) {
        if (outer_walk_.size() != 1 || outer_walk_[0] != 0) throw input_error("outer", "outer walk of a single vertex must be '0'");
        outer_ = 0;
    } else {
        auto match = [&](const std::vector<int>& w) -> int {
            if (w.size() < 2) return -1;
            int d0 = dart(w[0], w[1]);
            if (d0 < 0) return -1;
            int f = face_of_[d0];
            if (faces_[f].size() != w.size()) return -1;
            int e = d0;
            for (size_t i = 0; i < w.size(); ++i, e = next_[e])
                if (tail_[e] != w[i]) return -1;
            return f;
        };
        outer_ = match(outer_walk_);
        if (outer_ < 0) {
            std::vector<int> rev(outer_walk_.rbegin(), outer_walk_.rend());
            if (match(rev) >= 0)
                throw input_error("orientation", "outer walk is traced only in reverse; rotations appear counter-clockwise");
            throw input_error("outer", "declared outer walk is not a traced face");
        }
    }
    on_outer_.assign(N, 0);
    if (D == 0) on_outer_[0] = 1;
    for (int d : faces_[outer_]) on_outer_[tail_[d]] = 1;
}

int PlaneGraph::max_degree() const {
    int r = 0;
    for (auto& x : rot_) r = std::max<int>(r, x.size());
    return r;
}

int PlaneGraph::dart(int u, int v) const {
    auto it = dart_index_.find(key2(u, v));
    return it == dart_index_.end() ? -1 : it->second;
}

int PlaneGraph::rot_index(int v, int w) const {
    int d = dart(v, w);
    return d < 0 ? -1 : d - off_[v];
}

int PlaneGraph::cw_next(int v, int w) const {
    int i = rot_index(v, w);
    if (i < 0) throw internal_error("cw_next: no edge");
    return rot_[v][(i + 1) % rot_[v].size()];
}

int PlaneGraph::cw_prev(int v, int w) const {
    int i = rot_index(v, w);
    if (i < 0) throw internal_error("cw_prev: no edge");
    int k = static_cast<int>(rot_[v].size());
    return rot_[v][(i + k - 1) % k];
}

int PlaneGraph::edge_id(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = edge_index_.find(key2(a, b));
    return it == edge_index_.end() ? -1 : it->second;
}

std::vector<int> PlaneGraph::face_vertices(int f) const {
    std::vector<int> r;
    if (faces_[f].empty()) return {0};
    for (int d : faces_[f]) r.push_back(tail_[d]);
    return r;
}

std::string PlaneGraph::face_key(int f) const { return join(min_rotation(face_vertices(f)), ','); }

int PlaneGraph::face_by_key(const std::string& key) const {
    auto it = face_keys_.find(key);
    return it == face_keys_.end() ? -1 : it->second;
}

bool PlaneGraph::face_simple(int f) const {
    auto w = face_vertices(f);
    std::sort(w.begin(), w.end());
    return std::adjacent_find(w.begin(), w.end()) == w.end();
}

bool PlaneGraph::on_outer_face(int v) const { return on_outer_[v] != 0; }

std::vector<int> PlaneGraph::outer_vertices() const {
    std::vector<int> r;
    for (int v = 0; v < n(); ++v)
        if (on_outer_[v]) r.push_back(v);
    return r;
}

bool PlaneGraph::outer_is_simple_cycle() const { return faces_[outer_].size() >= 3 && face_simple(outer_); }

std::pair<int, int> PlaneGraph::edge_faces(int a, int b) const {
    int d = dart(a, b);
    if (d < 0) throw internal_error("edge_faces: no edge");
    return {face_of_[d], face_of_[twin_[d]]};
}

std::vector<std::vector<std::pair<int, int>>> PlaneGraph::dual() const {
    std::vector<std::vector<std::pair<int, int>>> r(num_faces());
    for (int e = 0; e < m(); ++e) {
        auto [f, g] = edge_faces(edges_[e].first, edges_[e].second);
        r[f].push_back({e, g});
        if (f != g) r[g].push_back({e, f});
    }
    return r;
}

// ---------------------------------------------------------------- io

PlaneGraph parse_plane_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::vector<int>> rot;
    std::vector<char> given;
    std::vector<int> outer;
    bool have_outer = false;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw input_error("syntax", "line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "planegraph") {
            if (n >= 0) fail("duplicate header");
            if (!(ls >> n) || n <= 0) fail("bad vertex count");
            rot.assign(n, {});
            given.assign(n, 0);
        } else if (tok == "rot") {
            if (n < 0) fail("rot before header");
            std::string vs;
            if (!(ls >> vs) || vs.empty() || vs.back() != ':') fail("expected 'rot <v>:'");
            vs.pop_back();
            int v;
            try {
                size_t pos;
                v = std::stoi(vs, &pos);
                if (pos != vs.size()) fail("bad vertex id");
            } catch (const std::logic_error&) {
                fail("bad vertex id");
            }
            if (v < 0 || v >= n) fail("vertex id out of range");
            if (given[v]) fail("duplicate rot line for vertex " + std::to_string(v));
            given[v] = 1;
            std::string w;
            while (ls >> w) {
                try {
                    size_t pos;
                    int x = std::stoi(w, &pos);
                    if (pos != w.size()) fail("bad neighbour '" + w + "'");
                    rot[v].push_back(x);
                } catch (const std::logic_error&) {
                    fail("bad neighbour '" + w + "'");
                }
            }
        } else if (tok == "outer:") {
            if (have_outer) fail("duplicate outer line");
            have_outer = true;
            std::string w;
            while (ls >> w) {
                try {
                    size_t pos;
                    int x = std::stoi(w, &pos);
                    if (pos != w.size()) fail("bad vertex '" + w + "'");
                    outer.push_back(x);
                } catch (const std::logic_error&) {
                    fail("bad vertex '" + w + "'");
                }
            }
            if (outer.empty()) fail("empty outer walk");
        } else {
            fail("unknown directive '" + tok + "'");
        }
    }
    if (n < 0) throw input_error("syntax", "missing planegraph header");
    for (int v = 0; v < n; ++v)
        if (!given[v]) throw input_error("syntax", "missing rot line for vertex " + std::to_string(v));
    if (!have_outer) throw input_error("syntax", "missing outer line");
    return PlaneGraph(std::move(rot), std::move(outer));
}

std::string serialize(const PlaneGraph& g) {
    std::ostringstream o;
    o << "planegraph " << g.n() << "\n";
    for (int v = 0; v < g.n(); ++v) {
        o << "rot " << v << ":";
        for (int w : g.rot(v)) o << ' ' << w;
        o << "\n";
    }
    o << "outer:";
    for (int v : g.outer_walk()) o << ' ' << v;
    o << "\n";
    return o.str();
}

// ---------------------------------------------------------------- boundary

BoundaryPath boundary_path(const PlaneGraph& g, int u, int v, PathKind kind) {
    if (u == v) throw input_error("boundary", "boundary path needs distinct endpoints");
    if (!g.outer_is_simple_cycle()) throw input_error("boundary", "outer boundary is not a simple cycle");
    auto w = g.face_vertices(g.outer_face());
    if (kind == PathKind::Beta) std::reverse(w.begin(), w.end());
    auto iu = std::find(w.begin(), w.end(), u);
    auto iv = std::find(w.begin(), w.end(), v);
    if (iu == w.end() || iv == w.end()) throw input_error("boundary", "endpoint not on the outer face");
    BoundaryPath p{kind, u, v, {}};
    size_t i = iu - w.begin();
    while (true) {
        p.walk.push_back(w[i]);
        if (w[i] == v) break;
        i = (i + 1) % w.size();
    }
    return p;
}

// ---------------------------------------------------------------- connectivity

bool connected_without(const PlaneGraph& g, const std::vector<char>& removed) {
    int start = -1, total = 0;
    for (int v = 0; v < g.n(); ++v)
        if (!removed[v]) {
            ++total;
            if (start < 0) start = v;
        }
    if (total <= 1) return true;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> st{start};
    seen[start] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        for (int y : g.rot(x))
            if (!removed[y] && !seen[y]) seen[y] = 1, ++cnt, st.push_back(y);
    }
    return cnt == total;
}

namespace {

// articulation points of g restricted to vertices with !removed
std::vector<int> articulation(const PlaneGraph& g, const std::vector<char>& removed) {
    const int N = g.n();
    std::vector<int> disc(N, -1), low(N, 0), parent(N, -1), it(N, 0);
    std::vector<char> art(N, 0);
    int timer = 0;
    for (int s = 0; s < N; ++s) {
        if (removed[s] || disc[s] >= 0) continue;
        int rootkids = 0;
        std::vector<int> st{s};
        disc[s] = low[s] = timer++;
        while (!st.empty()) {
            int v = st.back();
            if (it[v] < g.degree(v)) {
                int w = g.rot(v)[it[v]++];
                if (removed[w]) continue;
                if (disc[w] < 0) {
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    if (v == s) ++rootkids;
                    st.push_back(w);
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                st.pop_back();
                if (!st.empty()) {
                    int p = st.back();
                    low[p] = std::min(low[p], low[v]);
                    if (p != s && low[v] >= disc[p]) art[p] = 1;
                }
            }
        }
        if (rootkids > 1) art[s] = 1;
    }
    std::vector<int> r;
    for (int v = 0; v < N; ++v)
        if (art[v]) r.push_back(v);
    return r;
}

}  // namespace

std::vector<int> cut_vertices(const PlaneGraph& g) { return articulation(g, std::vector<char>(g.n(), 0)); }

bool is_biconnected(const PlaneGraph& g) { return g.n() >= 3 && cut_vertices(g).empty(); }

SeparationStructure separation_pairs(const PlaneGraph& g) {
    SeparationStructure s;
    s.cut_vertices = cut_vertices(g);
    if (!s.cut_vertices.empty() || g.n() < 3) throw input_error("connectivity", "input is not biconnected");
    std::vector<char> removed(g.n(), 0);
    for (int a = 0; a < g.n(); ++a) {
        removed[a] = 1;
        for (int b : articulation(g, removed))
            if (b > a) s.separation_pairs.push_back({a, b});
        removed[a] = 0;
    }
    return s;
}

bool is_triconnected(const PlaneGraph& g) {
    if (g.n() < 4 || !is_biconnected(g)) return false;
    return separation_pairs(g).separation_pairs.empty();
}

std::vector<PairComponent> pair_components(const PlaneGraph& g, int a, int b) {
    std::vector<int> comp(g.n(), -1);
    comp[a] = comp[b] = -2;
    std::vector<PairComponent> r;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(r.size());
        PairComponent pc{false, {a, b}, {}};
        std::vector<int> st{s};
        comp[s] = id;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            pc.vertices.push_back(x);
            for (int y : g.rot(x)) {
                if (comp[y] == -1) comp[y] = id, st.push_back(y);
                if (comp[y] == -2 || y > x) pc.edges.push_back(norm_edge(x, y));
            }
        }
        std::sort(pc.vertices.begin(), pc.vertices.end());
        std::sort(pc.edges.begin(), pc.edges.end());
        r.push_back(std::move(pc));
    }
    if (g.has_edge(a, b)) r.push_back(PairComponent{true, {std::min(a, b), std::max(a, b)}, {norm_edge(a, b)}});
    return r;
}

std::vector<Bridge> h_bridges(const PlaneGraph& g, const Subgraph& h) {
    std::vector<char> inH(g.n(), 0);
    for (int v : h.vertices) {
        if (v < 0 || v >= g.n()) throw input_error("subgraph", "vertex not in graph");
        inH[v] = 1;
    }
    std::set<Edge> hedges;
    for (auto e : h.edges) {
        e = norm_edge(e.first, e.second);
        if (!g.has_edge(e.first, e.second) || !inH[e.first] || !inH[e.second])
            throw input_error("subgraph", "edge not in graph or endpoint missing from subgraph");
        hedges.insert(e);
    }
    std::vector<Bridge> r;
    for (auto& e : g.edges())
        if (inH[e.first] && inH[e.second] && !hedges.count(e)) r.push_back(Bridge{true, {}, {e}, {e.first, e.second}});
    std::vector<int> comp(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (inH[s] || comp[s] >= 0) continue;
        Bridge b{false, {}, {}, {}};
        std::set<int> att;
        std::vector<int> st{s};
        comp[s] = s;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            b.inner.push_back(x);
            for (int y : g.rot(x)) {
                if (inH[y]) {
                    att.insert(y);
                    b.edges.push_back(norm_edge(x, y));
                } else {
                    if (y > x) b.edges.push_back(norm_edge(x, y));
                    if (comp[y] < 0) comp[y] = s, st.push_back(y);
                }
            }
        }
        std::sort(b.inner.begin(), b.inner.end());
        std::sort(b.edges.begin(), b.edges.end());
        b.attachments.assign(att.begin(), att.end());
        r.push_back(std::move(b));
    }
    return r;
}

// ---------------------------------------------------------------- subgraphs

Extracted extract_subgraph(const PlaneGraph& g, const std::vector<int>& vertices, const std::vector<Edge>& edges) {
    Extracted x;
    x.from_parent.assign(g.n(), -1);
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs) {
        x.from_parent[v] = static_cast<int>(x.to_parent.size());
        x.to_parent.push_back(v);
    }
    std::set<Edge> keep;
    for (auto e : edges) {
        e = norm_edge(e.first, e.second);
        if (!g.has_edge(e.first, e.second) || x.from_parent[e.first] < 0 || x.from_parent[e.second] < 0)
            throw input_error("subgraph", "edge not in graph or endpoint missing");
        keep.insert(e);
    }
    // merge parent faces across deleted edges
    std::vector<int> uf(g.num_faces());
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int a) { return uf[a] == a ? a : uf[a] = find(uf[a]); };
    for (auto& e : g.edges())
        if (!keep.count(e)) {
            auto [f1, f2] = g.edge_faces(e.first, e.second);
            uf[find(f1)] = find(f2);
        }
    std::vector<std::vector<int>> rot(vs.size());
    for (size_t i = 0; i < vs.size(); ++i)
        for (int w : g.rot(vs[i]))
            if (keep.count(norm_edge(vs[i], w))) rot[i].push_back(x.from_parent[w]);
    if (keep.empty()) {
        if (vs.size() != 1) throw input_error("subgraph", "subgraph is disconnected");
        x.g = PlaneGraph(rot, {0});
        return x;
    }
    int oc = find(g.outer_face());
    int start = -1;
    for (int d = 0; d < g.num_darts() && start < 0; ++d)
        if (keep.count(norm_edge(g.tail(d), g.head(d))) && find(g.face_of(d)) == oc) start = d;
    if (start < 0) throw internal_error("extract_subgraph: outer region lost");
    // walk the sub-face from start
    std::vector<int> walk;
    int u = g.tail(start), v = g.head(start);
    int u0 = u, v0 = v;
    do {
        walk.push_back(x.from_parent[u]);
        int w = u;
        do w = g.cw_next(v, w);
        while (!keep.count(norm_edge(v, w)));
        u = v;
        v = w;
    } while (!(u == u0 && v == v0));
    try {
        x.g = PlaneGraph(std::move(rot), std::move(walk));
    } catch (const Error& e) {
        throw input_error("subgraph", std::string("extracted subgraph invalid: ") + e.what());
    }
    return x;
}

Extracted delete_vertices(const PlaneGraph& g, const std::vector<int>& gone) {
    std::vector<char> rm(g.n(), 0);
    for (int v : gone) rm[v] = 1;
    std::vector<int> vs;
    for (int v = 0; v < g.n(); ++v)
        if (!rm[v]) vs.push_back(v);
    std::vector<Edge> es;
    for (auto& e : g.edges())
        if (!rm[e.first] && !rm[e.second]) es.push_back(e);
    return extract_subgraph(g, vs, es);
}

// ---------------------------------------------------------------- builders

namespace {

std::vector<std::vector<int>> layout_rotations(const std::vector<std::pair<double, double>>& pts,
                                               const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> rot(pts.size());
    for (auto& e : edges) {
        rot[e.first].push_back(e.second);
        rot[e.second].push_back(e.first);
    }
    for (size_t v = 0; v < pts.size(); ++v) {
        auto ang = [&](int w) {
            return std::atan2(pts[w].second - pts[v].second, pts[w].first - pts[v].first);
        };
        std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) { return ang(a) > ang(b); });
    }
    return rot;
}

}  // namespace

PlaneGraph from_layout(const std::vector<std::pair<double, double>>& pts, const std::vector<Edge>& edges,
                       std::vector<int> outer_walk) {
    return PlaneGraph(layout_rotations(pts, edges), std::move(outer_walk));
}

PlaneGraph from_layout(const std::vector<std::pair<double, double>>& pts, const std::vector<Edge>& edges, int u, int v) {
    return PlaneGraph::with_outer_dart(layout_rotations(pts, edges), u, v);
}

int stack_vertex(std::vector<std::vector<int>>& rot, int a, int b, int c) {
    int w = static_cast<int>(rot.size());
    auto ins_after = [&](int v, int x) {
        auto it = std::find(rot[v].begin(), rot[v].end(), x);
        if (it == rot[v].end()) throw internal_error("stack_vertex: not a face");
        rot[v].insert(it + 1, w);
    };
    ins_after(a, c);
    ins_after(b, a);
    ins_after(c, b);
    rot.push_back({a, c, b});
    return w;
}

PlaneGraph triangle_graph() { return from_layout({{0, 0}, {2, 0}, {1, 2}}, {{0, 1}, {1, 2}, {0, 2}}, {0, 2, 1}); }

PlaneGraph cycle_graph(int k) {
    std::vector<std::pair<double, double>> p;
    std::vector<Edge> e;
    std::vector<int> outer;
    for (int i = 0; i < k; ++i) {
        double a = -2 * M_PI * i / k;
        p.push_back({std::cos(a), std::sin(a)});
        e.push_back(norm_edge(i, (i + 1) % k));
        outer.push_back(i);
    }
    return from_layout(p, e, outer);
}

PlaneGraph k4_graph() {
    return from_layout({{0, 2}, {2, -1}, {-2, -1}, {0, 0}}, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}, {0, 1, 2});
}

PlaneGraph octahedron_graph() {
    // outer triangle 0 1 2, inner triangle 3 4 5
    return from_layout({{0, 10}, {9, -5}, {-9, -5}, {0, -2}, {-2, 1}, {2, 1}},
                       {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 4}, {0, 5}, {1, 5}, {1, 3}, {2, 3}, {2, 4}},
                       {0, 1, 2});
}

PlaneGraph cube_graph() {
    return from_layout({{-3, 3}, {3, 3}, {3, -3}, {-3, -3}, {-1, 1}, {1, 1}, {1, -1}, {-1, -1}},
                       {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}},
                       {0, 1, 2, 3});
}

PlaneGraph prism_graph() {
    return from_layout({{0, 10}, {9, -5}, {-9, -5}, {0, 2}, {2, -1}, {-2, -1}},
                       {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}, {0, 1, 2});
}

}  // namespace col
