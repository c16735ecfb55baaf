#include "collinear/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "collinear/error.hpp"

namespace col {

namespace {

struct Search {
    const PlaneGraph& g;
    OracleOptions opt;
    int n, E, F, budget;
    // point ids: vertex v, or n + edge id
    std::vector<std::vector<int>> pos;        // pos[f][point]: -1 absent, -2 ambiguous
    std::vector<std::vector<int>> faces_at;   // faces incident to a point (unambiguous only)
    std::vector<std::vector<int>> pts_on;     // points on a face (unambiguous only)
    std::vector<std::vector<int>> inc;        // edge ids at a vertex
    std::vector<int> weight;
    std::vector<char> outer_pt;               // point touches the outer face

    std::vector<char> visited, contained;
    std::vector<int> tally;
    std::vector<std::vector<std::pair<int, int>>> chords;
    std::vector<int> points;                  // point sequence
    std::vector<int> via;                     // connector before each point: face id, or -1 for contained edge
    int best = 0;
    GoodCurve witness;
    long long explored = 0;

    explicit Search(const PlaneGraph& gg, const OracleOptions& o) : g(gg), opt(o) {
        n = g.n(), E = g.m(), F = g.num_faces();
        budget = opt.budget < 0 ? n + E : opt.budget;
        pos.assign(F, std::vector<int>(n + E, -1));
        for (int f = 0; f < F; ++f) {
            const auto& ds = g.face_darts(f);
            for (size_t i = 0; i < ds.size(); ++i) {
                int pv = g.tail(ds[i]);
                int pe = n + g.edge_id(g.tail(ds[i]), g.head(ds[i]));
                int& a = pos[f][pv];
                a = a == -1 ? static_cast<int>(4 * i) : -2;
                int& b = pos[f][pe];
                b = b == -1 ? static_cast<int>(4 * i + 2) : -2;
            }
        }
        faces_at.assign(n + E, {});
        pts_on.assign(F, {});
        for (int f = 0; f < F; ++f)
            for (int p = 0; p < n + E; ++p)
                if (pos[f][p] >= 0) faces_at[p].push_back(f), pts_on[f].push_back(p);
        inc.assign(n, {});
        for (int e = 0; e < E; ++e) inc[g.edges()[e].first].push_back(e), inc[g.edges()[e].second].push_back(e);
        weight.assign(n, 1);
        if (opt.internal_only)
            for (int v = 0; v < n; ++v) weight[v] = g.on_outer_face(v) ? 0 : 1;
        outer_pt.assign(n + E, 0);
        for (int p = 0; p < n + E; ++p) outer_pt[p] = pos[g.outer_face()][p] >= 0;
        visited.assign(n, 0);
        contained.assign(E, 0);
        tally.assign(E, 0);
        chords.assign(F, {});
    }

    bool vertex_free(int w, int allow_edge) const {
        if (visited[w]) return false;
        for (int e : inc[w])
            if (!contained[e] && tally[e] != 0 && !(e == allow_edge && tally[e] == 1)) return false;
        return true;
    }

    int available() const {
        int cur = points.back();
        int s = 0;
        for (int w = 0; w < n; ++w) {
            if (!weight[w]) continue;
            int allow = cur < n ? g.edge_id(cur, w) : -1;
            if (vertex_free(w, allow)) s += weight[w];
        }
        return s;
    }

    bool interleaves(int f, int p, int q) const {
        long M = 4L * static_cast<long>(g.face_darts(f).size());
        auto md = [&](long x) { return ((x % M) + M) % M; };
        auto between = [&](long x) { return 0 < md(x - p) && md(x - p) < md(q - p); };
        for (auto [a, b] : chords[f]) {
            if (a == p || a == q || b == p || b == q) continue;
            if (between(a) != between(b)) return true;
        }
        return false;
    }

    Station station(int p) const {
        if (p < n) return Station::vertex(p);
        auto [a, b] = g.edges()[p - n];
        return Station::cross(a, b);
    }

    // the curve as stations, with optional dangling faces at the ends
    GoodCurve build(int start_face, int end_face) const {
        GoodCurve c;
        if (start_face >= 0) c.stations.push_back(Station::hop(g.face_key(start_face)));
        for (size_t i = 0; i < points.size(); ++i) {
            if (i > 0) {
                if (via[i] >= 0) c.stations.push_back(Station::hop(g.face_key(via[i])));
                else c.stations.push_back(Station::edge(points[i - 1], points[i]));
            }
            c.stations.push_back(station(points[i]));
        }
        if (end_face >= 0) c.stations.push_back(Station::hop(g.face_key(end_face)));
        return c;
    }

    // dangling options at an end: -1 (none) if the point itself may end the
    // curve, the outer face if it can dangle there
    std::vector<int> end_options(int p, int hop_face) const {
        std::vector<int> r;
        int of = g.outer_face();
        if (!outer_pt[p]) return r;
        if (p >= n) {
            // a crossing end continues into the face across the edge
            auto [a, b] = g.edges()[p - n];
            auto [l, rr] = g.edge_faces(a, b);
            int other = hop_face == l ? rr : l;
            if (hop_face < 0 || other == of) r.push_back(-1);
            return r;
        }
        r.push_back(-1);
        r.push_back(of);
        return r;
    }

    void try_complete(int obj) {
        int k = static_cast<int>(points.size());
        int first_hop = k > 1 ? via[1] : -1;
        int last_hop = k > 1 ? via[k - 1] : -1;
        if (k == 1 && points[0] >= n) return;
        for (int sf : end_options(points.front(), first_hop))
            for (int ef : end_options(points.back(), last_hop)) {
                GoodCurve c = build(sf, ef);
                bool ok = false;
                try {
                    ok = is_proper(g, c);
                } catch (const Error&) {
                    ok = false;
                }
                if (ok) {
                    best = obj;
                    witness = c;
                    return;
                }
            }
    }

    void visit_vertex(int w, int sign) {
        visited[w] = sign > 0;
        for (int e : inc[w])
            if (!contained[e]) tally[e] += sign;
    }

    void dfs(int obj) {
        int k = static_cast<int>(points.size());
        if (k == 1 || points.front() <= points.back()) ++explored;
        if (obj > best) try_complete(obj);
        if (k >= budget) return;
        if (obj + available() <= best) return;
        int cur = points.back();
        // faces we may leave through: a crossing must switch sides
        std::vector<int> fs;
        for (int f : faces_at[cur])
            if (cur < n || k == 1 || f != via[k - 1]) fs.push_back(f);
        for (int f : fs) {
            int pc = pos[f][cur];
            for (int q : pts_on[f]) {
                if (q == cur) continue;
                if (q < n) {
                    if (!vertex_free(q, -1)) continue;
                } else {
                    if (tally[q - n] != 0 || contained[q - n]) continue;
                }
                int pq = pos[f][q];
                if (interleaves(f, pc, pq)) continue;
                chords[f].push_back({pc, pq});
                points.push_back(q);
                via.push_back(f);
                if (q < n) {
                    visit_vertex(q, 1);
                    dfs(obj + weight[q]);
                    visit_vertex(q, -1);
                } else {
                    tally[q - n] = 1;
                    dfs(obj);
                    tally[q - n] = 0;
                }
                points.pop_back();
                via.pop_back();
                chords[f].pop_back();
            }
        }
        if (cur < n) {
            for (int w : g.rot(cur)) {
                int e = g.edge_id(cur, w);
                if (contained[e] || tally[e] != 1 || !vertex_free(w, e)) continue;
                contained[e] = 1;
                tally[e] = 0;
                points.push_back(w);
                via.push_back(-1);
                visit_vertex(w, 1);
                dfs(obj + weight[w]);
                visit_vertex(w, -1);
                points.pop_back();
                via.pop_back();
                tally[e] = 1;
                contained[e] = 0;
            }
        }
    }

    void run() {
        for (int p = 0; p < n + E; ++p) {
            points = {p};
            via = {-1};
            if (p < n) {
                visit_vertex(p, 1);
                dfs(weight[p]);
                visit_vertex(p, -1);
            } else {
                if (faces_at[p].size() < 2) continue;
                tally[p - n] = 1;
                dfs(0);
                tally[p - n] = 0;
            }
        }
    }
};

}  // namespace

OracleResult enumerate_curves(const PlaneGraph& g, const OracleOptions& opt) {
    if (g.m() > opt.edge_limit)
        throw guard_error("guard", "oracle limited to " + std::to_string(opt.edge_limit) + " edges, graph has " +
                                       std::to_string(g.m()));
    Search s(g, opt);
    s.run();
    OracleResult r;
    r.max_vertices = s.best;
    r.witness = s.witness;
    r.explored = s.explored;
    r.certified = s.budget >= g.n() + g.m();
    return r;
}

std::string embedding_code(const PlaneGraph& g) {
    std::string best;
    const auto& w = g.outer_walk();
    int k = static_cast<int>(w.size());
    for (int i = 0; i < k; ++i)
        for (int mirror = 0; mirror < 2; ++mirror) {
            int u = w[i], v = mirror ? w[(i + k - 1) % k] : w[(i + 1) % k];
            std::vector<int> label(g.n(), -1);
            std::vector<int> order;
            // first neighbour of each vertex in the traversal
            std::vector<int> from(g.n(), -1);
            label[u] = 0;
            order.push_back(u);
            from[u] = v;
            for (size_t h = 0; h < order.size(); ++h) {
                int x = order[h];
                const auto& r = g.rot(x);
                int d = static_cast<int>(r.size());
                int s = g.rot_index(x, from[x]);
                for (int j = 0; j < d; ++j) {
                    int y = r[((mirror ? s - j : s + j) % d + d) % d];
                    if (label[y] < 0) {
                        label[y] = static_cast<int>(order.size());
                        order.push_back(y);
                        from[y] = x;
                    }
                }
            }
            std::ostringstream o;
            for (int x : order) {
                const auto& r = g.rot(x);
                int d = static_cast<int>(r.size());
                int s = g.rot_index(x, from[x]);
                o << '[';
                for (int j = 0; j < d; ++j) o << label[r[((mirror ? s - j : s + j) % d + d) % d]] << ',';
                o << ']';
            }
            std::string c = o.str();
            if (best.empty() || c < best) best = c;
        }
    return best;
}

std::vector<PlaneGraph> catalog_plane_3trees(int m) {
    if (m < 0) throw input_error("guard", "negative size");
    if (m > 7) throw guard_error("guard", "catalog limited to m <= 7");
    std::vector<PlaneGraph> level{triangle_graph()};
    for (int i = 1; i <= m; ++i) {
        std::map<std::string, PlaneGraph> next;
        for (const auto& g : level)
            for (int f = 0; f < g.num_faces(); ++f) {
                if (f == g.outer_face()) continue;
                auto w = g.face_vertices(f);
                auto rot = g.rotations();
                stack_vertex(rot, w[0], w[1], w[2]);
                PlaneGraph h(rot, g.outer_walk());
                next.emplace(embedding_code(h), h);
            }
        level.clear();
        for (auto& [c, h] : next) level.push_back(h);
    }
    return level;
}

std::string serialize(const OracleResult& r) {
    std::ostringstream o;
    o << "max_vertices " << r.max_vertices << "\n";
    o << "explored " << r.explored << "\n";
    o << "certified " << (r.certified ? "yes" : "no") << "\n";
    o << serialize(r.witness);
    return o.str();
}

}  // namespace col
