#include "collinear/treewidth.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "collinear/error.hpp"

namespace col {

namespace {

std::string str(int x) { return std::to_string(x); }
std::string name(Index ij) { return "(" + str(ij.first) + "," + str(ij.second) + ")"; }

const Edge& ref_edge(const GridMinorModel& m, const RefPoint& r) {
    const auto& tab = r.kind == RefPoint::H ? m.refh : m.refv;
    auto it = tab.find({r.i, r.j});
    if (it == tab.end()) throw input_error("model", "missing reference edge " + to_string(r));
    return it->second;
}

bool connected_set(const PlaneGraph& g, const std::vector<int>& vs) {
    std::set<int> in(vs.begin(), vs.end());
    std::vector<int> st{vs[0]};
    std::set<int> seen{vs[0]};
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w : g.rot(v))
            if (in.count(w) && seen.insert(w).second) st.push_back(w);
    }
    return seen.size() == in.size();
}

// first problem with the sets and reference edges, ignoring cells
std::string model_problem(const PlaneGraph& g, const GridMinorModel& m) {
    const int k = m.g;
    if (k < 2) return "grid side must be at least 2";
    std::vector<Index> where(g.n(), {0, 0});
    for (auto& [ij, vs] : m.branch) {
        auto [i, j] = ij;
        if (i < 1 || j < 1 || i > k || j > k) return "branch set " + name(ij) + " is outside the grid";
        if (vs.empty()) return "branch set " + name(ij) + " is empty";
        for (int v : vs) {
            if (v < 0 || v >= g.n()) return "branch set " + name(ij) + " has vertex " + str(v) + " out of range";
            if (where[v].first) return "vertex " + str(v) + " is in branch sets " + name(where[v]) + " and " + name(ij);
            where[v] = ij;
        }
        if (!connected_set(g, vs)) return "branch set " + name(ij) + " is not connected";
    }
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (!m.branch.count({i, j})) return "branch set " + name({i, j}) + " is missing";
    auto check_refs = [&](const std::map<Index, Edge>& tab, int di, int dj, const char* tag) -> std::string {
        for (auto& [ij, e] : tab) {
            auto [i, j] = ij;
            std::string nm = std::string(tag) + name(ij);
            if (i < 1 || j < 1 || i + di > k || j + dj > k) return "reference edge " + nm + " is outside the grid";
            if (e.first < 0 || e.second < 0 || e.first >= g.n() || e.second >= g.n() || !g.has_edge(e.first, e.second))
                return "reference edge " + nm + " is not an edge";
            if (where[e.first] != ij || where[e.second] != Index{i + di, j + dj})
                return "reference edge " + nm + " does not join " + name(ij) + " and " + name({i + di, j + dj});
        }
        for (int i = 1; i + di <= k; ++i)
            for (int j = 1; j + dj <= k; ++j)
                if (!tab.count({i, j})) return std::string("reference edge ") + tag + name({i, j}) + " is missing";
        return {};
    };
    if (auto p = check_refs(m.refh, 1, 0, "e"); !p.empty()) return p;
    if (auto p = check_refs(m.refv, 0, 1, "e'"); !p.empty()) return p;
    for (auto& [x, y] : g.edges()) {
        for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
            auto [i, j] = where[a];
            if (i < 2 || j < 2 || i > k - 1 || j > k - 1) continue;
            auto [p, q] = where[b];
            if (!p || std::abs(i - p) > 1 || std::abs(j - q) > 1)
                return "edge " + str(a) + "-" + str(b) + " leaves branch set " + name(where[a]) + " non-locally";
        }
    }
    return {};
}

// dual neighbours ordered by face key, then edge id
std::vector<std::vector<std::pair<int, int>>> sorted_dual(const PlaneGraph& g) {
    std::vector<std::pair<std::string, int>> keys;
    for (int f = 0; f < g.num_faces(); ++f) keys.push_back({g.face_key(f), f});
    std::sort(keys.begin(), keys.end());
    std::vector<int> rank(g.num_faces());
    for (size_t r = 0; r < keys.size(); ++r) rank[keys[r].second] = static_cast<int>(r);
    auto d = g.dual();
    for (auto& l : d)
        std::sort(l.begin(), l.end(), [&](auto& x, auto& y) {
            return std::pair{rank[x.second], x.first} < std::pair{rank[y.second], y.first};
        });
    return d;
}

struct DualPath {
    std::vector<int> faces;
    std::vector<int> edges;  // edges[k] separates faces[k] and faces[k+1]
};

// breadth-first search inside one cell, never crossing a wall
DualPath dual_bfs(const PlaneGraph& g, const CellMap& cm, Index cell, int start, const std::function<bool(int)>& goal) {
    std::vector<int> par(g.num_faces(), -2), via(g.num_faces(), -1);
    std::deque<int> q{start};
    par[start] = -1;
    int hit = -1;
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        if (goal(f)) {
            hit = f;
            break;
        }
        for (auto [e, h] : cm.dual[f]) {
            if (cm.wall[e] || h == f || par[h] != -2 || cm.owner[h] != cell) continue;
            par[h] = f;
            via[h] = e;
            q.push_back(h);
        }
    }
    if (hit < 0) throw internal_error("treewidth: no dual path in cell " + name(cell));
    DualPath p;
    for (int f = hit; f >= 0; f = par[f]) {
        p.faces.push_back(f);
        if (par[f] >= 0) p.edges.push_back(via[f]);
    }
    std::reverse(p.faces.begin(), p.faces.end());
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
}

void emit(const PlaneGraph& g, const DualPath& p, std::vector<Station>& out) {
    for (size_t k = 0; k < p.faces.size(); ++k) {
        if (k) {
            auto [x, y] = g.edges()[p.edges[k - 1]];
            out.push_back(Station::cross(x, y));
        }
        out.push_back(Station::hop(g.face_key(p.faces[k])));
    }
}

// face of cell incident to the reference edge
int side_face(const PlaneGraph& g, const GridMinorModel& m, const CellMap& cm, const RefPoint& r, Index cell) {
    auto e = ref_edge(m, r);
    auto [f, h] = g.edge_faces(e.first, e.second);
    if (cm.owner[f] == cell) return f;
    if (cm.owner[h] == cell) return h;
    throw internal_error("treewidth: " + to_string(r) + " does not border cell " + name(cell));
}

// cells bordered by a reference edge, with the side it forms: 0 bottom, 1 right, 2 top, 3 left
std::vector<std::pair<Index, int>> bordering(const RefPoint& r, int k) {
    std::vector<std::pair<Index, int>> c;
    auto add = [&](int i, int j, int side) {
        if (i >= 1 && j >= 1 && i <= k - 1 && j <= k - 1) c.push_back({{i, j}, side});
    };
    if (r.kind == RefPoint::H) {
        add(r.i, r.j, 0);
        add(r.i, r.j - 1, 2);
    } else {
        add(r.i, r.j, 3);
        add(r.i - 1, r.j, 1);
    }
    return c;
}

SubCurve route_ab(const PlaneGraph& g, const GridMinorModel& m, const CellMap& cm, RefPoint from, RefPoint to,
                  bool opposite) {
    Index cell{0, 0};
    for (auto [c1, s1] : bordering(from, m.g))
        for (auto [c2, s2] : bordering(to, m.g))
            if (c1 == c2 && s1 != s2 && ((s1 - s2 + 4) % 2 == 0) == opposite) cell = c1;
    if (!cell.first)
        throw input_error("route", to_string(from) + " and " + to_string(to) + " are not " +
                                       (opposite ? "opposite" : "adjacent") + " sides of a cell");
    SubCurve s;
    s.type = opposite ? 'A' : 'B';
    s.p = from;
    s.q = to;
    s.cells = {cell};
    int fq = side_face(g, m, cm, to, cell);
    auto path = dual_bfs(g, cm, cell, side_face(g, m, cm, from, cell), [&](int f) { return f == fq; });
    auto [a, b] = ref_edge(m, from);
    s.stations.push_back(Station::cross(a, b));
    emit(g, path, s.stations);
    auto [c, d] = ref_edge(m, to);
    s.stations.push_back(Station::cross(c, d));
    return s;
}

struct Leg {
    char type;
    RefPoint p, q;
    int i = 0, j = 0;
    bool up = false;
};

std::vector<Leg> snake(int k) {
    const int gp = (k - 2) / 4 * 4;
    auto V = [](int i, int j) { return RefPoint{RefPoint::V, i, j}; };
    auto H = [](int i, int j) { return RefPoint{RefPoint::H, i, j}; };
    std::vector<Leg> legs;
    auto ab = [&](char t, RefPoint p, RefPoint q) { legs.push_back({t, p, q}); };
    for (int b = 2, r = 0; b <= gp; b += 2, ++r) {
        // a row of vertex getters, zigzagging between slots b-1 and b
        std::vector<Leg> row;
        for (int a = 4; a <= gp; a += 2) {
            bool up = (a - 4) / 2 % 2 == 0;
            row.push_back({'C', up ? V(a - 1, b - 1) : V(a - 1, b), up ? V(a + 1, b) : V(a + 1, b - 1), a - 1, b, up});
        }
        if (r % 2) {
            std::reverse(row.begin(), row.end());
            for (auto& l : row) std::swap(l.p, l.q);
        }
        legs.insert(legs.end(), row.begin(), row.end());
        if (b == gp) break;
        if (r % 2 == 0) {
            int c = gp + 1;
            ab('B', V(c, b), H(c, b + 1));
            ab('A', H(c, b + 1), H(c, b + 2));
            ab('B', H(c, b + 2), V(c, b + 2));
        } else {
            ab('B', V(3, b - 1), H(2, b));
            ab('A', H(2, b), H(2, b + 1));
            ab('B', H(2, b + 1), V(3, b + 1));
        }
    }
    // back down the left side to the start of the first row
    ab('A', V(3, gp - 1), V(2, gp - 1));
    ab('B', V(2, gp - 1), H(1, gp - 1));
    for (int j = gp - 2; j >= 2; --j) ab('A', H(1, j + 1), H(1, j));
    ab('B', H(1, 2), V(2, 1));
    ab('A', V(2, 1), V(3, 1));
    return legs;
}

}  // namespace

std::string to_string(const RefPoint& r) {
    return std::string(r.kind == RefPoint::H ? "e" : "e'") + "(" + str(r.i) + "," + str(r.j) + ")";
}

// ------------------------------------------------------------------ io

GridMinorModel parse_grid_model(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    GridMinorModel m;
    bool header = false;
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
        if (tok == "gridmodel") {
            if (header) fail("duplicate header");
            if (!(ls >> m.g) || m.g < 1) fail("bad grid side");
            header = true;
            continue;
        }
        if (!header) fail("expected 'gridmodel <g>' first");
        if (tok != "branch" && tok != "refh" && tok != "refv") fail("unknown keyword '" + tok + "'");
        std::string rest;
        std::getline(ls, rest);
        auto colon = rest.find(':');
        if (colon == std::string::npos) fail("expected ':'");
        std::istringstream head(rest.substr(0, colon)), body(rest.substr(colon + 1));
        int i, j;
        std::string extra;
        if (!(head >> i >> j) || (head >> extra)) fail("expected '<i> <j>:'");
        std::vector<int> vs;
        std::string w;
        while (body >> w) {
            try {
                size_t pos;
                vs.push_back(std::stoi(w, &pos));
                if (pos != w.size()) fail("bad vertex id '" + w + "'");
            } catch (const std::logic_error&) {
                fail("bad vertex id '" + w + "'");
            }
        }
        if (tok == "branch") {
            if (!m.branch.emplace(Index{i, j}, vs).second) fail("duplicate branch set");
        } else {
            if (vs.size() != 2) fail("reference edge needs two vertices");
            auto& tab = tok == "refh" ? m.refh : m.refv;
            if (!tab.emplace(Index{i, j}, Edge{vs[0], vs[1]}).second) fail("duplicate reference edge");
        }
    }
    if (!header) throw input_error("syntax", "missing 'gridmodel' header");
    return m;
}

std::string serialize(const GridMinorModel& m) {
    std::ostringstream o;
    o << "gridmodel " << m.g << "\n";
    for (auto& [ij, vs] : m.branch) {
        o << "branch " << ij.first << " " << ij.second << ":";
        for (int v : vs) o << " " << v;
        o << "\n";
    }
    for (auto& [ij, e] : m.refh) o << "refh " << ij.first << " " << ij.second << ": " << e.first << " " << e.second << "\n";
    for (auto& [ij, e] : m.refv) o << "refv " << ij.first << " " << ij.second << ": " << e.first << " " << e.second << "\n";
    return o.str();
}

GridMinorModel transpose(const GridMinorModel& m) {
    GridMinorModel t;
    t.g = m.g;
    for (auto& [ij, vs] : m.branch) t.branch[{ij.second, ij.first}] = vs;
    for (auto& [ij, e] : m.refh) t.refv[{ij.second, ij.first}] = e;
    for (auto& [ij, e] : m.refv) t.refh[{ij.second, ij.first}] = e;
    return t;
}

// ------------------------------------------------------------------ cells

CellMap build_cells(const PlaneGraph& g, const GridMinorModel& m) {
    const int k = m.g;
    CellMap cm;
    cm.g = k;
    cm.owner.assign(g.num_faces(), {0, 0});
    cm.branch_of.assign(g.n(), -1);
    for (auto& [ij, vs] : m.branch)
        for (int v : vs) cm.branch_of[v] = (ij.first - 1) * k + (ij.second - 1);
    cm.wall.assign(g.m(), 0);
    for (int e = 0; e < g.m(); ++e) {
        auto [a, b] = g.edges()[e];
        cm.wall[e] = cm.branch_of[a] >= 0 && cm.branch_of[a] == cm.branch_of[b];
    }
    for (auto* tab : {&m.refh, &m.refv})
        for (auto& [ij, e] : *tab) {
            int id = g.edge_id(e.first, e.second);
            if (id < 0) throw input_error("model", "reference edge " + str(e.first) + "-" + str(e.second) + " is not an edge");
            cm.wall[id] = 1;
        }
    cm.dual = sorted_dual(g);
    const auto& dual = cm.dual;
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k - 1; ++j) {
            Index c{i, j};
            auto left_of = [&](const RefPoint& r, bool forward) {
                auto e = ref_edge(m, r);
                return forward ? g.face_of(g.dart(e.first, e.second)) : g.face_of(g.dart(e.second, e.first));
            };
            int start = left_of({RefPoint::H, i, j}, true);
            std::vector<int> fs;
            std::vector<int> st{start};
            std::set<int> seen{start};
            while (!st.empty()) {
                int f = st.back();
                st.pop_back();
                fs.push_back(f);
                for (auto [e, h] : dual[f])
                    if (!cm.wall[e] && seen.insert(h).second) st.push_back(h);
            }
            if (seen.count(g.outer_face())) throw input_error("model", "cell " + name(c) + " is not bounded");
            for (auto [r, fw] : {std::pair{RefPoint{RefPoint::V, i, j}, false}, {RefPoint{RefPoint::H, i, j + 1}, false},
                                 {RefPoint{RefPoint::V, i + 1, j}, true}})
                if (!seen.count(left_of(r, fw)))
                    throw input_error("model", "cell " + name(c) + " does not reach " + to_string(r));
            std::sort(fs.begin(), fs.end());
            for (int f : fs) {
                if (cm.owner[f].first) throw input_error("model", "cells " + name(cm.owner[f]) + " and " + name(c) + " overlap");
                cm.owner[f] = c;
            }
            cm.faces[c] = std::move(fs);
        }
    return cm;
}

ModelReport validate_model(const PlaneGraph& g, const GridMinorModel& m) {
    ModelReport r;
    r.problem = model_problem(g, m);
    if (!r.problem.empty()) {
        r.valid = false;
        return r;
    }
    try {
        build_cells(g, m);
        return r;
    } catch (const Error& e) {
        r.problem = e.what();
    }
    try {
        build_cells(g, transpose(m));
        r.mirrored = true;
        r.problem.clear();
    } catch (const Error&) {
        r.valid = false;
    }
    return r;
}

// ------------------------------------------------------------------ routing

SubCurve route_type_a(const PlaneGraph& g, const GridMinorModel& m, const CellMap& cells, RefPoint from, RefPoint to) {
    return route_ab(g, m, cells, from, to, true);
}

SubCurve route_type_b(const PlaneGraph& g, const GridMinorModel& m, const CellMap& cells, RefPoint from, RefPoint to) {
    return route_ab(g, m, cells, from, to, false);
}

SubCurve route_type_c(const PlaneGraph& g, const GridMinorModel& m, const CellMap& cm, int i, int j, bool up) {
    const int k = m.g;
    if (i < 1 || i + 2 > k || j < 2 || j > k - 1)
        throw input_error("route", "vertex getter (" + str(i) + "," + str(j) + ") is outside the grid");
    SubCurve s;
    s.type = 'C';
    s.blob = {i + 1, j};
    s.cells = {{i, j - 1}, {i + 1, j - 1}, {i, j}, {i + 1, j}};
    Index in_cell = up ? Index{i, j - 1} : Index{i, j};
    Index out_cell = up ? Index{i + 1, j} : Index{i + 1, j - 1};
    s.p = up ? RefPoint{RefPoint::V, i, j - 1} : RefPoint{RefPoint::V, i, j};
    s.q = up ? RefPoint{RefPoint::V, i + 2, j} : RefPoint{RefPoint::V, i + 2, j - 1};
    const int blob = i * k + (j - 1);
    auto touching = [&](Index cell) {
        std::vector<char> t(g.n(), 0);
        for (int f : cm.faces.at(cell))
            for (int v : g.face_vertices(f))
                if (cm.branch_of[v] == blob) t[v] = 1;
        return t;
    };
    auto src = touching(in_cell), dst = touching(out_cell);
    // shortest path inside the branch set between the two boundaries
    std::vector<int> par(g.n(), -2);
    std::vector<int> layer;
    for (int v : m.branch.at(s.blob))
        if (src[v]) {
            par[v] = -1;
            layer.push_back(v);
        }
    std::sort(layer.begin(), layer.end());
    int vq = -1;
    while (!layer.empty() && vq < 0) {
        for (int v : layer)
            if (dst[v] && (vq < 0 || v < vq)) vq = v;
        if (vq >= 0) break;
        std::vector<int> next;
        for (int v : layer)
            for (int w : g.rot(v))
                if (cm.branch_of[w] == blob && par[w] == -2) {
                    par[w] = v;
                    next.push_back(w);
                }
        layer = std::move(next);
    }
    if (vq < 0) throw internal_error("treewidth: branch set " + name(s.blob) + " does not span its cells");
    std::vector<int> path;
    for (int v = vq; v >= 0; v = par[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    const int vp = path.front();
    auto around = [&](int v) {
        std::set<int> fs;
        for (int w : g.rot(v)) fs.insert(g.face_of(g.dart(v, w)));
        return fs;
    };
    auto fp = around(vp), fq = around(vq);
    auto g1 = dual_bfs(g, cm, in_cell, side_face(g, m, cm, s.p, in_cell), [&](int f) { return fp.count(f) > 0; });
    auto g3 = dual_bfs(g, cm, out_cell, side_face(g, m, cm, s.q, out_cell), [&](int f) { return fq.count(f) > 0; });
    std::reverse(g3.faces.begin(), g3.faces.end());
    std::reverse(g3.edges.begin(), g3.edges.end());
    auto [a, b] = ref_edge(m, s.p);
    s.stations.push_back(Station::cross(a, b));
    emit(g, g1, s.stations);
    s.stations.push_back(Station::vertex(vp));
    for (size_t t = 1; t < path.size(); ++t) {
        s.stations.push_back(Station::edge(path[t - 1], path[t]));
        s.stations.push_back(Station::vertex(path[t]));
    }
    emit(g, g3, s.stations);
    auto [c, d] = ref_edge(m, s.q);
    s.stations.push_back(Station::cross(c, d));
    return s;
}

// ------------------------------------------------------------------ assembly

int grid_bound(int g) {
    int gp = g >= 2 ? (g - 2) / 4 * 4 : 0;
    return gp < 4 ? 0 : (gp / 2 - 1) * (gp / 2);
}

std::string region_violation(const PlaneGraph& g, const GridMinorModel& m, const CellMap& cm,
                             const std::vector<SubCurve>& pieces) {
    std::map<Index, int> cell_user;
    std::set<Index> blobs;
    const int k = m.g;
    for (size_t t = 0; t < pieces.size(); ++t) {
        const auto& s = pieces[t];
        std::string who = "piece " + str(static_cast<int>(t)) + " (" + s.type + ")";
        std::set<Index> region(s.cells.begin(), s.cells.end());
        for (auto c : s.cells)
            if (!cell_user.emplace(c, static_cast<int>(t)).second)
                return who + " reuses cell " + name(c) + " of piece " + str(cell_user[c]);
        int blob = -1;
        if (s.type == 'C') {
            if (!blobs.insert(s.blob).second) return who + " reuses branch set " + name(s.blob);
            blob = (s.blob.first - 1) * k + (s.blob.second - 1);
        }
        const auto& st = s.stations;
        auto is_ref = [&](const Station& x, const RefPoint& r) {
            auto e = ref_edge(m, r);
            return x == Station::cross(e.first, e.second);
        };
        if (st.size() < 3 || !is_ref(st.front(), s.p) || !is_ref(st.back(), s.q))
            return who + " does not run from " + to_string(s.p) + " to " + to_string(s.q);
        if (!(s.q == pieces[(t + 1) % pieces.size()].p)) return who + " does not meet the next piece";
        for (size_t x = 1; x + 1 < st.size(); ++x) {
            const auto& a = st[x];
            if (a.kind == Station::Face) {
                int f = g.face_by_key(a.face);
                if (f < 0 || !region.count(cm.owner[f])) return who + " leaves its region at face " + a.face;
            } else if (a.kind == Station::Cross) {
                auto [f, h] = g.edge_faces(a.a, a.b);
                if (!region.count(cm.owner[f]) || !region.count(cm.owner[h]))
                    return who + " crosses edge " + str(a.a) + "-" + str(a.b) + " outside its region";
            } else if (a.kind == Station::Vertex) {
                if (blob < 0 || cm.branch_of[a.a] != blob) return who + " visits vertex " + str(a.a) + " outside its region";
            } else if (blob < 0 || cm.branch_of[a.a] != blob || cm.branch_of[a.b] != blob) {
                return who + " runs along edge " + str(a.a) + "-" + str(a.b) + " outside its branch set";
            }
        }
    }
    return {};
}

Theorem5Result theorem5_curve(const PlaneGraph& g, const GridMinorModel& input, const Theorem5Options& opt) {
    auto rep = validate_model(g, input);
    if (!rep.valid) throw input_error("model", rep.problem);
    Theorem5Result res;
    res.transposed = rep.mirrored;
    const GridMinorModel m = rep.mirrored ? transpose(input) : input;
    if (grid_bound(m.g) == 0) throw input_error("model", "grid side " + str(m.g) + " is below 6");
    auto cm = build_cells(g, m);
    auto legs = snake(m.g);
    res.pieces.resize(legs.size());
    auto route = [&](size_t t) {
        const auto& l = legs[t];
        res.pieces[t] = l.type == 'C'   ? route_type_c(g, m, cm, l.i, l.j, l.up)
                        : l.type == 'A' ? route_type_a(g, m, cm, l.p, l.q)
                                        : route_type_b(g, m, cm, l.p, l.q);
        if (l.type == 'C' && !(res.pieces[t].p == l.p)) {
            auto& s = res.pieces[t];
            std::reverse(s.stations.begin(), s.stations.end());
            std::swap(s.p, s.q);
        }
    };
    const size_t jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        for (size_t t = 0; t < legs.size(); ++t) route(t);
    } else {
        std::vector<std::future<void>> fut;
        for (size_t w = 0; w < jobs; ++w)
            fut.push_back(std::async(std::launch::async, [&, w] {
                for (size_t t = w; t < legs.size(); t += jobs) route(t);
            }));
        for (auto& f : fut) f.get();
    }
    auto bad = region_violation(g, m, cm, res.pieces);
    if (!bad.empty()) throw internal_error("treewidth: " + bad);
    for (auto& s : res.pieces) {
        if (s.type == 'C') res.visited.push_back(s.blob);
        res.closed.stations.insert(res.closed.stations.end(), s.stations.begin(), s.stations.end() - 1);
    }
    res.closed.closed = true;
    auto cut = cut_closed_curve(g, res.closed);
    res.cut_graph = std::move(cut.g);
    res.curve = std::move(cut.curve);
    return res;
}

// ------------------------------------------------------------------ instances

PlaneGraph grid_graph(int k) {
    if (k < 2) throw input_error("grid", "grid side must be at least 2");
    std::vector<std::pair<double, double>> pts;
    std::vector<Edge> es;
    auto id = [&](int i, int j) { return (j - 1) * k + (i - 1); };
    for (int j = 1; j <= k; ++j)
        for (int i = 1; i <= k; ++i) {
            pts.push_back({double(i), double(j)});
            if (i < k) es.push_back(norm_edge(id(i, j), id(i + 1, j)));
            if (j < k) es.push_back(norm_edge(id(i, j), id(i, j + 1)));
        }
    return from_layout(pts, es, id(1, 1), id(1, 2));
}

GridMinorModel identity_model(int k) {
    GridMinorModel m;
    m.g = k;
    auto id = [&](int i, int j) { return (j - 1) * k + (i - 1); };
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            m.branch[{i, j}] = {id(i, j)};
            if (i < k) m.refh[{i, j}] = {id(i, j), id(i + 1, j)};
            if (j < k) m.refv[{i, j}] = {id(i, j), id(i, j + 1)};
        }
    return m;
}

GridInstance random_grid_instance(std::uint64_t seed, int k, int max_block) {
    if (k < 2 || max_block < 1) throw input_error("grid", "grid side must be at least 2 and blocks at least 1");
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    std::vector<int> x0{0}, y0{0};  // first fine column / row of each block, 1-based blocks
    for (int i = 1; i <= k; ++i) x0.push_back(x0.back() + pick(1, max_block));
    for (int j = 1; j <= k; ++j) y0.push_back(y0.back() + pick(1, max_block));
    const int W = x0.back(), H = y0.back();
    auto block = [](const std::vector<int>& s, int c) {
        return static_cast<int>(std::upper_bound(s.begin(), s.end(), c) - s.begin());
    };
    std::vector<std::pair<double, double>> pts;
    auto id = [&](int x, int y) { return y * W + x; };
    for (int y = 0; y < H; ++y)
        for (int x = 0; x < W; ++x) pts.push_back({double(x), double(y)});
    GridMinorModel m;
    m.g = k;
    for (int y = 0; y < H; ++y)
        for (int x = 0; x < W; ++x) m.branch[{block(x0, x), block(y0, y)}].push_back(id(x, y));
    std::set<Edge> refs;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            if (i < k) {
                int y = pick(y0[j - 1], y0[j] - 1), x = x0[i] - 1;
                m.refh[{i, j}] = {id(x, y), id(x + 1, y)};
                refs.insert(norm_edge(id(x, y), id(x + 1, y)));
            }
            if (j < k) {
                int x = pick(x0[i - 1], x0[i] - 1), y = y0[j] - 1;
                m.refv[{i, j}] = {id(x, y), id(x, y + 1)};
                refs.insert(norm_edge(id(x, y), id(x, y + 1)));
            }
        }
    std::vector<Edge> es;
    auto keep = [&](int a, int b, bool rim) {
        Edge e = norm_edge(a, b);
        bool same = block(x0, a % W) == block(x0, b % W) && block(y0, a / W) == block(y0, b / W);
        if (rim || same || refs.count(e) || rng() % 4) es.push_back(e);
    };
    for (int y = 0; y < H; ++y)
        for (int x = 0; x < W; ++x) {
            if (x + 1 < W) keep(id(x, y), id(x + 1, y), (y == 0 || y == H - 1));
            if (y + 1 < H) keep(id(x, y), id(x, y + 1), (x == 0 || x == W - 1));
        }
    for (int y = 0; y + 1 < H; ++y)
        for (int x = 0; x + 1 < W; ++x) {
            int r = pick(0, 5);
            if (r == 1) es.push_back(norm_edge(id(x, y), id(x + 1, y + 1)));
            if (r == 2) es.push_back(norm_edge(id(x + 1, y), id(x, y + 1)));
            if (r == 3) {
                int c = static_cast<int>(pts.size());
                pts.push_back({x + 0.5, y + 0.5});
                m.branch[{block(x0, x), block(y0, y)}].push_back(c);
                for (int v : {id(x, y), id(x + 1, y), id(x, y + 1), id(x + 1, y + 1)}) es.push_back(norm_edge(v, c));
            }
        }
    return {from_layout(pts, es, id(0, 0), id(0, 1)), m};
}

}  // namespace col
