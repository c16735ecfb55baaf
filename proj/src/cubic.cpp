#include "collinear/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "collinear/error.hpp"

namespace col {

namespace {

std::string str(int x) { return std::to_string(x); }

std::vector<int> beta_walk(const PlaneGraph& g, int u, int v) { return boundary_path(g, u, v, PathKind::Beta).walk; }
std::vector<int> tau_walk(const PlaneGraph& g, int u, int v) { return boundary_path(g, u, v, PathKind::Tau).walk; }

// marked inner vertices of a walk, in walk order
std::vector<int> marked_on(const std::vector<int>& walk, const std::vector<char>& mark) {
    std::vector<int> r;
    for (size_t i = 1; i + 1 < walk.size(); ++i)
        if (mark[walk[i]]) r.push_back(walk[i]);
    return r;
}

std::vector<std::vector<Edge>> blocks_of(const PlaneGraph& g) {
    const int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> st;
    std::vector<std::vector<Edge>> out;
    int t = 0;
    std::function<void(int, int)> dfs = [&](int x, int parent) {
        disc[x] = low[x] = t++;
        for (int y : g.rot(x)) {
            if (y == parent) continue;
            if (disc[y] < 0) {
                st.push_back(norm_edge(x, y));
                dfs(y, x);
                low[x] = std::min(low[x], low[y]);
                if (low[y] >= disc[x]) {
                    std::vector<Edge> b;
                    Edge e;
                    do {
                        e = st.back();
                        st.pop_back();
                        b.push_back(e);
                    } while (e != norm_edge(x, y));
                    out.push_back(std::move(b));
                }
            } else if (disc[y] < disc[x]) {
                st.push_back(norm_edge(x, y));
                low[x] = std::min(low[x], disc[y]);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] < 0) dfs(v, -1);
    return out;
}

std::vector<int> vertices_of(const std::vector<Edge>& es) {
    std::vector<int> vs;
    for (auto [a, b] : es) vs.push_back(a), vs.push_back(b);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

// a connected graph read as a chain of blocks from a to b
struct RawChain {
    std::vector<std::vector<int>> paths;  // paths[i] ends where block i starts
    std::vector<std::vector<Edge>> blocks;
    std::vector<std::pair<int, int>> ends;
};

RawChain chain_between(const PlaneGraph& g, int a, int b) {
    auto bl = blocks_of(g);
    std::vector<std::vector<int>> at(g.n());
    for (size_t i = 0; i < bl.size(); ++i)
        for (int x : vertices_of(bl[i])) at[x].push_back(static_cast<int>(i));
    std::vector<char> used(bl.size(), 0);
    RawChain ch;
    std::vector<int> path{a};
    int cur = a;
    while (cur != b) {
        int next = -1;
        for (int i : at[cur])
            if (!used[i]) {
                if (next >= 0) throw internal_error("chain: branching at vertex " + str(cur));
                next = i;
            }
        if (next < 0) throw internal_error("chain: dead end at vertex " + str(cur));
        used[next] = 1;
        auto vs = vertices_of(bl[next]);
        int exit = -1;
        for (int x : vs) {
            if (x == cur) continue;
            bool onward = x == b;
            for (int j : at[x]) onward = onward || !used[j];
            if (!onward) continue;
            if (exit >= 0) throw internal_error("chain: block with two exits");
            exit = x;
        }
        if (exit < 0) throw internal_error("chain: block without exit");
        if (bl[next].size() == 1) {
            path.push_back(exit);
        } else {
            ch.paths.push_back(path);
            ch.blocks.push_back(bl[next]);
            ch.ends.push_back({cur, exit});
            path = {exit};
        }
        cur = exit;
    }
    ch.paths.push_back(path);
    if (std::count(used.begin(), used.end(), 0) != 0) throw internal_error("chain: blocks off the a-b chain");
    return ch;
}

struct Level {
    PlaneGraph g;
    std::vector<int> top;  // vertex id in the graph the curve lives on
};

struct Sub {
    Level lv;
    std::vector<int> from, to;
};

Sub extract(const Level& L, const std::vector<int>& vs, const std::vector<Edge>& es) {
    auto ex = extract_subgraph(L.g, vs, es);
    Sub s{{ex.g, {}}, ex.from_parent, ex.to_parent};
    for (int p : ex.to_parent) s.lv.top.push_back(L.top[p]);
    return s;
}

std::vector<char> mark(int n, const std::vector<int>& xs) {
    std::vector<char> m(n, 0);
    for (int x : xs) m[x] = 1;
    return m;
}

struct Piece {
    std::vector<Station> st;
    std::map<int, int> charge;
};

struct Ctx {
    const PlaneGraph& T;
    CubicOptions opt;
    CubicAudit* audit;

    int face_left(const Level& L, int x, int y) const { return T.face_of(T.dart(L.top[x], L.top[y])); }

    bool on_face(int f, const Station& s) const {
        if (s.kind == Station::Vertex) {
            auto vs = T.face_vertices(f);
            return std::find(vs.begin(), vs.end(), s.a) != vs.end();
        }
        auto [f1, f2] = T.edge_faces(s.a, s.b);
        return f == f1 || f == f2;
    }

    // continue p to point q through face f, or along the edge when both are adjacent vertices
    void link(Piece& p, int f, const Station& q) const {
        const Station last = p.st.back();
        if (last.kind == Station::Vertex && q.kind == Station::Vertex && T.has_edge(last.a, q.a)) {
            auto [f1, f2] = T.edge_faces(last.a, q.a);
            if (f != f1 && f != f2)
                throw internal_error("cubic: edge " + str(last.a) + "-" + str(q.a) + " is not on the named face");
            p.st.push_back(Station::edge(last.a, q.a));
            p.st.push_back(q);
            return;
        }
        if (!on_face(f, last) || !on_face(f, q))
            throw internal_error("cubic: face " + T.face_key(f) + " does not reach both ends of a hop");
        p.st.push_back(Station::hop(T.face_key(f)));
        p.st.push_back(q);
    }

    static void append(Piece& p, const Piece& q) {
        if (!(q.st.front() == p.st.back())) throw internal_error("cubic: pieces do not meet");
        p.st.insert(p.st.end(), q.st.begin() + 1, q.st.end());
        for (auto [k, w] : q.charge)
            if (!p.charge.emplace(k, w).second) throw internal_error("cubic: vertex " + str(k) + " charged twice");
    }

    void note(const char* c) {
        if (audit) audit->cases[c]++;
    }

    Piece solve(const Level& L, int u, int v, const std::vector<int>& X);
    Piece chain_walk(const Level& h, int a, int b, int start, const std::vector<char>& inX);
    void check(const Level& L, int u, int v, const std::vector<int>& X, const Piece& p) const;
};

Piece Ctx::chain_walk(const Level& h, int a, int b, int start, const std::vector<char>& inX) {
    auto ch = chain_between(h.g, a, b);
    auto vx = [&](int x) { return Station::vertex(h.top[x]); };
    Piece p;
    p.st.push_back(vx(start));
    const auto& p0 = ch.paths[0];
    auto it = std::find(p0.begin(), p0.end(), start);
    if (it == p0.end()) throw internal_error("cubic: chain start is not on the first path");
    size_t s = it - p0.begin();
    // the current point is path[from] or lies on the edge after it
    auto walk = [&](const std::vector<int>& path, size_t from, size_t to) {
        for (size_t j = from + 1; j <= to && j < path.size(); ++j)
            if (!inX[path[j]]) link(p, face_left(h, path[j - 1], path[j]), vx(path[j]));
    };
    auto finish = [&](const std::vector<int>& path, size_t from) {
        size_t n = path.size();
        walk(path, from, n - 2);
        int bp = path[n - 2];
        if (inX[bp]) link(p, face_left(h, bp, b), Station::cross(h.top[bp], h.top[b]));
    };
    const size_t k = ch.blocks.size();
    if (k == 0) {
        finish(p0, s);
        return p;
    }
    walk(p0, s, p0.size() - 1);
    for (size_t i = 0; i < k; ++i) {
        auto [ui, vi] = ch.ends[i];
        auto sub = extract(h, vertices_of(ch.blocks[i]), ch.blocks[i]);
        int su = sub.from[ui], sv = sub.from[vi];
        std::vector<char> sx(sub.lv.g.n(), 0);
        for (int x = 0; x < sub.lv.g.n(); ++x) sx[x] = inX[sub.to[x]];
        auto li = solve(sub.lv, su, sv, marked_on(beta_walk(sub.lv.g, su, sv), sx));
        append(p, li);
        const auto& q = ch.paths[i + 1];
        if (i + 1 == k && q.size() <= 2) break;
        int vp = q[1];
        link(p, face_left(h, vp, vi), inX[vp] ? Station::cross(h.top[vi], h.top[vp]) : vx(vp));
        if (i + 1 < k) walk(q, 1, q.size() - 1);
        else finish(q, 1);
    }
    return p;
}

Piece Ctx::solve(const Level& L, int u, int v, const std::vector<int>& X) {
    const auto& g = L.g;
    if (opt.audit) {
        auto bad = quadruple_violation(g, u, v, X);
        if (!bad.empty()) throw verify_error("quadruple", bad + " on a level with " + str(g.n()) + " vertices");
    }
    if (audit) audit->levels++;
    auto inX = mark(g.n(), X);
    auto vx = [&](int x) { return Station::vertex(L.top[x]); };
    auto cross = [&](int x, int y) { return Station::cross(L.top[x], L.top[y]); };
    auto bw = beta_walk(g, u, v), tw = tau_walk(g, u, v);
    const int vp = bw[bw.size() - 2];  // neighbour of v on the ccw side
    Piece p;
    p.st.push_back(vx(u));

    bool cycle = true;
    for (int x = 0; x < g.n(); ++x) cycle = cycle && g.degree(x) == 2;
    if (cycle) {
        note("base");
        for (size_t i = 1; i + 1 < bw.size(); ++i)
            if (!inX[bw[i]]) link(p, face_left(L, bw[i - 1], bw[i]), vx(bw[i]));
        if (inX[vp]) link(p, face_left(L, vp, v), cross(vp, v));
        p.charge[L.top[v]] = L.top[u];
        if (opt.audit) check(L, u, v, X, p);
        return p;
    }

    if (g.has_edge(u, v)) {
        note("1");
        std::vector<int> all(g.n());
        std::iota(all.begin(), all.end(), 0);
        std::vector<Edge> es;
        for (auto e : g.edges())
            if (e != norm_edge(u, v)) es.push_back(e);
        auto s = extract(L, all, es);
        std::vector<char> sx(s.lv.g.n(), 0);
        for (int x : X) sx[s.from[x]] = 1;
        p = chain_walk(s.lv, s.from[u], s.from[v], s.from[u], sx);
        p.charge[L.top[v]] = L.top[u];
        if (opt.audit) check(L, u, v, X, p);
        return p;
    }

    // H: block of G - v containing u; B1 = (y1, v) on the clockwise side, B2 attached at y2
    std::vector<int> hv;
    std::vector<Edge> he;
    {
        std::vector<int> rest;
        std::vector<Edge> es;
        for (int x = 0; x < g.n(); ++x)
            if (x != v) rest.push_back(x);
        for (auto e : g.edges())
            if (e.first != v && e.second != v) es.push_back(e);
        auto gp = extract(L, rest, es);
        int gu = gp.from[u];
        for (auto& b : blocks_of(gp.lv.g)) {
            bool has_u = false;
            for (auto [x, y] : b) has_u = has_u || x == gu || y == gu;
            if (!has_u) continue;
            for (auto [x, y] : b) he.push_back(norm_edge(gp.to[x], gp.to[y]));
            break;
        }
        hv = vertices_of(he);
    }
    auto inH = mark(g.n(), hv);
    const int y1 = tw[tw.size() - 2];
    if (!inH[y1]) throw internal_error("cubic: clockwise neighbour of v is outside H");
    int y2 = -1;
    for (int x : hv)
        for (int r : g.rot(x))
            if (!inH[r] && !(x == y1 && r == v)) {
                if (y2 >= 0 && y2 != x) throw internal_error("cubic: H has more than two attachments");
                y2 = x;
            }
    if (y2 < 0) throw internal_error("cubic: H has a single attachment");
    std::vector<int> b2v;
    for (int x = 0; x < g.n(); ++x)
        if (!inH[x] || x == y2) b2v.push_back(x);
    auto inB2 = mark(g.n(), b2v);
    std::vector<Edge> b2e;
    for (auto [x, y] : g.edges())
        if (inB2[x] && inB2[y]) b2e.push_back({x, y});

    auto hs = extract(L, hv, he);
    const int hu = hs.from[u], hy1 = hs.from[y1];
    auto hb = beta_walk(hs.lv.g, hu, hy1);
    std::vector<char> inXp(g.n(), 0);  // X' = {y2} + X in H, in parent ids
    for (int x : hv) inXp[x] = inX[x];
    inXp[y2] = 1;
    auto sub_x = [&](const Sub& s, const std::vector<char>& m, int su, int sv) {
        std::vector<char> sm(s.lv.g.n(), 0);
        for (int x = 0; x < s.lv.g.n(); ++x) sm[x] = m[s.to[x]];
        return marked_on(beta_walk(s.lv.g, su, sv), sm);
    };

    bool case2 = false;
    for (int x : b2v) case2 = case2 || (x != v && x != y2 && !inX[x]);
    if (case2) {
        note("2");
        p = solve(hs.lv, hu, hy1, sub_x(hs, inXp, hu, hy1));
        auto i2 = std::find(bw.begin(), bw.end(), y2);
        if (i2 == bw.end()) throw internal_error("cubic: y2 is not on the ccw path");
        int up = -1;
        for (auto j = i2 + 1; j != bw.end() && up < 0; ++j)
            if (!inX[*j]) up = *j;
        if (up < 0 || up == v) throw internal_error("cubic: no free vertex after y2");
        link(p, face_left(L, v, y1), vx(up));
        auto bs = extract(L, b2v, b2e);
        std::vector<char> bx(bs.lv.g.n(), 0);
        for (int x = 0; x < bs.lv.g.n(); ++x) bx[x] = inX[bs.to[x]];
        append(p, chain_walk(bs.lv, bs.from[y2], bs.from[v], bs.from[up], bx));
        p.charge[L.top[y2]] = L.top[up];
        p.charge[L.top[v]] = L.top[up];
        if (opt.audit) check(L, u, v, X, p);
        return p;
    }

    // from here B2 is a path from y2 to v through X
    if (hs.lv.g.has_edge(hu, hy1)) {
        bool rest_in_x = true;
        for (int x : hv) rest_in_x = rest_in_x && (x == u || x == y1 || inXp[x]);
        if (rest_in_x) {
            note("3a");
            link(p, face_left(L, y1, u), vx(y1));
            link(p, face_left(L, v, y1), cross(vp, v));
            p.charge[L.top[y2]] = L.top[y1];
            p.charge[L.top[v]] = L.top[y1];
        } else {
            note("3b");
            p = solve(hs.lv, hu, hy1, sub_x(hs, inXp, hu, hy1));
            int up = -1;
            for (size_t j = 1; j < hb.size() && up < 0; ++j)
                if (!inXp[hs.to[hb[j]]]) up = hs.to[hb[j]];
            if (up < 0 || up == y1) throw internal_error("cubic: no free vertex on H");
            auto c = p.charge.find(L.top[y1]);
            if (c == p.charge.end()) throw internal_error("cubic: y1 was not charged inside H");
            c->second = L.top[up];
            link(p, face_left(L, v, y1), cross(vp, v));
            p.charge[L.top[y2]] = L.top[up];
            p.charge[L.top[v]] = L.top[u];
        }
        if (opt.audit) check(L, u, v, X, p);
        return p;
    }

    // K: block of H - y1 containing u; D1 = (w1, y1), D2 attached at w2
    auto ht = tau_walk(hs.lv.g, hu, hy1);
    const int w1 = hs.to[ht[ht.size() - 2]];
    const int yq = hs.to[hb[hb.size() - 2]];  // neighbour of y1 on the ccw side of H
    std::vector<int> kv;
    std::vector<Edge> ke;
    {
        std::vector<int> rest;
        std::vector<Edge> es;
        for (int x : hv)
            if (x != y1) rest.push_back(x);
        for (auto e : he)
            if (e.first != y1 && e.second != y1) es.push_back(e);
        auto kp = extract(L, rest, es);
        int ku = kp.from[u];
        for (auto& b : blocks_of(kp.lv.g)) {
            bool has_u = false;
            for (auto [x, y] : b) has_u = has_u || x == ku || y == ku;
            if (!has_u) continue;
            for (auto [x, y] : b) ke.push_back(norm_edge(kp.to[x], kp.to[y]));
            break;
        }
        kv = vertices_of(ke);
    }
    auto inK = mark(g.n(), kv);
    if (!inK[w1]) throw internal_error("cubic: w1 is outside K");
    int w2 = -1;
    for (int x : kv)
        for (int r : g.rot(x))
            if (inH[r] && !inK[r] && !(x == w1 && r == y1)) {
                if (w2 >= 0 && w2 != x) throw internal_error("cubic: K has more than two attachments");
                w2 = x;
            }
    if (w2 < 0) throw internal_error("cubic: K has a single attachment");
    std::vector<int> d2v;
    for (int x : hv)
        if (!inK[x] || x == w2) d2v.push_back(x);
    auto inD2 = mark(g.n(), d2v);
    std::vector<Edge> d2e;
    for (auto [x, y] : he)
        if (inD2[x] && inD2[y]) d2e.push_back({x, y});

    auto ks = extract(L, kv, ke);
    const int ku = ks.from[u], kw1 = ks.from[w1];
    std::vector<char> inXpp(g.n(), 0);  // X'' in parent ids
    for (int x : kv) inXpp[x] = inX[x];
    inXpp[w2] = 1;
    if (inK[y2]) {
        note("4");
        inXpp[y2] = 1;
        p = solve(ks.lv, ku, kw1, sub_x(ks, inXpp, ku, kw1));
        link(p, face_left(L, y1, w1), vx(y1));
    } else {
        p = solve(ks.lv, ku, kw1, sub_x(ks, inXpp, ku, kw1));
        bool rest_in_x = true;
        for (int x : d2v) rest_in_x = rest_in_x && (x == w2 || x == y1 || inXp[x]);
        if (rest_in_x) {
            note("5a");
            link(p, face_left(L, y1, w1), vx(y1));
        } else {
            note("5b");
            auto iw = std::find(hb.begin(), hb.end(), hs.from[w2]);
            if (iw == hb.end()) throw internal_error("cubic: w2 is not on the ccw path of H");
            int up = -1;
            for (auto j = iw + 1; j != hb.end() && up < 0; ++j)
                if (!inXp[hs.to[*j]]) up = hs.to[*j];
            if (up < 0 || up == y1) throw internal_error("cubic: no free vertex after w2");
            link(p, face_left(L, y1, w1), vx(up));
            auto ds = extract(L, d2v, d2e);
            std::vector<char> dx(ds.lv.g.n(), 0);
            for (int x = 0; x < ds.lv.g.n(); ++x) dx[x] = inXp[ds.to[x]];
            append(p, chain_walk(ds.lv, ds.from[w2], ds.from[y1], ds.from[up], dx));
            const Station end = p.st.back();
            if (end == cross(yq, y1)) {
                // end at y1 instead, through the same face
                p.st.pop_back();
                Station via = p.st.back();
                p.st.pop_back();
                if (via.kind != Station::Face) throw internal_error("cubic: crossing reached along an edge");
                link(p, T.face_by_key(via.face), vx(y1));
            } else {
                link(p, face_left(L, v, y1), vx(y1));
            }
        }
    }
    link(p, face_left(L, v, y1), cross(vp, v));
    p.charge[L.top[v]] = L.top[y1];
    p.charge[L.top[y2]] = L.top[y1];
    p.charge[L.top[w2]] = L.top[y1];
    if (opt.audit) check(L, u, v, X, p);
    return p;
}

void Ctx::check(const Level& L, int u, int v, const std::vector<int>& X, const Piece& p) const {
    const auto& g = L.g;
    auto fail = [&](const std::string& what) {
        throw verify_error("cubic", what + " on a level with " + str(g.n()) + " vertices");
    };
    auto bw = beta_walk(g, u, v), tw = tau_walk(g, u, v);
    std::map<int, int> bpos, local;
    for (size_t i = 0; i < bw.size(); ++i) bpos[L.top[bw[i]]] = static_cast<int>(i);
    for (int x = 0; x < g.n(); ++x) local[L.top[x]] = x;
    // position on the ccw path, doubled so that crossings sit between vertices
    auto pos = [&](const Station& s) -> int {
        if (s.kind == Station::Vertex) {
            auto it = bpos.find(s.a);
            return it == bpos.end() ? -1 : 2 * it->second;
        }
        auto ia = bpos.find(s.a), ib = bpos.find(s.b);
        if (ia == bpos.end() || ib == bpos.end() || std::abs(ia->second - ib->second) != 1) return -1;
        return 2 * std::min(ia->second, ib->second) + 1;
    };
    if (!(p.st.front() == Station::vertex(L.top[u]))) fail("(1) curve does not start at u");
    std::set<int> on;
    for (const auto& s : p.st)
        if (s.kind == Station::Vertex) {
            if (!local.count(s.a)) fail("curve leaves the level at vertex " + str(s.a));
            on.insert(s.a);
        }
    if (on.count(L.top[v])) fail("(1) curve passes through v");
    int zpos = pos(p.st.back());
    if (zpos < 0) fail("(1) curve does not end on the ccw path");
    if (!X.empty() && zpos <= 2 * bpos[L.top[X.back()]]) fail("(2) curve ends before the last X vertex");
    int last = -1;
    for (const auto& s : p.st) {
        if (!s.is_point()) continue;
        int q = pos(s);
        if (q < 0) continue;
        if (q <= last) fail("(3) ccw path met out of order");
        last = q;
    }
    for (int x : X)
        if (on.count(L.top[x])) fail("(4) curve passes through X vertex " + str(L.top[x]));
    // (5): hops outside the level never touch the clockwise path away from u and v
    std::set<int> inner;
    for (int f = 0; f < g.num_faces(); ++f) {
        if (f == g.outer_face()) continue;
        int d = g.face_darts(f)[0];
        int tf = face_left(L, g.tail(d), g.head(d));
        if (T.face_darts(tf).size() != g.face_darts(f).size()) fail("inner face of the level is not a face of the graph");
        inner.insert(tf);
    }
    std::set<int> tau_in;
    for (size_t i = 1; i + 1 < tw.size(); ++i) tau_in.insert(L.top[tw[i]]);
    auto on_tau = [&](const Station& s) {
        if (s.kind == Station::Vertex) return tau_in.count(s.a) > 0;
        for (size_t i = 0; i + 1 < tw.size(); ++i)
            if (norm_edge(L.top[tw[i]], L.top[tw[i + 1]]) == Edge{s.a, s.b}) return true;
        return false;
    };
    for (size_t i = 1; i + 1 < p.st.size(); ++i) {
        const auto& s = p.st[i];
        if (s.kind != Station::Face || inner.count(T.face_by_key(s.face))) continue;
        if (on_tau(p.st[i - 1]) || on_tau(p.st[i + 1])) fail("(5) curve leaves through the clockwise path");
    }
    // (6)
    std::set<int> xs;
    for (int x : X) xs.insert(L.top[x]);
    std::map<int, int> load;
    for (int x = 0; x < g.n(); ++x) {
        int t = L.top[x];
        if (xs.count(t) || on.count(t)) {
            if (p.charge.count(t)) fail("(6) vertex " + str(t) + " is charged but need not be");
            continue;
        }
        auto it = p.charge.find(t);
        if (it == p.charge.end()) fail("(6) vertex " + str(t) + " is off the curve and uncharged");
        if (!on.count(it->second)) fail("(6) vertex " + str(t) + " is charged to an off-curve vertex");
        ++load[it->second];
    }
    if (p.charge.size() != static_cast<size_t>(std::accumulate(load.begin(), load.end(), 0,
                                                                [](int s, const auto& e) { return s + e.second; })))
        fail("(6) charges name vertices outside the level");
    for (auto [t, c] : load)
        if (c > 3) fail("(6) vertex " + str(t) + " carries " + str(c) + " charges");
    if (load[L.top[u]] > 1) fail("(6) u carries " + str(load[L.top[u]]) + " charges");
}

}  // namespace

std::string quadruple_violation(const PlaneGraph& g, int u, int v, const std::vector<int>& x) {
    if (!is_biconnected(g)) return "(a) graph is not biconnected";
    if (g.max_degree() > 3) return "(a) graph is not subcubic";
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || u == v) return "(b) u and v must be distinct vertices";
    if (!g.on_outer_face(u) || !g.on_outer_face(v)) return "(b) u or v is not on the outer face";
    if (g.degree(u) != 2 || g.degree(v) != 2) return "(c) u and v must have degree 2";
    if (g.has_edge(u, v) && tau_walk(g, u, v).size() != 2) return "(d) edge u-v is not the clockwise path";
    auto bw = beta_walk(g, u, v);
    std::vector<int> bpos(g.n(), -1);
    for (size_t i = 0; i < bw.size(); ++i) bpos[bw[i]] = static_cast<int>(i);
    auto beta_inner = [&](int a) { return bpos[a] > 0 && bpos[a] + 1 < static_cast<int>(bw.size()); };
    for (auto [a, b] : separation_pairs(g).separation_pairs) {
        std::string pr = "{" + str(a) + "," + str(b) + "}";
        if (!g.on_outer_face(a) || !g.on_outer_face(b)) return "(e) separation pair " + pr + " has an inner vertex";
        if (!beta_inner(a) && !beta_inner(b))
            return "(e) separation pair " + pr + " has no vertex inside the ccw path";
        for (auto& pc : pair_components(g, a, b)) {
            if (pc.trivial) continue;
            bool ext = false;
            for (int w : pc.vertices) ext = ext || (w != a && w != b && g.on_outer_face(w));
            if (!ext) return "(e) a component of " + pr + " has no outer vertex";
        }
    }
    int last = 0;
    for (int w : x) {
        if (w < 0 || w >= g.n() || g.degree(w) != 2) return "(f) X vertex " + str(w) + " does not have degree 2";
        if (!beta_inner(w)) return "(f) X vertex " + str(w) + " is not inside the ccw path";
        if (bpos[w] <= last) return "(f) X is not in ccw path order";
        last = bpos[w];
    }
    return {};
}

Quadruple make_quadruple(PlaneGraph g, int u, int v, std::vector<int> x) {
    auto bad = quadruple_violation(g, u, v, x);
    if (!bad.empty()) throw input_error("quadruple", bad);
    return Quadruple{std::move(g), u, v, std::move(x)};
}

ChainDecomposition chain_decompose(const Quadruple& q, int a, int b) {
    const auto& g = q.g;
    auto bw = beta_walk(g, q.u, q.v);
    auto ia = std::find(bw.begin(), bw.end(), a), ib = std::find(bw.begin(), bw.end(), b);
    if (ia == bw.end() || ib == bw.end() || a == b) throw input_error("quadruple", "a and b must lie on the ccw path");
    if (ia > ib) std::swap(a, b), std::swap(ia, ib);
    auto sp = separation_pairs(g).separation_pairs;
    if (std::find(sp.begin(), sp.end(), norm_edge(a, b)) == sp.end())
        throw input_error("quadruple", "{" + str(a) + "," + str(b) + "} is not a separation pair");
    ChainDecomposition cd;
    std::vector<int> inner(ia + 1, ib);
    if (inner.empty()) {
        cd.is_path = true;
        cd.p0 = {a, b};
        return cd;
    }
    PairComponent comp;
    for (auto& pc : pair_components(g, a, b))
        if (!pc.trivial && std::find(pc.vertices.begin(), pc.vertices.end(), inner[0]) != pc.vertices.end()) comp = pc;
    auto ex = extract_subgraph(g, comp.vertices, comp.edges);
    auto ch = chain_between(ex.g, ex.from_parent[a], ex.from_parent[b]);
    auto up = [&](std::vector<int> p) {
        for (int& w : p) w = ex.to_parent[w];
        return p;
    };
    if (ch.blocks.empty()) {
        cd.is_path = true;
        cd.p0 = up(ch.paths[0]);
        return cd;
    }
    auto inX = mark(g.n(), q.x);
    cd.p0 = up(ch.paths.front());
    cd.pk = up(ch.paths.back());
    for (size_t i = 1; i + 1 < ch.paths.size(); ++i) cd.links.push_back(up(ch.paths[i]));
    for (size_t i = 0; i < ch.blocks.size(); ++i) {
        auto bx = extract_subgraph(ex.g, vertices_of(ch.blocks[i]), ch.blocks[i]);
        std::vector<int> parent;
        for (int w : bx.to_parent) parent.push_back(ex.to_parent[w]);
        int bu = bx.from_parent[ch.ends[i].first], bv = bx.from_parent[ch.ends[i].second];
        std::vector<char> m(bx.g.n(), 0);
        for (int w = 0; w < bx.g.n(); ++w) m[w] = inX[parent[w]];
        auto xs = marked_on(beta_walk(bx.g, bu, bv), m);
        cd.blocks.push_back(make_quadruple(bx.g, bu, bv, xs));
        cd.block_vertices.push_back(parent);
    }
    return cd;
}

ChargedCurve build_cubic_curve(const Quadruple& q, const CubicOptions& opt, CubicAudit* audit) {
    auto bad = quadruple_violation(q.g, q.u, q.v, q.x);
    if (!bad.empty()) throw input_error("quadruple", bad);
    Ctx ctx{q.g, opt, audit};
    Level L{q.g, {}};
    L.top.resize(q.g.n());
    std::iota(L.top.begin(), L.top.end(), 0);
    auto p = ctx.solve(L, q.u, q.v, q.x);
    return ChargedCurve{GoodCurve{p.st, false}, p.charge};
}

ChargedCurve theorem4(const PlaneGraph& g, const CubicOptions& opt, CubicAudit* audit) {
    for (int x = 0; x < g.n(); ++x)
        if (g.degree(x) != 3) throw input_error("cubic", "vertex " + str(x) + " has degree " + str(g.degree(x)));
    if (!is_triconnected(g)) throw input_error("cubic", "graph is not triconnected");
    const auto& ow = g.outer_walk();
    int u = ow[0], v = ow[1];
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    std::vector<Edge> es;
    for (auto e : g.edges())
        if (e != norm_edge(u, v)) es.push_back(e);
    auto ex = extract_subgraph(g, all, es);
    Ctx ctx{g, opt, audit};
    Level L{ex.g, ex.to_parent};
    auto p = ctx.solve(L, ex.from_parent[u], ex.from_parent[v], {});
    ChargedCurve out{GoodCurve{p.st, false}, p.charge};
    auto rep = validate_curve(g, out.curve);
    if (!rep.good || !rep.proper) throw verify_error("curve", "cubic curve is not a proper good curve");
    if (4 * rep.vertex_count_on_curve < g.n())
        throw verify_error("curve", "cubic curve has " + str(rep.vertex_count_on_curve) + " vertices for n = " + str(g.n()));
    return out;
}

PlaneGraph generate_triconnected_cubic(std::uint64_t seed, int n) {
    if (n < 4 || n % 2) throw input_error("generator", "cubic graphs need an even vertex count of at least 4");
    std::mt19937_64 rng(seed);
    PlaneGraph g = k4_graph();
    int tries = 0;
    while (g.n() < n) {
        if (++tries > 1000 * n) throw guard_error("generator", "retry budget exhausted");
        // join the midpoints of two edges on a common face
        int f = static_cast<int>(rng() % g.num_faces());
        const auto& ds = g.face_darts(f);
        int d1 = ds[rng() % ds.size()], d2 = ds[rng() % ds.size()];
        if (d1 == d2) continue;
        auto rot = g.rotations();
        int p = g.tail(d1), q = g.head(d1), r = g.tail(d2), s = g.head(d2);
        int a = static_cast<int>(rot.size()), b = a + 1;
        auto swap_in = [&](int x, int from, int to) { *std::find(rot[x].begin(), rot[x].end(), from) = to; };
        swap_in(p, q, a);
        swap_in(q, p, a);
        swap_in(r, s, b);
        swap_in(s, r, b);
        rot.push_back({p, b, q});
        rot.push_back({r, a, s});
        int o1 = g.outer_walk()[0], o2 = g.outer_walk()[1];
        if (norm_edge(o1, o2) == norm_edge(p, q)) o2 = a;
        else if (norm_edge(o1, o2) == norm_edge(r, s)) o2 = b;
        auto h = PlaneGraph::with_outer_dart(rot, o1, o2);
        if (is_triconnected(h)) g = h;
    }
    for (int x = 0; x < g.n(); ++x)
        if (g.degree(x) != 3) throw internal_error("generator produced a non-cubic graph");
    if (!is_triconnected(g)) throw internal_error("generator produced a graph that is not triconnected");
    return g;
}

PlaneGraph dodecahedron_graph() {
    // rings of 5, 10 and 5 vertices, listed clockwise
    std::vector<std::pair<double, double>> pts(20);
    const double pi = std::acos(-1.0);
    auto at = [&](double r, double deg) { return std::pair<double, double>{r * std::cos(deg * pi / 180), r * std::sin(deg * pi / 180)}; };
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        double t = 90 - 72.0 * i;
        pts[i] = at(10, t);
        pts[5 + 2 * i] = at(6, t);
        pts[6 + 2 * i] = at(6, t - 36);
        pts[15 + i] = at(3, t - 36);
        es.push_back(norm_edge(i, (i + 1) % 5));
        es.push_back(norm_edge(i, 5 + 2 * i));
        es.push_back(norm_edge(5 + 2 * i, 6 + 2 * i));
        es.push_back(norm_edge(6 + 2 * i, 5 + (2 * i + 2) % 10));
        es.push_back(norm_edge(6 + 2 * i, 15 + i));
        es.push_back(norm_edge(15 + i, 15 + (i + 1) % 5));
    }
    return from_layout(pts, es, {0, 1, 2, 3, 4});
}

std::string serialize_charges(const ChargedCurve& c) {
    std::ostringstream o;
    for (auto [a, b] : c.charges) o << "charge " << a << " -> " << b << '\n';
    return o.str();
}

}  // namespace col
