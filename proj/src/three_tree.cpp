#include "collinear/three_tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "collinear/error.hpp"

namespace col {

namespace {

using Seq = std::vector<Station>;

[[noreturn]] void not_3tree(const std::string& m) { throw input_error("three_tree", m); }

// key of the triangular face with vertices p, q, r
std::string tri_face(const PlaneGraph& g, int p, int q, int r) {
    for (int d : {g.dart(p, q), g.dart(q, p)}) {
        if (d < 0) continue;
        int f = g.face_of(d);
        const auto& ds = g.face_darts(f);
        if (ds.size() != 3) continue;
        for (int e : ds)
            if (g.tail(e) == r) return g.face_key(f);
    }
    throw internal_error("no triangular face " + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r));
}

Seq join(const std::vector<Seq>& ps) {
    Seq r = ps.at(0);
    for (size_t i = 1; i < ps.size(); ++i) {
        Seq p = ps[i];
        if (r.back() == p.front()) {
        } else if (r.back() == p.back()) {
            std::reverse(p.begin(), p.end());
        } else if (i == 1 && r.front() == p.front()) {
            std::reverse(r.begin(), r.end());
        } else if (i == 1 && r.front() == p.back()) {
            std::reverse(r.begin(), r.end());
            std::reverse(p.begin(), p.end());
        } else {
            throw internal_error("curve pieces do not meet");
        }
        r.insert(r.end(), p.begin() + 1, p.end());
    }
    return r;
}

int vertex_count(const GoodCurve& c) {
    int k = 0;
    for (auto& s : c.stations) k += s.kind == Station::Vertex;
    return k;
}

}  // namespace

// ------------------------------------------------------------------ decomposition

ThreeTreeDecomp decompose(const PlaneGraph& g) {
    const int n = g.n();
    if (n < 3) not_3tree("fewer than three vertices");
    if (g.outer_walk().size() != 3 || !g.outer_is_simple_cycle()) not_3tree("outer face is not a triangle");
    if (g.m() != 3 * n - 6) not_3tree("not a triangulation");
    ThreeTreeDecomp d;
    d.g = g;
    d.node_of.assign(n, -1);
    const auto& ow = g.outer_walk();
    TTNode root;
    root.t = {ow[0], ow[2], ow[1]};
    d.nodes.push_back(root);
    for (size_t k = 0; k < d.nodes.size(); ++k) {
        auto t = d.nodes[k].t;
        int a = t[0], b = t[1], c = t[2];
        // neighbours of a inside the triangle, counter-clockwise from b to c
        int w = -1;
        for (int x = g.cw_prev(a, b); x != c; x = g.cw_prev(a, x)) {
            if (x == b) not_3tree("triangle " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                                  " is not closed");
            if (g.has_edge(x, b) && g.has_edge(x, c)) {
                if (w >= 0) not_3tree("two central vertices in triangle " + std::to_string(a) + "," + std::to_string(b) +
                                      "," + std::to_string(c));
                w = x;
            }
        }
        if (w < 0) {
            int f = g.face_of(g.dart(a, b));
            if (g.face_darts(f).size() != 3 || g.head(g.next(g.dart(a, b))) != c)
                not_3tree("no central vertex in triangle " + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c));
            continue;
        }
        if (d.node_of[w] >= 0) not_3tree("vertex " + std::to_string(w) + " is central twice");
        d.node_of[w] = static_cast<int>(k);
        d.nodes[k].w = w;
        for (int i = 0; i < 3; ++i) {
            TTNode ch;
            ch.t = {t[i], t[(i + 1) % 3], w};
            ch.parent = static_cast<int>(k);
            d.nodes[k].child[i] = static_cast<int>(d.nodes.size());
            d.nodes.push_back(ch);
        }
    }
    for (int v = 0; v < n; ++v)
        if (d.node_of[v] < 0 && v != ow[0] && v != ow[1] && v != ow[2])
            not_3tree("vertex " + std::to_string(v) + " is not reached by the decomposition");
    for (int k = static_cast<int>(d.nodes.size()) - 1; k >= 0; --k) {
        auto& nd = d.nodes[k];
        if (nd.w < 0) continue;
        int empty = 0;
        for (int c : nd.child) empty += d.nodes[c].w < 0;
        nd.type = "DCBA"[empty];
        for (int c : nd.child) {
            const auto& ch = d.nodes[c];
            nd.na += ch.na, nd.nb += ch.nb, nd.nc += ch.nc, nd.nd += ch.nd, nd.m += ch.m;
            nd.h += ch.h - (nd.type == 'B' && ch.type == 'B' ? 1 : 0);
        }
        nd.m += 1;
        switch (nd.type) {
            case 'A': ++nd.na; break;
            case 'B': ++nd.nb, ++nd.h; break;
            case 'C': ++nd.nc; break;
            default: ++nd.nd;
        }
    }
    for (size_t k = 0; k < d.nodes.size(); ++k) {
        const auto& nd = d.nodes[k];
        if (nd.type != 'B') continue;
        if (nd.parent >= 0 && d.nodes[nd.parent].type == 'B') continue;
        std::vector<int> chain;
        int c = static_cast<int>(k);
        while (d.nodes[c].type == 'B') {
            chain.push_back(d.nodes[c].w);
            int nxt = -1;
            for (int ch : d.nodes[c].child)
                if (d.nodes[ch].w >= 0) nxt = ch;
            c = nxt;
        }
        d.b_chains.push_back(chain);
    }
    return d;
}

std::string dump(const ThreeTreeDecomp& d) {
    std::ostringstream o;
    std::vector<std::pair<int, int>> st{{d.root, 0}};
    while (!st.empty()) {
        auto [k, depth] = st.back();
        st.pop_back();
        const auto& nd = d.nodes[k];
        o << std::string(2 * depth, ' ');
        o << "(" << nd.t[0] << "," << nd.t[1] << "," << nd.t[2] << ")";
        if (nd.w < 0) {
            o << " empty\n";
            continue;
        }
        o << " w=" << nd.w << " type=" << nd.type << " m=" << nd.m << " a=" << nd.na << " b=" << nd.nb << " c=" << nd.nc
          << " d=" << nd.nd << " h=" << nd.h << "\n";
        for (int i = 2; i >= 0; --i) st.push_back({nd.child[i], depth + 1});
    }
    o << "b_chains " << d.b_chains.size() << "\n";
    for (auto& c : d.b_chains) {
        o << "chain";
        for (int v : c) o << ' ' << v;
        o << "\n";
    }
    return o.str();
}

// ------------------------------------------------------------------ chords inside a cycle

std::vector<Station> lemma1_chord(const PlaneGraph& g, const std::vector<int>& cycle, const Station& p1,
                                  const Station& p2) {
    const int L = static_cast<int>(cycle.size());
    if (L < 3) throw input_error("curve", "cycle has fewer than three vertices");
    std::vector<int> idx(g.n(), -1);
    for (int i = 0; i < L; ++i) idx[cycle[i]] = i;
    auto pos = [&](const Station& s) -> int {
        if (s.kind == Station::Vertex && idx[s.a] >= 0) return 2 * idx[s.a];
        if (s.kind == Station::Cross && idx[s.a] >= 0 && idx[s.b] >= 0) {
            int i = idx[s.a], j = idx[s.b];
            if ((i + 1) % L == j) return 2 * i + 1;
            if ((j + 1) % L == i) return 2 * j + 1;
        }
        throw input_error("curve", "chord endpoint is not on the cycle");
    };
    const int M = 2 * L;
    int P1 = pos(p1), P2 = pos(p2);
    auto md = [&](int x) { return ((x % M) + M) % M; };
    if (P1 == P2 || (P1 % 2 == 0 && P2 % 2 == 0 && (md(P1 - P2) == 2 || md(P2 - P1) == 2)) ||
        (P1 % 2 != P2 % 2 && (md(P1 - P2) == 1 || md(P2 - P1) == 1)))
        throw input_error("curve", "chord endpoints lie on one edge");
    if (p1.kind == Station::Vertex && p2.kind == Station::Vertex && g.has_edge(p1.a, p2.a))
        throw input_error("curve", "chord endpoints lie on one edge");
    std::set<Edge> cyc_edges;
    for (int i = 0; i < L; ++i) cyc_edges.insert(norm_edge(cycle[i], cycle[(i + 1) % L]));
    // faces inside the cycle
    std::vector<int> inside;
    std::vector<char> seen(g.num_faces(), 0);
    int f0 = g.face_of(g.dart(cycle[0], cycle[1]));
    seen[f0] = 1;
    inside.push_back(f0);
    for (size_t h = 0; h < inside.size(); ++h)
        for (int dd : g.face_darts(inside[h])) {
            if (cyc_edges.count(norm_edge(g.tail(dd), g.head(dd)))) continue;
            int f = g.face_of(g.twin(dd));
            if (!seen[f]) seen[f] = 1, inside.push_back(f);
        }
    std::set<Edge> interior;
    for (int f : inside)
        for (int dd : g.face_darts(f)) {
            auto e = norm_edge(g.tail(dd), g.head(dd));
            if (cyc_edges.count(e)) continue;
            if (idx[e.first] < 0 || idx[e.second] < 0) throw input_error("curve", "cycle has a vertex inside");
            interior.insert(e);
        }
    auto between = [&](int x) { return 0 < md(x - P1) && md(x - P1) < md(P2 - P1); };
    struct Sep {
        Edge e;
        int k1, k2;
    };
    std::vector<Sep> seps;
    for (auto& e : interior) {
        int pa = 2 * idx[e.first], pb = 2 * idx[e.second];
        if (pa == P1 || pa == P2 || pb == P1 || pb == P2) continue;
        bool ba = between(pa), bb = between(pb);
        if (ba == bb) continue;
        int in = ba ? pa : pb, out = ba ? pb : pa;
        seps.push_back({e, md(in - P1), md(out - P1)});
    }
    std::sort(seps.begin(), seps.end(), [](const Sep& x, const Sep& y) {
        if (x.k1 != y.k1) return x.k1 < y.k1;
        return x.k2 > y.k2;
    });
    auto has = [&](int f, const Station& s) {
        for (int dd : g.face_darts(f)) {
            if (s.kind == Station::Vertex && g.tail(dd) == s.a) return true;
            if (s.kind == Station::Cross && norm_edge(g.tail(dd), g.head(dd)) == Edge{s.a, s.b}) return true;
        }
        return false;
    };
    auto face_with = [&](const Station& x, const Station& y) {
        for (int f : inside)
            if (has(f, x) && has(f, y)) return f;
        throw internal_error("chord: no face joins consecutive points");
    };
    Seq out{p1};
    Station prev = p1;
    for (auto& s : seps) {
        Station c = Station::cross(s.e.first, s.e.second);
        out.push_back(Station::hop(g.face_key(face_with(prev, c))));
        out.push_back(c);
        prev = c;
    }
    out.push_back(Station::hop(g.face_key(face_with(prev, p2))));
    out.push_back(p2);
    return out;
}

// ------------------------------------------------------------------ curve bundles

int CurveBundle::best() const {
    int b = 0;
    for (int i = 1; i < 3; ++i)
        if (vertex_count(lambda[i]) > vertex_count(lambda[b])) b = i;
    return b;
}

namespace {

struct BundleBuilder {
    const ThreeTreeDecomp& d;
    const PlaneGraph& g;
    std::vector<CurveBundle> out;
    std::vector<std::array<Seq, 3>> seqs;

    explicit BundleBuilder(const ThreeTreeDecomp& dd) : d(dd), g(dd.g) {}

    static Station X(int a, int b) { return Station::cross(a, b); }
    static Station V(int a) { return Station::vertex(a); }

    void empty_node(int k) {
        auto t = d.nodes[k].t;
        std::string f = tri_face(g, t[0], t[1], t[2]);
        for (int i = 0; i < 3; ++i)
            seqs[k][i] = {X(t[i], t[(i + 1) % 3]), Station::hop(f), X(t[i], t[(i + 2) % 3])};
    }

    void type_a(int k) {
        auto t = d.nodes[k].t;
        int w = d.nodes[k].w;
        for (int i = 0; i < 3; ++i) {
            int x = t[i], y = t[(i + 1) % 3], z = t[(i + 2) % 3];
            seqs[k][i] = {X(x, y), Station::hop(tri_face(g, x, y, w)), V(w), Station::hop(tri_face(g, x, z, w)), X(x, z)};
        }
    }

    void type_cd(int k) {
        const auto& nd = d.nodes[k];
        for (int i = 0; i < 3; ++i) {
            const auto& cxy = seqs[nd.child[i]];
            const auto& cyt = seqs[nd.child[(i + 1) % 3]];
            const auto& cxt = seqs[nd.child[(i + 2) % 3]];
            seqs[k][i] = join({cxy[1], cyt[2], cxt[0]});
        }
    }

    void type_b(int k) {
        const auto& nd = d.nodes[k];
        std::array<int, 3> cur = nd.t;
        std::array<std::vector<int>, 3> P;
        for (int r = 0; r < 3; ++r) P[r] = {cur[r]};
        int c = k;
        while (d.nodes[c].type == 'B') {
            const auto& cn = d.nodes[c];
            int ci = -1;
            for (int i = 0; i < 3; ++i)
                if (d.nodes[cn.child[i]].w >= 0) ci = i;
            int excluded = cn.t[(ci + 2) % 3];
            int r = static_cast<int>(std::find(cur.begin(), cur.end(), excluded) - cur.begin());
            P[r].push_back(cn.w);
            cur[r] = cn.w;
            c = cn.child[ci];
        }
        const int H = c;
        std::array<int, 3> hi{};
        for (int r = 0; r < 3; ++r)
            hi[r] = static_cast<int>(std::find(d.nodes[H].t.begin(), d.nodes[H].t.end(), cur[r]) - d.nodes[H].t.begin());
        auto Hl = [&](int r) { return seqs[H][hi[r]]; };
        auto X0 = [&](int r) { return P[r].front(); };
        auto Xp = [&](int r) { return P[r].back(); };
        auto cyc = [&](int r, int s) {
            int a = r, b = s;
            if ((r + 1) % 3 != s) a = s, b = r;
            std::vector<int> cy{P[a][0]};
            cy.insert(cy.end(), P[b].begin(), P[b].end());
            for (size_t j = P[a].size() - 1; j >= 1; --j) cy.push_back(P[a][j]);
            return cy;
        };
        auto chord = [&](int r, int s, const Station& p, const Station& q) { return lemma1_chord(g, cyc(r, s), p, q); };
        auto path = [&](int r, int from, int to) {
            Seq s{V(P[r][from])};
            for (int j = from + 1; j <= to; ++j) {
                s.push_back(Station::edge(P[r][j - 1], P[r][j]));
                s.push_back(V(P[r][j]));
            }
            return s;
        };
        int singles = 0;
        for (int r = 0; r < 3; ++r) singles += P[r].size() == 1;
        std::array<Seq, 3> lam;
        if (singles == 0) {
            for (int x = 0; x < 3; ++x) {
                int y = (x + 1) % 3, t = (x + 2) % 3;
                int T = static_cast<int>(P[t].size());
                std::vector<Seq> parts;
                if (T > 2) {
                    parts.push_back(chord(x, t, X(X0(x), X0(t)), V(P[t][1])));
                    parts.push_back(path(t, 1, T - 2));
                    parts.push_back(chord(y, t, V(P[t][T - 2]), X(Xp(y), Xp(t))));
                } else {
                    parts.push_back(chord(x, t, X(X0(x), X0(t)), X(P[t][0], P[t][1])));
                    parts.push_back(chord(y, t, X(P[t][0], P[t][1]), X(Xp(y), Xp(t))));
                }
                parts.push_back(Hl(y));
                parts.push_back(chord(x, y, X(Xp(x), Xp(y)), X(X0(x), X0(y))));
                lam[x] = join(parts);
            }
        } else if (singles == 1) {
            int k1 = 0;
            while (P[k1].size() != 1) ++k1;
            int r1 = (k1 + 1) % 3, r2 = (k1 + 2) % 3;
            lam[k1] = join({chord(k1, r1, X(X0(k1), X0(r1)), X(Xp(r1), X0(k1))), Hl(k1),
                            chord(k1, r2, X(Xp(r2), X0(k1)), X(X0(r2), X0(k1)))});
            for (int x : {r1, r2}) {
                int o = 3 - x - k1;
                int Vn = static_cast<int>(P[o].size());
                std::vector<Seq> parts;
                if (Vn > 2) {
                    parts.push_back(chord(x, o, X(X0(x), X0(o)), V(P[o][1])));
                    parts.push_back(path(o, 1, Vn - 2));
                    parts.push_back(chord(x, o, V(P[o][Vn - 2]), X(Xp(x), Xp(o))));
                } else {
                    parts.push_back(chord(x, o, X(X0(x), X0(o)), X(Xp(x), Xp(o))));
                }
                parts.push_back(Hl(x));
                parts.push_back(chord(x, k1, X(Xp(x), X0(k1)), X(X0(x), X0(k1))));
                lam[x] = join(parts);
            }
        } else {
            int k1 = 0;
            while (P[k1].size() == 1) ++k1;
            int r1 = (k1 + 1) % 3, r2 = (k1 + 2) % 3;
            lam[k1] = join({chord(k1, r1, X(X0(k1), X0(r1)), X(X0(r1), Xp(k1))), Hl(k1),
                            chord(k1, r2, X(X0(r2), Xp(k1)), X(X0(r2), X0(k1)))});
            for (int x : {r1, r2}) {
                int o = 3 - x - k1;
                int Z = static_cast<int>(P[k1].size());
                std::vector<Seq> parts;
                if (Z > 2) {
                    parts.push_back(chord(x, k1, X(X0(x), X0(k1)), V(P[k1][1])));
                    parts.push_back(path(k1, 1, Z - 2));
                    parts.push_back(chord(o, k1, V(P[k1][Z - 2]), X(X0(o), Xp(k1))));
                } else {
                    parts.push_back(chord(x, k1, X(X0(x), X0(k1)), X(P[k1][0], P[k1][1])));
                    parts.push_back(chord(o, k1, X(P[k1][0], P[k1][1]), X(X0(o), Xp(k1))));
                }
                parts.push_back(Hl(o));
                lam[x] = join(parts);
            }
        }
        seqs[k] = lam;
    }

    void run() {
        const int N = static_cast<int>(d.nodes.size());
        seqs.assign(N, {});
        out.assign(N, {});
        for (int k = N - 1; k >= 0; --k) {
            const auto& nd = d.nodes[k];
            if (nd.w < 0) empty_node(k);
            else if (nd.type == 'A') type_a(k);
            else if (nd.type == 'B') type_b(k);
            else type_cd(k);
            // orient each curve from the edge t[i]t[i+1] to t[i]t[i+2]
            for (int i = 0; i < 3; ++i) {
                auto& s = seqs[k][i];
                if (!(s.front() == X(nd.t[i], nd.t[(i + 1) % 3]))) std::reverse(s.begin(), s.end());
            }
        }
        // counts per node
        for (int k = 0; k < N; ++k) {
            auto& cb = out[k];
            for (int i = 0; i < 3; ++i) cb.lambda[i] = GoodCurve{seqs[k][i], false};
        }
        std::vector<char> on(g.n(), 0);
        for (int k = 0; k < N; ++k) {
            const auto& nd = d.nodes[k];
            auto& cb = out[k];
            cb.s = 0;
            for (int i = 0; i < 3; ++i)
                for (auto& s : seqs[k][i])
                    if (s.kind == Station::Vertex) ++cb.s, on[s.a] = 1;
            cb.x = 0;
            if (nd.w >= 0) {
                // type-B vertices of the subtree that no curve visits
                std::vector<int> st{k};
                while (!st.empty()) {
                    int c = st.back();
                    st.pop_back();
                    const auto& cn = d.nodes[c];
                    if (cn.w < 0) continue;
                    if (cn.type == 'B' && !on[cn.w]) ++cb.x;
                    for (int ch : cn.child) st.push_back(ch);
                }
            }
            for (int i = 0; i < 3; ++i)
                for (auto& s : seqs[k][i])
                    if (s.kind == Station::Vertex) on[s.a] = 0;
        }
    }
};

}  // namespace

std::vector<CurveBundle> build_all_bundles(const ThreeTreeDecomp& d) {
    BundleBuilder b(d);
    b.run();
    return b.out;
}

CurveBundle build_curve_bundle(const ThreeTreeDecomp& d) {
    auto all = build_all_bundles(d);
    CurveBundle cb = all[d.root];
    for (auto& c : cb.lambda) {
        auto r = validate_curve(d.g, c);
        if (!r.good || !r.proper) throw internal_error("bundle curve failed validation: " + serialize(c));
    }
    return cb;
}

std::string Lemma3Report::summary() const {
    static const char* names[7] = {"a+b+c+d=m", "a=c+2d+1", "h<=2c+3d+1", "x<=b", "x<=3h", "s>=3a+b-x", "s>=3m/8"};
    std::ostringstream o;
    for (int i = 0; i < 7; ++i) o << (i ? " " : "") << names[i] << "=" << (holds[i] ? "ok" : "FAIL");
    return o.str();
}

Lemma3Report check_lemma3(const ThreeTreeDecomp& d, const CurveBundle& cb, int node) {
    const auto& n = d.nodes[node];
    Lemma3Report r;
    r.holds[0] = n.na + n.nb + n.nc + n.nd == n.m;
    r.holds[1] = n.m == 0 || n.na == n.nc + 2 * n.nd + 1;
    r.holds[2] = n.m == 0 || n.h <= 2 * n.nc + 3 * n.nd + 1;
    r.holds[3] = cb.x <= n.nb;
    r.holds[4] = cb.x <= 3 * n.h;
    r.holds[5] = cb.s >= 3 * n.na + n.nb - cb.x;
    r.holds[6] = 8 * cb.s >= 3 * n.m;
    for (int i = 0; i < 7; ++i)
        if (!r.holds[i]) {
            r.first_violation = i + 1;
            break;
        }
    return r;
}

// ------------------------------------------------------------------ dynamic programme

DpResult dp_optimal_collinear(const ThreeTreeDecomp& d) {
    const auto& g = d.g;
    const int N = static_cast<int>(d.nodes.size());
    DpResult res;
    auto& ee = res.table.ee;
    auto& ve = res.table.ve;
    ee.assign(N, {0, 0, 0});
    ve.assign(N, {0, 0, 0});
    std::vector<std::array<int, 3>> cee(N, {0, 0, 0}), cve(N, {0, 0, 0});
    for (int k = N - 1; k >= 0; --k) {
        const auto& nd = d.nodes[k];
        if (nd.w < 0) continue;
        for (int i = 0; i < 3; ++i) {
            int cxy = nd.child[i], cyt = nd.child[(i + 1) % 3], cxt = nd.child[(i + 2) % 3];
            std::array<int, 3> oe{ee[cxy][0] + ee[cxt][1], ee[cxy][1] + ee[cyt][2] + ee[cxt][0],
                                  ve[cxy][2] + 1 + ve[cxt][2]};
            std::array<int, 3> ov{1 + ve[cyt][2], ve[cxy][0] + ee[cyt][0], ve[cxt][1] + ee[cyt][1]};
            for (int o = 0; o < 3; ++o) {
                if (o == 0 || oe[o] > ee[k][i]) ee[k][i] = oe[o], cee[k][i] = o;
                if (o == 0 || ov[o] > ve[k][i]) ve[k][i] = ov[o], cve[k][i] = o;
            }
        }
    }
    std::function<Seq(int, int)> ee_seq, ve_seq;
    ee_seq = [&](int k, int i) -> Seq {
        const auto& nd = d.nodes[k];
        auto t = nd.t;
        if (nd.w < 0)
            return {Station::cross(t[i], t[(i + 1) % 3]), Station::hop(tri_face(g, t[0], t[1], t[2])),
                    Station::cross(t[i], t[(i + 2) % 3])};
        int cxy = nd.child[i], cyt = nd.child[(i + 1) % 3], cxt = nd.child[(i + 2) % 3];
        switch (cee[k][i]) {
            case 0: return join({ee_seq(cxy, 0), ee_seq(cxt, 1)});
            case 1: return join({ee_seq(cxy, 1), ee_seq(cyt, 2), ee_seq(cxt, 0)});
            default: return join({ve_seq(cxy, 2), ve_seq(cxt, 2)});
        }
    };
    ve_seq = [&](int k, int i) -> Seq {
        const auto& nd = d.nodes[k];
        auto t = nd.t;
        if (nd.w < 0)
            return {Station::vertex(t[i]), Station::hop(tri_face(g, t[0], t[1], t[2])),
                    Station::cross(t[(i + 1) % 3], t[(i + 2) % 3])};
        int cxy = nd.child[i], cyt = nd.child[(i + 1) % 3], cxt = nd.child[(i + 2) % 3];
        switch (cve[k][i]) {
            case 0:
                return join({Seq{Station::vertex(t[i]), Station::edge(t[i], nd.w), Station::vertex(nd.w)},
                             ve_seq(cyt, 2)});
            case 1: return join({ve_seq(cxy, 0), ee_seq(cyt, 0)});
            default: return join({ve_seq(cxt, 1), ee_seq(cyt, 1)});
        }
    };
    const int r = d.root;
    auto t = d.nodes[r].t;
    // candidates in a fixed order: EE0..2, VE0..2, then the boundary edge
    int best = -1, best_int = -1;
    int bk = 0, bi = 0;
    for (int c = 0; c < 7; ++c) {
        int total = c < 3 ? ee[r][c] : c < 6 ? ve[r][c - 3] + 1 : 2;
        int internal = c < 3 ? ee[r][c] : c < 6 ? ve[r][c - 3] : 0;
        if (total > best) best = total, bk = c;
        if (internal > best_int) best_int = internal, bi = c;
    }
    auto curve_of = [&](int c) -> GoodCurve {
        if (c < 3) return GoodCurve{ee_seq(r, c), false};
        if (c < 6) return GoodCurve{ve_seq(r, c - 3), false};
        return GoodCurve{{Station::vertex(t[0]), Station::edge(t[0], t[1]), Station::vertex(t[1])}, false};
    };
    res.best_count = best;
    res.best_curve = curve_of(bk);
    res.best_internal = best_int;
    res.best_internal_curve = curve_of(bi);
    return res;
}

std::string serialize(const DpResult& r, const ThreeTreeDecomp& d) {
    std::ostringstream o;
    for (size_t k = 0; k < d.nodes.size(); ++k) {
        const auto& nd = d.nodes[k];
        if (nd.w < 0) continue;
        o << "node " << k << " (" << nd.t[0] << "," << nd.t[1] << "," << nd.t[2] << ") w=" << nd.w << " EE=" << r.table.ee[k][0]
          << "," << r.table.ee[k][1] << "," << r.table.ee[k][2] << " VE=" << r.table.ve[k][0] << "," << r.table.ve[k][1]
          << "," << r.table.ve[k][2] << "\n";
    }
    o << "best_count " << r.best_count << "\n";
    o << "best_internal " << r.best_internal << "\n";
    o << serialize(r.best_curve);
    return o.str();
}

// ------------------------------------------------------------------ augmentation

namespace {

// Top-down: inside each triangle pick a central vertex, join it to the three
// corners through shared faces and recurse into the three smaller triangles.
struct Stacker {
    std::vector<std::vector<int>> rot;
    long budget = 0;
    std::vector<int> obstruction;  // interior of the deepest triangle that could not be split
    size_t obstruction_depth = 0;

    int idx(int v, int w) const {
        return static_cast<int>(std::find(rot[v].begin(), rot[v].end(), w) - rot[v].begin());
    }
    int nxt(int v, int w) const { return rot[v][(idx(v, w) + 1) % rot[v].size()]; }
    int prv(int v, int w) const { return rot[v][(idx(v, w) + rot[v].size() - 1) % rot[v].size()]; }
    bool adj(int a, int b) const { return idx(a, b) < static_cast<int>(rot[a].size()); }

    // faces left of the ccw triangle a, b, c, each as its dart list
    std::vector<std::vector<std::pair<int, int>>> faces_inside(int a, int b, int c) const {
        std::set<Edge> wall{norm_edge(a, b), norm_edge(b, c), norm_edge(c, a)};
        std::set<std::pair<int, int>> seen;
        std::vector<std::vector<std::pair<int, int>>> fs;
        std::vector<std::pair<int, int>> todo{{a, b}};
        while (!todo.empty()) {
            auto d0 = todo.back();
            todo.pop_back();
            if (seen.count(d0)) continue;
            std::vector<std::pair<int, int>> f;
            auto d = d0;
            do {
                seen.insert(d);
                f.push_back(d);
                if (!wall.count(norm_edge(d.first, d.second)) && !seen.count({d.second, d.first}))
                    todo.push_back({d.second, d.first});
                d = {d.second, nxt(d.second, d.first)};
            } while (d != d0);
            fs.push_back(f);
        }
        return fs;
    }

    // w lies in the sector at a swept counter-clockwise from b to c
    bool in_sector(int a, int b, int c, int w) const {
        for (int x = prv(a, b); x != b; x = prv(a, x)) {
            if (x == w) return true;
            if (x == c) return false;
        }
        return false;
    }

    bool split_ok(int a, int b, int c, int w) const {
        if (!in_sector(a, b, c, w) || !in_sector(b, c, a, w) || !in_sector(c, a, b, w)) return false;
        // around w the corners come a, b, c counter-clockwise
        int seen = 0;
        for (int x = prv(w, a);; x = prv(w, x)) {
            if (x == b) seen = 1;
            if (x == c) return seen == 1;
        }
    }

    bool solve(int a, int b, int c, size_t depth) {
        auto fs = faces_inside(a, b, c);
        std::set<int> inner;
        for (auto& f : fs)
            for (auto& d : f)
                if (d.first != a && d.first != b && d.first != c) inner.insert(d.first);
        if (inner.empty()) return fs.size() == 1 && fs[0].size() == 3;
        if (--budget < 0) return false;
        std::vector<int> cand(inner.begin(), inner.end());
        auto links = [&](int w) { return adj(w, a) + adj(w, b) + adj(w, c); };
        std::stable_sort(cand.begin(), cand.end(), [&](int x, int y) { return links(x) > links(y); });
        for (int w : cand) {
            std::vector<int> need;
            for (int t : {a, b, c})
                if (!adj(w, t)) need.push_back(t);
            if (join(a, b, c, w, need, 0, depth)) return true;
            if (budget < 0) break;
        }
        if (depth >= obstruction_depth) {
            obstruction_depth = depth;
            obstruction = {a, b, c};
            obstruction.insert(obstruction.end(), inner.begin(), inner.end());
        }
        return false;
    }

    // add the edges from w to need[k..] in every possible face, then recurse
    bool join(int a, int b, int c, int w, const std::vector<int>& need, size_t k, size_t depth) {
        if (k == need.size()) {
            if (!split_ok(a, b, c, w)) return false;
            auto save = rot;
            if (solve(a, b, w, depth + 1) && solve(b, c, w, depth + 1) && solve(c, a, w, depth + 1)) return true;
            rot = save;
            return false;
        }
        int t = need[k];
        for (auto& f : faces_inside(a, b, c)) {
            const int L = static_cast<int>(f.size());
            for (int i = 0; i < L; ++i) {
                if (f[i].second != w) continue;
                for (int j = 0; j < L; ++j) {
                    if (f[j].second != t) continue;
                    auto save = rot;
                    int p = f[i].first, x = f[j].first;
                    rot[w].insert(rot[w].begin() + idx(w, p) + 1, t);
                    rot[t].insert(rot[t].begin() + idx(t, x) + 1, w);
                    if (join(a, b, c, w, need, k + 1, depth)) return true;
                    rot = save;
                    if (budget < 0) return false;
                }
            }
        }
        return false;
    }
};

}  // namespace

Augmentation augment_to_plane_3tree(const PlaneGraph& g) {
    if (g.n() < 3) throw input_error("three_tree", "need at least three vertices");
    try {
        decompose(g);
        return {g, {}};
    } catch (const Error&) {
    }
    const auto& ow = g.outer_walk();
    const int L = static_cast<int>(ow.size());
    std::vector<int> obstruction;
    // the outer triangle: three consecutive outer vertices, closed around the outside
    for (int s = 0; s < L; ++s) {
        int r0 = ow[s], r1 = ow[(s + 1) % L], r2 = ow[(s + 2) % L];
        if (r0 == r1 || r1 == r2 || r0 == r2) continue;
        Stacker S;
        S.rot = g.rotations();
        S.budget = 200L * g.n() + 1000;
        if (L > 3 || !S.adj(r0, r2)) {
            if (S.adj(r0, r2)) continue;
            S.rot[r2].insert(S.rot[r2].begin() + S.idx(r2, r1) + 1, r0);
            S.rot[r0].insert(S.rot[r0].begin() + S.idx(r0, r1), r2);
        }
        // interior of the triangle is left of r0 -> r2
        if (!S.solve(r0, r2, r1, 0)) {
            if (obstruction.empty() || S.obstruction.size() < obstruction.size()) obstruction = S.obstruction;
            continue;
        }
        PlaneGraph h = PlaneGraph::with_outer_dart(S.rot, r0, r1);
        decompose(h);
        std::vector<Edge> added;
        for (auto& e : h.edges())
            if (!g.has_edge(e.first, e.second)) added.push_back(e);
        return {h, added};
    }
    std::ostringstream o;
    o << "no stacking found; stuck triangle and its interior:";
    for (int v : obstruction) o << ' ' << v;
    throw input_error("three_tree", o.str());
}

PlaneGraph random_plane_3tree(std::uint64_t seed, int n) {
    if (n < 3) throw input_error("three_tree", "a plane 3-tree needs at least 3 vertices");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> rot = {{1, 2}, {2, 0}, {0, 1}};
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}};
    while (static_cast<int>(rot.size()) < n) {
        size_t i = rng() % faces.size();
        auto [a, b, c] = faces[i];
        int w = stack_vertex(rot, a, b, c);
        faces[i] = {a, b, w};
        faces.push_back({b, c, w});
        faces.push_back({c, a, w});
    }
    return PlaneGraph(rot, {0, 2, 1});
}

}  // namespace col
