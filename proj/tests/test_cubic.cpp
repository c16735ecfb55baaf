#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "collinear/cubic.hpp"
#include "collinear/drawing.hpp"
#include "collinear/error.hpp"
#include "collinear/oracle.hpp"
#include "collinear/realize.hpp"
#include "doctest.h"

using namespace col;

namespace {

// g minus its first clockwise outer edge, as the quadruple used for the whole graph
Quadruple opened(const PlaneGraph& g) {
    int u = g.outer_walk()[0], v = g.outer_walk()[1];
    std::vector<int> all(g.n());
    for (int i = 0; i < g.n(); ++i) all[i] = i;
    std::vector<Edge> es;
    for (auto e : g.edges())
        if (e != norm_edge(u, v)) es.push_back(e);
    auto ex = extract_subgraph(g, all, es);
    return make_quadruple(ex.g, ex.from_parent[u], ex.from_parent[v], {});
}

std::set<int> curve_vertices(const GoodCurve& c) {
    auto vs = c.vertices();
    return {vs.begin(), vs.end()};
}

// every off-curve vertex outside X charged to an on-curve vertex, at most 3 each
void check_charges(const PlaneGraph& g, const ChargedCurve& c, const std::set<int>& X, int u, int u_cap) {
    auto on = curve_vertices(c.curve);
    std::map<int, int> load;
    for (int v = 0; v < g.n(); ++v) {
        if (on.count(v) || X.count(v)) {
            CHECK(c.charges.count(v) == 0);
            continue;
        }
        REQUIRE(c.charges.count(v) == 1);
        CHECK(on.count(c.charges.at(v)) == 1);
        ++load[c.charges.at(v)];
    }
    CHECK(c.charges.size() == static_cast<size_t>(g.n()) - on.size() - X.size());
    for (auto [w, k] : load) CHECK(k <= 3);
    CHECK(load[u] <= u_cap);
}

// u and v joined by an edge on top; below them a path from u to v through
// diamonds (K4 minus an edge). gaps[i] edges separate consecutive diamonds.
struct DiamondChain {
    PlaneGraph g;
    int u, v, a, b;
    std::vector<std::vector<int>> paths;  // a .. first diamond, links, last diamond .. b
    std::vector<std::pair<int, int>> ends;
    std::vector<int> free_inner;          // degree-2 vertices strictly between u and v
};

DiamondChain diamond_chain(const std::vector<int>& gaps) {
    std::vector<std::pair<double, double>> pts;
    std::vector<Edge> es;
    auto add = [&](double x, double y) {
        pts.push_back({x, y});
        return static_cast<int>(pts.size()) - 1;
    };
    DiamondChain c;
    double x = 0;
    c.u = add(0, 5);
    int prev = add(0, 0);
    es.push_back(norm_edge(c.u, prev));
    c.a = prev;
    std::vector<int> bottom_rev;  // ccw order of the lower boundary, for the outer walk
    bottom_rev.push_back(prev);
    for (size_t i = 0; i < gaps.size(); ++i) {
        std::vector<int> path{prev};
        for (int j = 0; j < gaps[i]; ++j) {
            x += 1;
            int w = add(x, 0);
            es.push_back(norm_edge(prev, w));
            path.push_back(w);
            bottom_rev.push_back(w);
            prev = w;
        }
        c.paths.push_back(path);
        if (i + 1 == gaps.size()) break;
        int top = add(x + 1, 1), bot = add(x + 1, -1), right = add(x + 2, 0);
        es.push_back(norm_edge(prev, top));
        es.push_back(norm_edge(prev, bot));
        es.push_back(norm_edge(top, right));
        es.push_back(norm_edge(bot, right));
        es.push_back(norm_edge(top, bot));
        c.ends.push_back({prev, right});
        bottom_rev.push_back(bot);
        bottom_rev.push_back(right);
        prev = right;
        x += 2;
    }
    c.b = prev;
    c.v = add(x, 5);
    es.push_back(norm_edge(prev, c.v));
    es.push_back(norm_edge(c.u, c.v));
    std::vector<int> ow{c.u, c.v};
    for (auto it = bottom_rev.rbegin(); it != bottom_rev.rend(); ++it) ow.push_back(*it);
    c.g = from_layout(pts, es, ow);
    for (int w : bottom_rev)
        if (c.g.degree(w) == 2) c.free_inner.push_back(w);
    return c;
}

int face_size_signature(const PlaneGraph& g, int size) {
    int k = 0;
    for (int f = 0; f < g.num_faces(); ++f) k += static_cast<int>(g.face_darts(f).size()) == size;
    return k;
}

}  // namespace

TEST_CASE("well-formed quadruples") {
    auto q = opened(k4_graph());
    CHECK(q.g.m() == 5);
    CHECK(quadruple_violation(q.g, q.u, q.v, {}).empty());
    // 4-cycle with u and v opposite
    auto c4 = cycle_graph(4);
    auto bad = quadruple_violation(c4, 0, 2, {});
    REQUIRE(!bad.empty());
    CHECK(bad[1] == 'e');
    CHECK_THROWS_AS(make_quadruple(c4, 0, 2, {}), Error);
    // a degree-3 vertex in X
    auto pq = opened(prism_graph());
    int cubic_v = -1;
    for (int v = 0; v < pq.g.n(); ++v)
        if (pq.g.degree(v) == 3 && pq.g.on_outer_face(v)) cubic_v = v;
    REQUIRE(cubic_v >= 0);
    CHECK(quadruple_violation(pq.g, pq.u, pq.v, {cubic_v})[1] == 'f');
    // u and v of degree 3
    auto k4 = k4_graph();
    CHECK(quadruple_violation(k4, 0, 1, {})[1] == 'c');
    // edge u-v on the counter-clockwise side
    auto c5 = cycle_graph(5);
    CHECK(quadruple_violation(c5, 0, 1, {}).empty());
    CHECK(quadruple_violation(c5, 1, 0, {})[1] == 'd');
    CHECK(quadruple_violation(c5, 0, 1, {3, 4})[1] == 'f');
    CHECK(quadruple_violation(c5, 0, 1, {4, 3}).empty());
}

TEST_CASE("base case on a cycle") {
    // outer walk 0 1 2 3 4 clockwise; the ccw path from 0 to 1 is 0 4 3 2 1
    auto g = cycle_graph(5);
    auto q = make_quadruple(g, 0, 1, {3});
    CubicAudit audit;
    auto c = build_cubic_curve(q, {}, &audit);
    CHECK(audit.cases["base"] == 1);
    CHECK(curve_vertices(c.curve) == std::set<int>{0, 4, 2});
    CHECK(c.charges == std::map<int, int>{{1, 0}});
    CHECK(c.curve.stations.back() == Station::vertex(2));
    auto q2 = make_quadruple(g, 0, 1, {2});
    auto c2 = build_cubic_curve(q2);
    CHECK(curve_vertices(c2.curve) == std::set<int>{0, 4, 3});
    CHECK(c2.curve.stations.back() == Station::cross(1, 2));
    CHECK(validate_curve(g, c2.curve).good);
}

TEST_CASE("generator") {
    CHECK(embedding_code(generate_triconnected_cubic(1, 4)) == embedding_code(k4_graph()));
    for (std::uint64_t s = 0; s < 5; ++s) {
        auto g = generate_triconnected_cubic(s, 6);
        CHECK(g.n() == 6);
        CHECK(face_size_signature(g, 3) == 2);
        CHECK(face_size_signature(g, 4) == 3);
    }
    for (int n = 8; n <= 40; n += 4) {
        auto g = generate_triconnected_cubic(n, n);
        CHECK(g.n() == n);
        CHECK(is_triconnected(g));
        for (int v = 0; v < n; ++v) CHECK(g.degree(v) == 3);
    }
    CHECK(serialize(generate_triconnected_cubic(9, 30)) == serialize(generate_triconnected_cubic(9, 30)));
    CHECK_THROWS_AS(generate_triconnected_cubic(0, 7), Error);
}

TEST_CASE("named cubic graphs") {
    struct Case {
        PlaneGraph g;
        int need;
    };
    for (auto& [g, need] : {Case{k4_graph(), 1}, Case{prism_graph(), 2}, Case{cube_graph(), 2},
                            Case{dodecahedron_graph(), 5}}) {
        CubicAudit audit;
        auto c = theorem4(g, {}, &audit);
        auto rep = validate_curve(g, c.curve);
        CHECK(rep.good);
        CHECK(rep.proper);
        CHECK(rep.vertex_count_on_curve >= need);
        CHECK(audit.levels >= 1);
        auto d = curve_to_drawing(g, c.curve);
        CHECK(verify_drawing(g, d).ok());
        int on_line = 0;
        for (auto& p : d.coords) on_line += p.y == 0;
        CHECK(on_line >= need);
        if (g.m() <= 12) {
            // no curve beats the exhaustive search
            auto o = enumerate_curves(g);
            CHECK(rep.vertex_count_on_curve <= o.max_vertices);
        }
    }
    CHECK(dodecahedron_graph().n() == 20);
    CHECK(is_triconnected(dodecahedron_graph()));
    CHECK_THROWS_AS(theorem4(cycle_graph(4)), Error);
    CHECK_THROWS_AS(theorem4(octahedron_graph()), Error);
}

TEST_CASE("opened graphs as quadruples") {
    for (auto g : {k4_graph(), prism_graph(), cube_graph()}) {
        auto q = opened(g);
        auto c = build_cubic_curve(q);
        CHECK(validate_curve(q.g, c.curve).good);
        CHECK(curve_vertices(c.curve).size() >= static_cast<size_t>((g.n() + 3) / 4));
        CHECK(c.curve.stations.front() == Station::vertex(q.u));
        check_charges(q.g, c, {}, q.u, 1);
    }
}

TEST_CASE("property: chain decompositions of diamond chains") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 60; ++it) {
        int k = 1 + static_cast<int>(rng() % 4);
        std::vector<int> gaps;
        for (int i = 0; i <= k; ++i) gaps.push_back(1 + static_cast<int>(rng() % 3));
        auto c = diamond_chain(gaps);
        std::vector<int> x;
        for (int w : c.free_inner)
            if (rng() % 3 == 0) x.push_back(w);
        auto q = make_quadruple(c.g, c.u, c.v, x);
        auto cd = chain_decompose(q, c.a, c.b);
        REQUIRE(!cd.is_path);
        CHECK(cd.blocks.size() == static_cast<size_t>(k));
        CHECK(cd.links.size() + 1 == static_cast<size_t>(k));
        CHECK(cd.p0 == c.paths.front());
        CHECK(cd.pk == c.paths.back());
        for (size_t i = 0; i + 2 < c.paths.size(); ++i) CHECK(cd.links[i] == c.paths[i + 1]);
        for (size_t i = 0; i < cd.blocks.size(); ++i) {
            CHECK(cd.blocks[i].g.m() == 5);
            CHECK(cd.block_vertices[i][cd.blocks[i].u] == c.ends[i].first);
            CHECK(cd.block_vertices[i][cd.blocks[i].v] == c.ends[i].second);
        }
        // a pair inside a single path gives a path component
        auto& p0 = c.paths.front();
        if (p0.size() >= 3) CHECK(chain_decompose(q, p0[0], p0[2]).is_path);
        CHECK_THROWS_AS(chain_decompose(q, c.u, c.a), Error);

        auto cc = build_cubic_curve(q);
        CHECK(validate_curve(q.g, cc.curve).good);
        check_charges(q.g, cc, {x.begin(), x.end()}, q.u, 2);
    }
}

TEST_CASE("property: theorem bound and charges on random triconnected cubic graphs") {
    CubicAudit audit;
    for (int n = 4; n <= 80; n += 2) {
        auto g = generate_triconnected_cubic(3 * n + 1, n);
        auto c = theorem4(g, {}, &audit);
        auto rep = validate_curve(g, c.curve);
        CHECK(rep.good);
        CHECK(rep.proper);
        CHECK(4 * rep.vertex_count_on_curve >= n);
        check_charges(g, c, {}, g.outer_walk()[0], 1);
        auto text = serialize_charges(c);
        CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(c.charges.size()));
    }
    for (const char* k : {"base", "1", "2", "3a", "3b", "4", "5a", "5b"}) CHECK_MESSAGE(audit.cases[k] > 0, k);
}
