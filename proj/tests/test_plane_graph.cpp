#include <algorithm>
#include <random>
#include <set>

#include "collinear/error.hpp"
#include "collinear/plane_graph.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace col;

TEST_CASE("parse K4 and trace faces") {
    auto g = parse_plane_graph(
        "planegraph 4\n# K4, vertex 3 inside\nrot 0: 1 3 2\nrot 1: 2 3 0\nrot 2: 0 3 1\nrot 3: 0 1 2\nouter: 0 1 2\n");
    CHECK(g.num_faces() == 4);
    CHECK(g.face_key(g.outer_face()) == "0,1,2");
    for (int f = 0; f < 4; ++f) CHECK(g.face_darts(f).size() == 3);
    CHECK(g == k4_graph());
}

TEST_CASE("small families") {
    auto c = cycle_graph(4);
    CHECK(c.num_faces() == 2);
    for (int f = 0; f < 2; ++f) CHECK(c.face_darts(f).size() == 4);
    auto o = octahedron_graph();
    CHECK(o.n() - o.m() + o.num_faces() == 2);
    CHECK(o.num_faces() == 8);
    auto q = cube_graph();
    CHECK(q.num_faces() == 6);
    for (int f = 0; f < 6; ++f) CHECK(q.face_darts(f).size() == 4);
}

TEST_CASE("rejections") {
    auto bad = [](const std::string& s) {
        try {
            parse_plane_graph(s);
        } catch (const Error& e) {
            return e.cls();
        }
        return std::string("none");
    };
    // counter-clockwise K4 (every rotation reversed)
    CHECK(bad("planegraph 4\nrot 0: 2 3 1\nrot 1: 0 3 2\nrot 2: 1 3 0\nrot 3: 2 1 0\nouter: 0 1 2\n") == "orientation");
    CHECK(bad("planegraph 2\nrot 0: 1 1\nrot 1: 0 0\nouter: 0 1\n") == "embedding");
    CHECK(bad("planegraph 1\nrot 0: 0\nouter: 0\n") == "embedding");
    CHECK(bad("planegraph 4\nrot 0: 1 2 3\nrot 1: 2 3 0\nrot 2: 0 3 1\nrot 3: 0 1 2\nouter: 0 1 2\n") == "embedding");
    CHECK(bad("planegraph 3\nrot 0: 1 2\nrot 1: 2 0\nrot 2: 0 1\nouter: 0 1\n") == "outer");
    CHECK(bad("planegraph 3\nrot 0: 1 2\nrot 1: 2 0\nouter: 0 1 2\n") == "syntax");
    CHECK(bad("planegraph 4\nrot 0: 1\nrot 1: 0\nrot 2: 3\nrot 3: 2\nouter: 0 1\n") == "embedding");
}

TEST_CASE("boundary paths") {
    auto c = cycle_graph(4);
    CHECK(boundary_path(c, 0, 2, PathKind::Tau).walk == std::vector<int>{0, 1, 2});
    CHECK(boundary_path(c, 0, 2, PathKind::Beta).walk == std::vector<int>{0, 3, 2});
    auto p = prism_graph();
    CHECK(boundary_path(p, 0, 1, PathKind::Tau).walk == std::vector<int>{0, 1});
    CHECK_THROWS(boundary_path(p, 0, 3, PathKind::Tau));
}

TEST_CASE("separation structure") {
    CHECK(separation_pairs(k4_graph()).separation_pairs.empty());
    auto six = cycle_graph(6);
    auto sp = separation_pairs(six).separation_pairs;
    CHECK(sp.size() == 9);  // 15 pairs minus 6 adjacent ones
    // two triangles 0-1-2 and 0-1-3 sharing edge 0-1
    auto tt = from_layout({{0, 0}, {2, 0}, {1, 1}, {1, -1}}, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {0, 3}}, {0, 2, 1, 3});
    auto s = separation_pairs(tt).separation_pairs;
    REQUIRE(s.size() == 1);
    CHECK(s[0] == Edge{0, 1});
    auto comps = pair_components(tt, 0, 1);
    int trivial = 0, nontrivial = 0;
    for (auto& c : comps) (c.trivial ? trivial : nontrivial)++;
    CHECK(trivial == 1);
    CHECK(nontrivial == 2);
    // bridges of one triangle
    auto br = h_bridges(tt, Subgraph{{0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}});
    REQUIRE(br.size() == 1);
    CHECK(!br[0].trivial);
    CHECK(br[0].attachments == std::vector<int>{0, 1});
}

TEST_CASE("bridges") {
    auto br = h_bridges(k4_graph(), Subgraph{{0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}});
    REQUIRE(br.size() == 1);
    CHECK(br[0].inner == std::vector<int>{3});
    CHECK(br[0].attachments == std::vector<int>{0, 1, 2});
    auto b2 = h_bridges(cycle_graph(4), Subgraph{{0, 1}, {{0, 1}}});
    REQUIRE(b2.size() == 1);
    CHECK(b2[0].attachments == std::vector<int>{0, 1});
}

TEST_CASE("subgraph outer face") {
    auto g = k4_graph();
    auto x = delete_vertices(g, {3});
    CHECK(x.g.num_faces() == 2);
    // outer face of K4 minus its inner vertex is still the old outer triangle
    std::vector<int> ow;
    for (int v : x.g.face_vertices(x.g.outer_face())) ow.push_back(x.to_parent[v]);
    std::set<int> s(ow.begin(), ow.end());
    CHECK(s == std::set<int>{0, 1, 2});
    auto y = delete_vertices(g, {0});
    std::set<int> s2;
    for (int v : y.g.face_vertices(y.g.outer_face())) s2.insert(y.to_parent[v]);
    CHECK(s2 == std::set<int>{1, 2, 3});
    CHECK_THROWS(delete_vertices(cycle_graph(4), {0, 2}));
}

TEST_CASE("property: random triangulations") {
    std::mt19937 rng(7);
    for (int it = 0; it < 40; ++it) {
        auto g = testgen::random_stacked(rng, 3 + it % 12);
        int D = g.num_darts();
        CHECK(D == 2 * g.m());
        std::vector<int> cnt(D, 0);
        for (int f = 0; f < g.num_faces(); ++f)
            for (int d : g.face_darts(f)) cnt[d]++;
        CHECK(std::all_of(cnt.begin(), cnt.end(), [](int c) { return c == 1; }));
        for (int d = 0; d < D; ++d) {
            int e = d, steps = 0;
            do e = g.next(e), ++steps;
            while (e != d && steps <= D);
            CHECK(e == d);
        }
        CHECK(parse_plane_graph(serialize(g)) == g);
        // tau + beta cover the outer cycle
        auto ov = g.face_vertices(g.outer_face());
        int u = ov[0], v = ov[1 + rng() % (ov.size() - 1)];
        auto t = boundary_path(g, u, v, PathKind::Tau).walk;
        auto b = boundary_path(g, u, v, PathKind::Beta).walk;
        CHECK(t.size() + b.size() == ov.size() + 2);
        std::set<int> all(t.begin(), t.end());
        all.insert(b.begin(), b.end());
        CHECK(all.size() == ov.size());
    }
}

TEST_CASE("property: separation pairs match brute force") {
    std::mt19937 rng(11);
    for (int it = 0; it < 60; ++it) {
        int n = 4 + it % 9;
        auto g = testgen::random_biconnected(rng, n);
        if (!is_biconnected(g)) continue;
        auto sp = separation_pairs(g).separation_pairs;
        std::set<Edge> got(sp.begin(), sp.end());
        for (int a = 0; a < g.n(); ++a)
            for (int b = a + 1; b < g.n(); ++b) {
                std::vector<char> rm(g.n(), 0);
                rm[a] = rm[b] = 1;
                bool sep = g.n() > 3 && !connected_without(g, rm);
                CHECK(sep == (got.count({a, b}) > 0));
            }
    }
}
