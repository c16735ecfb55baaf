#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "collinear/error.hpp"
#include "collinear/oracle.hpp"
#include "collinear/three_tree.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace col;
using namespace testgen;

namespace {

PlaneGraph stack_path(int k) {
    // each new vertex goes into the face (0, 1, previous)
    auto rot = triangle_graph().rotations();
    int c = 2;
    for (int i = 0; i < k; ++i) c = stack_vertex(rot, 0, 1, c);
    return PlaneGraph(rot, triangle_graph().outer_walk());
}

// triangles of g that are faces, as sorted vertex triples
std::set<std::array<int, 3>> face_triangles(const PlaneGraph& g) {
    std::set<std::array<int, 3>> s;
    for (int f = 0; f < g.num_faces(); ++f) {
        auto v = g.face_vertices(f);
        if (v.size() != 3) continue;
        std::array<int, 3> t{v[0], v[1], v[2]};
        std::sort(t.begin(), t.end());
        s.insert(t);
    }
    return s;
}

// type of every internal vertex from empty-triangle counts around it
std::map<int, char> types_by_faces(const ThreeTreeDecomp& d) {
    auto faces = face_triangles(d.g);
    std::map<int, char> r;
    for (const auto& nd : d.nodes) {
        if (nd.w < 0) continue;
        int empty = 0;
        for (int i = 0; i < 3; ++i) {
            std::array<int, 3> t{nd.t[i], nd.t[(i + 1) % 3], nd.w};
            std::sort(t.begin(), t.end());
            empty += faces.count(t) ? 1 : 0;
        }
        r[nd.w] = "DCBA"[empty];
    }
    return r;
}

int internal_on(const PlaneGraph& g, const GoodCurve& c) {
    int k = 0;
    for (int v : c.vertices()) k += !g.on_outer_face(v);
    return k;
}

}  // namespace

TEST_CASE("decompose small 3-trees") {
    auto t = decompose(triangle_graph());
    CHECK(t.nodes[t.root].w < 0);
    CHECK(t.nodes[t.root].m == 0);

    auto k = decompose(k4_graph());
    const auto& r = k.nodes[k.root];
    CHECK(r.w == 3);
    CHECK(r.type == 'A');
    CHECK(r.m == 1);
    CHECK(r.na == 1);
    CHECK(r.nb + r.nc + r.nd == 0);
    CHECK(k.b_chains.empty());

    auto f = decompose(stack_path(2));
    const auto& r5 = f.nodes[f.root];
    CHECK(r5.type == 'B');
    CHECK(r5.na == 1);
    CHECK(r5.nb == 1);
    CHECK(r5.h == 1);
    REQUIRE(f.b_chains.size() == 1);
    CHECK(f.b_chains[0] == std::vector<int>{3});
    CHECK(dump(f).find("type=B") != std::string::npos);

    auto p = decompose(stack_path(6));
    REQUIRE(p.b_chains.size() == 1);
    CHECK(p.b_chains[0] == std::vector<int>{3, 4, 5, 6, 7});
}

TEST_CASE("non 3-trees are rejected") {
    CHECK_THROWS_AS(decompose(octahedron_graph()), Error);
    CHECK_THROWS_AS(decompose(cycle_graph(4)), Error);
    CHECK_THROWS_AS(decompose(cube_graph()), Error);
}

TEST_CASE("counters and bundle audit at every node") {
    std::mt19937 rng(7);
    for (int it = 0; it < 40; ++it) {
        int n = 4 + static_cast<int>(rng() % 120);
        auto g = random_stacked(rng, n);
        auto d = decompose(g);
        auto types = types_by_faces(d);
        int counts[4] = {0, 0, 0, 0};
        for (const auto& nd : d.nodes)
            if (nd.w >= 0) {
                CHECK(nd.type == types[nd.w]);
                ++counts[nd.type - 'A'];
            }
        const auto& r = d.nodes[d.root];
        CHECK(r.m == n - 3);
        CHECK(r.na == counts[0]);
        CHECK(r.nb == counts[1]);
        CHECK(r.nc == counts[2]);
        CHECK(r.nd == counts[3]);
        // chains partition the type-B vertices
        int in_chains = 0;
        for (auto& c : d.b_chains) in_chains += static_cast<int>(c.size());
        CHECK(in_chains == counts[1]);
        CHECK(static_cast<int>(d.b_chains.size()) == r.h);

        auto all = build_all_bundles(d);
        for (size_t k = 0; k < d.nodes.size(); ++k) {
            if (d.nodes[k].w < 0) continue;
            auto rep = check_lemma3(d, all[k], static_cast<int>(k));
            INFO("node " << k << " " << rep.summary());
            CHECK(rep.first_violation == 0);
        }
    }
}

TEST_CASE("bundle curves") {
    auto k = decompose(k4_graph());
    auto cb = build_curve_bundle(k);
    CHECK(cb.s == 3);
    CHECK(cb.x == 0);
    for (auto& c : cb.lambda) CHECK(c.vertices() == std::vector<int>{3});

    auto t = build_curve_bundle(decompose(triangle_graph()));
    CHECK(t.s == 0);
    for (auto& c : t.lambda) {
        CHECK(c.stations.size() == 3);
        CHECK(c.stations[1].kind == Station::Face);
    }

    std::mt19937 rng(11);
    for (int it = 0; it < 40; ++it) {
        int n = 4 + static_cast<int>(rng() % 200);
        auto g = random_stacked(rng, n);
        auto d = decompose(g);
        auto cb2 = build_curve_bundle(d);
        auto types = types_by_faces(d);
        const auto& r = d.nodes[d.root];
        for (int i = 0; i < 3; ++i) {
            const auto& c = cb2.lambda[i];
            auto rep = validate_curve(g, c);
            CHECK(rep.good);
            CHECK(rep.proper);
            // endpoints on the two edges at t[i]
            int a = r.t[i], b = r.t[(i + 1) % 3], z = r.t[(i + 2) % 3];
            CHECK(c.stations.front() == Station::cross(a, b));
            CHECK(c.stations.back() == Station::cross(a, z));
            auto vs = c.vertices();
            std::set<int> on(vs.begin(), vs.end());
            for (auto [v, ty] : types) {
                if (ty == 'A') CHECK(on.count(v));
                if (ty == 'C' || ty == 'D') CHECK(!on.count(v));
            }
        }
        int best = static_cast<int>(cb2.lambda[cb2.best()].vertices().size());
        CHECK(8 * best >= n - 3);
        for (auto& c : cb2.lambda) CHECK(static_cast<int>(c.vertices().size()) <= best);
    }
}

TEST_CASE("chords inside a triangulated hexagon") {
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 6; ++i) pts.push_back({std::cos(i * M_PI / 3), std::sin(i * M_PI / 3)});
    std::vector<Edge> es;
    for (int i = 0; i < 6; ++i) es.push_back(norm_edge(i, (i + 1) % 6));
    for (int k : {2, 3, 4}) es.push_back({0, k});
    auto g = from_layout(pts, es, {0, 5, 4, 3, 2, 1});
    std::vector<int> cyc{0, 1, 2, 3, 4, 5};
    auto crosses = [](const std::vector<Station>& s) {
        std::vector<Edge> r;
        for (size_t i = 1; i + 1 < s.size(); ++i)
            if (s[i].kind == Station::Cross) r.push_back({s[i].a, s[i].b});
        return r;
    };
    auto c1 = lemma1_chord(g, cyc, Station::cross(1, 2), Station::cross(4, 5));
    CHECK(crosses(c1) == std::vector<Edge>{{0, 2}, {0, 3}, {0, 4}});
    CHECK(validate_curve(g, GoodCurve{c1, false}).good);
    // from vertex 0 every diagonal ends at the start point
    auto c2 = lemma1_chord(g, cyc, Station::vertex(0), Station::cross(2, 3));
    CHECK(c2.size() == 3);
    auto c3 = lemma1_chord(g, cyc, Station::vertex(1), Station::vertex(5));
    CHECK(crosses(c3) == std::vector<Edge>{{0, 2}, {0, 3}, {0, 4}});
    // no diagonal separates the two points
    auto c4 = lemma1_chord(g, cyc, Station::cross(0, 1), Station::vertex(2));
    CHECK(c4.size() == 3);
    CHECK_THROWS_AS(lemma1_chord(g, cyc, Station::cross(1, 2), Station::vertex(2)), Error);
    CHECK_THROWS_AS(lemma1_chord(g, cyc, Station::vertex(1), Station::vertex(2)), Error);

    // property: crossings equal the alternating diagonals
    std::mt19937 rng(3);
    for (int it = 0; it < 200; ++it) {
        auto pick = [&]() -> std::pair<Station, int> {
            int p = static_cast<int>(rng() % 12);
            if (p % 2 == 0) return {Station::vertex(p / 2), p};
            return {Station::cross(p / 2, (p / 2 + 1) % 6), p};
        };
        auto [s1, q1] = pick();
        auto [s2, q2] = pick();
        int gap = std::abs(q1 - q2);
        int cd = std::min(gap, 12 - gap);
        bool both_vertices = q1 % 2 == 0 && q2 % 2 == 0;
        if (cd <= 1 || (both_vertices && g.has_edge(q1 / 2, q2 / 2))) {
            CHECK_THROWS_AS(lemma1_chord(g, cyc, s1, s2), Error);
            continue;
        }
        auto between = [&](int x) {
            int lo = std::min(q1, q2), hi = std::max(q1, q2);
            return lo < x && x < hi;
        };
        std::set<Edge> want;
        for (int k : {2, 3, 4}) {
            if (0 == q1 || 0 == q2 || 2 * k == q1 || 2 * k == q2) continue;
            if (between(0) != between(2 * k)) want.insert({0, k});
        }
        auto c = lemma1_chord(g, cyc, s1, s2);
        auto got = crosses(c);
        CHECK(std::set<Edge>(got.begin(), got.end()) == want);
        CHECK(got.size() == want.size());
        CHECK(validate_curve(g, GoodCurve{c, false}).good);
    }
}

TEST_CASE("dp matches the oracle on small 3-trees") {
    for (int m = 0; m <= 5; ++m) {
        for (const auto& g : catalog_plane_3trees(m)) {
            auto d = decompose(g);
            auto dp = dp_optimal_collinear(d);
            auto o = enumerate_curves(g);
            OracleOptions io;
            io.internal_only = true;
            auto oi = enumerate_curves(g, io);
            INFO("m=" << m << " " << serialize(g));
            CHECK(dp.best_count == o.max_vertices);
            CHECK(dp.best_internal == oi.max_vertices);
            auto rep = validate_curve(g, dp.best_curve);
            CHECK(rep.good);
            CHECK(rep.proper);
            CHECK(static_cast<int>(dp.best_curve.vertices().size()) == dp.best_count);
            auto rep2 = validate_curve(g, dp.best_internal_curve);
            CHECK(rep2.good);
            CHECK(rep2.proper);
            CHECK(internal_on(g, dp.best_internal_curve) == dp.best_internal);
        }
    }
}

TEST_CASE("catalog minimum of the dp") {
    for (int m = 1; m <= 7; ++m) {
        int lo = 1 << 30;
        for (const auto& g : catalog_plane_3trees(m)) lo = std::min(lo, dp_optimal_collinear(decompose(g)).best_internal);
        CHECK(lo == (m + 2 + 2) / 3);
    }
}

TEST_CASE("dp on larger 3-trees") {
    std::mt19937 rng(5);
    for (int it = 0; it < 10; ++it) {
        auto g = random_stacked(rng, 30 + static_cast<int>(rng() % 300));
        auto d = decompose(g);
        auto dp = dp_optimal_collinear(d);
        auto rep = validate_curve(g, dp.best_curve);
        CHECK(rep.good);
        CHECK(rep.proper);
        CHECK(static_cast<int>(dp.best_curve.vertices().size()) == dp.best_count);
        auto cb = build_curve_bundle(d);
        CHECK(dp.best_count >= static_cast<int>(cb.lambda[cb.best()].vertices().size()));
    }
}

TEST_CASE("augmentation") {
    auto t = augment_to_plane_3tree(triangle_graph());
    CHECK(t.added.empty());
    auto k = augment_to_plane_3tree(k4_graph());
    CHECK(k.added.empty());

    auto c4 = augment_to_plane_3tree(cycle_graph(4));
    CHECK_NOTHROW(decompose(c4.g));
    CHECK(c4.g.m() == 4 + static_cast<int>(c4.added.size()));
    auto c4e = cycle_graph(4).edges();
    for (auto& e : c4e) CHECK(c4.g.has_edge(e.first, e.second));

    CHECK_THROWS_AS(augment_to_plane_3tree(octahedron_graph()), Error);

    std::mt19937 rng(9);
    for (int it = 0; it < 30; ++it) {
        int n = 5 + static_cast<int>(rng() % 80);
        auto g = random_stacked(rng, n);
        // drop random non-outer edges while staying connected
        auto es = g.edges();
        std::shuffle(es.begin(), es.end(), rng);
        auto rot = g.rotations();
        int drops = static_cast<int>(rng() % (n + 1));
        for (auto [a, b] : es) {
            if (drops == 0) break;
            if (g.on_outer_face(a) && g.on_outer_face(b)) continue;
            auto r2 = rot;
            r2[a].erase(std::find(r2[a].begin(), r2[a].end(), b));
            r2[b].erase(std::find(r2[b].begin(), r2[b].end(), a));
            if (r2[a].empty() || r2[b].empty()) continue;
            PlaneGraph h(r2, g.outer_walk());
            if (!connected_without(h, std::vector<char>(h.n(), 0))) continue;
            rot = r2;
            --drops;
        }
        PlaneGraph h(rot, g.outer_walk());
        auto aug = augment_to_plane_3tree(h);
        CHECK_NOTHROW(decompose(aug.g));
        CHECK(aug.g.m() == h.m() + static_cast<int>(aug.added.size()));
        for (auto& e : h.edges()) CHECK(aug.g.has_edge(e.first, e.second));
        // original rotations survive as subsequences
        for (int v = 0; v < h.n(); ++v) {
            std::vector<int> sub;
            for (int w : aug.g.rot(v))
                if (h.has_edge(v, w)) sub.push_back(w);
            auto want = h.rot(v);
            auto it2 = std::find(sub.begin(), sub.end(), want[0]);
            std::rotate(sub.begin(), it2, sub.end());
            CHECK(sub == want);
        }
    }
}
