#include <map>
#include <random>
#include <set>

#include "collinear/curves.hpp"
#include "collinear/error.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace col;

namespace {

Pt P(long x, long y) { return Pt{Q(x), Q(y)}; }

// K4 with vertex 2 in the middle; outer walk 0 1 3
PlaneGraph k4_mid() {
    return from_layout({{0, 2}, {2, -1}, {0, 0}, {-2, -1}}, {{0, 1}, {1, 3}, {0, 3}, {0, 2}, {1, 2}, {2, 3}}, {0, 1, 3});
}

std::string face_with(const PlaneGraph& g, std::set<int> vs) {
    for (int f = 0; f < g.num_faces(); ++f) {
        auto w = g.face_vertices(f);
        if (std::set<int>(w.begin(), w.end()) == vs && f != g.outer_face()) return g.face_key(f);
    }
    return "";
}

}  // namespace

TEST_CASE("K4 curve through the middle vertex") {
    auto g = k4_mid();
    GoodCurve c{{Station::cross(0, 1), Station::hop(face_with(g, {0, 1, 2})), Station::vertex(2),
                 Station::hop(face_with(g, {0, 2, 3})), Station::cross(0, 3)},
                false};
    auto r = validate_curve(g, c);
    CHECK(r.good);
    CHECK(r.proper);
    CHECK(r.vertex_count_on_curve == 1);
    // hand tally: (0,1) crossed once, (0,3) crossed once, 2's three edges touched once, (1,3) untouched
    std::map<Edge, int> t;
    for (auto& [e, k] : edge_tallies(g, c)) t[e] = k;
    CHECK(t[{0, 1}] == 1);
    CHECK(t[{0, 3}] == 1);
    CHECK(t[{0, 2}] == 1);
    CHECK(t[{1, 2}] == 1);
    CHECK(t[{2, 3}] == 1);
    CHECK(t.count({1, 3}) == 0);
    auto a = augment_with_curve(g, c);
    CHECK(a.h.n() == 4 + 2 + 2);
    REQUIRE(a.path.size() == 5);
    CHECK(a.path[2] == 2);
    CHECK(a.path[1] >= 4);
    CHECK(a.h.n() - a.h.m() + a.h.num_faces() == 2);
    CHECK(parse_curve(serialize(c)) == c);
}

TEST_CASE("contained edge and violations") {
    auto g = cycle_graph(4);
    GoodCurve c{{Station::vertex(0), Station::edge(0, 1), Station::vertex(1)}, false};
    auto r = validate_curve(g, c);
    CHECK(r.good);
    CHECK(r.proper);
    CHECK(r.vertex_count_on_curve == 2);
    auto a = augment_with_curve(g, c);
    CHECK(a.h.n() == 4);
    CHECK(a.path == std::vector<int>{0, 1});

    auto t = triangle_graph();
    GoodCurve bad{{Station::vertex(0), Station::hop(t.face_key(1 - t.outer_face())), Station::vertex(1)}, false};
    auto rb = validate_curve(t, bad);
    CHECK(!rb.good);
    REQUIRE(rb.violations.size() == 1);
    CHECK(rb.violations[0] == std::pair<Edge, int>{{0, 1}, 2});
}

TEST_CASE("malformed curves are rejected") {
    auto g = k4_mid();
    auto err = [&](GoodCurve c) {
        try {
            validate_curve(g, c);
        } catch (const Error& e) {
            return e.cls();
        }
        return std::string("none");
    };
    CHECK(err({{Station::vertex(9)}, false}) == "curve");
    CHECK(err({{Station::vertex(0), Station::vertex(1)}, false}) == "curve");
    CHECK(err({{Station::vertex(0), Station::hop("9,9,9"), Station::vertex(1)}, false}) == "curve");
    CHECK(err({{Station::vertex(1), Station::hop(face_with(g, {0, 2, 3})), Station::vertex(3)}, false}) == "curve");
    CHECK(err({{Station::vertex(0), Station::edge(0, 1)}, false}) == "curve");
}

TEST_CASE("properness") {
    auto g = k4_mid();
    // curve living inside the inner face 0 1 2 between two of its edges
    GoodCurve inner{{Station::cross(0, 2), Station::hop(face_with(g, {0, 1, 2})), Station::cross(1, 2)}, false};
    CHECK(!is_proper(g, inner));
    GoodCurve outer_only{{Station::hop(g.face_key(g.outer_face()))}, false};
    CHECK(is_proper(g, outer_only));
    GoodCurve dangling{{Station::hop(g.face_key(g.outer_face())), Station::vertex(0), Station::edge(0, 2), Station::vertex(2)},
                       false};
    CHECK(!is_proper(g, dangling));
    GoodCurve empty{{}, false};
    CHECK(is_proper(g, empty));
    CHECK_THROWS(is_proper(g, GoodCurve{{Station::vertex(0), Station::hop(g.face_key(g.outer_face()))}, true}));
}

TEST_CASE("cut closed curve") {
    // 3x3 grid, closed curve around the middle vertex through 4 side midpoints
    std::vector<std::pair<double, double>> pts;
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 3; ++x) pts.push_back({double(x), double(-y)});
    std::vector<Edge> es;
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 3; ++x) {
            int v = 3 * y + x;
            if (x < 2) es.push_back({v, v + 1});
            if (y < 2) es.push_back({v, v + 3});
        }
    auto g = from_layout(pts, es, {0, 1, 2, 5, 8, 7, 6, 3});
    auto sq = [&](int v) { return face_with(g, {v, v + 1, v + 3, v + 4}); };
    GoodCurve c{{Station::vertex(1), Station::hop(sq(1)), Station::vertex(5), Station::hop(sq(4)), Station::vertex(7),
                 Station::hop(sq(3)), Station::vertex(3), Station::hop(sq(0))},
                true};
    auto rc = validate_curve(g, c);
    CHECK(rc.good);
    CHECK(!rc.proper);
    auto cut = cut_closed_curve(g, c);
    auto r = validate_curve(cut.g, cut.curve);
    CHECK(r.good);
    CHECK(r.proper);
    CHECK(r.vertex_count_on_curve == 4);
    CHECK(cut.g.face_key(cut.g.outer_face()) == sq(0));
    GoodCurve one{{Station::vertex(1), Station::hop(sq(1)), Station::vertex(5), Station::edge(5, 4), Station::vertex(4),
                   Station::edge(1, 4)},
                  true};
    auto c1 = cut_closed_curve(g, one);
    CHECK(c1.curve.stations.size() == 5);
    CHECK(c1.curve.stations.front() == Station::vertex(5));
    GoodCurve none{{Station::vertex(0), Station::edge(0, 1), Station::vertex(1), Station::edge(1, 4), Station::vertex(4),
                    Station::edge(3, 4), Station::vertex(3), Station::edge(0, 3)},
                   true};
    CHECK_THROWS_AS(cut_closed_curve(g, none), Error);
}

TEST_CASE("curve from drawing") {
    auto g = k4_mid();
    Drawing d{{P(0, 2), P(2, -1), P(0, 0), P(-2, -1)}, {}};
    REQUIRE(verify_drawing(g, d).ok());
    auto c = curve_from_drawing(g, d, Line{0, 1, 0});
    REQUIRE(c.stations.size() == 5);
    CHECK(c.stations[0] == Station::cross(0, 1));
    CHECK(c.stations[2] == Station::vertex(2));
    CHECK(c.stations[4] == Station::cross(0, 3));
    auto r = validate_curve(g, c);
    CHECK(r.good);
    CHECK(r.proper);
    CHECK(r.vertex_count_on_curve == 1);
    auto miss = curve_from_drawing(g, d, Line{0, 1, 10});
    CHECK(miss.stations.empty());
    CHECK(validate_curve(g, miss).proper);
    // line through the edge 1-3
    auto along = curve_from_drawing(g, d, Line{0, 1, -1});
    CHECK(along.stations == std::vector<Station>{Station::vertex(1), Station::edge(1, 3), Station::vertex(3)});
    CHECK(validate_curve(g, along).proper);
}

TEST_CASE("property: random walks tally independently") {
    std::mt19937 rng(21);
    int checked = 0;
    for (int it = 0; it < 300; ++it) {
        auto g = testgen::random_stacked(rng, 4 + it % 8);
        auto c = testgen::random_curve(rng, g, 1 + it % 6);
        CurveReport r;
        try {
            r = validate_curve(g, c);
        } catch (const Error&) {
            continue;
        }
        ++checked;
        // independent tally straight from the definition
        std::map<Edge, int> t;
        std::set<Edge> cont;
        for (size_t i = 0; i < c.stations.size(); ++i) {
            auto& s = c.stations[i];
            if (s.kind == Station::Edge) cont.insert({s.a, s.b});
        }
        for (auto& e : g.edges()) {
            if (cont.count(e)) continue;
            int k = 0;
            for (auto& s : c.stations) {
                if (s.kind == Station::Cross && Edge{s.a, s.b} == e) ++k;
                if (s.kind == Station::Vertex && (s.a == e.first || s.a == e.second)) ++k;
            }
            if (k) t[e] = k;
        }
        std::map<Edge, int> got;
        for (auto& [e, k] : edge_tallies(g, c)) got[e] = k;
        CHECK(got == t);
        bool good = true;
        for (auto& [e, k] : t) good &= k <= 1;
        CHECK(r.good == good);
        if (r.good) {
            auto a = augment_with_curve(g, c);
            CHECK(a.h.n() - a.h.m() + a.h.num_faces() == 2);
        }
    }
    CHECK(checked > 100);
}
