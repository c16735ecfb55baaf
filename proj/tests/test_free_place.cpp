#include <algorithm>
#include <map>
#include <random>

#include "collinear/drawing.hpp"
#include "collinear/error.hpp"
#include "collinear/realize.hpp"
#include "collinear/three_tree.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace col;

namespace {

// crossing of segment ab with y = 0, computed from the parametrisation
Q cross_x(const Pt& a, const Pt& b) {
    Q t = a.y / (a.y - b.y);
    return a.x + t * (b.x - a.x);
}

char label_of(const Q& y) { return y > 0 ? '^' : y < 0 ? 'v' : '='; }

// every label kept and every item at its target
bool honours(const PlaneGraph& g, const LabelingOrder& lab, const Drawing& d) {
    for (int v = 0; v < g.n(); ++v)
        if (label_of(d.coords[v].y) != lab.labels[v]) return false;
    for (size_t i = 0; i < lab.order.size(); ++i) {
        const auto& it = lab.order[i];
        if (it.v >= 0) {
            if (d.coords[it.v].x != lab.target_x[i] || d.coords[it.v].y != 0) return false;
        } else if (cross_x(d.coords[it.e.first], d.coords[it.e.second]) != lab.target_x[i]) {
            return false;
        }
    }
    return true;
}

std::vector<Q> random_increasing(std::mt19937& rng, size_t k) {
    std::vector<Q> xs;
    Q x = Q(static_cast<long>(rng() % 7)) - 3;
    for (size_t i = 0; i < k; ++i) {
        Q step(static_cast<long>(1 + rng() % 9), static_cast<long>(1 + rng() % 5));
        step.canonicalize();
        x += step;
        xs.push_back(x);
    }
    return xs;
}

Drawing best_curve_drawing(const PlaneGraph& g) {
    auto d = decompose(g);
    auto cb = build_curve_bundle(d);
    return curve_to_drawing(g, cb.lambda[cb.best()]);
}

}  // namespace

TEST_CASE("K4 with the inner vertex on the line") {
    auto g = k4_graph();
    // apex 0 above, 1 and 2 below, inner vertex 3 on the line
    Drawing psi{{{0, 3}, {3, -2}, {-3, -2}, {0, 0}}, {}};
    REQUIRE(verify_drawing(g, psi).ok());
    auto lab = labeling_from_drawing(g, psi);
    CHECK(lab.S == std::vector<int>{3});
    CHECK(lab.E.size() == 2);
    REQUIRE(lab.order.size() == 3);
    CHECK(lab.order[1].v == 3);
    set_targets(lab, {Q(-10), Q(1, 3), Q(50)});
    auto d = place_free(g, lab);
    CHECK(verify_drawing(g, d).ok());
    CHECK(honours(g, lab, d));
    CHECK(d.coords[3] == Pt{Q(1, 3), 0});
}

TEST_CASE("targets are validated") {
    auto g = k4_graph();
    auto lab = labeling_from_drawing(g, best_curve_drawing(g));
    std::vector<Q> xs(lab.order.size(), Q(1));
    if (xs.size() >= 2) CHECK_THROWS_AS(set_targets(lab, xs), Error);
    xs.push_back(5);
    CHECK_THROWS_AS(set_targets(lab, xs), Error);
}

TEST_CASE("property: free placement hits every target on random 3-trees") {
    std::mt19937 rng(41);
    for (int it = 0; it < 60; ++it) {
        int n = 4 + static_cast<int>(rng() % 40);
        auto g = testgen::random_stacked(rng, n);
        auto psi = best_curve_drawing(g);
        auto lab = labeling_from_drawing(g, psi);
        std::vector<Q> unit;
        for (size_t i = 0; i < lab.order.size(); ++i) unit.push_back(Q(static_cast<long>(i + 1)));
        for (auto xs : {unit, random_increasing(rng, lab.order.size())}) {
            set_targets(lab, xs);
            auto d = place_free(g, lab);
            auto rep = verify_drawing(g, d);
            CHECK_MESSAGE(rep.ok(), rep.summary());
            CHECK(honours(g, lab, d));
            CHECK(d.designated == lab.S);
        }
    }
}

TEST_CASE("inconsistent labels are refused") {
    std::mt19937 rng(3);
    int refused = 0;
    for (int it = 0; it < 40; ++it) {
        auto g = testgen::random_stacked(rng, 6 + it % 10);
        auto lab = labeling_from_drawing(g, best_curve_drawing(g));
        if (lab.order.size() < 2) continue;
        // swapping two items of the order breaks it unless they commute
        std::swap(lab.order.front(), lab.order.back());
        try {
            auto d = place_free(g, lab);
            // accepted only if the result is still a correct drawing honouring the swap
            CHECK(verify_drawing(g, d).ok());
            CHECK(honours(g, lab, d));
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Input);
            ++refused;
        }
    }
    CHECK(refused > 0);
    // all outer vertices on the line
    auto g = k4_graph();
    LabelingOrder lab;
    lab.labels = {'=', '=', '=', '^'};
    lab.S = {0, 1, 2};
    lab.order = {{0, {-1, -1}}, {1, {-1, -1}}, {2, {-1, -1}}};
    lab.target_x = {1, 2, 3};
    CHECK_THROWS_AS(place_free(g, lab), Error);
}

TEST_CASE("property: lifting designated vertices keeps the drawing planar") {
    std::mt19937 rng(8);
    for (int it = 0; it < 40; ++it) {
        auto g = testgen::random_stacked(rng, 5 + static_cast<int>(rng() % 30));
        auto psi = best_curve_drawing(g);
        std::map<int, Q> ny;
        for (int v : psi.designated) {
            Q y(static_cast<long>(rng() % 21) - 10, static_cast<long>(1 + rng() % 4));
            y.canonicalize();
            ny[v] = y;
        }
        auto d = lift_designated(g, psi, 0, ny);
        CHECK(d.designated.empty());
        CHECK(verify_drawing(g, d).ok());
        for (int v = 0; v < g.n(); ++v) CHECK(d.coords[v].x == psi.coords[v].x);
        // lifted vertices keep their order by new height relative to each other
        for (auto& [u, yu] : ny)
            for (auto& [v, yv] : ny)
                if (yu < yv) CHECK(d.coords[u].y < d.coords[v].y);
    }
}
