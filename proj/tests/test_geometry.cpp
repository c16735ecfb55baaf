#include <random>

#include "collinear/drawing.hpp"
#include "collinear/error.hpp"
#include "collinear/linsolve.hpp"
#include "doctest.h"

using namespace col;

static Pt P(long x, long y) { return Pt{Q(x), Q(y)}; }
static Q R(long a, long b) {
    Q q(a, b);
    q.canonicalize();
    return q;
}

TEST_CASE("orientation filter agrees with exact arithmetic") {
    std::mt19937 rng(3);
    for (int i = 0; i < 2000; ++i) {
        auto r = [&] { return R(static_cast<long>(rng() % 2001) - 1000, 1 + rng() % 7); };
        Pt a{r(), r()}, b{r(), r()}, c{r(), r()};
        if (i % 3 == 0) c = Pt{a.x + 2 * (b.x - a.x), a.y + 2 * (b.y - a.y)};  // forced collinear
        CHECK(orient(a, b, c) == orient_exact(a, b, c));
    }
    // nearly degenerate: tiny offsets on huge coordinates
    Pt a{Q(1) / 3, Q(1) / 3}, b{Q(1000000007), Q(1000000007)};
    Pt c{Q(2000000014), Q(2000000014) + R(1, 1000000000)};
    CHECK(orient(a, b, c) == 1);
}

TEST_CASE("rational io") {
    CHECK(parse_q("3") == Q(3));
    CHECK(parse_q("-6/4") == Q(-3, 2));
    CHECK(fmt_q(Q(-3, 2)) == "-3/2");
    CHECK_THROWS_AS(parse_q("1/0"), Error);
    CHECK_THROWS_AS(parse_q("x"), Error);
    Drawing d{{P(0, 0), Pt{Q(1, 2), Q(-7, 3)}}, {1}};
    auto e = parse_drawing(serialize(d));
    CHECK(e.coords == d.coords);
    CHECK(e.designated == d.designated);
}

TEST_CASE("verify_drawing") {
    auto g = k4_graph();
    Drawing d{{P(0, 2), P(2, -1), P(-2, -1), P(0, 0)}, {}};
    auto r = verify_drawing(g, d);
    CHECK(r.ok());
    Drawing mirrored = d;
    for (auto& p : mirrored.coords) p.y = -p.y;
    auto rm = verify_drawing(g, mirrored);
    CHECK(rm.planar);
    CHECK(!rm.rotation_ok);
    // vertex 3 dragged outside makes (0,1) and (2,3) cross
    Drawing bad = d;
    bad.coords[3] = P(4, 2);
    CHECK(!verify_drawing(g, bad).planar);
    // the 4-cycle drawn with inner face outside: outer check fails
    auto c = cycle_graph(4);
    Drawing sq{{P(0, 0), P(1, 0), P(1, 1), P(0, 1)}, {}};  // counter-clockwise labelling
    auto rc = verify_drawing(c, sq);
    CHECK(!rc.outer_ok);
    Drawing sq2{{P(0, 0), P(1, 0), P(1, -1), P(0, -1)}, {0, 1}};
    CHECK(verify_drawing(c, sq2).ok());
    sq2.designated = {0, 1, 2};
    CHECK(!verify_drawing(c, sq2).collinear_ok);
}

TEST_CASE("exact sparse solver matches dense elimination") {
    std::mt19937 rng(5);
    for (int it = 0; it < 20; ++it) {
        int n = 2 + it % 9;
        SparseSystem s(n, 2);
        std::vector<std::vector<Q>> A(n, std::vector<Q>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) {
                    Q w = R(1 + rng() % 5, 1 + rng() % 3);
                    A[i][j] -= w, A[j][i] -= w, A[i][i] += w, A[j][j] += w;
                }
        for (int i = 0; i < n; ++i) {
            A[i][i] += R(1 + rng() % 4, 2);
            for (int j = 0; j < n; ++j)
                if (A[i][j] != 0) s.add(i, j, A[i][j]);
            s.rhs[i][0] = Q(static_cast<long>(rng() % 11) - 5);
            s.rhs[i][1] = R(rng() % 7, 3);
        }
        auto x = solve_exact(s);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < 2; ++k) {
                Q acc = 0;
                for (int j = 0; j < n; ++j) acc += A[i][j] * x[j][k];
                CHECK(acc == s.rhs[i][k]);
            }
        auto xd = solve_double(s);
        REQUIRE(!xd.empty());
        for (int i = 0; i < n; ++i) CHECK(xd[i][0] == doctest::Approx(x[i][0].get_d()));
    }
}

namespace {

// closed segments share a point, all in rationals with no filter
bool touch_oracle(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    auto cross = [](const Pt& p, const Pt& q, const Pt& r) { return sgn((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)); };
    auto box = [](const Pt& p, const Pt& q, const Pt& r) {
        return std::min(q.x, r.x) <= p.x && p.x <= std::max(q.x, r.x) && std::min(q.y, r.y) <= p.y &&
               p.y <= std::max(q.y, r.y);
    };
    int o1 = cross(a, b, c), o2 = cross(a, b, d), o3 = cross(c, d, a), o4 = cross(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return (o1 == 0 && box(c, a, b)) || (o2 == 0 && box(d, a, b)) || (o3 == 0 && box(a, c, d)) ||
           (o4 == 0 && box(b, c, d));
}

}  // namespace

TEST_CASE("property: cached segment test agrees with rational arithmetic") {
    std::mt19937 rng(8);
    Q tiny = R(1, 1000000007);
    tiny *= tiny;
    for (int i = 0; i < 4000; ++i) {
        auto r = [&] { return R(static_cast<long>(rng() % 21) - 10, 1 + rng() % 3); };
        Pt a{r(), r()}, b{r(), r()}, c{r(), r()}, d{r(), r()};
        // touching ends, collinear overlaps and near misses
        if (i % 4 == 1) c = Pt{a.x + (b.x - a.x) * R(rng() % 5, 4), a.y + (b.y - a.y) * R(rng() % 5, 4)};
        if (i % 4 == 2) d = Pt{a.x + (b.x - a.x) * R(rng() % 9, 4), a.y + (b.y - a.y) * R(rng() % 9, 4)};
        if (i % 4 == 3) c = Pt{b.x + tiny * static_cast<long>(rng() % 3) - tiny, b.y + tiny * static_cast<long>(rng() % 3) - tiny};
        bool want = touch_oracle(a, b, c, d);
        CHECK(segments_touch(CachedPt(a), CachedPt(b), CachedPt(c), CachedPt(d)) == want);
        CHECK(segments_touch(a, b, c, d) == want);
    }
}

TEST_CASE("refinement converges to the exact solution") {
    std::mt19937 rng(12);
    for (int it = 0; it < 15; ++it) {
        int n = 3 + it;
        SparseSystem s(n, 2);
        // path Laplacian with widely spread weights plus a grounded end
        for (int i = 0; i + 1 < n; ++i) {
            Q w = R(1, 1 + static_cast<long>(rng() % 1000)) * R(1 + static_cast<long>(rng() % 1000), 1);
            s.add(i, i + 1, -w), s.add(i + 1, i, -w), s.add(i, i, w), s.add(i + 1, i + 1, w);
        }
        s.add(0, 0, R(1, 3));
        for (int i = 0; i < n; ++i) s.rhs[i][0] = R(static_cast<long>(rng() % 7), 1 + rng() % 5), s.rhs[i][1] = i;
        auto x = solve_exact(s);
        int rounds = 0;
        auto y = solve_refined(s, 60, [&](const std::vector<std::vector<Q>>& z) {
            ++rounds;
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < 2; ++k)
                    if (abs(z[i][k] - x[i][k]) > R(1, 1000000) * R(1, 1000000) * R(1, 1000000)) return false;
            return true;
        });
        REQUIRE(!y.empty());
        CHECK(rounds <= 10);
        // never asked to stop: empty result
        CHECK(solve_refined(s, 3, [](const auto&) { return false; }).empty());
    }
}
