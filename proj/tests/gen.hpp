#pragma once
// Hand-rolled random generators shared by the property tests.

#include <array>
#include <random>
#include <vector>

#include "collinear/plane_graph.hpp"

namespace testgen {

using col::PlaneGraph;

// random plane 3-tree on n >= 3 vertices, outer 0 2 1
inline PlaneGraph random_stacked(std::mt19937& rng, int n) {
    std::vector<std::vector<int>> rot = {{1, 2}, {2, 0}, {0, 1}};
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}};
    while (static_cast<int>(rot.size()) < n) {
        size_t i = rng() % faces.size();
        auto [a, b, c] = faces[i];
        int w = col::stack_vertex(rot, a, b, c);
        faces[i] = {a, b, w};
        faces.push_back({b, c, w});
        faces.push_back({c, a, w});
    }
    return PlaneGraph(rot, {0, 2, 1});
}

// random biconnected plane graph: a stacked triangulation with random edge
// deletions that keep it biconnected
inline PlaneGraph random_biconnected(std::mt19937& rng, int n) {
    PlaneGraph g = random_stacked(rng, n);
    int tries = g.m();
    while (tries-- > 0) {
        auto es = g.edges();
        auto e = es[rng() % es.size()];
        std::vector<int> vs(g.n());
        for (int i = 0; i < g.n(); ++i) vs[i] = i;
        std::vector<col::Edge> keep;
        for (auto& f : es)
            if (f != e) keep.push_back(f);
        try {
            auto x = col::extract_subgraph(g, vs, keep);
            if (col::is_biconnected(x.g)) g = x.g;
        } catch (...) {
        }
    }
    return g;
}

}  // namespace testgen

#include "collinear/curves.hpp"

namespace testgen {

// random station walk: hop through faces between random boundary points
inline col::GoodCurve random_curve(std::mt19937& rng, const PlaneGraph& g, int hops) {
    using col::Station;
    col::GoodCurve c;
    auto point_on = [&](int f) {
        const auto& ds = g.face_darts(f);
        int d = ds[rng() % ds.size()];
        if (rng() % 2) return Station::vertex(g.tail(d));
        return Station::cross(g.tail(d), g.head(d));
    };
    int f = rng() % g.num_faces();
    if (rng() % 3 == 0) c.stations.push_back(Station::hop(g.face_key(f)));
    Station p = point_on(f);
    c.stations.push_back(p);
    for (int i = 0; i < hops; ++i) {
        // faces incident to the current point
        std::vector<int> fs;
        if (p.kind == Station::Vertex) {
            for (int w : g.rot(p.a)) fs.push_back(g.face_of(g.dart(p.a, w)));
            if (rng() % 4 == 0) {
                int w = g.rot(p.a)[rng() % g.degree(p.a)];
                c.stations.push_back(Station::edge(p.a, w));
                p = Station::vertex(w);
                c.stations.push_back(p);
                continue;
            }
        } else {
            auto [l, r] = g.edge_faces(p.a, p.b);
            fs = {l, r};
        }
        int nf = fs[rng() % fs.size()];
        c.stations.push_back(Station::hop(g.face_key(nf)));
        p = point_on(nf);
        c.stations.push_back(p);
    }
    if (rng() % 3 == 0) {
        int nf = p.kind == Station::Vertex ? g.face_of(g.dart(p.a, g.rot(p.a)[0])) : g.edge_faces(p.a, p.b).first;
        c.stations.push_back(Station::hop(g.face_key(nf)));
    }
    return c;
}

}  // namespace testgen

#include "collinear/realize.hpp"

namespace testgen {

// stacked triangulation drawn by Tutte's method on a convex outer triangle,
// then thinned by edge deletions that keep it biconnected; the drawing stays valid
struct Drawn {
    PlaneGraph g;
    col::Drawing d;
};

inline Drawn random_drawn(std::mt19937& rng, int n, int deletions) {
    using col::Pt;
    using col::Q;
    PlaneGraph g = random_stacked(rng, n);
    auto w = g.outer_walk();
    std::vector<Pt> poly;
    for (size_t i = 0; i < w.size(); ++i) poly.push_back(Pt{Q(static_cast<long>(i)), Q(-static_cast<long>(i * i))});
    auto d = col::tutte_convex(g, poly, {});
    while (deletions-- > 0) {
        auto es = g.edges();
        auto e = es[rng() % es.size()];
        std::vector<int> vs(g.n());
        for (int i = 0; i < g.n(); ++i) vs[i] = i;
        std::vector<col::Edge> keep;
        for (auto& f : es)
            if (f != e) keep.push_back(f);
        try {
            auto x = col::extract_subgraph(g, vs, keep);
            if (col::is_biconnected(x.g)) g = x.g;
        } catch (...) {
        }
    }
    return {g, d};
}

// a line through two vertices, one vertex, or none
inline col::Line random_line(std::mt19937& rng, const Drawn& x) {
    using col::Pt;
    using col::Q;
    auto rnd = [&]() {
        Q lo = x.d.coords[0].x, hi = lo, ylo = x.d.coords[0].y, yhi = ylo;
        for (auto& p : x.d.coords) {
            lo = std::min(lo, p.x), hi = std::max(hi, p.x);
            ylo = std::min(ylo, p.y), yhi = std::max(yhi, p.y);
        }
        Q s(static_cast<long>(rng() % 997), 997L), t(static_cast<long>(rng() % 991), 991L);
        s.canonicalize();
        t.canonicalize();
        return Pt{Q(lo + s * (hi - lo)), Q(ylo + t * (yhi - ylo))};
    };
    int n = x.g.n();
    Pt p = rng() % 4 ? x.d.coords[rng() % n] : rnd();
    Pt q = rng() % 3 ? x.d.coords[rng() % n] : rnd();
    if (p == q) q = rnd();
    // through p and q: a x + b y = c
    Q a = q.y - p.y, b = p.x - q.x;
    Q c = a * p.x + b * p.y;
    return {a, b, c};
}

}  // namespace testgen
