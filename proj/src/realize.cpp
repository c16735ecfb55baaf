#include "collinear/realize.hpp"

#include <algorithm>
#include <functional>

#include "collinear/curves.hpp"
#include "collinear/error.hpp"

namespace col {

namespace {

Q from_ld(long double v) {
    double hi = static_cast<double>(v);
    double lo = static_cast<double>(v - static_cast<long double>(hi));
    return Q(hi) + Q(lo);
}

// nearest multiple of 2^-bits
Q snap_to(const Q& v, unsigned bits) {
    mpz_class t = v.get_num();
    t <<= bits;
    t += v.get_den() / 2;
    mpz_fdiv_q(t.get_mpz_t(), t.get_mpz_t(), v.get_den().get_mpz_t());
    Q r(t, mpz_class(1) << bits);
    r.canonicalize();
    return r;
}

size_t bit_size(const Q& v) {
    return std::max(mpz_sizeinbase(v.get_num_mpz_t(), 2), mpz_sizeinbase(v.get_den_mpz_t(), 2));
}

}  // namespace

std::vector<Pt> convex_combination(const PlaneGraph& g, const std::vector<const Pt*>& fixed, const WeightFn& w,
                                   const std::function<bool(const std::vector<Pt>&)>& accept, const SolveOptions& opt,
                                   bool snap) {
    const int n = g.n();
    std::vector<int> idx(n, -1), var;
    for (int v = 0; v < n; ++v)
        if (!fixed[v]) idx[v] = static_cast<int>(var.size()), var.push_back(v);
    const int k = static_cast<int>(var.size());
    SparseSystem sys(k, 2);
    for (int i = 0; i < k; ++i) {
        int v = var[i];
        Q diag = 0;
        for (int u : g.rot(v)) {
            Q wt = w ? w(v, u) : Q(1);
            if (wt <= 0) throw internal_error("convex_combination: non-positive weight");
            diag += wt;
            if (idx[u] >= 0) {
                sys.add(i, idx[u], -wt);
            } else {
                sys.rhs[i][0] += wt * fixed[u]->x;
                sys.rhs[i][1] += wt * fixed[u]->y;
            }
        }
        if (diag == 0) throw internal_error("convex_combination: isolated free vertex");
        sys.add(i, i, diag);
    }
    auto assemble = [&](auto getter) {
        std::vector<Pt> p(n);
        for (int v = 0; v < n; ++v)
            if (fixed[v]) p[v] = *fixed[v];
        for (int i = 0; i < k; ++i) p[var[i]] = getter(i);
        return p;
    };
    bool exact_first = opt.mode == SolveMode::Exact || (opt.mode == SolveMode::Auto && k <= opt.exact_limit);
    if (!exact_first) {
        auto xd = solve_double(sys);
        if (!xd.empty()) {
            auto p = assemble([&](int i) { return Pt{Q(xd[i][0]), Q(xd[i][1])}; });
            if (accept(p)) return p;
        }
        auto xl = solve_long_double(sys);
        if (!xl.empty()) {
            auto p = assemble([&](int i) { return Pt{from_ld(xl[i][0]), from_ld(xl[i][1])}; });
            if (accept(p)) return p;
        }
        std::vector<Pt> refined;
        solve_refined(sys, 40, [&](const std::vector<std::vector<Q>>& x) {
            auto p = assemble([&](int i) { return Pt{x[i][0], x[i][1]}; });
            if (!accept(p)) return false;
            refined = std::move(p);
            return true;
        });
        if (!refined.empty()) return refined;
        if (opt.mode == SolveMode::Float) throw verify_error("numeric", "floating-point solution failed exact validation");
    }
    auto xe = solve_exact(sys);
    auto p = assemble([&](int i) { return Pt{xe[i][0], xe[i][1]}; });
    if (snap) {
        size_t widest = 0;
        for (int v : var) widest = std::max({widest, bit_size(p[v].x), bit_size(p[v].y)});
        for (unsigned bits = 64; bits < widest; bits *= 2) {
            auto r = p;
            for (int v : var) r[v] = Pt{snap_to(p[v].x, bits), snap_to(p[v].y, bits)};
            if (accept(r)) return r;
        }
    }
    if (!accept(p)) throw verify_error("numeric", "exact convex-combination solution failed validation");
    return p;
}

Drawing tutte_convex(const PlaneGraph& g, const std::vector<Pt>& polygon, const SolveOptions& opt) {
    const auto& ow = g.outer_walk();
    if (polygon.size() != ow.size()) throw input_error("tutte", "polygon size differs from outer walk length");
    if (!g.outer_is_simple_cycle()) throw input_error("tutte", "outer boundary is not a simple cycle");
    // convexity: clockwise walk, so every turn is clockwise or straight, and not all straight
    int k = static_cast<int>(ow.size()), strict = 0;
    for (int i = 0; i < k; ++i) {
        int o = orient(polygon[i], polygon[(i + 1) % k], polygon[(i + 2) % k]);
        if (o > 0) throw input_error("tutte", "outer polygon not convex in clockwise order");
        if (o < 0) ++strict;
    }
    if (strict < 3) throw input_error("tutte", "outer polygon degenerate");
    std::vector<const Pt*> fixed(g.n(), nullptr);
    for (int i = 0; i < k; ++i) fixed[ow[i]] = &polygon[i];
    Drawing d;
    d.coords = convex_combination(g, fixed, nullptr, [&](const std::vector<Pt>& p) {
        return verify_drawing(g, Drawing{p, {}}).ok();
    }, opt);
    return d;
}

bool triangles_positive(const PlaneGraph& t, const std::vector<Pt>& p) {
    for (int f = 0; f < t.num_faces(); ++f) {
        if (f == t.outer_face()) continue;
        auto vs = t.face_vertices(f);
        if (vs.size() != 3) return false;
        if (orient(p[vs[0]], p[vs[1]], p[vs[2]]) <= 0) return false;
    }
    return true;
}

std::vector<Pt> straighten_preserving_y(const PlaneGraph& t, const std::vector<Q>& y, const std::vector<Pt>& outer_pos,
                                        const SolveOptions& opt) {
    const auto& ow = t.outer_walk();
    std::vector<const Pt*> fixed(t.n(), nullptr);
    for (size_t i = 0; i < ow.size(); ++i) fixed[ow[i]] = &outer_pos[i];
    std::vector<int> above(t.n(), 0), below(t.n(), 0);
    for (int v = 0; v < t.n(); ++v) {
        if (fixed[v]) continue;
        for (int u : t.rot(v)) {
            int s = sgn(y[u] - y[v]);
            if (s > 0) ++above[v];
            if (s < 0) ++below[v];
        }
        if ((above[v] == 0) != (below[v] == 0))
            throw input_error("straighten", "vertex " + std::to_string(v) + " has neighbours on one side only");
    }
    auto weight = [&](int v, int u) -> Q {
        Q dy = y[u] - y[v];
        int s = sgn(dy);
        if (s > 0) return 1 / (above[v] * dy);
        if (s < 0) return 1 / (below[v] * -dy);
        return 1;
    };
    auto p = convex_combination(t, fixed, weight, [&](const std::vector<Pt>& q) {
        std::vector<Pt> r = q;
        for (int v = 0; v < t.n(); ++v)
            if (!fixed[v]) r[v].y = y[v];
        return triangles_positive(t, r);
    }, opt, true);
    for (int v = 0; v < t.n(); ++v)
        if (!fixed[v]) p[v].y = y[v];
    return p;
}


// ------------------------------------------------------------------ curve -> drawing

namespace {

// insert x into rot[v] right after neighbour p
void insert_after(std::vector<std::vector<int>>& rot, int v, int p, const std::vector<int>& xs) {
    auto it = std::find(rot[v].begin(), rot[v].end(), p);
    if (it == rot[v].end()) throw internal_error("insert_after: missing neighbour");
    rot[v].insert(it + 1, xs.begin(), xs.end());
}

void replace_nb(std::vector<std::vector<int>>& rot, int v, int old, int now) {
    auto it = std::find(rot[v].begin(), rot[v].end(), old);
    if (it == rot[v].end()) throw internal_error("replace_nb: missing neighbour");
    *it = now;
}

// hang a new leaf into the outer face of g at the first outer corner of v
int add_outer_leaf(std::vector<std::vector<int>>& rot, const PlaneGraph& g, int v) {
    auto w = g.face_vertices(g.outer_face());
    int k = static_cast<int>(w.size());
    for (int i = 0; i < k; ++i)
        if (w[i] == v) {
            int leaf = static_cast<int>(rot.size());
            rot.push_back({v});
            if (k == 1) rot[v].push_back(leaf);
            else insert_after(rot, v, w[(i + k - 1) % k], {leaf});
            return leaf;
        }
    throw internal_error("add_outer_leaf: vertex not on outer face");
}

// triangulate every face except skip: star for simple faces, ring + centre otherwise
void triangulate_faces(std::vector<std::vector<int>>& rot, const PlaneGraph& g, int skip) {
    for (int f = 0; f < g.num_faces(); ++f) {
        if (f == skip) continue;
        auto w = g.face_vertices(f);
        int L = static_cast<int>(w.size());
        if (L <= 3 && g.face_simple(f)) continue;
        if (g.face_simple(f)) {
            int c = static_cast<int>(rot.size());
            rot.push_back(std::vector<int>(w.rbegin(), w.rend()));
            for (int i = 0; i < L; ++i) insert_after(rot, w[i], w[(i + L - 1) % L], {c});
        } else {
            int base = static_cast<int>(rot.size());
            int c = base + L;
            rot.resize(base + L + 1);
            auto r = [&](int i) { return base + ((i % L) + L) % L; };
            for (int i = 0; i < L; ++i) rot[r(i)] = {w[i], r(i - 1), c, r(i + 1), w[(i + 1) % L]};
            for (int i = L - 1; i >= 0; --i) rot[c].push_back(r(i));
            for (int i = 0; i < L; ++i) insert_after(rot, w[i], w[(i + L - 1) % L], {r(i - 1), r(i)});
        }
    }
}

struct Pipeline {
    std::vector<Pt> pos;  // over the final triangulation
    int n_orig;
};

Pipeline run_pipeline(const PlaneGraph& g, const GoodCurve& c, const SolveOptions& opt) {
    Augmented A = augment_with_curve(g, c);
    if (!A.proper) throw input_error("curve", "curve is not proper");
    std::vector<std::vector<int>> rot = A.h.rotations();
    std::vector<int> path = A.path;
    PlaneGraph cur = A.h;
    if (path.size() == 1 && !A.sub_vertex.empty() && path[0] == A.sub_vertex[0]) {
        // a lone crossing: the line must pass from one side of the edge to the other
        auto [x, y] = A.subdivided[0];
        auto [l, r] = g.edge_faces(x, y);
        if (l != r) throw input_error("curve", "a curve made of a single crossing must cross a bridge");
        int s = path[0];
        int la = static_cast<int>(rot.size()), lb = la + 1;
        rot.push_back({s});
        rot.push_back({s});
        insert_after(rot, s, x, {la});
        insert_after(rot, s, y, {lb});
        path = {la, s, lb};
        cur = PlaneGraph::with_outer_dart(rot, la, s);
    }
    bool a_leaf = A.a >= g.n() && cur.degree(A.a) == 1 && path.front() == A.a;
    if (!a_leaf) {
        int leaf = add_outer_leaf(rot, cur, path.front());
        path.insert(path.begin(), leaf);
        cur = PlaneGraph::with_outer_dart(rot, leaf, rot[leaf][0]);
    }
    bool b_leaf = A.b >= g.n() && cur.degree(A.b) == 1 && path.back() == A.b && path.size() > 1 && A.b != A.a;
    if (!b_leaf) {
        int leaf = add_outer_leaf(rot, cur, path.back());
        path.push_back(leaf);
        cur = PlaneGraph::with_outer_dart(rot, leaf, rot[leaf][0]);
    }
    const int a = path.front(), b = path.back();
    const int d1 = static_cast<int>(rot.size()), d2 = d1 + 1;
    rot.push_back({a, b});
    rot.push_back({a, b});
    rot[a] = {rot[a][0], d2, d1};
    rot[b] = {rot[b][0], d1, d2};
    PlaneGraph H(rot, {d2, a, d1, b});

    triangulate_faces(rot, H, H.outer_face());
    PlaneGraph T0(rot, {d2, a, d1, b});

    const int m = static_cast<int>(path.size());
    const Q Hgt(m);
    std::vector<Pt> fixed_store(T0.n());
    std::vector<const Pt*> fixed(T0.n(), nullptr);
    for (int i = 0; i < m; ++i) fixed_store[path[i]] = Pt{Q(i), Q(0)};
    Q mid(m - 1, 2);
    mid.canonicalize();
    fixed_store[d1] = Pt{mid, Hgt};
    fixed_store[d2] = Pt{mid, -Hgt};
    for (int v : path) fixed[v] = &fixed_store[v];
    fixed[d1] = &fixed_store[d1];
    fixed[d2] = &fixed_store[d2];
    auto p0 = convex_combination(T0, fixed, nullptr, [&](const std::vector<Pt>& p) { return triangles_positive(T0, p); }, opt, true);

    // replace each crossing point by the straight edge it subdivides
    std::vector<Q> y(T0.n());
    for (int v = 0; v < T0.n(); ++v) y[v] = p0[v].y;
    for (size_t k = 0; k < A.sub_vertex.size(); ++k) {
        int s = A.sub_vertex[k];
        auto [x, yv] = A.subdivided[k];
        std::vector<int> link = rot[s];
        int L = static_cast<int>(link.size());
        int ix = static_cast<int>(std::find(link.begin(), link.end(), x) - link.begin());
        int iy = static_cast<int>(std::find(link.begin(), link.end(), yv) - link.begin());
        if (ix == L || iy == L) throw internal_error("surgery: crossing point lost its edge");
        std::vector<int> polyA, polyB;
        for (int i = ix;; i = (i + 1) % L) {
            polyA.push_back(link[i]);
            if (i == iy) break;
        }
        for (int i = iy;; i = (i + 1) % L) {
            polyB.push_back(link[i]);
            if (i == ix) break;
        }
        int hA = -1, hB = -1;
        if (polyA.size() > 3) hA = static_cast<int>(rot.size()), rot.push_back(polyA), y.push_back(0);
        if (polyB.size() > 3) hB = static_cast<int>(rot.size()), rot.push_back(polyB), y.push_back(0);
        for (size_t i = 1; i + 1 < polyA.size(); ++i) {
            if (hA >= 0) replace_nb(rot, polyA[i], s, hA);
            else rot[polyA[i]].erase(std::find(rot[polyA[i]].begin(), rot[polyA[i]].end(), s));
        }
        for (size_t i = 1; i + 1 < polyB.size(); ++i) {
            if (hB >= 0) replace_nb(rot, polyB[i], s, hB);
            else rot[polyB[i]].erase(std::find(rot[polyB[i]].begin(), rot[polyB[i]].end(), s));
        }
        // at x: A side first, then y, then B side
        auto fix_end = [&](int v, int other, int first, int second) {
            std::vector<int> seq;
            if (first >= 0) seq.push_back(first);
            seq.push_back(other);
            if (second >= 0) seq.push_back(second);
            auto it = std::find(rot[v].begin(), rot[v].end(), s);
            it = rot[v].erase(it);
            rot[v].insert(it, seq.begin(), seq.end());
        };
        fix_end(x, yv, hA, hB);
        fix_end(yv, x, hB, hA);
        rot[s].clear();
    }
    // drop the emptied crossing vertices by relabelling
    std::vector<int> keep, newid(rot.size(), -1);
    for (size_t v = 0; v < rot.size(); ++v)
        if (!rot[v].empty()) newid[v] = static_cast<int>(keep.size()), keep.push_back(static_cast<int>(v));
    std::vector<std::vector<int>> rot2(keep.size());
    std::vector<Q> y2(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) {
        for (int w : rot[keep[i]]) rot2[i].push_back(newid[w]);
        y2[i] = y[keep[i]];
    }
    // only the order of the heights matters; ranks keep the weights small
    {
        std::vector<Q> sorted = y2;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        long zero = std::lower_bound(sorted.begin(), sorted.end(), Q(0)) - sorted.begin();
        for (auto& v : y2) v = Q(static_cast<long>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) - zero);
    }
    PlaneGraph T(rot2, {newid[d2], newid[a], newid[d1], newid[b]});
    std::vector<Pt> outer{Pt{mid, y2[newid[d2]]}, fixed_store[a], Pt{mid, y2[newid[d1]]}, fixed_store[b]};
    auto p = straighten_preserving_y(T, y2, outer, opt);
    Pipeline r;
    r.n_orig = g.n();
    r.pos.resize(g.n());
    for (int v = 0; v < g.n(); ++v) r.pos[v] = p[newid[v]];
    return r;
}

}  // namespace

Drawing curve_to_drawing(const PlaneGraph& g, const GoodCurve& c, const SolveOptions& opt) {
    GoodCurve cc = c;
    bool any_point = false;
    for (auto& s : c.stations) any_point |= s.is_point();
    if (c.closed) throw input_error("curve", "closed curves must be cut before drawing");
    if (!any_point) {
        if (!is_proper(g, c)) throw input_error("curve", "curve is not proper");
        cc = GoodCurve{{Station::vertex(g.outer_walk()[0])}, false};
    }
    Drawing d;
    if (g.n() == 1) {
        d.coords = {Pt{0, 0}};
    } else {
        auto attempt = [&](const SolveOptions& o) {
            Drawing r;
            r.coords = run_pipeline(g, cc, o).pos;
            return r;
        };
        try {
            d = attempt(opt);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Input || opt.mode == SolveMode::Exact) throw;
            d = attempt(SolveOptions{SolveMode::Exact, opt.exact_limit});
        }
    }
    if (any_point) {
        d.designated = c.vertices();
    } else if (g.n() > 1) {
        // lift the single vertex off the line
        Q eps = 0;
        for (auto& p : d.coords)
            if (p.y != 0 && (eps == 0 || abs(p.y) < eps)) eps = abs(p.y);
        eps /= 2;
        for (auto& p : d.coords) p.y += eps;
    }
    std::sort(d.designated.begin(), d.designated.end());
    auto rep = verify_drawing(g, d);
    if (!rep.ok()) throw verify_error("verify", "curve_to_drawing produced an invalid drawing: " + rep.summary());
    return d;
}

}  // namespace col
