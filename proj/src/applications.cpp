#include "collinear/applications.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "collinear/error.hpp"
#include "collinear/realize.hpp"
#include "collinear/three_tree.hpp"

namespace col {

namespace {

bool x_distinct(const std::vector<Pt>& pts, const Rotation& r) {
    std::vector<std::pair<Q, Pt>> xs;
    for (const auto& p : pts) xs.push_back({r.apply(p).x, p});
    std::sort(xs.begin(), xs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 0; i + 1 < xs.size(); ++i)
        if (xs[i].first == xs[i + 1].first && !(xs[i].second == xs[i + 1].second)) return false;
    return true;
}

// the 3-tree we draw in, its free collinear set and the labeling read off it
struct Frame {
    PlaneGraph t;
    LabelingOrder lab;
    std::vector<int> line;  // on-line vertices, left to right
    std::vector<int> slot;  // item index of each on-line vertex
};

Frame make_frame(const PlaneGraph& g) {
    PlaneGraph t = g;
    try {
        decompose(g);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Input) throw;
        t = augment_to_plane_3tree(g).g;
    }
    auto d = decompose(t);
    auto cb = build_curve_bundle(d);
    auto psi = curve_to_drawing(t, cb.lambda[cb.best()]);
    Frame f{t, labeling_from_drawing(t, psi), {}, {}};
    for (size_t i = 0; i < f.lab.order.size(); ++i)
        if (f.lab.order[i].v >= 0) {
            f.line.push_back(f.lab.order[i].v);
            f.slot.push_back(static_cast<int>(i));
        }
    return f;
}

// Draw the frame with on-line vertex k (for k in want) exactly at want[k],
// given in rotated coordinates with x increasing in k, then rotate back.
Drawing draw_frame(Frame& f, const PlaneGraph& g, const std::map<int, Pt>& want, const Rotation& rot) {
    const size_t items = f.lab.order.size();
    std::vector<std::pair<int, Q>> anchors;  // item index, x
    for (auto& [k, p] : want) anchors.push_back({f.slot[k], p.x});
    std::vector<Q> xs(items);
    if (anchors.empty()) {
        for (size_t i = 0; i < items; ++i) xs[i] = Q(static_cast<long>(i));
    } else {
        for (size_t i = 0; i < items; ++i) {
            int ii = static_cast<int>(i);
            auto hi = std::lower_bound(anchors.begin(), anchors.end(), ii,
                                       [](const auto& a, int v) { return a.first < v; });
            if (hi != anchors.end() && hi->first == ii) {
                xs[i] = hi->second;
            } else if (hi == anchors.begin()) {
                xs[i] = hi->second - (hi->first - ii);
            } else if (hi == anchors.end()) {
                auto lo = std::prev(hi);
                xs[i] = lo->second + (ii - lo->first);
            } else {
                auto lo = std::prev(hi);
                Q t(ii - lo->first, hi->first - lo->first);
                t.canonicalize();
                xs[i] = lo->second + t * (hi->second - lo->second);
            }
        }
    }
    set_targets(f.lab, xs);
    auto d = place_free(f.t, f.lab);
    std::map<int, Q> ny;
    for (auto& [k, p] : want) ny[f.line[k]] = p.y;
    d = lift_designated(f.t, d, f.lab.line_y, ny);
    Drawing out;
    for (const auto& p : d.coords) out.coords.push_back(rot.undo(p));
    auto rep = verify_drawing(g, out);
    if (!rep.ok()) throw verify_error("drawing", "placement failed verification: " + rep.summary());
    return out;
}

}  // namespace

Rotation separating_rotation(const std::vector<Pt>& pts) {
    if (x_distinct(pts, Rotation{})) return {};
    for (long m = 2;; ++m)
        for (long k = 1; k < m; ++k) {
            if (std::gcd(m, k) != 1 || (m - k) % 2 == 0) continue;
            Q a(m * m - k * k), b(2 * m * k), c(m * m + k * k);
            for (auto r : {Rotation{a / c, b / c}, Rotation{b / c, a / c}})
                if (x_distinct(pts, r)) return r;
        }
}

int point_bound(int n) { return n <= 3 ? 0 : (n - 3 + 7) / 8; }

std::vector<int> longest_increasing(const std::vector<Q>& xs) {
    std::vector<int> tail, prev(xs.size(), -1);  // tail[l]: index ending the best run of length l + 1
    for (size_t i = 0; i < xs.size(); ++i) {
        auto it = std::lower_bound(tail.begin(), tail.end(), xs[i], [&](int j, const Q& x) { return xs[j] < x; });
        if (it != tail.begin()) prev[i] = *std::prev(it);
        if (it == tail.end()) tail.push_back(static_cast<int>(i));
        else *it = static_cast<int>(i);
    }
    std::vector<int> out;
    for (int i = tail.empty() ? -1 : tail.back(); i >= 0; i = prev[i]) out.push_back(i);
    std::reverse(out.begin(), out.end());
    return out;
}

Placement universal_placement(const PlaneGraph& g, const PointSet& p) {
    const int k = static_cast<int>(p.points.size());
    if (k > point_bound(g.n()))
        throw input_error("points", std::to_string(k) + " points exceed the bound " + std::to_string(point_bound(g.n())) +
                                        " for n = " + std::to_string(g.n()));
    auto sorted = p.points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw input_error("points", "repeated point");
    auto rot = separating_rotation(p.points);
    auto f = make_frame(g);
    if (static_cast<int>(f.line.size()) < k)
        throw internal_error("free collinear set has " + std::to_string(f.line.size()) + " vertices, need " +
                             std::to_string(k));
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Pt> rp;
    for (const auto& q : p.points) rp.push_back(rot.apply(q));
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return rp[a].x < rp[b].x; });
    std::map<int, Pt> want;
    Placement out;
    out.vertex_of_point.assign(k, -1);
    for (int i = 0; i < k; ++i) {
        want[i] = rp[idx[i]];
        out.vertex_of_point[idx[i]] = f.line[i];
    }
    out.drawing = draw_frame(f, g, want, rot);
    for (int i = 0; i < k; ++i)
        if (!(out.drawing.coords[out.vertex_of_point[i]] == p.points[i]))
            throw verify_error("points", "point " + std::to_string(i) + " missed");
    return out;
}

UntangleResult untangle(const PlaneGraph& g, const std::vector<Pt>& bad) {
    if (static_cast<int>(bad.size()) != g.n()) throw input_error("drawing", "coordinate count differs from graph");
    auto f = make_frame(g);
    std::vector<Pt> on;
    for (int v : f.line) on.push_back(bad[v]);
    auto rot = separating_rotation(on);
    std::vector<Q> xs, neg;
    for (const auto& q : on) {
        xs.push_back(rot.apply(q).x);
        neg.push_back(-xs.back());
    }
    auto inc = longest_increasing(xs), dec = longest_increasing(neg);
    if (dec.size() > inc.size()) {
        // half turn: decreasing becomes increasing
        rot = Rotation{-rot.c, -rot.s};
        inc = dec;
    }
    std::map<int, Pt> want;
    UntangleResult out;
    for (int k : inc) {
        want[k] = rot.apply(on[k]);
        out.fixed.push_back(f.line[k]);
    }
    out.drawing = draw_frame(f, g, want, rot);
    out.line_order = f.line;
    out.axis = rot;
    for (int v : out.fixed)
        if (!(out.drawing.coords[v] == bad[v])) throw verify_error("drawing", "fixed vertex " + std::to_string(v) + " moved");
    std::sort(out.fixed.begin(), out.fixed.end());
    return out;
}

}  // namespace col
