#include <algorithm>
#include <map>
#include <sstream>

#include "collinear/error.hpp"
#include "collinear/realize.hpp"
#include "collinear/three_tree.hpp"

namespace col {

namespace {

int side(const Q& y, const Q& line) { return y > line ? 1 : y < line ? -1 : 0; }
int sign_of(char l) { return l == '^' ? 1 : l == 'v' ? -1 : 0; }

std::string tri(int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

LabelingOrder labeling_from_drawing(const PlaneGraph& g, const Drawing& psi, const Q& line_y) {
    if (static_cast<int>(psi.coords.size()) != g.n()) throw input_error("labeling", "drawing size differs from graph");
    LabelingOrder lab;
    lab.line_y = line_y;
    lab.labels.resize(g.n());
    std::vector<std::pair<Q, LabelingOrder::Item>> items;
    for (int v = 0; v < g.n(); ++v) {
        int s = side(psi.coords[v].y, line_y);
        lab.labels[v] = s > 0 ? '^' : s < 0 ? 'v' : '=';
        if (s == 0) {
            lab.S.push_back(v);
            items.push_back({psi.coords[v].x, {v, {-1, -1}}});
        }
    }
    for (auto [a, b] : g.edges()) {
        int sa = side(psi.coords[a].y, line_y), sb = side(psi.coords[b].y, line_y);
        if (sa * sb >= 0) continue;
        lab.E.push_back({a, b});
        items.push_back({x_at_height(psi.coords[a], psi.coords[b], line_y), {-1, {a, b}}});
    }
    std::stable_sort(items.begin(), items.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    for (size_t i = 0; i + 1 < items.size(); ++i)
        if (items[i].first == items[i + 1].first) throw input_error("labeling", "drawing is not planar on the line");
    for (auto& [x, it] : items) {
        lab.order.push_back(it);
        lab.target_x.push_back(x);
    }
    return lab;
}

void set_targets(LabelingOrder& lab, const std::vector<Q>& xs) {
    if (xs.size() != lab.order.size())
        throw input_error("labeling", "expected " + std::to_string(lab.order.size()) + " targets, got " +
                                          std::to_string(xs.size()));
    for (size_t i = 0; i + 1 < xs.size(); ++i)
        if (!(xs[i] < xs[i + 1])) throw input_error("labeling", "targets are not strictly increasing");
    lab.target_x = xs;
}

Drawing place_free(const PlaneGraph& g, const LabelingOrder& lab) {
    const int n = g.n();
    if (static_cast<int>(lab.labels.size()) != n) throw input_error("labeling", "label count differs from graph");
    if (lab.target_x.size() != lab.order.size()) throw input_error("labeling", "target count differs from order");
    for (size_t i = 0; i + 1 < lab.target_x.size(); ++i)
        if (!(lab.target_x[i] < lab.target_x[i + 1])) throw input_error("labeling", "targets are not strictly increasing");
    auto d = decompose(g);
    const Q& Y = lab.line_y;
    std::vector<int> qv(n, -1);
    std::map<Edge, int> qe;
    for (size_t i = 0; i < lab.order.size(); ++i) {
        const auto& it = lab.order[i];
        if (it.v >= 0) qv[it.v] = static_cast<int>(i);
        else qe[norm_edge(it.e.first, it.e.second)] = static_cast<int>(i);
    }
    auto qpt = [&](int i) { return Pt{lab.target_x[i], Y}; };
    auto q_vertex = [&](int v) -> Pt {
        if (qv[v] < 0) throw input_error("labeling", "vertex " + std::to_string(v) + " is on the line but has no target");
        return qpt(qv[v]);
    };
    auto q_edge = [&](int a, int b) -> Pt {
        auto it = qe.find(norm_edge(a, b));
        if (it == qe.end())
            throw input_error("labeling", "edge " + std::to_string(a) + "-" + std::to_string(b) + " crosses the line but has no target");
        return qpt(it->second);
    };
    auto sg = [&](int v) { return sign_of(lab.labels[v]); };

    std::vector<Pt> pos(n);
    // outer triangle
    {
        auto t = d.nodes[d.root].t;
        Q lo = lab.target_x.empty() ? Q(0) : lab.target_x.front();
        Q hi = lab.target_x.empty() ? Q(0) : lab.target_x.back();
        Q H = std::max(Q(1), Q(hi - lo));
        int ups = 0, downs = 0, ons = 0;
        for (int v : t) (sg(v) > 0 ? ups : sg(v) < 0 ? downs : ons)++;
        auto rot = [&](auto pred) {
            for (int k = 0; k < 3; ++k)
                if (pred(k)) return k;
            return -1;
        };
        if (ons == 3) throw input_error("labeling", "outer triangle lies on the line");
        if (downs == 0 || ups == 0) {
            int s = downs == 0 ? 1 : -1;
            if (ons == 0) {
                Q xm = (lo + hi) / 2;
                pos[t[0]] = {xm - s, Y + s * H};
                pos[t[1]] = {xm + s, Y + s * H};
                pos[t[2]] = {xm, Y + s * 2 * H};
            } else if (ons == 1) {
                int k = rot([&](int k) { return sg(t[k]) == 0; });
                Pt q = q_vertex(t[k]);
                pos[t[k]] = q;
                pos[t[(k + 1) % 3]] = {q.x + s, q.y + s * H};
                pos[t[(k + 2) % 3]] = {q.x, q.y + s * 2 * H};
            } else {
                int k = rot([&](int k) { return sg(t[(k + 2) % 3]) != 0; });
                Pt a = q_vertex(t[k]), b = q_vertex(t[(k + 1) % 3]);
                pos[t[k]] = a;
                pos[t[(k + 1) % 3]] = b;
                Q w = b.x - a.x;
                pos[t[(k + 2) % 3]] = {(a.x + b.x) / 2, Y + s * std::max(Q(1), Q(abs(w)))};
            }
        } else if (ons == 1) {
            int k = rot([&](int k) { return sg(t[k]) == 0; });
            int a = t[(k + 1) % 3], b = t[(k + 2) % 3];
            pos[t[k]] = q_vertex(t[k]);
            Pt q = q_edge(a, b);
            for (int dx : {1, -1}) {
                pos[a] = {q.x + dx * H, q.y + sg(a) * H};
                pos[b] = {q.x - dx * H, q.y - sg(a) * H};
                if (orient(pos[t[0]], pos[t[1]], pos[t[2]]) > 0) break;
            }
        } else {
            int k = rot([&](int k) { return (ups == 1 ? sg(t[k]) > 0 : sg(t[k]) < 0); });
            int apex = t[k], a = t[(k + 1) % 3], b = t[(k + 2) % 3];
            Pt q1 = q_edge(apex, a), q2 = q_edge(apex, b);
            Q w = abs(Q(q2.x - q1.x));
            Pt p{(q1.x + q2.x) / 2, Y + sg(apex) * std::max(Q(1), w)};
            pos[apex] = p;
            pos[a] = {2 * q1.x - p.x, 2 * q1.y - p.y};
            pos[b] = {2 * q2.x - p.x, 2 * q2.y - p.y};
        }
        if (orient(pos[t[0]], pos[t[1]], pos[t[2]]) <= 0)
            throw input_error("labeling", "outer triangle " + tri(t[0], t[1], t[2]) + " cannot be drawn counter-clockwise");
        for (int v : t)
            if (side(pos[v].y, Y) != sg(v)) throw internal_error("outer triangle breaks its labels");
    }

    for (size_t k = 0; k < d.nodes.size(); ++k) {
        const auto& nd = d.nodes[k];
        if (nd.w < 0) continue;
        auto t = nd.t;
        int w = nd.w;
        const Pt &A = pos[t[0]], &B = pos[t[1]], &C = pos[t[2]];
        Pt p;
        if (sg(w) == 0) {
            p = q_vertex(w);
        } else {
            std::vector<int> opp;
            for (int o : t)
                if (sg(o) == -sg(w)) opp.push_back(o);
            if (opp.empty()) {
                p = {(A.x + B.x + C.x) / 3, (A.y + B.y + C.y) / 3};
            } else if (opp.size() == 1) {
                // beyond the crossing on the ray from the opposite corner, halfway to the far side
                int o = opp[0];
                Pt q = q_edge(o, w);
                int i = static_cast<int>(std::find(t.begin(), t.end(), o) - t.begin());
                const Pt& f1 = pos[t[(i + 1) % 3]];
                const Pt& f2 = pos[t[(i + 2) % 3]];
                if (orient(pos[o], q, f1) == 0 && orient(pos[o], q, f2) == 0)
                    throw input_error("labeling", "degenerate triangle " + tri(t[0], t[1], t[2]));
                Pt far = line_intersection(pos[o], q, f1, f2);
                p = {(q.x + far.x) / 2, (q.y + far.y) / 2};
            } else {
                Pt q1 = q_edge(opp[0], w), q2 = q_edge(opp[1], w);
                const Pt &o1 = pos[opp[0]], &o2 = pos[opp[1]];
                if ((q1.x - o1.x) * (q2.y - o2.y) == (q1.y - o1.y) * (q2.x - o2.x))
                    throw input_error("labeling", "parallel crossing lines in triangle " + tri(t[0], t[1], t[2]));
                p = line_intersection(pos[opp[0]], q1, pos[opp[1]], q2);
            }
        }
        if (orient(A, B, p) <= 0 || orient(B, C, p) <= 0 || orient(C, A, p) <= 0 || side(p.y, Y) != sg(w)) {
            std::ostringstream o;
            o << "central vertex " << w << " of " << tri(t[0], t[1], t[2]) << " cannot be placed consistently";
            throw input_error("labeling", o.str());
        }
        pos[w] = p;
    }

    Drawing out;
    out.coords = pos;
    out.designated = lab.S;
    for (int v : lab.S)
        if (!(pos[v] == q_vertex(v))) throw verify_error("labeling", "vertex " + std::to_string(v) + " missed its target");
    for (auto [a, b] : lab.E) {
        if (side(pos[a].y, Y) * side(pos[b].y, Y) >= 0 || !(Pt{x_at_height(pos[a], pos[b], Y), Y} == q_edge(a, b)))
            throw verify_error("labeling", "edge " + std::to_string(a) + "-" + std::to_string(b) + " missed its target");
    }
    auto rep = verify_drawing(g, out);
    if (!rep.ok()) throw verify_error("drawing", "free placement failed verification: " + rep.summary());
    return out;
}

Drawing lift_designated(const PlaneGraph& t, const Drawing& d, const Q& line_y, const std::map<int, Q>& new_y) {
    const int n = t.n();
    if (t.m() != 3 * n - 6) throw input_error("drawing", "lifting needs a triangulation");
    std::vector<Q> extra(n, Q(0));
    for (auto& [v, y] : new_y) {
        if (v < 0 || v >= n) throw input_error("drawing", "vertex out of range");
        if (d.coords[v].y != line_y) throw input_error("drawing", "vertex " + std::to_string(v) + " is not on the line");
        extra[v] = y;
    }
    // y' = M (y - line) + extra; every face keeps its orientation once M beats the extra terms
    Q M = 1;
    for (int f = 0; f < t.num_faces(); ++f) {
        auto vs = t.face_vertices(f);
        const Pt &a = d.coords[vs[0]], &b = d.coords[vs[1]], &c = d.coords[vs[2]];
        Q det = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
        if (det == 0) throw input_error("drawing", "degenerate face in the drawing");
        Q ex = (b.x - a.x) * (extra[vs[2]] - extra[vs[0]]) - (c.x - a.x) * (extra[vs[1]] - extra[vs[0]]);
        Q need = abs(Q(ex / det)) + 1;
        if (need > M) M = need;
    }
    // keep the numbers small
    mpz_class Mi = M.get_num() / M.get_den() + 1;
    Drawing out = d;
    for (int v = 0; v < n; ++v) out.coords[v].y = Q(Mi) * (d.coords[v].y - line_y) + extra[v];
    out.designated.clear();
    return out;
}

}  // namespace col
