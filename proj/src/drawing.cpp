#include "collinear/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "collinear/error.hpp"

namespace col {

Drawing parse_drawing(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, lineno = 0;
    Drawing d;
    std::vector<char> given;
    auto fail = [&](const std::string& m) { throw input_error("syntax", "line " + std::to_string(lineno) + ": " + m); };
    while (std::getline(in, line)) {
        ++lineno;
        auto h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "drawing") {
            if (n >= 0 || !(ls >> n) || n <= 0) fail("bad header");
            d.coords.assign(n, Pt{});
            given.assign(n, 0);
        } else if (tok == "v") {
            if (n < 0) fail("vertex before header");
            int v;
            std::string xs, ys;
            if (!(ls >> v >> xs >> ys)) fail("expected 'v <id> <x> <y>'");
            if (v < 0 || v >= n || given[v]) fail("bad or duplicate vertex id");
            given[v] = 1;
            d.coords[v] = Pt{parse_q(xs), parse_q(ys)};
        } else if (tok == "designated:") {
            int v;
            while (ls >> v) {
                if (v < 0 || v >= n) fail("designated vertex out of range");
                d.designated.push_back(v);
            }
            if (!ls.eof()) fail("bad designated list");
        } else {
            fail("unknown directive '" + tok + "'");
        }
    }
    if (n < 0) throw input_error("syntax", "missing drawing header");
    for (int v = 0; v < n; ++v)
        if (!given[v]) throw input_error("syntax", "missing coordinates for vertex " + std::to_string(v));
    return d;
}

std::string serialize(const Drawing& d) {
    std::ostringstream o;
    o << "drawing " << d.coords.size() << "\n";
    for (size_t v = 0; v < d.coords.size(); ++v)
        o << "v " << v << ' ' << fmt_q(d.coords[v].x) << ' ' << fmt_q(d.coords[v].y) << "\n";
    o << "designated:";
    for (int v : d.designated) o << ' ' << v;
    o << "\n";
    return o.str();
}

std::string to_svg(const PlaneGraph& g, const Drawing& d) {
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (auto& p : d.coords) {
        double x = p.x.get_d(), y = p.y.get_d();
        x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
    }
    double w = std::max(x1 - x0, 1e-9), h = std::max(y1 - y0, 1e-9);
    double s = 800.0 / std::max(w, h), pad = 20;
    auto X = [&](const Pt& p) { return pad + (p.x.get_d() - x0) * s; };
    auto Y = [&](double y) { return pad + (y1 - y) * s; };
    std::vector<char> des(d.coords.size(), 0);
    for (int v : d.designated) des[v] = 1;
    std::ostringstream o;
    o << std::fixed << std::setprecision(3);
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * s + 2 * pad << "\" height=\"" << h * s + 2 * pad
      << "\">\n";
    if (y0 <= 0 && 0 <= y1)
        o << "<line x1=\"0\" y1=\"" << Y(0) << "\" x2=\"" << w * s + 2 * pad << "\" y2=\"" << Y(0)
          << "\" stroke=\"#c33\" stroke-dasharray=\"4 3\"/>\n";
    for (auto& e : g.edges()) {
        auto& a = d.coords[e.first];
        auto& b = d.coords[e.second];
        o << "<line x1=\"" << X(a) << "\" y1=\"" << Y(a.y.get_d()) << "\" x2=\"" << X(b) << "\" y2=\"" << Y(b.y.get_d())
          << "\" stroke=\"black\"/>\n";
    }
    for (size_t v = 0; v < d.coords.size(); ++v)
        o << "<circle cx=\"" << X(d.coords[v]) << "\" cy=\"" << Y(d.coords[v].y.get_d()) << "\" r=\"" << (des[v] ? 5 : 3)
          << "\" fill=\"" << (des[v] ? "#c33" : "black") << "\"/>\n";
    o << "</svg>\n";
    return o.str();
}

std::string DrawingReport::summary() const {
    std::string s = std::string("planar=") + (planar ? "pass" : "FAIL") + " rotation=" + (rotation_ok ? "pass" : "FAIL") +
                    " outer=" + (outer_ok ? "pass" : "FAIL") + " collinear=" + (collinear_ok ? "pass" : "FAIL");
    for (auto& w : witnesses) s += "\n  " + w;
    return s;
}

namespace {

// upper half (clockwise from -x through +y) comes first
int half(const Pt& p, const Pt& q) {
    int sy = sgn(q.y - p.y);
    if (sy > 0) return 0;
    if (sy < 0) return 1;
    return q.x < p.x ? 0 : 1;
}

double down(double x) { return std::nextafter(std::nextafter(x, -1e308), -1e308); }
double up(double x) { return std::nextafter(std::nextafter(x, 1e308), 1e308); }

}  // namespace

std::vector<int> clockwise_neighbours(const PlaneGraph& g, const Drawing& d, int v) {
    std::vector<int> r = g.rot(v);
    const Pt& p = d.coords[v];
    std::sort(r.begin(), r.end(), [&](int a, int b) {
        int ha = half(p, d.coords[a]), hb = half(p, d.coords[b]);
        if (ha != hb) return ha < hb;
        return orient(p, d.coords[a], d.coords[b]) < 0;
    });
    return r;
}

std::vector<int> clockwise_from(const PlaneGraph& g, const Drawing& d, int v, const Pt& dir) {
    std::vector<int> r = g.rot(v);
    const Pt& p = d.coords[v];
    const Pt O{0, 0};
    auto vec = [&](int w) { return Pt{d.coords[w].x - p.x, d.coords[w].y - p.y}; };
    // 0: clockwise angle from dir in (0, pi], 1: in (pi, 2pi], exact direction counts as 2pi
    auto hf = [&](const Pt& w) {
        int c = orient(O, dir, w);
        if (c < 0) return 0;
        if (c > 0) return 1;
        return sgn(dir.x * w.x + dir.y * w.y) < 0 ? 0 : 2;
    };
    std::sort(r.begin(), r.end(), [&](int a, int b) {
        Pt va = vec(a), vb = vec(b);
        int ha = hf(va), hb = hf(vb);
        if (ha != hb) return ha < hb;
        return orient(O, va, vb) < 0;
    });
    return r;
}

DrawingReport verify_drawing(const PlaneGraph& g, const Drawing& d) {
    DrawingReport rep;
    if (static_cast<int>(d.coords.size()) != g.n()) {
        rep.planar = rep.rotation_ok = rep.outer_ok = false;
        rep.witnesses.push_back("vertex count mismatch");
        return rep;
    }
    const auto& P = d.coords;
    // distinct points
    {
        std::vector<int> ord(g.n());
        for (int i = 0; i < g.n(); ++i) ord[i] = i;
        std::sort(ord.begin(), ord.end(), [&](int a, int b) { return P[a] < P[b]; });
        for (int i = 0; i + 1 < g.n(); ++i)
            if (P[ord[i]] == P[ord[i + 1]]) {
                rep.planar = false;
                rep.witnesses.push_back("coincident vertices " + std::to_string(ord[i]) + " " + std::to_string(ord[i + 1]));
            }
    }
    // planarity: bounding-box sweep over x
    {
        struct Box {
            double x0, x1, y0, y1;
            int e;
        };
        std::vector<Box> boxes;
        std::vector<CachedPt> C;
        C.reserve(g.n());
        for (int v = 0; v < g.n(); ++v) C.emplace_back(P[v]);
        const auto& E = g.edges();
        for (int i = 0; i < g.m(); ++i) {
            auto& a = C[E[i].first];
            auto& b = C[E[i].second];
            double ax = a.x, bx = b.x, ay = a.y, by = b.y;
            boxes.push_back({down(std::min(ax, bx)), up(std::max(ax, bx)), down(std::min(ay, by)), up(std::max(ay, by)), i});
        }
        std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) { return a.x0 < b.x0; });
        int reported = 0;
        for (size_t i = 0; i < boxes.size(); ++i) {
            for (size_t j = i + 1; j < boxes.size() && boxes[j].x0 <= boxes[i].x1; ++j) {
                if (boxes[j].y0 > boxes[i].y1 || boxes[i].y0 > boxes[j].y1) continue;
                auto [a, b] = E[boxes[i].e];
                auto [c, e] = E[boxes[j].e];
                bool bad;
                int shared = -1, oa = -1, ob = -1;
                if (a == c) shared = a, oa = b, ob = e;
                else if (a == e) shared = a, oa = b, ob = c;
                else if (b == c) shared = b, oa = a, ob = e;
                else if (b == e) shared = b, oa = a, ob = c;
                if (shared >= 0) {
                    // overlap only if collinear and pointing the same way
                    bad = orient(C[shared], C[oa], C[ob]) == 0 &&
                          sgn((P[oa].x - P[shared].x) * (P[ob].x - P[shared].x) +
                              (P[oa].y - P[shared].y) * (P[ob].y - P[shared].y)) > 0;
                } else {
                    bad = segments_touch(C[a], C[b], C[c], C[e]);
                }
                if (bad) {
                    rep.planar = false;
                    if (reported++ < 5)
                        rep.witnesses.push_back("edges (" + std::to_string(a) + "," + std::to_string(b) + ") and (" +
                                                std::to_string(c) + "," + std::to_string(e) + ") intersect");
                }
            }
        }
    }
    // rotation fidelity
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) < 3) continue;
        auto cw = clockwise_neighbours(g, d, v);
        const auto& r = g.rot(v);
        auto it = std::find(cw.begin(), cw.end(), r[0]);
        size_t k = it - cw.begin();
        bool same = true;
        for (size_t i = 0; i < r.size(); ++i)
            if (cw[(k + i) % cw.size()] != r[i]) same = false;
        if (!same) {
            rep.rotation_ok = false;
            if (rep.witnesses.size() < 12) rep.witnesses.push_back("rotation differs at vertex " + std::to_string(v));
        }
    }
    // outer face at the lexicographically smallest vertex
    if (g.m() > 0) {
        int p = 0;
        for (int v = 1; v < g.n(); ++v)
            if (P[v] < P[p]) p = v;
        auto cw = clockwise_neighbours(g, d, p);
        int b = cw.front();
        if (g.face_of(g.dart(p, b)) != g.outer_face()) {
            rep.outer_ok = false;
            rep.witnesses.push_back("outer face mismatch at vertex " + std::to_string(p));
        }
    }
    // collinearity
    if (d.designated.size() >= 3) {
        int a = d.designated[0], b = -1;
        for (int v : d.designated)
            if (!(P[v] == P[a])) {
                b = v;
                break;
            }
        if (b >= 0)
            for (int v : d.designated)
                if (orient(P[a], P[b], P[v]) != 0) {
                    rep.collinear_ok = false;
                    rep.witnesses.push_back("designated vertex " + std::to_string(v) + " off the line through " +
                                            std::to_string(a) + "," + std::to_string(b));
                    break;
                }
    }
    return rep;
}

}  // namespace col
