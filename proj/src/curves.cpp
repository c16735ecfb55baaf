#include "collinear/curves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "collinear/error.hpp"

namespace col {

std::vector<int> GoodCurve::vertices() const {
    std::vector<int> r;
    for (auto& s : stations)
        if (s.kind == Station::Vertex) r.push_back(s.a);
    return r;
}

std::vector<Edge> GoodCurve::contained_edges() const {
    std::vector<Edge> r;
    for (auto& s : stations)
        if (s.kind == Station::Edge) r.push_back({s.a, s.b});
    return r;
}

GoodCurve parse_curve(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    GoodCurve c;
    bool header = false;
    int lineno = 0;
    auto fail = [&](const std::string& m) { throw input_error("syntax", "line " + std::to_string(lineno) + ": " + m); };
    while (std::getline(in, line)) {
        ++lineno;
        auto h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (!header) {
            std::string kind;
            if (tok != "curve" || !(ls >> kind) || (kind != "open" && kind != "closed")) fail("expected 'curve open|closed'");
            c.closed = kind == "closed";
            header = true;
            continue;
        }
        std::string rest;
        if (tok == "v") {
            int v;
            if (!(ls >> v)) fail("expected vertex id");
            c.stations.push_back(Station::vertex(v));
        } else if (tok == "x" || tok == "e") {
            int a, b;
            if (!(ls >> a >> b)) fail("expected two endpoints");
            c.stations.push_back(tok == "x" ? Station::cross(a, b) : Station::edge(a, b));
        } else if (tok == "f") {
            std::string key;
            if (!(ls >> key)) fail("expected face key");
            c.stations.push_back(Station::hop(key));
        } else {
            fail("unknown station '" + tok + "'");
        }
        if (ls >> rest) fail("trailing text");
    }
    if (!header) throw input_error("syntax", "missing curve header");
    return c;
}

std::string serialize(const GoodCurve& c) {
    std::ostringstream o;
    o << "curve " << (c.closed ? "closed" : "open") << "\n";
    for (auto& s : c.stations) {
        switch (s.kind) {
            case Station::Vertex: o << "v " << s.a << "\n"; break;
            case Station::Cross: o << "x " << s.a << ' ' << s.b << "\n"; break;
            case Station::Face: o << "f " << s.face << "\n"; break;
            case Station::Edge: o << "e " << s.a << ' ' << s.b << "\n"; break;
        }
    }
    return o.str();
}

namespace {

Error malformed(const std::string& m) { return input_error("curve", m); }

bool face_has_vertex(const PlaneGraph& g, int f, int v) {
    for (int d : g.face_darts(f))
        if (g.tail(d) == v) return true;
    return false;
}

bool face_has_edge(const PlaneGraph& g, int f, int a, int b) {
    auto [l, r] = g.edge_faces(a, b);
    return l == f || r == f;
}

bool incident(const PlaneGraph& g, int f, const Station& s) {
    if (s.kind == Station::Vertex) return face_has_vertex(g, f, s.a);
    return face_has_edge(g, f, s.a, s.b);
}

}  // namespace

void check_well_formed(const PlaneGraph& g, const GoodCurve& c) {
    const auto& S = c.stations;
    const int L = static_cast<int>(S.size());
    std::vector<int> face(L, -1);
    std::set<int> verts;
    std::set<Edge> crossed, contained;
    for (int i = 0; i < L; ++i) {
        const auto& s = S[i];
        switch (s.kind) {
            case Station::Vertex:
                if (s.a < 0 || s.a >= g.n()) throw malformed("vertex " + std::to_string(s.a) + " does not exist");
                if (!verts.insert(s.a).second) throw malformed("vertex " + std::to_string(s.a) + " visited twice");
                break;
            case Station::Cross:
            case Station::Edge:
                if (s.a < 0 || s.b >= g.n() || !g.has_edge(s.a, s.b))
                    throw malformed("edge " + std::to_string(s.a) + "-" + std::to_string(s.b) + " does not exist");
                if (!(s.kind == Station::Cross ? crossed : contained).insert({s.a, s.b}).second)
                    throw malformed("edge " + std::to_string(s.a) + "-" + std::to_string(s.b) + " used twice");
                break;
            case Station::Face:
                face[i] = g.face_by_key(s.face);
                if (face[i] < 0) throw malformed("face '" + s.face + "' does not exist");
                break;
        }
    }
    for (auto& e : crossed)
        if (contained.count(e)) throw malformed("edge both crossed and contained");
    if (L == 0) {
        if (c.closed) throw malformed("empty closed curve");
        return;
    }
    auto check_pair = [&](int i, int j) {
        const auto &x = S[i], &y = S[j];
        if (x.is_point() && y.is_point()) throw malformed("consecutive points without a connector at station " + std::to_string(i));
        if (!x.is_point() && !y.is_point()) throw malformed("consecutive connectors at station " + std::to_string(i));
        int ci = x.is_point() ? j : i, pi = x.is_point() ? i : j;
        const auto& con = S[ci];
        const auto& pt = S[pi];
        if (con.kind == Station::Face) {
            if (!incident(g, face[ci], pt)) throw malformed("face '" + con.face + "' not incident to station " + std::to_string(pi));
        } else {
            if (pt.kind != Station::Vertex || (pt.a != con.a && pt.a != con.b))
                throw malformed("contained edge not attached to its end vertex at station " + std::to_string(pi));
        }
    };
    if (c.closed) {
        if (L < 2) throw malformed("closed curve needs a point and a connector");
        for (int i = 0; i < L; ++i) check_pair(i, (i + 1) % L);
        for (int i = 0; i < L; ++i)
            if (S[i].kind == Station::Edge) {
                const auto &p = S[(i + L - 1) % L], &q = S[(i + 1) % L];
                if (p.a == q.a) throw malformed("contained edge joins a vertex to itself");
            }
    } else {
        for (int i = 0; i + 1 < L; ++i) check_pair(i, i + 1);
        if (S.front().kind == Station::Edge || S.back().kind == Station::Edge)
            throw malformed("curve cannot end on a contained edge");
        for (int i = 1; i + 1 < L; ++i)
            if (S[i].kind == Station::Edge && S[i - 1].a == S[i + 1].a) throw malformed("contained edge joins a vertex to itself");
    }
}

std::vector<std::pair<Edge, int>> edge_tallies(const PlaneGraph& g, const GoodCurve& c) {
    std::map<Edge, int> t;
    std::set<Edge> contained;
    for (auto& s : c.stations) {
        if (s.kind == Station::Cross) t[{s.a, s.b}]++;
        if (s.kind == Station::Vertex)
            for (int w : g.rot(s.a)) t[norm_edge(s.a, w)]++;
        if (s.kind == Station::Edge) contained.insert({s.a, s.b});
    }
    std::vector<std::pair<Edge, int>> r;
    for (auto& [e, k] : t)
        if (!contained.count(e)) r.push_back({e, k});
    return r;
}

CurveReport validate_curve(const PlaneGraph& g, const GoodCurve& c) {
    check_well_formed(g, c);
    CurveReport rep;
    rep.vertices_on_curve = c.vertices();
    std::sort(rep.vertices_on_curve.begin(), rep.vertices_on_curve.end());
    rep.vertex_count_on_curve = static_cast<int>(rep.vertices_on_curve.size());
    for (auto& [e, k] : edge_tallies(g, c))
        if (k > 1) rep.violations.push_back({e, k});
    rep.good = rep.violations.empty();
    rep.proper = rep.good && !c.closed && augment_with_curve(g, c).proper;
    return rep;
}

// ------------------------------------------------------------------ augmentation

namespace {

struct Attach {
    int face;
    long rel;   // position of the other end relative to this end along the face walk
    int other;  // vertex id in h
    int order;  // tie-break
};

}  // namespace

Augmented augment_with_curve(const PlaneGraph& g, const GoodCurve& c) {
    check_well_formed(g, c);
    for (auto& [e, k] : edge_tallies(g, c))
        if (k > 1) throw input_error("curve", "curve is not good on edge " + std::to_string(e.first) + "-" + std::to_string(e.second));
    const auto& S = c.stations;
    const int L = static_cast<int>(S.size());
    Augmented A;
    A.n_orig = g.n();
    A.station_vertex.assign(L, -1);
    std::vector<int> pts;
    int next_id = g.n();
    std::map<Edge, int> sub_of_edge;
    for (int i = 0; i < L; ++i) {
        if (S[i].kind == Station::Vertex) A.station_vertex[i] = S[i].a, pts.push_back(i);
        if (S[i].kind == Station::Cross) {
            A.station_vertex[i] = next_id;
            sub_of_edge[{S[i].a, S[i].b}] = next_id;
            A.subdivided.push_back({S[i].a, S[i].b});
            A.sub_vertex.push_back(next_id);
            ++next_id;
            pts.push_back(i);
        }
    }
    if (pts.empty() || (g.m() == 0)) {
        A.h = g;
        if (!pts.empty()) {
            A.a = A.b = 0;
            A.path = {0};
            A.proper = !c.closed;
            return A;
        }
        bool in_outer = L == 0 || g.face_by_key(S[0].face) == g.outer_face();
        A.proper = !c.closed && in_outer;
        return A;
    }

    // scaled boundary position of a point station on face f: corner 4i, edge point 4i+2
    auto position = [&](int f, const Station& s) -> long {
        const auto& ds = g.face_darts(f);
        long found = -1;
        for (size_t i = 0; i < ds.size(); ++i) {
            int d = ds[i];
            bool hit = s.kind == Station::Vertex ? g.tail(d) == s.a : norm_edge(g.tail(d), g.head(d)) == Edge{s.a, s.b};
            if (hit) {
                if (found >= 0) throw input_error("ambiguous", "point occurs twice on the boundary of face " + g.face_key(f));
                found = static_cast<long>(s.kind == Station::Vertex ? 4 * i : 4 * i + 2);
            }
        }
        if (found < 0) throw internal_error("augment: point not on face");
        return found;
    };

    struct Chord {
        int f;
        long p, q;
        int vp, vq;
    };
    std::vector<Chord> chords;
    std::vector<int> extra_rot_owner;  // new endpoint vertices
    auto new_endpoint = [&](int f, int pst) {
        int id = next_id++;
        long p = position(f, S[pst]);
        chords.push_back({f, p, p + 1, A.station_vertex[pst], id});
        extra_rot_owner.push_back(id);
        return id;
    };
    auto other_side = [&](const Station& x, int f) {
        auto [l, r] = g.edge_faces(x.a, x.b);
        if (l == r) throw input_error("ambiguous", "crossing of an edge with the same face on both sides");
        return l == f ? r : l;
    };
    if (c.closed) {
        if (pts.size() < 3) throw input_error("curve", "closed curve must pass at least three points to be augmented");
        for (int i = 0; i < L; ++i)
            if (S[i].kind == Station::Face) {
                int f = g.face_by_key(S[i].face);
                const auto &x = S[(i + L - 1) % L], &y = S[(i + 1) % L];
                chords.push_back({f, position(f, x), position(f, y), A.station_vertex[(i + L - 1) % L],
                                  A.station_vertex[(i + 1) % L]});
            }
    } else {
        for (int i = 1; i + 1 < L; ++i)
            if (S[i].kind == Station::Face) {
                int f = g.face_by_key(S[i].face);
                chords.push_back({f, position(f, S[i - 1]), position(f, S[i + 1]), A.station_vertex[i - 1], A.station_vertex[i + 1]});
            }
        int first = pts.front(), last = pts.back();
        bool a_new = false, b_new = false;
        if (L == 1) {
            A.a = A.b = A.station_vertex[first];
        } else {
            if (S[0].kind == Station::Face) {
                A.a = new_endpoint(g.face_by_key(S[0].face), first), a_new = true;
            } else if (S[0].kind == Station::Cross) {
                A.a = new_endpoint(other_side(S[0], g.face_by_key(S[1].face)), first), a_new = true;
            } else {
                A.a = A.station_vertex[first];
            }
            if (S[L - 1].kind == Station::Face) {
                A.b = new_endpoint(g.face_by_key(S[L - 1].face), last), b_new = true;
            } else if (S[L - 1].kind == Station::Cross) {
                A.b = new_endpoint(other_side(S[L - 1], g.face_by_key(S[L - 2].face)), last), b_new = true;
            } else {
                A.b = A.station_vertex[last];
            }
        }
        if (a_new) A.path.push_back(A.a);
        for (int i : pts) A.path.push_back(A.station_vertex[i]);
        if (b_new) A.path.push_back(A.b);
    }
    if (c.closed)
        for (int i : pts) A.path.push_back(A.station_vertex[i]);

    // non-interleaving per face
    std::map<int, std::vector<int>> by_face;
    for (size_t k = 0; k < chords.size(); ++k) by_face[chords[k].f].push_back(static_cast<int>(k));
    for (auto& [f, ks] : by_face) {
        long M = 4L * static_cast<long>(g.face_darts(f).size());
        auto md = [&](long x) { return ((x % M) + M) % M; };
        auto between = [&](long x, long p, long q) { return 0 < md(x - p) && md(x - p) < md(q - p); };
        for (size_t i = 0; i < ks.size(); ++i)
            for (size_t j = i + 1; j < ks.size(); ++j) {
                auto &c1 = chords[ks[i]], &c2 = chords[ks[j]];
                if (c1.p == c2.p || c1.p == c2.q || c1.q == c2.p || c1.q == c2.q) continue;
                if (between(c2.p, c1.p, c1.q) != between(c2.q, c1.p, c1.q))
                    throw input_error("curve", "curve crosses itself inside face " + g.face_key(f));
            }
    }

    // rotations of h
    std::vector<std::vector<int>> rot(next_id);
    for (int v = 0; v < g.n(); ++v) {
        rot[v] = g.rot(v);
        for (int& w : rot[v]) {
            auto it = sub_of_edge.find(norm_edge(v, w));
            if (it != sub_of_edge.end()) w = it->second;
        }
    }
    // attachments at corners (vertex, face) and at edge points (sub vertex, face)
    std::map<std::pair<int, int>, std::vector<Attach>> at;
    int ord = 0;
    for (auto& ch : chords) {
        long M = 4L * static_cast<long>(g.face_darts(ch.f).size());
        auto md = [&](long x) { return ((x % M) + M) % M; };
        at[{ch.vp, ch.f}].push_back({ch.f, md(ch.q - ch.p), ch.vq, ord++});
        if (ch.q != ch.p + 1) at[{ch.vq, ch.f}].push_back({ch.f, md(ch.p - ch.q), ch.vp, ord++});
    }
    auto sorted = [](std::vector<Attach> v) {
        std::sort(v.begin(), v.end(), [](const Attach& x, const Attach& y) {
            return x.rel != y.rel ? x.rel > y.rel : x.order < y.order;
        });
        std::vector<int> r;
        for (auto& a : v) r.push_back(a.other);
        return r;
    };
    for (auto& [key, list] : at) {
        auto [v, f] = key;
        if (v < g.n()) {
            // corner of v in f: insert after the h-neighbour that corresponds to the walk predecessor
            int prev = -1;
            for (int d : g.face_darts(f))
                if (g.head(d) == v) prev = g.tail(d);
            auto it = sub_of_edge.find(norm_edge(v, prev));
            int hp = it != sub_of_edge.end() ? it->second : prev;
            auto ins = sorted(list);
            auto pos = std::find(rot[v].begin(), rot[v].end(), hp);
            rot[v].insert(pos + 1, ins.begin(), ins.end());
        }
    }
    for (size_t k = 0; k < A.subdivided.size(); ++k) {
        auto [x, y] = A.subdivided[k];
        int s = A.sub_vertex[k];
        auto [fl, fr] = g.edge_faces(x, y);
        rot[s].push_back(x);
        if (at.count({s, fl})) {
            auto ins = sorted(at[{s, fl}]);
            rot[s].insert(rot[s].end(), ins.begin(), ins.end());
        }
        rot[s].push_back(y);
        if (at.count({s, fr})) {
            auto ins = sorted(at[{s, fr}]);
            rot[s].insert(rot[s].end(), ins.begin(), ins.end());
        }
    }
    for (auto& ch : chords)
        if (ch.q == ch.p + 1) rot[ch.vq] = {ch.vp};

    // origin face in g of each dart of h
    std::unordered_map<long long, int> chord_face;
    auto key = [&](int u, int v) { return static_cast<long long>(u) * next_id + v; };
    for (auto& ch : chords) chord_face[key(ch.vp, ch.vq)] = chord_face[key(ch.vq, ch.vp)] = ch.f;
    auto origin = [&](int u, int v) -> int {
        auto it = chord_face.find(key(u, v));
        if (it != chord_face.end()) return it->second;
        if (u < g.n() && v < g.n()) return g.face_of(g.dart(u, v));
        if (u >= g.n()) {
            auto [x, y] = A.subdivided[u - g.n()];
            return v == y ? g.face_of(g.dart(x, y)) : g.face_of(g.dart(y, x));
        }
        auto [x, y] = A.subdivided[v - g.n()];
        return u == x ? g.face_of(g.dart(x, y)) : g.face_of(g.dart(y, x));
    };
    PlaneGraph tmp;
    try {
        tmp = PlaneGraph::with_outer_dart(rot, 0, rot[0].empty() ? 0 : rot[0][0]);
    } catch (const Error& e) {
        throw internal_error(std::string("augmentation produced an invalid embedding: ") + e.what());
    }
    int chosen = -1, with_a = -1, any = -1;
    for (int f = 0; f < tmp.num_faces(); ++f) {
        int d = tmp.face_darts(f).front();
        if (origin(tmp.tail(d), tmp.head(d)) != g.outer_face()) continue;
        bool ha = false, hb = false;
        for (int e : tmp.face_darts(f)) ha |= tmp.tail(e) == A.a, hb |= tmp.tail(e) == A.b;
        if (any < 0) any = f;
        if (ha && with_a < 0) with_a = f;
        if (!c.closed && ha && hb && chosen < 0) chosen = f;
    }
    A.proper = chosen >= 0;
    int use = chosen >= 0 ? chosen : with_a >= 0 ? with_a : any;
    if (use < 0) throw internal_error("augment: outer region lost");
    A.h = tmp.with_outer_face(use);
    return A;
}

bool is_proper(const PlaneGraph& g, const GoodCurve& c) {
    if (c.closed) throw input_error("curve", "properness is defined for open curves only");
    return augment_with_curve(g, c).proper;
}

CutResult cut_closed_curve(const PlaneGraph& g, const GoodCurve& c) {
    if (!c.closed) throw input_error("curve", "curve is not closed");
    check_well_formed(g, c);
    const auto& S = c.stations;
    const int L = static_cast<int>(S.size());
    int best = -1;
    for (int i = 0; i < L; ++i)
        if (S[i].kind == Station::Face && (best < 0 || S[i].face < S[best].face)) best = i;
    if (best < 0) throw input_error("curve", "closed curve has no face passage to cut");
    CutResult r;
    for (int k = 1; k < L; ++k) r.curve.stations.push_back(S[(best + k) % L]);
    r.curve.closed = false;
    r.g = g.with_outer_face(g.face_by_key(S[best].face));
    return r;
}

// ------------------------------------------------------------------ drawing -> curve

int face_in_direction(const PlaneGraph& g, const Drawing& d, int v, const Pt& dir) {
    if (g.degree(v) == 0) return 0;
    auto cw = clockwise_from(g, d, v, dir);
    return g.face_of(g.dart(v, cw.front()));
}

GoodCurve curve_from_drawing(const PlaneGraph& g, const Drawing& d, const Line& line) {
    if (line.a == 0 && line.b == 0) throw input_error("line", "degenerate line");
    const auto& P = d.coords;
    auto side = [&](int v) { return sgn(line.a * P[v].x + line.b * P[v].y - line.c); };
    const Pt dir{-line.b, line.a};
    auto along = [&](const Pt& p) -> Q { return dir.x * p.x + dir.y * p.y; };
    struct Ev {
        Q t;
        Station st;
    };
    std::vector<Ev> ev;
    for (int v = 0; v < g.n(); ++v)
        if (side(v) == 0) ev.push_back({along(P[v]), Station::vertex(v)});
    for (auto& [x, y] : g.edges()) {
        int sx = side(x), sy = side(y);
        if (sx * sy < 0) {
            // point on segment xy where the line is met
            Q fx = line.a * P[x].x + line.b * P[x].y - line.c;
            Q fy = line.a * P[y].x + line.b * P[y].y - line.c;
            Q t = fx / (fx - fy);
            Pt q{P[x].x + t * (P[y].x - P[x].x), P[x].y + t * (P[y].y - P[x].y)};
            ev.push_back({along(q), Station::cross(x, y)});
        }
    }
    std::sort(ev.begin(), ev.end(), [](const Ev& a, const Ev& b) { return a.t < b.t; });
    for (size_t i = 0; i + 1 < ev.size(); ++i)
        if (ev[i].t == ev[i + 1].t) throw verify_error("drawing", "two features meet the line at the same point");
    GoodCurve c;
    for (size_t i = 0; i < ev.size(); ++i) {
        c.stations.push_back(ev[i].st);
        if (i + 1 == ev.size()) break;
        const auto &s = ev[i].st, &u = ev[i + 1].st;
        if (s.kind == Station::Vertex && u.kind == Station::Vertex && g.has_edge(s.a, u.a)) {
            c.stations.push_back(Station::edge(s.a, u.a));
            continue;
        }
        int f;
        if (s.kind == Station::Vertex) {
            f = face_in_direction(g, d, s.a, dir);
        } else {
            int x = s.a, y = s.b;
            Pt e{P[y].x - P[x].x, P[y].y - P[x].y};
            int o = sgn(e.x * dir.y - e.y * dir.x);
            f = o > 0 ? g.face_of(g.dart(x, y)) : g.face_of(g.dart(y, x));
        }
        c.stations.push_back(Station::hop(g.face_key(f)));
    }
    return c;
}

}  // namespace col
