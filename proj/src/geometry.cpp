#include "collinear/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "collinear/error.hpp"

namespace col {

int orient_exact(const Pt& a, const Pt& b, const Pt& c) {
    Q d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(d);
}

int orient(const CachedPt& a, const CachedPt& b, const CachedPt& c) {
    double M = std::max({std::fabs(a.x), std::fabs(a.y), std::fabs(b.x), std::fabs(b.y), std::fabs(c.x), std::fabs(c.y)});
    if (M > 1e150 || M < 1e-150) return orient_exact(*a.p, *b.p, *c.p);
    double det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    // every input carries relative error 2^-52; 64 M^2 2^-52 dominates the propagated error
    double bound = 64.0 * M * M * 2.220446049250313e-16;
    if (det > bound) return 1;
    if (det < -bound) return -1;
    return orient_exact(*a.p, *b.p, *c.p);
}

int orient(const Pt& a, const Pt& b, const Pt& c) { return orient(CachedPt(a), CachedPt(b), CachedPt(c)); }

namespace {

// coordinate v between lo and hi; doubles decide unless v is close to an end
bool within(double v, double lo, double hi, const Q& ev, const Q& elo, const Q& ehi) {
    if (lo > hi) std::swap(lo, hi);
    double slack = 4 * 2.220446049250313e-16 * std::max({std::fabs(v), std::fabs(lo), std::fabs(hi)});
    if (v > lo + slack && v < hi - slack) return true;
    if (v < lo - slack || v > hi + slack) return false;
    return std::min(elo, ehi) <= ev && ev <= std::max(elo, ehi);
}

bool in_box(const CachedPt& p, const CachedPt& a, const CachedPt& b) {
    return within(p.x, a.x, b.x, p.p->x, a.p->x, b.p->x) && within(p.y, a.y, b.y, p.p->y, a.p->y, b.p->y);
}

}  // namespace

bool on_segment(const Pt& p, const Pt& a, const Pt& b) {
    if (orient(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool segments_touch(const CachedPt& a, const CachedPt& b, const CachedPt& c, const CachedPt& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && in_box(c, a, b)) return true;
    if (o2 == 0 && in_box(d, a, b)) return true;
    if (o3 == 0 && in_box(a, c, d)) return true;
    if (o4 == 0 && in_box(b, c, d)) return true;
    return false;
}

bool segments_touch(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    return segments_touch(CachedPt(a), CachedPt(b), CachedPt(c), CachedPt(d));
}

Q x_at_height(const Pt& a, const Pt& b, const Q& h) {
    Q t = (h - a.y) / (b.y - a.y);
    return a.x + t * (b.x - a.x);
}

Pt line_intersection(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    Q rx = b.x - a.x, ry = b.y - a.y, sx = d.x - c.x, sy = d.y - c.y;
    Q den = rx * sy - ry * sx;
    if (den == 0) throw internal_error("line_intersection: parallel lines");
    Q t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / den;
    return Pt{a.x + t * rx, a.y + t * ry};
}

Q parse_q(const std::string& s) {
    auto ok = [](const std::string& t) {
        size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash), den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!ok(num) || !ok(den) || den[0] == '-' || den[0] == '+') throw input_error("syntax", "bad rational '" + s + "'");
    if (num[0] == '+') num = num.substr(1);
    mpz_class n(num), d(den);
    if (d == 0) throw input_error("syntax", "zero denominator in '" + s + "'");
    Q q(n, d);
    q.canonicalize();
    return q;
}

std::string fmt_q(const Q& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

}  // namespace col
