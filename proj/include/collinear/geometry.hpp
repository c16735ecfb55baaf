#pragma once

#include <gmpxx.h>

#include <string>

namespace col {

using Q = mpq_class;

struct Pt {
    Q x, y;
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    bool operator<(const Pt& o) const { return x < o.x || (x == o.x && y < o.y); }
};

// sign of (b-a) x (c-a): +1 counter-clockwise, -1 clockwise, 0 collinear.
// Filtered in doubles, exact fallback.
int orient(const Pt& a, const Pt& b, const Pt& c);
int orient_exact(const Pt& a, const Pt& b, const Pt& c);

// closed segments ab and cd share a point
bool segments_touch(const Pt& a, const Pt& b, const Pt& c, const Pt& d);
// p on closed segment ab (assumes nothing about collinearity)
bool on_segment(const Pt& p, const Pt& a, const Pt& b);

// Point with its coordinates rounded to double once, for repeated predicates.
struct CachedPt {
    const Pt* p;
    double x, y;
    explicit CachedPt(const Pt& q) : p(&q), x(q.x.get_d()), y(q.y.get_d()) {}
};
int orient(const CachedPt& a, const CachedPt& b, const CachedPt& c);
bool segments_touch(const CachedPt& a, const CachedPt& b, const CachedPt& c, const CachedPt& d);

// intersection of line ab with the horizontal line y = h (requires a.y != b.y)
Q x_at_height(const Pt& a, const Pt& b, const Q& h);
// intersection point of lines ab and cd (requires non-parallel)
Pt line_intersection(const Pt& a, const Pt& b, const Pt& c, const Pt& d);

Q parse_q(const std::string& s);   // "p/q" or "p"; throws input_error
std::string fmt_q(const Q& q);     // always "p/q"

}  // namespace col
