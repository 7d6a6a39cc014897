#include "segchi/geometry.hpp"

#include "segchi/errors.hpp"

namespace segchi {

Segment::Segment(Point p_, Point q_, int id_, SegmentRole role_, std::vector<int> path_)
    : p(std::move(p_)), q(std::move(q_)), id(id_), role(role_), path(std::move(path_)) {
    if (!(p.x < q.x && p.y < q.y))
        throw ValueError("segment must have strictly positive slope: (" + p.x.str() + "," +
                         p.y.str() + ")-(" + q.x.str() + "," + q.y.str() + ")");
}

Rect::Rect(Rational x0_, Rational y0_, Rational x1_, Rational y1_)
    : x0(std::move(x0_)), y0(std::move(y0_)), x1(std::move(x1_)), y1(std::move(y1_)) {
    if (!(x0 < x1 && y0 < y1))
        throw DegenerateRect("rectangle must have positive area: [" + x0.str() + "," + x1.str() +
                             "]x[" + y0.str() + "," + y1.str() + "]");
}

Rect Rect::scaled_centered(long num, long den) const {
    Rational f(num, den);
    Rational cx = midpoint(x0, x1), cy = midpoint(y0, y1);
    Rational hw = width() * f / Rational(2), hh = height() * f / Rational(2);
    return Rect(cx - hw, cy - hh, cx + hw, cy + hh);
}

Probe::Probe(Rect rect_, Rect root_, ProbeKind kind_, int id_, std::vector<int> pierced_)
    : rect(std::move(rect_)), root(std::move(root_)), kind(kind_), id(id_),
      pierced(std::move(pierced_)) {
    if (root.x0 != rect.x0 || root.y0 != rect.y0 || root.y1 != rect.y1 || root.x1 > rect.x1)
        throw ValueError("probe root must be the left-anchored sub-rectangle of its probe");
}

int orientation(const Point& a, const Point& b, const Point& c) {
    Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return cross.sign();
}

bool point_on_segment(const Point& pt, const Segment& s) {
    // Positive slope: both coordinates are monotone along the segment.
    return orientation(s.p, s.q, pt) == 0 && s.p.x <= pt.x && pt.x <= s.q.x;
}

bool segments_intersect(const Segment& a, const Segment& b) {
    int d1 = orientation(b.p, b.q, a.p);
    int d2 = orientation(b.p, b.q, a.q);
    int d3 = orientation(a.p, a.q, b.p);
    int d4 = orientation(a.p, a.q, b.q);
    if (d1 * d2 < 0 && d3 * d4 < 0)
        return true;
    if (d1 == 0 && point_on_segment(a.p, b))
        return true;
    if (d2 == 0 && point_on_segment(a.q, b))
        return true;
    if (d3 == 0 && point_on_segment(b.p, a))
        return true;
    if (d4 == 0 && point_on_segment(b.q, a))
        return true;
    return false;
}

std::optional<Point> crossing_point(const Segment& a, const Segment& b) {
    int d1 = orientation(b.p, b.q, a.p);
    int d2 = orientation(b.p, b.q, a.q);
    int d3 = orientation(a.p, a.q, b.p);
    int d4 = orientation(a.p, a.q, b.q);
    if (!(d1 * d2 < 0 && d3 * d4 < 0))
        return std::nullopt;
    Point r{a.q.x - a.p.x, a.q.y - a.p.y};
    Point s{b.q.x - b.p.x, b.q.y - b.p.y};
    Rational denom = r.x * s.y - r.y * s.x; // nonzero: proper crossing
    Rational t = ((b.p.x - a.p.x) * s.y - (b.p.y - a.p.y) * s.x) / denom;
    return Point{a.p.x + t * r.x, a.p.y + t * r.y};
}

Rational x_at_y(const Segment& s, const Rational& y) {
    if (y < s.p.y || y > s.q.y)
        throw OutOfRange("x_at_y: y=" + y.str() + " outside [" + s.p.y.str() + "," +
                         s.q.y.str() + "]");
    return s.p.x + (y - s.p.y) * (s.q.x - s.p.x) / (s.q.y - s.p.y);
}

Rational y_at_x(const Segment& s, const Rational& x) {
    if (x < s.p.x || x > s.q.x)
        throw OutOfRange("y_at_x: x=" + x.str() + " outside [" + s.p.x.str() + "," +
                         s.q.x.str() + "]");
    return s.p.y + (x - s.p.x) * (s.q.y - s.p.y) / (s.q.x - s.p.x);
}

std::optional<std::pair<Rational, Rational>> clip_to_rect(const Segment& s, const Rect& r) {
    // Positive slope makes all four Liang-Barsky constraints one-sided.
    Rational dx = s.q.x - s.p.x, dy = s.q.y - s.p.y;
    Rational lo = max(Rational(0), max((r.x0 - s.p.x) / dx, (r.y0 - s.p.y) / dy));
    Rational hi = min(Rational(1), min((r.x1 - s.p.x) / dx, (r.y1 - s.p.y) / dy));
    if (lo > hi)
        return std::nullopt;
    return std::make_pair(lo, hi);
}

bool rect_interior_disjoint(const Segment& s, const Rect& r) {
    auto t = clip_to_rect(s, r);
    if (!t || t->first == t->second)
        return true;
    // A chord of positive length cannot lie along an axis-parallel edge, so
    // its midpoint is strictly interior.
    return false;
}

std::string to_string(PierceViolation v) {
    switch (v) {
    case PierceViolation::None: return "none";
    case PierceViolation::LeftBoundary: return "left-boundary";
    case PierceViolation::EndpointInside: return "endpoint-inside";
    case PierceViolation::NotThrough: return "not-through";
    }
    return "?";
}

PierceResult segment_pierces_rect(const Segment& s, const Rect& r) {
    if (!clip_to_rect(s, r))
        return {Pierce::Misses, PierceViolation::None};
    if (r.contains_closed(s.p) || r.contains_closed(s.q))
        return {Pierce::Violates, PierceViolation::EndpointInside};
    if (s.p.x <= r.x0 && r.x0 <= s.q.x) {
        Rational y = y_at_x(s, r.x0);
        if (r.y0 <= y && y <= r.y1)
            return {Pierce::Violates, PierceViolation::LeftBoundary};
    }
    if (s.p.y <= r.y0 && r.y1 <= s.q.y) {
        Rational xb = x_at_y(s, r.y0);
        Rational xt = x_at_y(s, r.y1);
        if (r.x0 < xb && xt <= r.x1)
            return {Pierce::Pierces, PierceViolation::None};
    }
    return {Pierce::Violates, PierceViolation::NotThrough};
}

PierceResult segment_pierces_probe(const Segment& s, const Probe& p) {
    return segment_pierces_rect(s, p.rect);
}

} // namespace segchi
