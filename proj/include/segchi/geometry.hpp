#pragma once

#include "segchi/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace segchi {

struct Point {
    Rational x, y;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

enum class SegmentRole { Base, Diagonal };

// Closed line segment with strictly positive slope: p is the lower-left
// endpoint, q the upper-right one. Horizontal and vertical segments are
// unrepresentable; probe edges are handled as rectangle coordinates instead.
struct Segment {
    Point p, q;
    int id = -1;
    SegmentRole role = SegmentRole::Base;
    std::vector<int> path; // host probe ids locating this copy in the recursion tree

    Segment(Point p_, Point q_, int id_ = -1, SegmentRole role_ = SegmentRole::Base,
            std::vector<int> path_ = {});
};

// Axis-aligned rectangle with positive area.
struct Rect {
    Rational x0, y0, x1, y1;

    Rect(Rational x0_, Rational y0_, Rational x1_, Rational y1_);

    Rational width() const { return x1 - x0; }
    Rational height() const { return y1 - y0; }
    bool contains_closed(const Point& pt) const {
        return x0 <= pt.x && pt.x <= x1 && y0 <= pt.y && pt.y <= y1;
    }
    bool contains_open(const Point& pt) const {
        return x0 < pt.x && pt.x < x1 && y0 < pt.y && pt.y < y1;
    }
    // Centered sub-rectangle with both dimensions scaled by num/den.
    Rect scaled_centered(long num, long den) const;

    friend bool operator==(const Rect& a, const Rect& b) {
        return a.x0 == b.x0 && a.y0 == b.y0 && a.x1 == b.x1 && a.y1 == b.y1;
    }
};

enum class ProbeKind { Base, Lower, Upper };

// Thin query rectangle entering the construction rectangle from the right.
// rect.x1 lies on the enclosing rectangle's right boundary; root is the
// maximal left-anchored sub-rectangle internally disjoint from all segments.
struct Probe {
    Rect rect;
    Rect root;
    ProbeKind kind = ProbeKind::Base;
    int id = -1;
    std::vector<int> pierced; // ids of segments crossing both horizontal edges, ascending

    Probe(Rect rect_, Rect root_, ProbeKind kind_, int id_, std::vector<int> pierced_);
};

// Sign of the cross product (b-a) x (c-a): +1 counterclockwise, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

// Closed-set intersection test, exact; covers collinear overlap and
// endpoint contact.
bool segments_intersect(const Segment& a, const Segment& b);

bool point_on_segment(const Point& pt, const Segment& s);

// Intersection point of two properly crossing segments (orientations
// strictly straddle both ways); nullopt for touching, collinear or disjoint
// pairs.
std::optional<Point> crossing_point(const Segment& a, const Segment& b);

// Unique x with (x, y) on s. Throws OutOfRange if y is outside [p.y, q.y].
Rational x_at_y(const Segment& s, const Rational& y);

// Unique y with (x, y) on s. Throws OutOfRange if x is outside [p.x, q.x].
Rational y_at_x(const Segment& s, const Rational& x);

// Parameter interval of p + t(q-p) inside the closed rectangle, or nullopt
// if the segment misses it.
std::optional<std::pair<Rational, Rational>> clip_to_rect(const Segment& s, const Rect& r);

// True iff s does not meet the open rectangle; boundary contact is allowed.
bool rect_interior_disjoint(const Segment& s, const Rect& r);

enum class Pierce { Misses, Pierces, Violates };
enum class PierceViolation {
    None,
    LeftBoundary,   // touches the probe's left boundary (condition 2)
    EndpointInside, // endpoint inside or on the closed probe rectangle (condition 3)
    NotThrough,     // meets the rectangle without crossing both horizontal edges
};

struct PierceResult {
    Pierce kind = Pierce::Misses;
    PierceViolation why = PierceViolation::None;

    bool pierces() const { return kind == Pierce::Pierces; }
    bool misses() const { return kind == Pierce::Misses; }
};

std::string to_string(PierceViolation v);

// Classifies s against a probe rectangle: Pierces iff s crosses both
// horizontal edges at x strictly greater than r.x0; Misses iff s and the
// closed rectangle are disjoint; Violates otherwise, with the reason.
PierceResult segment_pierces_rect(const Segment& s, const Rect& r);
PierceResult segment_pierces_probe(const Segment& s, const Probe& p);

} // namespace segchi
