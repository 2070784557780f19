#pragma once

#include <iosfwd>

#include "linkhom/numeric.hpp"

namespace linkhom {

// A point of the universal cover (the plane), exact rational coordinates.
struct Point {
  Rat x;
  Rat y;

  friend Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
  friend Point operator*(const Rat& t, const Point& p) { return {t * p.x, t * p.y}; }
  friend bool operator==(const Point& p, const Point& q) = default;
  friend bool operator<(const Point& p, const Point& q) {
    if (p.x != q.x) return p.x < q.x;
    return p.y < q.y;
  }
};

std::ostream& operator<<(std::ostream& os, const Point& p);

inline Rat cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Rat dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

struct BBox {
  Rat xmin, xmax, ymin, ymax;

  void absorb(const Point& p) {
    if (p.x < xmin) xmin = p.x;
    if (p.x > xmax) xmax = p.x;
    if (p.y < ymin) ymin = p.y;
    if (p.y > ymax) ymax = p.y;
  }
  bool meets(const BBox& o) const {
    return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
  }
  static BBox at(const Point& p) { return {p.x, p.x, p.y, p.y}; }
};

enum class IntersectionKind {
  none,
  proper,    // transverse, interior to both segments
  touching,  // single point involving a segment endpoint
  overlap,   // collinear with a shared sub-segment of positive length
};

struct SegmentIntersection {
  IntersectionKind kind = IntersectionKind::none;
  Point where;  // meaningful for proper and touching
  Rat t;        // parameter on [a0,a1], proper/touching only
  Rat u;        // parameter on [b0,b1]
};

// Exact intersection of segments [a0,a1] and [b0,b1]; endpoints count as
// touching, never as proper.
SegmentIntersection intersect_segments(const Point& a0, const Point& a1, const Point& b0,
                                       const Point& b1);

}  // namespace linkhom
