#include "linkhom/geometry.hpp"

#include <algorithm>
#include <ostream>

namespace linkhom {

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

namespace {

// Do the 1-d intervals [a0,a1] and [b0,b1] (unordered endpoints) share more
// than a point?
bool intervals_overlap(Rat a0, Rat a1, Rat b0, Rat b1) {
  if (a0 > a1) std::swap(a0, a1);
  if (b0 > b1) std::swap(b0, b1);
  return std::max(a0, b0) < std::min(a1, b1);
}

}  // namespace

SegmentIntersection intersect_segments(const Point& a0, const Point& a1, const Point& b0,
                                       const Point& b1) {
  const Point da = a1 - a0;
  const Point db = b1 - b0;
  const Rat denom = cross(da, db);
  if (denom == 0) {
    if (cross(da, b0 - a0) != 0) return {};  // parallel, distinct lines
    // Collinear: project on the dominant axis.
    const bool use_x = da.x != 0 || db.x != 0;
    const Rat pa0 = use_x ? a0.x : a0.y, pa1 = use_x ? a1.x : a1.y;
    const Rat pb0 = use_x ? b0.x : b0.y, pb1 = use_x ? b1.x : b1.y;
    if (intervals_overlap(pa0, pa1, pb0, pb1)) return {IntersectionKind::overlap, {}, 0, 0};
    // They may still touch at one shared endpoint.
    for (const Point& p : {b0, b1}) {
      if (p == a0 || p == a1) return {IntersectionKind::touching, p, p == a0 ? Rat(0) : Rat(1),
                                      p == b0 ? Rat(0) : Rat(1)};
    }
    return {};
  }
  const Rat t = cross(b0 - a0, db) / denom;
  const Rat u = cross(b0 - a0, da) / denom;
  if (t < 0 || t > 1 || u < 0 || u > 1) return {};
  SegmentIntersection out;
  out.where = a0 + t * da;
  out.t = t;
  out.u = u;
  out.kind = (t > 0 && t < 1 && u > 0 && u < 1) ? IntersectionKind::proper : IntersectionKind::touching;
  return out;
}

}  // namespace linkhom
