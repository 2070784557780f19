#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linkhom/surface.hpp"

namespace linkhom {

// One link component, modelled as a polyline in the universal cover.  The
// curve is closed by the deck element `closure`: after the last vertex the
// polyline continues to closure(first vertex), and the full lift is the
// union of all closure-power translates of this one period.  heights[i]
// is the integer position of segment i in the R factor of (surface) x R;
// segment i runs from vertices[i] to vertices[i+1] (the last one to the
// implicit closure vertex), so heights.size() == vertices.size().
struct Component {
  std::vector<Point> vertices;
  GroupElement closure;
  std::vector<std::int64_t> heights;

  std::size_t segment_count() const { return vertices.size(); }
  friend bool operator==(const Component& a, const Component& b) = default;
};

struct LinkDiagram {
  SurfaceKind surface = SurfaceKind::klein;
  Component comp1;
  Component comp2;

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) = default;
};

struct SegmentRef {
  int component = 0;  // 1 or 2
  std::size_t segment = 0;
  friend bool operator==(const SegmentRef& a, const SegmentRef& b) = default;
};

struct DegeneracyReport {
  std::string message;
  std::vector<SegmentRef> segments;
  std::optional<Point> where;
};

struct degeneracy_error : std::runtime_error {
  DegeneracyReport report;

  explicit degeneracy_error(DegeneracyReport r)
      : std::runtime_error("degenerate diagram: " + r.message), report(std::move(r)) {}
};

// One crossing of the projected diagram, i.e. one transverse intersection
// of component 1's period with a deck translate g * (component 2's
// period), with its representative moved into the fundamental domain by
// the chart element k.  The based loop codes at the crossing are
//
//   raw_alpha = k h1 k^-1,     raw_beta = k g h2 g^-1 k^-1,
//
// transported to the basepoint with the identity transport (the
// representative already lies in the base domain).  The sign is the
// orientation of (over direction, under direction) in the base chart: the
// directions are pushed through the linear part of k, whose determinant
// is frame_sign's k-contribution.
struct Crossing {
  Point rep;
  int over = 0;  // 1, 2, or 0 at the singular instant of equal heights
  int sign = 0;  // det(over dir, under dir) in the chart; 0 when singular
  PairClass code;
  GroupElement raw_alpha;
  GroupElement raw_beta;

  // Engine data.
  std::size_t seg1 = 0, seg2 = 0;
  Rat t1, t2;              // parameters inside the two segments
  GroupElement translate;  // g
  GroupElement chart;      // k
  int frame_sign = 0;      // det(lin k) * sgn det(d1, d2); sign = +frame_sign iff comp1 over
  std::int64_t height1 = 0, height2 = 0;
};

enum class GenericityMode {
  strict,    // every crossing needs distinct heights
  singular,  // exactly one crossing with equal heights (a discriminant instant)
};

// Checks generic position: all inter-component intersections are
// transverse interior points of segments, no triple points, no crossing
// representative on the fundamental-domain boundary, heights differ at
// every crossing (except the one singular instant in singular mode).
// Self-intersections of a single component are deliberately ignored: link
// homotopy lets a component cross itself.
std::optional<DegeneracyReport> validate(const LinkDiagram& d,
                                         GenericityMode mode = GenericityMode::strict);

// All quotient crossings, each exactly once; throws degeneracy_error when
// validate(d, mode) fails.
std::vector<Crossing> crossings(const LinkDiagram& d, GenericityMode mode = GenericityMode::strict);

// Raw enumeration without the genericity gate (still only proper
// transverse intersections).  Exposed for tests of the period convention.
std::vector<Crossing> enumerate_crossings(const LinkDiagram& d);

// Deck element closing the component; its conjugacy class is the free
// homotopy class of the projected curve.
GroupElement component_class(const LinkDiagram& d, int which);

// The distinguished split diagram in the two prescribed free homotopy
// classes: component 1 at height -1, component 2 at height +1, so no
// crossing has component 1 on top and every degree-1 invariant vanishes.
LinkDiagram make_split(const GroupElement& class1, const GroupElement& class2);

// Deterministic seed-driven nudge of all vertices by small rationals until
// the diagram is generic; throws degeneracy_error when it cannot.
LinkDiagram perturb(const LinkDiagram& d, std::uint64_t seed);

}  // namespace linkhom
