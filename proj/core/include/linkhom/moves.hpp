#pragma once

#include <variant>

#include "linkhom/diagram.hpp"

namespace linkhom {

// Elementary moves of a piecewise-linear link homotopy.  Every move except
// SetHeight must leave the inter-component crossing structure intact --
// R2Insert/R2Delete up to one cancelling crossing pair -- and this is
// verified by comparing crossing multisets before and after.  A SetHeight
// that reverses the over label of exactly one crossing is a discriminant
// event; reversing more than one is rejected.

struct JiggleVertex {
  int component = 1;
  std::size_t index = 0;
  Point new_point;

  friend bool operator==(const JiggleVertex& x, const JiggleVertex& y) = default;
};

struct Subdivide {
  int component = 1;
  std::size_t segment = 0;
  Point point;  // strictly inside the segment

  friend bool operator==(const Subdivide& x, const Subdivide& y) = default;
};

// Removes vertex `index`; its two adjacent segments must be collinear,
// carry equal heights, and the vertex must lie strictly between its
// neighbours.  Index 0 refers to the corner at the closure point.
struct MergeCollinear {
  int component = 1;
  std::size_t index = 0;

  friend bool operator==(const MergeCollinear& x, const MergeCollinear& y) = default;
};

// Re-expresses the component through a deck translate: vertices become
// g(vertices), the closure becomes g h g^-1.  A geometric no-op.
struct SlidePeriod {
  int component = 1;
  GroupElement deck;

  friend bool operator==(const SlidePeriod& x, const SlidePeriod& y) = default;
};

// Pokes a two-segment finger out of segment `segment`: the subsegment
// between parameters `from` and `to` is replaced by the detour through
// `apex`.  Creates exactly one cancelling pair of crossings.
struct R2Insert {
  int component = 1;
  std::size_t segment = 0;
  Rat from;
  Rat to;
  Point apex;

  friend bool operator==(const R2Insert& x, const R2Insert& y) = default;
};

// Inverse: removes the finger with apex vertex `apex` (and its two
// neighbouring vertices), deleting one cancelling pair.
struct R2Delete {
  int component = 1;
  std::size_t apex = 0;

  friend bool operator==(const R2Delete& x, const R2Delete& y) = default;
};

struct SetHeight {
  int component = 1;
  std::size_t segment = 0;
  std::int64_t height = 0;

  friend bool operator==(const SetHeight& x, const SetHeight& y) = default;
};

using Move = std::variant<JiggleVertex, Subdivide, MergeCollinear, SlidePeriod, R2Insert, R2Delete,
                          SetHeight>;

struct MoveScript {
  LinkDiagram initial;
  std::vector<Move> moves;
};

// A transverse passage through the discriminant: the instant at which a
// SetHeight move carries its segment through the height of the other
// strand at one crossing.  direction is +1 when component 1 ends on top
// and the crossing's frame is positive, i.e. exactly when the move adds
// +[code] to the degree-1 invariant; reversing the move flips it.
struct DiscriminantEvent {
  std::size_t move_index = 0;
  PairClass code;
  GroupElement raw_alpha;
  GroupElement raw_beta;
  int direction = 0;
  LinkDiagram snapshot;  // heights equal exactly at the event crossing
};

struct MoveOutcome {
  LinkDiagram after;
  std::optional<DiscriminantEvent> event;
};

// Applies one move; throws move_error ("move breaks genericity", "move
// alters crossings", "multi-crossing height change") or degeneracy_error.
MoveOutcome apply_move_ex(const LinkDiagram& d, const Move& m, std::size_t move_index = 0);
LinkDiagram apply_move(const LinkDiagram& d, const Move& m);

// Incremental form for walking scripts: takes the current diagram's
// crossing list and returns the next one, avoiding a geometric rescan for
// height-only moves.
struct SteppedOutcome {
  LinkDiagram after;
  std::vector<Crossing> after_crossings;
  std::optional<DiscriminantEvent> event;
};

SteppedOutcome apply_move_stepped(const LinkDiagram& d, const std::vector<Crossing>& before,
                                  const Move& m, std::size_t move_index = 0);

// All discriminant events of the script, in order.
std::vector<DiscriminantEvent> events(const MoveScript& s);

LinkDiagram final_diagram(const MoveScript& s);

// True when every inter-component crossing has component 2 on top, the
// split normalization all invariants vanish on.
bool is_split_position(const LinkDiagram& d);

// (code, sign, over) multiset entry used by the move guards.
struct CrossingSignature {
  PairClass code;
  int sign = 0;
  int over = 0;

  friend bool operator==(const CrossingSignature& a, const CrossingSignature& b) = default;
  friend bool operator<(const CrossingSignature& a, const CrossingSignature& b) {
    if (!(a.code == b.code)) return a.code < b.code;
    if (a.sign != b.sign) return a.sign < b.sign;
    return a.over < b.over;
  }
};

std::vector<CrossingSignature> crossing_signature(const std::vector<Crossing>& cs);

}  // namespace linkhom
