#pragma once

#include "linkhom/moves.hpp"

// The bundled example links on the Klein bottle, also shipped as JSON
// under fixtures/.  Coordinates are in the unit-square fundamental
// domain; the central vertical line closed by a is the
// orientation-reversing loop, the horizontal line closed by b the
// orientation-preserving one.
namespace linkhom::fixtures {

inline Component square_loop(std::int64_t bottom, std::int64_t right, std::int64_t top,
                             std::int64_t left) {
  Component c;
  c.vertices = {{Rat(1, 4), Rat(1, 4)},
                {Rat(3, 4), Rat(1, 4)},
                {Rat(3, 4), Rat(3, 4)},
                {Rat(1, 4), Rat(3, 4)}};
  c.closure = GroupElement::identity(GroupId::klein);
  c.heights = {bottom, right, top, left};
  return c;
}

inline Component vertical_line(std::int64_t height) {
  return Component{{{Rat(1, 2), Rat(0)}}, GroupElement::klein(1, 0), {height}};
}

inline Component horizontal_line(const Rat& y, std::int64_t height) {
  return Component{{{Rat(0), y}}, GroupElement::klein(0, 1), {height}};
}

// Contractible loop around the vertical line, passing over it at the
// bottom crossing and under it at the top: the mod-2 example.
inline LinkDiagram loop_over_vertical_line() {
  return LinkDiagram{SurfaceKind::klein, square_loop(+1, -1, -1, -1), vertical_line(0)};
}

// The same loop around the horizontal line, over on the right crossing:
// the integer (1, b) example.
inline LinkDiagram loop_over_horizontal_line() {
  return LinkDiagram{SurfaceKind::klein, square_loop(-1, +1, -1, -1),
                     horizontal_line(Rat(1, 2), 0)};
}

// The two-line links with codes (a, b), differing by one crossing change.
inline LinkDiagram lines_b_over_a() {
  return LinkDiagram{SurfaceKind::klein, vertical_line(-1), horizontal_line(Rat(1, 3), 0)};
}

inline LinkDiagram lines_a_over_b() {
  return LinkDiagram{SurfaceKind::klein, vertical_line(+1), horizontal_line(Rat(1, 3), 0)};
}

// Two contractible rectangles: component 2 straddles the vertical gluing
// line, so its projection meets component 1's both directly and through
// the deck translate b, and connecting loops between the two groups of
// crossings are freely homotopic to b.  comp1's bottom edge is
// pre-subdivided so single crossings can change height independently.
inline Component wide_rectangle() {
  Component c;
  c.vertices = {{Rat(-2, 5), Rat(1, 4)},
                {Rat(2, 5), Rat(1, 4)},
                {Rat(2, 5), Rat(3, 5)},
                {Rat(-2, 5), Rat(3, 5)}};
  c.closure = GroupElement::identity(GroupId::klein);
  c.heights = {+1, +1, +1, +1};
  return c;
}

inline Component inner_rectangle(std::int64_t h0, std::int64_t h1, std::int64_t rest) {
  Component c;
  c.vertices = {{Rat(1, 5), Rat(9, 20)},
                {Rat(1, 2), Rat(9, 20)},
                {Rat(4, 5), Rat(9, 20)},
                {Rat(4, 5), Rat(3, 4)},
                {Rat(1, 5), Rat(3, 4)}};
  c.closure = GroupElement::identity(GroupId::klein);
  c.heights = {h0, h1, rest, rest, rest};
  return c;
}

// Split position: comp1 entirely below comp2 (four crossings, all with
// component 2 on top).
inline LinkDiagram contractible_pair_split() {
  return LinkDiagram{SurfaceKind::klein, inner_rectangle(-1, -1, -1), wide_rectangle()};
}

// The link the degree-2 invariant separates from the trivial one: both
// components still contractible, two crossings flipped.
inline LinkDiagram contractible_pair_link() {
  return LinkDiagram{SurfaceKind::klein, inner_rectangle(+2, +2, -1), wide_rectangle()};
}

// Path from the split diagram to contractible_pair_link with exactly two
// discriminant events.
inline MoveScript contractible_pair_path() {
  return MoveScript{contractible_pair_split(),
                    {SetHeight{1, 1, +2}, SetHeight{1, 0, +2}}};
}

}  // namespace linkhom::fixtures
