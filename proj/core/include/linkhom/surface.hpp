#pragma once

#include <string>

#include "linkhom/geometry.hpp"
#include "linkhom/group.hpp"

namespace linkhom {

// The two base surfaces with fixed fundamental domain [0,1)^2 and fixed
// deck generators acting on the universal cover:
//
//   klein:  a -> A(x,y) = (1-x, y+1)   (glide reflection, reverses
//           orientation of the thickened manifold)
//           b -> B(x,y) = (x+1, y)
//   torus:  a -> (x, y+1),  b -> (x+1, y)
//
// The identities A o B = B^-1 o A and A^2 = (x, y+2) mirror ab = b^-1 a.
// The basepoint is the corner (0,0); fundamental groups at other points
// are identified with it along segments inside the fundamental domain,
// which on deck elements is the identity transport.
enum class SurfaceKind { klein, torus };

std::string surface_name(SurfaceKind k);
GroupId surface_group(SurfaceKind k);

// The affine action of a deck element: (x,y) -> (sx*x + tx, y + ty) with
// sx in {+1,-1}.  For the Klein element a^r b^s in normal form:
// sx = (-1)^r, ty = r, tx = s if r is even and 1-s if r is odd.
struct DeckMap {
  int sx = 1;
  Int tx = 0;
  Int ty = 0;

  Point operator()(const Point& p) const { return {Rat(sx) * p.x + Rat(tx), p.y + Rat(ty)}; }
  friend bool operator==(const DeckMap& m, const DeckMap& n) = default;
};

DeckMap deck_map(SurfaceKind k, const GroupElement& g);
Point deck_apply(const GroupElement& g, const Point& p, SurfaceKind k);

// The unique deck element k with k(p) in the fundamental domain [0,1)^2.
GroupElement chart_element(SurfaceKind k, const Point& p);

}  // namespace linkhom
