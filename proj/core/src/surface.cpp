#include "linkhom/surface.hpp"

namespace linkhom {

std::string surface_name(SurfaceKind k) { return k == SurfaceKind::klein ? "klein" : "torus"; }

GroupId surface_group(SurfaceKind k) {
  return k == SurfaceKind::klein ? GroupId::klein : GroupId::zxz;
}

DeckMap deck_map(SurfaceKind k, const GroupElement& g) {
  if (g.group() != surface_group(k)) throw group_mismatch("deck_map: element not in the surface group");
  DeckMap m;
  m.ty = g.r();
  if (k == SurfaceKind::torus || is_even(g.r())) {
    m.sx = 1;
    m.tx = g.s();
  } else {
    m.sx = -1;
    m.tx = 1 - g.s();
  }
  return m;
}

Point deck_apply(const GroupElement& g, const Point& p, SurfaceKind k) {
  return deck_map(k, g)(p);
}

GroupElement chart_element(SurfaceKind k, const Point& p) {
  const Int r = -rat_floor(p.y);
  Int s;
  if (k == SurfaceKind::torus || is_even(r)) {
    s = -rat_floor(p.x);
  } else {
    s = rat_floor(1 - p.x);  // lands 1 - x - s in [0,1)
  }
  const GroupElement g = k == SurfaceKind::klein ? GroupElement::klein(r, s) : GroupElement::torus(r, s);
  return g;
}

}  // namespace linkhom
