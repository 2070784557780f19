#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "linkhom/diagram.hpp"
#include "linkhom/moves.hpp"

using namespace linkhom;
using namespace linkhom::fixtures;

namespace {

Point P(int xn, int xd, int yn, int yd) { return Point{Rat(xn, xd), Rat(yn, yd)}; }

LinkDiagram translate_comp2(const LinkDiagram& d, const GroupElement& g) {
  LinkDiagram out = d;
  for (Point& p : out.comp2.vertices) p = deck_apply(g, p, d.surface);
  out.comp2.closure = multiply(multiply(g, d.comp2.closure), inverse(g));
  return out;
}

LinkDiagram translate_comp1(const LinkDiagram& d, const GroupElement& g) {
  LinkDiagram out = d;
  for (Point& p : out.comp1.vertices) p = deck_apply(g, p, d.surface);
  out.comp1.closure = multiply(multiply(g, d.comp1.closure), inverse(g));
  return out;
}

}  // namespace

TEST_CASE("deck transformations on the klein cover") {
  CHECK(deck_apply(GroupElement::klein(1, 0), P(1, 2, 0, 1), SurfaceKind::klein) == P(1, 2, 1, 1));
  CHECK(deck_apply(GroupElement::identity(GroupId::klein), P(3, 7, 2, 5), SurfaceKind::klein) ==
        P(3, 7, 2, 5));
  // a b in normal form acts as A after B.
  CHECK(deck_apply(GroupElement::klein(1, 1), Point{Rat(0), Rat(0)}, SurfaceKind::klein) ==
        P(0, 1, 1, 1));
  // A o B = B^-1 o A, mirroring ab = b^-1 a.
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> d(-30, 30);
  for (int i = 0; i < 300; ++i) {
    const Point p{Rat(d(rng), 7), Rat(d(rng), 11)};
    const GroupElement a = GroupElement::klein(1, 0), b = GroupElement::klein(0, 1);
    CHECK(deck_apply(multiply(a, b), p, SurfaceKind::klein) ==
          deck_apply(a, deck_apply(b, p, SurfaceKind::klein), SurfaceKind::klein));
    CHECK(deck_apply(multiply(a, a), p, SurfaceKind::klein) == p + Point{Rat(0), Rat(2)});
  }
}

TEST_CASE("deck action is a group action") {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int i = 0; i < 500; ++i) {
    const GroupElement g = GroupElement::klein(d(rng), d(rng));
    const GroupElement h = GroupElement::klein(d(rng), d(rng));
    const Point p{Rat(d(rng), 13), Rat(d(rng), 9)};
    CHECK(deck_apply(multiply(g, h), p, SurfaceKind::klein) ==
          deck_apply(g, deck_apply(h, p, SurfaceKind::klein), SurfaceKind::klein));
  }
}

TEST_CASE("chart element lands points in the fundamental domain") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> num(-50, 50);
  for (SurfaceKind k : {SurfaceKind::klein, SurfaceKind::torus}) {
    for (int i = 0; i < 500; ++i) {
      const Point p{Rat(num(rng), 17), Rat(num(rng), 23)};
      const Point q = deck_apply(chart_element(k, p), p, k);
      CHECK(q.x >= 0);
      CHECK(q.x < 1);
      CHECK(q.y >= 0);
      CHECK(q.y < 1);
    }
  }
}

TEST_CASE("split diagrams validate and have no component-1-over crossings") {
  const LinkDiagram d = make_split(GroupElement::identity(GroupId::klein),
                                   GroupElement::identity(GroupId::klein));
  CHECK_FALSE(validate(d));
  CHECK(crossings(d).empty());
  CHECK(component_class(d, 1).is_identity());
  CHECK(component_class(d, 2).is_identity());

  const LinkDiagram lines = make_split(GroupElement::klein(1, 0), GroupElement::klein(0, 1));
  CHECK_FALSE(validate(lines));
  CHECK(component_class(lines, 1) == GroupElement::klein(1, 0));
  CHECK(component_class(lines, 2) == GroupElement::klein(0, 1));
  CHECK(is_split_position(lines));

  for (int r = -2; r <= 2; ++r) {
    for (int s = -2; s <= 2; ++s) {
      const LinkDiagram any = make_split(GroupElement::klein(r, s), GroupElement::klein(s, r));
      CHECK(is_split_position(any));
    }
  }
}

TEST_CASE("degenerate inputs are rejected with named segments") {
  // Crossing at a shared vertex.
  LinkDiagram d;
  d.surface = SurfaceKind::klein;
  d.comp1 = square_loop(+1, +1, +1, +1);
  d.comp1.vertices[0] = P(1, 2, 1, 4);  // now a vertex sits on the line below
  d.comp2 = vertical_line(0);
  const auto report = validate(d);
  REQUIRE(report.has_value());
  CHECK(report->message == "intersection at a segment endpoint");
  CHECK_FALSE(report->segments.empty());
  CHECK_THROWS_AS(crossings(d), degeneracy_error);

  // Equal heights at a crossing.
  LinkDiagram eq{SurfaceKind::klein, square_loop(0, -1, -1, -1), vertical_line(0)};
  const auto r2 = validate(eq);
  REQUIRE(r2.has_value());
  CHECK(r2->message == "equal heights at an inter-component crossing");
  // The same diagram is a fine singular snapshot.
  CHECK_FALSE(validate(eq, GenericityMode::singular));

  // Zero-length segment.
  LinkDiagram z = lines_b_over_a();
  z.comp1.vertices.push_back(z.comp1.vertices[0]);
  z.comp1.vertices.push_back(z.comp1.vertices[0]);
  z.comp1.heights = {-1, -1, -1};
  CHECK(validate(z).has_value());

  // Crossing representative on the fundamental-domain boundary: a square
  // straddling the horizontal gluing, crossed by the line along it.
  LinkDiagram edge;
  edge.surface = SurfaceKind::klein;
  edge.comp1.vertices = {P(1, 4, 3, 4), P(3, 4, 3, 4), P(3, 4, 5, 4), P(1, 4, 5, 4)};
  edge.comp1.closure = GroupElement::identity(GroupId::klein);
  edge.comp1.heights = {+1, +1, +1, +1};
  edge.comp2 = Component{{Point{Rat(0), Rat(1)}}, GroupElement::klein(0, 1), {0}};
  const auto r3 = validate(edge);
  REQUIRE(r3.has_value());
  CHECK(r3->message == "crossing representative on the fundamental-domain boundary");
}

TEST_CASE("loop around the vertical line: two crossings with the torsion code") {
  LinkDiagram d{SurfaceKind::klein, square_loop(+1, +1, +1, +1), vertical_line(0)};
  const auto cs = crossings(d);
  REQUIRE(cs.size() == 2);
  for (const Crossing& c : cs) {
    CHECK(c.over == 1);
    CHECK(c.raw_alpha == GroupElement::identity(GroupId::klein));
    CHECK(free_class_canonical(c.raw_beta) == free_class_canonical(GroupElement::klein(1, 0)));
    CHECK_FALSE(c.code.coorientable);
  }
  // Opposite signs: the loop enters and leaves.
  CHECK(cs[0].sign + cs[1].sign == 0);

  // The same picture around the horizontal line carries the (1, b) code.
  LinkDiagram h{SurfaceKind::klein, square_loop(+1, +1, +1, +1), horizontal_line(Rat(1, 2), 0)};
  const auto hs = crossings(h);
  REQUIRE(hs.size() == 2);
  for (const Crossing& c : hs) {
    CHECK(c.code == pair_canonical(GroupElement::klein(0, 0), GroupElement::klein(0, 1)));
    CHECK(c.code.coorientable);
  }
}

TEST_CASE("two-line diagrams cross once") {
  const auto cs = crossings(lines_a_over_b());
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].over == 1);
  CHECK(cs[0].sign == -1);
  CHECK(cs[0].raw_alpha == GroupElement::klein(1, 0));
  CHECK(cs[0].raw_beta == GroupElement::klein(0, 1));
  const auto cs2 = crossings(lines_b_over_a());
  REQUIRE(cs2.size() == 1);
  CHECK(cs2[0].over == 2);
}

TEST_CASE("the contractible pair meets in four crossings through the gluing") {
  const auto cs = crossings(contractible_pair_link());
  REQUIRE(cs.size() == 4);
  int over1 = 0;
  int through_gluing = 0;
  for (const Crossing& c : cs) {
    CHECK(c.raw_alpha.is_identity());
    CHECK(c.raw_beta.is_identity());
    if (c.over == 1) ++over1;
    if (!c.translate.is_identity()) {
      ++through_gluing;
      CHECK(c.translate == GroupElement::klein(0, 1));
    }
  }
  CHECK(over1 == 2);
  CHECK(through_gluing == 2);
}

TEST_CASE("crossing data is invariant under deck translates of either component") {
  std::mt19937_64 rng(73);
  std::uniform_int_distribution<int> d(-2, 2);
  const LinkDiagram diagrams[] = {loop_over_vertical_line(), loop_over_horizontal_line(),
                                  lines_a_over_b(), contractible_pair_link()};
  for (const LinkDiagram& base : diagrams) {
    const auto expect = crossing_signature(crossings(base));
    for (int i = 0; i < 12; ++i) {
      const GroupElement g = GroupElement::klein(d(rng), d(rng));
      CHECK(crossing_signature(crossings(translate_comp2(base, g))) == expect);
      CHECK(crossing_signature(crossings(translate_comp1(base, g))) == expect);
    }
  }
}

TEST_CASE("subdividing a segment changes no crossing data") {
  const LinkDiagram base = contractible_pair_link();
  const auto expect = crossing_signature(crossings(base));
  for (std::size_t seg = 0; seg < base.comp2.segment_count(); ++seg) {
    LinkDiagram d = base;
    const Point a = d.comp2.vertices[seg];
    const Point b = seg + 1 < d.comp2.vertices.size()
                        ? d.comp2.vertices[seg + 1]
                        : deck_apply(d.comp2.closure, d.comp2.vertices[0], d.surface);
    d.comp2.vertices.insert(d.comp2.vertices.begin() + static_cast<std::ptrdiff_t>(seg) + 1,
                            a + Rat(1, 2) * (b - a));
    d.comp2.heights.insert(d.comp2.heights.begin() + static_cast<std::ptrdiff_t>(seg) + 1,
                           d.comp2.heights[seg]);
    CHECK(crossing_signature(crossings(d)) == expect);
  }
}

TEST_CASE("doubling a period doubles the crossing count") {
  LinkDiagram d = lines_a_over_b();
  Component doubled;
  doubled.vertices = {d.comp1.vertices[0],
                      deck_apply(d.comp1.closure, d.comp1.vertices[0], d.surface)};
  doubled.closure = multiply(d.comp1.closure, d.comp1.closure);
  doubled.heights = {d.comp1.heights[0], d.comp1.heights[0]};
  LinkDiagram twice{d.surface, doubled, d.comp2};
  CHECK(enumerate_crossings(twice).size() == 2 * enumerate_crossings(d).size());
  // The doubled curve retraces itself, which the genericity gate rejects.
  CHECK(validate(twice).has_value());
}

TEST_CASE("swapping the two components swaps over labels and keeps signs") {
  for (const LinkDiagram& base :
       {loop_over_vertical_line(), lines_a_over_b(), contractible_pair_link()}) {
    const LinkDiagram mirrored{base.surface, base.comp2, base.comp1};
    auto left = crossings(base);
    auto right = crossings(mirrored);
    REQUIRE(left.size() == right.size());
    auto by_rep = [](const Crossing& x, const Crossing& y) { return x.rep < y.rep; };
    std::sort(left.begin(), left.end(), by_rep);
    std::sort(right.begin(), right.end(), by_rep);
    for (std::size_t i = 0; i < left.size(); ++i) {
      CHECK(left[i].rep == right[i].rep);
      CHECK(left[i].over == 3 - right[i].over);
      CHECK(left[i].sign == right[i].sign);
    }
  }
}

TEST_CASE("perturb restores genericity deterministically") {
  LinkDiagram eq{SurfaceKind::klein, square_loop(+1, +1, +1, +1), vertical_line(0)};
  // Break genericity by putting a vertex on the other component.
  eq.comp1.vertices[0] = P(1, 2, 1, 4);
  REQUIRE(validate(eq).has_value());
  const LinkDiagram fixed = perturb(eq, 99);
  CHECK_FALSE(validate(fixed));
  CHECK(perturb(eq, 99) == fixed);
  CHECK_FALSE(perturb(eq, 100) == fixed);
}

TEST_CASE("torus diagrams use plain translations") {
  LinkDiagram d;
  d.surface = SurfaceKind::torus;
  d.comp1 = Component{{Point{Rat(1, 2), Rat(0)}}, GroupElement::torus(1, 0), {+1}};
  d.comp2 = Component{{Point{Rat(0), Rat(1, 3)}}, GroupElement::torus(0, 1), {0}};
  const auto cs = crossings(d);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].over == 1);
  CHECK(cs[0].code.coorientable);
  CHECK(cs[0].raw_alpha == GroupElement::torus(1, 0));
  CHECK(cs[0].raw_beta == GroupElement::torus(0, 1));
}

TEST_CASE("mismatched closure groups are rejected") {
  LinkDiagram d = lines_a_over_b();
  d.comp2.closure = GroupElement::torus(0, 1);
  CHECK_THROWS_AS(validate(d), group_mismatch);
}
