#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "linkhom/invariants.hpp"
#include "linkhom/script_gen.hpp"

using namespace linkhom;
using namespace linkhom::fixtures;

TEST_CASE("subdivide and merge are inverse") {
  const LinkDiagram d = contractible_pair_link();
  const Point a = d.comp2.vertices[1];
  const Point b = d.comp2.vertices[2];
  const LinkDiagram cut = apply_move(d, Subdivide{2, 1, a + Rat(2, 5) * (b - a)});
  CHECK(cut.comp2.vertices.size() == 5);
  CHECK(crossing_signature(crossings(cut)) == crossing_signature(crossings(d)));
  const LinkDiagram back = apply_move(cut, MergeCollinear{2, 2});
  CHECK(back == d);
}

TEST_CASE("merge at the closure corner works") {
  const LinkDiagram d = lines_b_over_a();
  // Subdividing the single closure segment leaves a corner at index 1;
  // the closure corner itself is index 0.
  const Point a = d.comp1.vertices[0];
  const Point end = deck_apply(d.comp1.closure, a, d.surface);
  const LinkDiagram cut = apply_move(d, Subdivide{1, 0, a + Rat(1, 2) * (end - a)});
  const LinkDiagram back = apply_move(cut, MergeCollinear{1, 1});
  CHECK(back == d);
}

TEST_CASE("r2 insert creates one cancelling pair and delete removes it") {
  const LinkDiagram d = lines_b_over_a();
  const auto before = crossings(d);
  REQUIRE(before.size() == 1);
  const LinkDiagram poked =
      apply_move(d, R2Insert{1, 0, Rat(1, 5), Rat(3, 10), Point{Rat(7, 10), Rat(2, 5)}});
  const auto after = crossings(poked);
  REQUIRE(after.size() == 3);
  // The two new crossings: equal codes, same over label, opposite signs.
  std::vector<const Crossing*> fresh;
  for (const Crossing& c : after) {
    if (!(c.rep == before[0].rep)) fresh.push_back(&c);
  }
  REQUIRE(fresh.size() == 2);
  CHECK(fresh[0]->code == fresh[1]->code);
  CHECK(fresh[0]->over == fresh[1]->over);
  CHECK(fresh[0]->sign == -fresh[1]->sign);

  const LinkDiagram back = apply_move(poked, R2Delete{1, 2});
  CHECK(back == d);
}

TEST_CASE("slide period round trip is exact") {
  const LinkDiagram d = contractible_pair_link();
  const GroupElement g = GroupElement::klein(1, 1);
  const LinkDiagram slid = apply_move(d, SlidePeriod{2, g});
  CHECK_FALSE(slid == d);
  CHECK(crossing_signature(crossings(slid)) == crossing_signature(crossings(d)));
  CHECK(apply_move(slid, SlidePeriod{2, inverse(g)}) == d);
}

TEST_CASE("set height produces a discriminant event exactly on an over flip") {
  // No flips on the segment: plain move, no event.
  {
    LinkDiagram d{SurfaceKind::klein, square_loop(+1, +1, +1, +1), vertical_line(0)};
    const MoveOutcome out = apply_move_ex(d, SetHeight{2, 0, -3});
    CHECK_FALSE(out.event.has_value());
    CHECK(out.after.comp2.heights[0] == -3);
  }
  // One flip: the two-line crossing change.
  {
    const MoveOutcome out = apply_move_ex(lines_b_over_a(), SetHeight{1, 0, +1});
    CHECK(out.after == lines_a_over_b());
    REQUIRE(out.event.has_value());
    const DiscriminantEvent& e = *out.event;
    CHECK(e.code == pair_canonical(GroupElement::klein(1, 0), GroupElement::klein(0, 1)));
    CHECK(e.direction == -1);  // component 1 ends on top, negative frame
    CHECK_FALSE(validate(e.snapshot, GenericityMode::singular).has_value());
    CHECK(validate(e.snapshot).has_value());

    // The reverse flip has the opposite direction.
    const MoveOutcome rev = apply_move_ex(lines_a_over_b(), SetHeight{1, 0, -1});
    CHECK(rev.after == lines_b_over_a());
    REQUIRE(rev.event.has_value());
    CHECK(rev.event->direction == +1);
    CHECK(rev.event->code == e.code);
  }
  // Two flips at once are rejected.
  {
    LinkDiagram d{SurfaceKind::klein, square_loop(+1, +1, +1, +1), vertical_line(0)};
    CHECK_THROWS_WITH_AS(apply_move(d, SetHeight{2, 0, +2}), "multi-crossing height change",
                         move_error);
  }
  // Landing exactly on the other strand's height is degenerate.
  {
    CHECK_THROWS_AS(apply_move(lines_b_over_a(), SetHeight{1, 0, 0}), move_error);
  }
}

TEST_CASE("jiggles that change the crossing structure are rejected") {
  const LinkDiagram d = loop_over_vertical_line();
  // A tiny nudge is fine.
  const LinkDiagram ok =
      apply_move(d, JiggleVertex{1, 0, d.comp1.vertices[0] + Point{Rat(1, 64), Rat(1, 64)}});
  CHECK(crossing_signature(crossings(ok)) == crossing_signature(crossings(d)));
  // Dragging the corner past the line removes one crossing and creates
  // another with different data.
  CHECK_THROWS_WITH_AS(apply_move(d, JiggleVertex{1, 0, Point{Rat(3, 5), Rat(13, 50)}}),
                       "move alters crossings", move_error);
  // Dragging a vertex onto the other strand breaks genericity.
  CHECK_THROWS_AS(apply_move(d, JiggleVertex{1, 0, Point{Rat(1, 2), Rat(1, 4)}}), move_error);
}

TEST_CASE("events of a script") {
  // No height moves: no events.
  {
    MoveScript s{contractible_pair_link(),
                 {SlidePeriod{2, GroupElement::klein(0, 1)},
                  SlidePeriod{2, GroupElement::klein(0, -1)}}};
    CHECK(events(s).empty());
  }
  // A single crossing change on the loop-over-line picture carries the
  // torsion code ((0,0),(1,0)).
  {
    MoveScript s{loop_over_vertical_line(), {SetHeight{1, 0, -2}}};
    const auto es = events(s);
    REQUIRE(es.size() == 1);
    CHECK(es[0].code == pair_canonical(GroupElement::klein(0, 0), GroupElement::klein(1, 0)));
    CHECK(es[0].move_index == 0);
  }
  // A change and its reverse: equal codes, opposite directions.
  {
    MoveScript s{lines_b_over_a(), {SetHeight{1, 0, +1}, SetHeight{1, 0, -1}}};
    const auto es = events(s);
    REQUIRE(es.size() == 2);
    CHECK(es[0].code == es[1].code);
    CHECK(es[0].direction == -es[1].direction);
    CHECK(final_diagram(s) == lines_b_over_a());
  }
}

TEST_CASE("random scripts are reproducible and valid throughout") {
  const LinkDiagram seed = contractible_pair_split();
  const MoveScript empty = random_script(seed, 0, 5);
  CHECK(empty.moves.empty());

  const MoveScript s1 = random_script(seed, 14, 42);
  const MoveScript s2 = random_script(seed, 14, 42);
  CHECK(s1.moves == s2.moves);
  CHECK_FALSE(random_script(seed, 14, 43).moves == s1.moves);
  CHECK(s1.moves.size() > 4);

  LinkDiagram current = s1.initial;
  for (const Move& m : s1.moves) {
    current = apply_move(current, m);  // throws when a prefix is invalid
    CHECK_FALSE(validate(current).has_value());
  }
}

TEST_CASE("non-discriminant scripts never produce events") {
  std::mt19937_64 seeds(101);
  const ScriptGenOptions opt{10, false, 0};
  for (int i = 0; i < 20; ++i) {
    const MoveScript s = random_script(contractible_pair_split(), opt, seeds());
    CHECK(events(s).empty());
  }
}

TEST_CASE("jump rule: every event changes lk1 by direction times its code") {
  std::mt19937_64 seeds(103);
  int checked = 0;
  const LinkDiagram bases[] = {contractible_pair_split(), lines_b_over_a(),
                               loop_over_vertical_line(), loop_over_horizontal_line()};
  for (int round = 0; checked < 500 && round < 400; ++round) {
    const LinkDiagram& base = bases[round % 4];
    const MoveScript s = random_script(base, ScriptGenOptions{12, true, 6}, seeds());
    LinkDiagram current = s.initial;
    LinkingValue value = lk1(current);
    for (const Move& m : s.moves) {
      const MoveOutcome out = apply_move_ex(current, m);
      const LinkingValue next = lk1(out.after);
      if (out.event) {
        ++checked;
        CHECK(next == add(value, LinkingValue::singleton(out.event->raw_alpha,
                                                         out.event->raw_beta,
                                                         out.event->direction)));
      } else {
        CHECK(next == value);
      }
      current = out.after;
      value = next;
    }
  }
  CHECK(checked >= 500);
}

TEST_CASE("path sum identity on fuzzed scripts") {
  std::mt19937_64 seeds(107);
  for (int i = 0; i < 40; ++i) {
    const MoveScript s =
        random_script(contractible_pair_split(), ScriptGenOptions{10, true, 5}, seeds());
    LinkingValue jumps = LinkingValue::zero(GroupId::klein);
    for (const DiscriminantEvent& e : events(s)) {
      jumps = add(jumps, LinkingValue::singleton(e.raw_alpha, e.raw_beta, e.direction));
    }
    CHECK(add(lk1(s.initial), jumps) == lk1(final_diagram(s)));
  }
}
