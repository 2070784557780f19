#include "linkhom/moves.hpp"

#include <algorithm>

namespace linkhom {

namespace {

Component& pick(LinkDiagram& d, int component) {
  if (component == 1) return d.comp1;
  if (component == 2) return d.comp2;
  throw input_error("move: component must be 1 or 2");
}

std::vector<Crossing> checked_crossings(const LinkDiagram& d) {
  try {
    return crossings(d);
  } catch (const degeneracy_error& e) {
    throw move_error("move breaks genericity: " + e.report.message);
  }
}

void check_signature_equal(const std::vector<Crossing>& before,
                           const std::vector<Crossing>& after) {
  if (crossing_signature(before) != crossing_signature(after))
    throw move_error("move alters crossings");
}

// after == before plus one pair {x, x'} with equal codes, equal over
// labels and opposite signs (or minus such a pair for a delete).
void check_signature_pair(const std::vector<Crossing>& from, const std::vector<Crossing>& to,
                          bool inserted) {
  std::vector<CrossingSignature> small = crossing_signature(from);
  std::vector<CrossingSignature> big = crossing_signature(to);
  if (!inserted) std::swap(small, big);
  std::vector<CrossingSignature> extra;
  std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(extra));
  std::vector<CrossingSignature> missing;
  std::set_difference(small.begin(), small.end(), big.begin(), big.end(), std::back_inserter(missing));
  const bool pair_ok = missing.empty() && extra.size() == 2 && extra[0].code == extra[1].code &&
                       extra[0].over == extra[1].over && extra[0].sign == -extra[1].sign &&
                       big.size() == small.size() + 2;
  if (!pair_ok) throw move_error("move alters crossings");
}

Point segment_end(const Component& c, SurfaceKind k, std::size_t segment) {
  return segment + 1 < c.vertices.size() ? c.vertices[segment + 1]
                                         : deck_apply(c.closure, c.vertices[0], k);
}

bool strictly_between(const Point& a, const Point& p, const Point& b) {
  if (cross(b - a, p - a) != 0) return false;
  const Rat along = dot(p - a, b - a);
  return along > 0 && along < dot(b - a, b - a);
}

LinkDiagram do_jiggle(const LinkDiagram& d, const JiggleVertex& m) {
  LinkDiagram out = d;
  Component& c = pick(out, m.component);
  if (m.index >= c.vertices.size()) throw input_error("jiggleVertex: index out of range");
  c.vertices[m.index] = m.new_point;
  return out;
}

LinkDiagram do_subdivide(const LinkDiagram& d, const Subdivide& m) {
  LinkDiagram out = d;
  Component& c = pick(out, m.component);
  if (m.segment >= c.segment_count()) throw input_error("subdivide: segment out of range");
  const Point a = c.vertices[m.segment];
  const Point b = segment_end(c, out.surface, m.segment);
  if (!strictly_between(a, m.point, b))
    throw move_error("move breaks genericity: subdivision point not inside the segment");
  c.vertices.insert(c.vertices.begin() + static_cast<std::ptrdiff_t>(m.segment) + 1, m.point);
  c.heights.insert(c.heights.begin() + static_cast<std::ptrdiff_t>(m.segment) + 1,
                   c.heights[m.segment]);
  return out;
}

LinkDiagram do_merge(const LinkDiagram& d, const MergeCollinear& m) {
  LinkDiagram out = d;
  Component& c = pick(out, m.component);
  const std::size_t n = c.vertices.size();
  if (m.index >= n) throw input_error("mergeCollinear: index out of range");
  if (n < 2) throw move_error("mergeCollinear: nothing to merge");
  const std::size_t seg_in = (m.index + n - 1) % n;  // segment ending at the corner
  const std::size_t seg_out = m.index;               // segment leaving the corner
  if (c.heights[seg_in] != c.heights[seg_out])
    throw move_error("mergeCollinear: adjacent segments have different heights");
  // The corner at index 0 is the closure point h(v0); its neighbours are
  // v_{n-1} and h(v1).
  Point prev, corner, next;
  if (m.index == 0) {
    prev = c.vertices[n - 1];
    corner = deck_apply(c.closure, c.vertices[0], d.surface);
    next = deck_apply(c.closure, n > 1 ? c.vertices[1] : c.vertices[0], d.surface);
  } else {
    prev = c.vertices[m.index - 1];
    corner = c.vertices[m.index];
    next = segment_end(c, d.surface, m.index);
  }
  if (!strictly_between(prev, corner, next))
    throw move_error("mergeCollinear: corner is not strictly between collinear neighbours");
  c.vertices.erase(c.vertices.begin() + static_cast<std::ptrdiff_t>(m.index));
  c.heights.erase(c.heights.begin() + static_cast<std::ptrdiff_t>(m.index));
  return out;
}

LinkDiagram do_slide(const LinkDiagram& d, const SlidePeriod& m) {
  LinkDiagram out = d;
  Component& c = pick(out, m.component);
  if (m.deck.group() != surface_group(d.surface))
    throw group_mismatch("slidePeriod: deck element not in the surface group");
  for (Point& p : c.vertices) p = deck_apply(m.deck, p, d.surface);
  c.closure = multiply(multiply(m.deck, c.closure), inverse(m.deck));
  return out;
}

LinkDiagram do_r2insert(const LinkDiagram& d, const R2Insert& m) {
  LinkDiagram out = d;
  Component& c = pick(out, m.component);
  if (m.segment >= c.segment_count()) throw input_error("r2insert: segment out of range");
  if (!(m.from > 0 && m.from < m.to && m.to < 1))
    throw input_error("r2insert: need 0 < from < to < 1");
  const Point a = c.vertices[m.segment];
  const Point b = segment_end(c, out.surface, m.segment);
  const Point p = a + m.from * (b - a);
  const Point q = a + m.to * (b - a);
  const auto at = c.vertices.begin() + static_cast<std::ptrdiff_t>(m.segment) + 1;
  c.vertices.insert(at, {p, m.apex, q});
  c.heights.insert(c.heights.begin() + static_cast<std::ptrdiff_t>(m.segment) + 1, 3,
                   c.heights[m.segment]);
  return out;
}

LinkDiagram do_r2delete(const LinkDiagram& d, const R2Delete& m) {
  LinkDiagram out = d;
  Component& c = pick(out, m.component);
  const std::size_t n = c.vertices.size();
  if (m.apex < 2 || m.apex + 2 > n) throw input_error("r2delete: apex index out of range");
  if (c.heights[m.apex - 2] != c.heights[m.apex + 1])
    throw move_error("r2delete: surrounding segments have different heights");
  const auto first = c.vertices.begin() + static_cast<std::ptrdiff_t>(m.apex) - 1;
  c.vertices.erase(first, first + 3);
  const auto hfirst = c.heights.begin() + static_cast<std::ptrdiff_t>(m.apex) - 1;
  c.heights.erase(hfirst, hfirst + 3);
  return out;
}

// Height changes leave the projection untouched, so the new crossing list
// is the old one with heights, over labels and signs patched on the moved
// segment.
SteppedOutcome apply_setheight(const LinkDiagram& d, const std::vector<Crossing>& before,
                               const SetHeight& m, std::size_t move_index) {
  LinkDiagram out = d;
  Component& c = pick(out, m.component);
  if (m.segment >= c.segment_count()) throw input_error("setHeight: segment out of range");
  const std::int64_t h_old = c.heights[m.segment];
  const std::int64_t h_new = m.height;
  c.heights[m.segment] = h_new;

  std::vector<const Crossing*> flips;
  for (const Crossing& x : before) {
    const bool on_segment = m.component == 1 ? x.seg1 == m.segment : x.seg2 == m.segment;
    if (!on_segment) continue;
    const std::int64_t other = m.component == 1 ? x.height2 : x.height1;
    if (h_new == other)
      throw move_error("move breaks genericity: new height equals the other strand's height");
    if ((h_old > other) != (h_new > other)) flips.push_back(&x);
  }
  if (flips.size() > 1) throw move_error("multi-crossing height change");

  SteppedOutcome outcome{std::move(out), before, std::nullopt};
  for (Crossing& x : outcome.after_crossings) {
    const bool on_segment = m.component == 1 ? x.seg1 == m.segment : x.seg2 == m.segment;
    if (!on_segment) continue;
    (m.component == 1 ? x.height1 : x.height2) = h_new;
    x.over = x.height1 > x.height2 ? 1 : 2;
    x.sign = x.over == 1 ? x.frame_sign : -x.frame_sign;
  }

  if (flips.size() == 1) {
    const Crossing& x = *flips.front();
    const std::int64_t other = m.component == 1 ? x.height2 : x.height1;
    const int comp1_over_after =
        m.component == 1 ? (h_new > other ? 1 : -1) : (other > h_new ? 1 : -1);
    DiscriminantEvent e;
    e.move_index = move_index;
    e.code = x.code;
    e.raw_alpha = x.raw_alpha;
    e.raw_beta = x.raw_beta;
    e.direction = comp1_over_after * x.frame_sign;
    e.snapshot = d;
    pick(e.snapshot, m.component).heights[m.segment] = other;
    outcome.event = std::move(e);
  }
  return outcome;
}

}  // namespace

std::vector<CrossingSignature> crossing_signature(const std::vector<Crossing>& cs) {
  std::vector<CrossingSignature> out;
  out.reserve(cs.size());
  for (const Crossing& c : cs) out.push_back({c.code, c.sign, c.over});
  std::sort(out.begin(), out.end());
  return out;
}

bool is_split_position(const LinkDiagram& d) {
  for (const Crossing& c : crossings(d)) {
    if (c.over != 2) return false;
  }
  return true;
}

SteppedOutcome apply_move_stepped(const LinkDiagram& d, const std::vector<Crossing>& before,
                                  const Move& m, std::size_t move_index) {
  if (const auto* sh = std::get_if<SetHeight>(&m)) {
    return apply_setheight(d, before, *sh, move_index);
  }
  LinkDiagram out = std::visit(
      [&](const auto& move) -> LinkDiagram {
        using T = std::decay_t<decltype(move)>;
        if constexpr (std::is_same_v<T, JiggleVertex>) return do_jiggle(d, move);
        else if constexpr (std::is_same_v<T, Subdivide>) return do_subdivide(d, move);
        else if constexpr (std::is_same_v<T, MergeCollinear>) return do_merge(d, move);
        else if constexpr (std::is_same_v<T, SlidePeriod>) return do_slide(d, move);
        else if constexpr (std::is_same_v<T, R2Insert>) return do_r2insert(d, move);
        else if constexpr (std::is_same_v<T, R2Delete>) return do_r2delete(d, move);
        else return d;
      },
      m);
  std::vector<Crossing> after = checked_crossings(out);
  if (std::holds_alternative<R2Insert>(m)) {
    check_signature_pair(before, after, /*inserted=*/true);
  } else if (std::holds_alternative<R2Delete>(m)) {
    check_signature_pair(before, after, /*inserted=*/false);
  } else {
    check_signature_equal(before, after);
  }
  return {std::move(out), std::move(after), std::nullopt};
}

MoveOutcome apply_move_ex(const LinkDiagram& d, const Move& m, std::size_t move_index) {
  SteppedOutcome out = apply_move_stepped(d, crossings(d), m, move_index);
  return {std::move(out.after), std::move(out.event)};
}

LinkDiagram apply_move(const LinkDiagram& d, const Move& m) { return apply_move_ex(d, m).after; }

std::vector<DiscriminantEvent> events(const MoveScript& s) {
  std::vector<DiscriminantEvent> out;
  LinkDiagram current = s.initial;
  std::vector<Crossing> cs = crossings(current);
  for (std::size_t i = 0; i < s.moves.size(); ++i) {
    SteppedOutcome step = apply_move_stepped(current, cs, s.moves[i], i);
    if (step.event) out.push_back(std::move(*step.event));
    current = std::move(step.after);
    cs = std::move(step.after_crossings);
  }
  return out;
}

LinkDiagram final_diagram(const MoveScript& s) {
  LinkDiagram current = s.initial;
  std::vector<Crossing> cs = crossings(current);
  for (const Move& m : s.moves) {
    SteppedOutcome step = apply_move_stepped(current, cs, m, 0);
    current = std::move(step.after);
    cs = std::move(step.after_crossings);
  }
  return current;
}

}  // namespace linkhom
