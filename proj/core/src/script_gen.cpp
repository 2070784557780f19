#include "linkhom/script_gen.hpp"

#include <algorithm>
#include <random>

namespace linkhom {

namespace {

struct Generator {
  std::mt19937_64 rng;
  LinkDiagram current;
  MoveScript script;
  std::size_t events_made = 0;
  std::vector<Crossing> current_cs;

  int pick_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  std::size_t pick_index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  }

  const Component& component(int which) const { return which == 1 ? current.comp1 : current.comp2; }

  bool try_apply(const Move& m, std::size_t* events_added = nullptr) {
    try {
      SteppedOutcome step = apply_move_stepped(current, current_cs, m);
      if (step.event) {
        ++events_made;
        if (events_added) ++*events_added;
      }
      current = std::move(step.after);
      current_cs = std::move(step.after_crossings);
      script.moves.push_back(m);
      return true;
    } catch (const move_error&) {
      return false;
    } catch (const degeneracy_error&) {
      return false;
    } catch (const input_error&) {
      return false;
    }
  }

  bool propose_jiggle() {
    const int which = pick_int(1, 2);
    const Component& c = component(which);
    const std::size_t idx = pick_index(c.vertices.size());
    const Int denom = Int(64) * (1 + pick_int(0, 7));
    const Point delta{Rat(Int(pick_int(-3, 3)), denom), Rat(Int(pick_int(-3, 3)), denom)};
    if (delta.x == 0 && delta.y == 0) return false;
    return try_apply(JiggleVertex{which, idx, c.vertices[idx] + delta});
  }

  bool propose_subdivide() {
    const int which = pick_int(1, 2);
    const Component& c = component(which);
    const std::size_t seg = pick_index(c.segment_count());
    static const Rat params[] = {Rat(1, 3), Rat(1, 2), Rat(2, 5), Rat(3, 5)};
    const Rat t = params[pick_index(4)];
    const Point a = c.vertices[seg];
    const Point b = seg + 1 < c.vertices.size() ? c.vertices[seg + 1]
                                                : deck_apply(c.closure, c.vertices[0], current.surface);
    return try_apply(Subdivide{which, seg, a + t * (b - a)});
  }

  bool propose_merge() {
    const int which = pick_int(1, 2);
    const Component& c = component(which);
    if (c.vertices.size() < 2) return false;
    const std::size_t start = pick_index(c.vertices.size());
    for (std::size_t off = 0; off < c.vertices.size(); ++off) {
      const std::size_t idx = (start + off) % c.vertices.size();
      if (try_apply(MergeCollinear{which, idx})) return true;
    }
    return false;
  }

  bool propose_slide() {
    const int which = pick_int(1, 2);
    const int r = pick_int(-1, 1);
    const int s = pick_int(-1, 1);
    if (r == 0 && s == 0) return false;
    const GroupElement g = current.surface == SurfaceKind::klein ? GroupElement::klein(r, s)
                                                                 : GroupElement::torus(r, s);
    return try_apply(SlidePeriod{which, g});
  }

  bool propose_r2insert() {
    const std::vector<Crossing>& cs = current_cs;
    if (cs.empty()) return false;
    const Crossing& x = cs[pick_index(cs.size())];
    const int which = pick_int(1, 2);
    const std::size_t seg = which == 1 ? x.seg1 : x.seg2;
    const Rat tc = which == 1 ? x.t1 : x.t2;
    // Target line in this component's own frame.
    Point l0, l1;
    if (which == 1) {
      const Component& other = current.comp2;
      const DeckMap gm = deck_map(current.surface, x.translate);
      l0 = gm(other.vertices[x.seg2]);
      l1 = gm(x.seg2 + 1 < other.vertices.size()
                  ? other.vertices[x.seg2 + 1]
                  : deck_apply(other.closure, other.vertices[0], current.surface));
    } else {
      const Component& other = current.comp1;
      const DeckMap gm = deck_map(current.surface, inverse(x.translate));
      l0 = gm(other.vertices[x.seg1]);
      l1 = gm(x.seg1 + 1 < other.vertices.size()
                  ? other.vertices[x.seg1 + 1]
                  : deck_apply(other.closure, other.vertices[0], current.surface));
    }
    const Component& c = component(which);
    const Point a = c.vertices[seg];
    const Point b = seg + 1 < c.vertices.size() ? c.vertices[seg + 1]
                                                : deck_apply(c.closure, c.vertices[0], current.surface);
    for (int shrink = 1; shrink <= 4; ++shrink) {
      // Finger beside the crossing, on whichever side has room.
      Rat delta = (1 - tc) / (4 * shrink);
      Rat t0 = tc + delta / 2, t1 = tc + delta;
      if (1 - tc < tc) {
        delta = tc / (4 * shrink);
        t0 = tc - delta;
        t1 = tc - delta / 2;
      }
      if (!(t0 > 0 && t0 < t1 && t1 < 1)) continue;
      const Point z = a + ((t0 + t1) / 2) * (b - a);
      const Point dline = l1 - l0;
      const Rat len2 = dot(dline, dline);
      if (len2 == 0) return false;
      const Point proj = l0 + (dot(z - l0, dline) / len2) * dline;
      const Point apex = proj + (proj - z);
      if (apex == z) continue;
      if (try_apply(R2Insert{which, seg, t0, t1, apex})) return true;
    }
    return false;
  }

  bool propose_r2delete() {
    const int which = pick_int(1, 2);
    const Component& c = component(which);
    if (c.vertices.size() < 4) return false;
    const std::size_t start = 2 + pick_index(c.vertices.size() - 3);
    for (std::size_t off = 0; off + 3 < c.vertices.size(); ++off) {
      std::size_t apex = start + off;
      if (apex + 2 > c.vertices.size()) apex = 2 + (apex - 2) % (c.vertices.size() - 3);
      if (try_apply(R2Delete{which, apex})) return true;
    }
    return false;
  }

  std::vector<const Crossing*> crossings_on(const std::vector<Crossing>& cs, int which,
                                            std::size_t seg) const {
    std::vector<const Crossing*> out;
    for (const Crossing& x : cs) {
      if ((which == 1 ? x.seg1 : x.seg2) == seg) out.push_back(&x);
    }
    return out;
  }

  bool propose_setheight_plain() {
    const int which = pick_int(1, 2);
    const Component& c = component(which);
    const std::size_t seg = pick_index(c.segment_count());
    const auto on_seg = crossings_on(current_cs, which, seg);
    const std::int64_t h = c.heights[seg];
    for (int cand : {pick_int(-3, 3), 1, -1, 2}) {
      const std::int64_t h_new = h + cand;
      if (h_new == h) continue;
      bool ok = true;
      for (const Crossing* x : on_seg) {
        const std::int64_t other = which == 1 ? x->height2 : x->height1;
        if (h_new == other || (h > other) != (h_new > other)) {
          ok = false;
          break;
        }
      }
      if (ok && try_apply(SetHeight{which, seg, h_new})) return true;
    }
    return false;
  }

  bool propose_setheight_event() {
    if (current_cs.empty()) return false;
    const std::size_t target = pick_index(current_cs.size());
    const int which = pick_int(1, 2);
    std::size_t seg = which == 1 ? current_cs[target].seg1 : current_cs[target].seg2;
    Rat tc = which == 1 ? current_cs[target].t1 : current_cs[target].t2;

    // Isolate the chosen crossing on its own subsegment first.
    for (int guard = 0; guard < 8; ++guard) {
      auto on_seg = crossings_on(current_cs, which, seg);
      if (on_seg.size() <= 1) break;
      Rat nearest_low(0), nearest_high(1);
      for (const Crossing* x : on_seg) {
        const Rat t = which == 1 ? x->t1 : x->t2;
        if (t < tc && t > nearest_low) nearest_low = t;
        if (t > tc && t < nearest_high) nearest_high = t;
      }
      const Rat cut = nearest_high < 1 ? (tc + nearest_high) / 2 : (nearest_low + tc) / 2;
      const Component& c = component(which);
      const Point a = c.vertices[seg];
      const Point b = seg + 1 < c.vertices.size()
                          ? c.vertices[seg + 1]
                          : deck_apply(c.closure, c.vertices[0], current.surface);
      if (!try_apply(Subdivide{which, seg, a + cut * (b - a)})) return false;
      if (tc > cut) {
        seg += 1;
        tc = (tc - cut) / (1 - cut);
      } else {
        tc = tc / cut;
      }
    }

    const auto on_seg = crossings_on(current_cs, which, seg);
    if (on_seg.size() != 1) return false;
    const Crossing& x = *on_seg.front();
    const std::int64_t mine = which == 1 ? x.height1 : x.height2;
    const std::int64_t other = which == 1 ? x.height2 : x.height1;
    const std::int64_t h_new = other + (mine < other ? 1 : -1);
    if (h_new == mine) return false;
    std::size_t added = 0;
    return try_apply(SetHeight{which, seg, h_new}, &added);
  }

  void run(const ScriptGenOptions& opt) {
    script.initial = current;
    current_cs = crossings(current);
    std::size_t attempts = 0;
    const std::size_t max_attempts = opt.length * 24 + 64;
    while (script.moves.size() < opt.length && attempts < max_attempts) {
      ++attempts;
      const bool want_event =
          opt.allow_events && events_made < opt.max_events && pick_int(0, 4) == 0;
      if (want_event) {
        propose_setheight_event();
        continue;
      }
      switch (pick_int(0, 9)) {
        case 0:
        case 1:
        case 2: propose_jiggle(); break;
        case 3:
        case 4: propose_subdivide(); break;
        case 5: propose_merge(); break;
        case 6: propose_slide(); break;
        case 7: propose_r2insert(); break;
        case 8: propose_r2delete(); break;
        default: propose_setheight_plain(); break;
      }
    }
  }
};

}  // namespace

MoveScript random_script(const LinkDiagram& d, const ScriptGenOptions& opt, std::uint64_t seed) {
  Generator gen{std::mt19937_64(seed), d, MoveScript{d, {}}, 0, {}};
  gen.run(opt);
  return std::move(gen.script);
}

MoveScript random_script(const LinkDiagram& d, std::size_t length, std::uint64_t seed) {
  return random_script(d, ScriptGenOptions{length, true, 4}, seed);
}

namespace {

// A pair of moves that provably composes to the identity on any diagram.
std::vector<Move> noop_pair(const LinkDiagram& at, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<int> side(1, 2);
  const int which = side(rng);
  const Component& c = which == 1 ? at.comp1 : at.comp2;
  switch (coin(rng)) {
    case 0: {
      const GroupElement g = at.surface == SurfaceKind::klein ? GroupElement::klein(0, 1)
                                                              : GroupElement::torus(0, 1);
      return {SlidePeriod{which, g}, SlidePeriod{which, inverse(g)}};
    }
    case 1: {
      std::uniform_int_distribution<std::size_t> segd(0, c.segment_count() - 1);
      const std::size_t seg = segd(rng);
      const Point a = c.vertices[seg];
      const Point b = seg + 1 < c.vertices.size() ? c.vertices[seg + 1]
                                                  : deck_apply(c.closure, c.vertices[0], at.surface);
      return {Subdivide{which, seg, a + Rat(1, 2) * (b - a)}, MergeCollinear{which, seg + 1}};
    }
    default: {
      const GroupElement g = at.surface == SurfaceKind::klein ? GroupElement::klein(1, 0)
                                                              : GroupElement::torus(1, 0);
      return {SlidePeriod{which, g}, SlidePeriod{which, inverse(g)}};
    }
  }
}

}  // namespace

std::pair<MoveScript, MoveScript> script_pair(const LinkDiagram& d, const ScriptGenOptions& opt,
                                              std::uint64_t seed) {
  const MoveScript a = random_script(d, opt, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);

  MoveScript b{a.initial, {}};
  std::vector<LinkDiagram> states{a.initial};
  for (const Move& m : a.moves) states.push_back(apply_move(states.back(), m));

  // Transpose one pair of adjacent independent height changes when possible.
  std::vector<Move> moves = a.moves;
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i + 1 < moves.size(); ++i) {
    const auto* x = std::get_if<SetHeight>(&moves[i]);
    const auto* y = std::get_if<SetHeight>(&moves[i + 1]);
    if (x && y && (x->component != y->component || x->segment != y->segment)) candidates.push_back(i);
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  for (std::size_t i : candidates) {
    try {
      const LinkDiagram mid = apply_move(states[i], moves[i + 1]);
      const LinkDiagram end = apply_move(mid, moves[i]);
      if (end == states[i + 2]) {
        std::swap(moves[i], moves[i + 1]);
        break;
      }
    } catch (const std::exception&) {
    }
  }

  // Splice in a couple of no-op pairs; each pair must restore the diagram
  // exactly, otherwise it is skipped.
  LinkDiagram current = a.initial;
  std::uniform_int_distribution<int> every(0, 3);
  bool changed = moves != a.moves;
  for (std::size_t i = 0; i <= moves.size(); ++i) {
    if (every(rng) == 0 || (i == moves.size() && !changed)) {
      const std::vector<Move> pair = noop_pair(current, rng);
      try {
        const LinkDiagram restored = apply_move(apply_move(current, pair[0]), pair[1]);
        if (restored == current) {
          b.moves.insert(b.moves.end(), pair.begin(), pair.end());
          changed = true;
        }
      } catch (const std::exception&) {
      }
    }
    if (i < moves.size()) {
      current = apply_move(current, moves[i]);
      b.moves.push_back(moves[i]);
    }
  }
  return {a, b};
}

}  // namespace linkhom
