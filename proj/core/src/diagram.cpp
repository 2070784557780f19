#include "linkhom/diagram.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace linkhom {

namespace {

struct PeriodSegment {
  Point a;
  Point b;
  std::int64_t height;
};

std::vector<PeriodSegment> period_segments(const Component& c, SurfaceKind k) {
  std::vector<PeriodSegment> segs;
  const std::size_t n = c.vertices.size();
  segs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = c.vertices[i];
    const Point b = i + 1 < n ? c.vertices[i + 1] : deck_apply(c.closure, c.vertices[0], k);
    segs.push_back({a, b, c.heights[i]});
  }
  return segs;
}

BBox bbox_of(const std::vector<PeriodSegment>& segs) {
  BBox box = BBox::at(segs.front().a);
  for (const auto& s : segs) {
    box.absorb(s.a);
    box.absorb(s.b);
  }
  return box;
}

// Deck translates g with g(box2) meeting box1.  The y-ranges bound the
// power of the vertical generator, the x-ranges then bound the horizontal
// one per parity.
std::vector<GroupElement> candidate_translates(SurfaceKind k, const BBox& box1, const BBox& box2) {
  std::vector<GroupElement> out;
  const Int rmin = rat_ceil(box1.ymin - box2.ymax);
  const Int rmax = rat_floor(box1.ymax - box2.ymin);
  for (Int r = rmin; r <= rmax; ++r) {
    Int smin, smax;
    if (k == SurfaceKind::torus || is_even(r)) {
      smin = rat_ceil(box1.xmin - box2.xmax);
      smax = rat_floor(box1.xmax - box2.xmin);
    } else {
      smin = rat_ceil(1 - box2.xmax - box1.xmax);
      smax = rat_floor(1 - box2.xmin - box1.xmin);
    }
    for (Int s = smin; s <= smax; ++s) {
      out.push_back(k == SurfaceKind::klein ? GroupElement::klein(r, s) : GroupElement::torus(r, s));
    }
  }
  return out;
}

struct ScanResult {
  std::vector<Crossing> crossings;
  std::vector<DegeneracyReport> issues;
};

int sgn(const Rat& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

void structural_issues(const Component& c, int which, SurfaceKind k,
                       std::vector<DegeneracyReport>& issues) {
  if (c.vertices.empty()) {
    issues.push_back({"component has no vertices", {{which, 0}}, std::nullopt});
    return;
  }
  if (c.heights.size() != c.vertices.size()) {
    issues.push_back({"height count differs from segment count", {{which, 0}}, std::nullopt});
    return;
  }
  const auto segs = period_segments(c, k);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (segs[i].a == segs[i].b) {
      issues.push_back({"zero-length segment", {{which, i}}, segs[i].a});
    }
  }
}

ScanResult scan(const LinkDiagram& d) {
  ScanResult out;
  structural_issues(d.comp1, 1, d.surface, out.issues);
  structural_issues(d.comp2, 2, d.surface, out.issues);
  if (!out.issues.empty()) return out;

  const auto segs1 = period_segments(d.comp1, d.surface);
  const auto segs2 = period_segments(d.comp2, d.surface);
  const BBox box1 = bbox_of(segs1);
  const BBox box2 = bbox_of(segs2);
  std::vector<BBox> seg1_boxes;
  seg1_boxes.reserve(segs1.size());
  for (const auto& s : segs1) {
    BBox box = BBox::at(s.a);
    box.absorb(s.b);
    seg1_boxes.push_back(box);
  }

  for (const GroupElement& g : candidate_translates(d.surface, box1, box2)) {
    const DeckMap gm = deck_map(d.surface, g);
    for (std::size_t j = 0; j < segs2.size(); ++j) {
      const Point b0 = gm(segs2[j].a);
      const Point b1 = gm(segs2[j].b);
      BBox tbox = BBox::at(b0);
      tbox.absorb(b1);
      if (!tbox.meets(box1)) continue;
      for (std::size_t i = 0; i < segs1.size(); ++i) {
        if (!tbox.meets(seg1_boxes[i])) continue;
        const auto hit = intersect_segments(segs1[i].a, segs1[i].b, b0, b1);
        switch (hit.kind) {
          case IntersectionKind::none:
            continue;
          case IntersectionKind::overlap:
            out.issues.push_back({"collinear overlap between the two components",
                                  {{1, i}, {2, j}},
                                  std::nullopt});
            continue;
          case IntersectionKind::touching:
            out.issues.push_back({"intersection at a segment endpoint", {{1, i}, {2, j}}, hit.where});
            continue;
          case IntersectionKind::proper:
            break;
        }
        Crossing c;
        c.seg1 = i;
        c.seg2 = j;
        c.t1 = hit.t;
        c.t2 = hit.u;
        c.translate = g;
        c.chart = chart_element(d.surface, hit.where);
        c.rep = deck_apply(c.chart, hit.where, d.surface);
        c.height1 = segs1[i].height;
        c.height2 = segs2[j].height;
        c.over = c.height1 > c.height2 ? 1 : (c.height2 > c.height1 ? 2 : 0);
        const Point d1 = segs1[i].b - segs1[i].a;
        const Point d2 = b1 - b0;
        c.frame_sign = deck_map(d.surface, c.chart).sx * sgn(cross(d1, d2));
        c.sign = c.over == 1 ? c.frame_sign : (c.over == 2 ? -c.frame_sign : 0);
        const GroupElement k_inv = inverse(c.chart);
        c.raw_alpha = multiply(multiply(c.chart, d.comp1.closure), k_inv);
        c.raw_beta = multiply(multiply(c.chart, multiply(multiply(g, d.comp2.closure), inverse(g))), k_inv);
        c.code = pair_canonical(c.raw_alpha, c.raw_beta);
        out.crossings.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::optional<DegeneracyReport> genericity_issues(const LinkDiagram& d, const ScanResult& scanned,
                                                  GenericityMode mode) {
  if (!scanned.issues.empty()) return scanned.issues.front();

  std::map<Point, std::vector<const Crossing*>> by_rep;
  for (const Crossing& c : scanned.crossings) by_rep[c.rep].push_back(&c);
  for (const auto& [rep, list] : by_rep) {
    if (list.size() > 1) {
      std::vector<SegmentRef> segs;
      for (const Crossing* c : list) {
        segs.push_back({1, c->seg1});
        segs.push_back({2, c->seg2});
      }
      return DegeneracyReport{"triple point: several crossings share one image point", segs, rep};
    }
  }

  std::vector<const Crossing*> singular;
  for (const Crossing& c : scanned.crossings) {
    if (c.rep.x == 0 || c.rep.y == 0) {
      return DegeneracyReport{"crossing representative on the fundamental-domain boundary",
                              {{1, c.seg1}, {2, c.seg2}},
                              c.rep};
    }
    if (c.over == 0) singular.push_back(&c);
  }
  if (mode == GenericityMode::strict) {
    if (!singular.empty()) {
      const Crossing* c = singular.front();
      return DegeneracyReport{"equal heights at an inter-component crossing",
                              {{1, c->seg1}, {2, c->seg2}},
                              c->rep};
    }
  } else {
    if (singular.empty())
      return DegeneracyReport{"not a singular snapshot: no equal-height crossing", {}, std::nullopt};
    if (singular.size() > 1) {
      std::vector<SegmentRef> segs;
      for (const Crossing* c : singular) {
        segs.push_back({1, c->seg1});
        segs.push_back({2, c->seg2});
      }
      return DegeneracyReport{"several equal-height crossings in one snapshot", segs, std::nullopt};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<DegeneracyReport> validate(const LinkDiagram& d, GenericityMode mode) {
  const GroupId g = surface_group(d.surface);
  if (d.comp1.closure.group() != g || d.comp2.closure.group() != g)
    throw group_mismatch("closure element not in the surface group");
  return genericity_issues(d, scan(d), mode);
}

std::vector<Crossing> crossings(const LinkDiagram& d, GenericityMode mode) {
  const GroupId g = surface_group(d.surface);
  if (d.comp1.closure.group() != g || d.comp2.closure.group() != g)
    throw group_mismatch("closure element not in the surface group");
  ScanResult scanned = scan(d);
  if (auto report = genericity_issues(d, scanned, mode)) throw degeneracy_error(*report);
  return std::move(scanned.crossings);
}

std::vector<Crossing> enumerate_crossings(const LinkDiagram& d) { return scan(d).crossings; }

GroupElement component_class(const LinkDiagram& d, int which) {
  if (which != 1 && which != 2) throw input_error("component_class: component must be 1 or 2");
  return which == 1 ? d.comp1.closure : d.comp2.closure;
}

namespace {

// A two-segment zigzag from base to cls(base); the bend keeps the
// projected curve from retracing itself, which a straight representative
// does whenever the exponents share a factor (b^2 double-covers a
// horizontal circle).
Component split_component(const GroupElement& cls, SurfaceKind k, const Point& base, const Rat& side,
                          std::int64_t height, const Point& zig) {
  Component c;
  c.closure = cls;
  if (cls.is_identity()) {
    c.vertices = {base,
                  {base.x + side, base.y},
                  {base.x + side, base.y + side},
                  {base.x, base.y + side}};
  } else {
    const Point end = deck_apply(cls, base, k);
    c.vertices = {base, Rat(1, 2) * (base + end) + zig};
  }
  c.heights.assign(c.vertices.size(), height);
  return c;
}

}  // namespace

LinkDiagram make_split(const GroupElement& class1, const GroupElement& class2) {
  if (class1.group() != class2.group()) throw group_mismatch("make_split");
  SurfaceKind k;
  switch (class1.group()) {
    case GroupId::klein: k = SurfaceKind::klein; break;
    case GroupId::zxz: k = SurfaceKind::torus; break;
    default:
      throw input_error("make_split: no diagram surface for this group");
  }
  std::optional<DegeneracyReport> last;
  for (int attempt = 0; attempt < 64; ++attempt) {
    LinkDiagram d;
    d.surface = k;
    const Rat j1(attempt, 257);
    const Rat j2(attempt, 263);
    const Point zig1{Rat(1, 31) + Rat(attempt, 509), Rat(1, 37) + Rat(attempt, 521)};
    const Point zig2{Rat(1, 41) - Rat(attempt, 499), Rat(1, 43) + Rat(attempt, 487)};
    d.comp1 = split_component(class1, k, {Rat(3, 17) + j1, Rat(4, 19) + j2}, Rat(1, 8), -1, zig1);
    d.comp2 = split_component(class2, k, {Rat(9, 13) + j2, Rat(7, 11) + j1}, Rat(1, 8), +1, zig2);
    last = validate(d);
    if (!last) return d;
  }
  throw degeneracy_error(*last);
}

LinkDiagram perturb(const LinkDiagram& d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> step(-8, 8);
  std::optional<DegeneracyReport> last = validate(d);
  if (!last) return d;
  for (int attempt = 1; attempt <= 64; ++attempt) {
    LinkDiagram out = d;
    const Int denom = Int(4096) * attempt;
    for (Component* c : {&out.comp1, &out.comp2}) {
      for (Point& p : c->vertices) {
        p.x += Rat(Int(step(rng)), denom);
        p.y += Rat(Int(step(rng)), denom);
      }
    }
    last = validate(out);
    if (!last) return out;
  }
  throw degeneracy_error(*last);
}

}  // namespace linkhom
