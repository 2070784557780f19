#include "linkhom/invariants.hpp"

namespace linkhom {

LinkingValue lk1(const LinkDiagram& d) {
  LinkingValue value = LinkingValue::zero(surface_group(d.surface));
  for (const Crossing& c : crossings(d)) {
    if (c.over != 1) continue;
    value = add(value, LinkingValue::singleton(c.raw_alpha, c.raw_beta, c.sign));
  }
  return value;
}

LinkingValue lk1_via_path(const MoveScript& s) {
  if (!is_split_position(s.initial))
    throw input_error("lk1_via_path: initial diagram is not in split position");
  LinkingValue value = LinkingValue::zero(surface_group(s.initial.surface));
  for (const DiscriminantEvent& e : events(s)) {
    value = add(value, LinkingValue::singleton(e.raw_alpha, e.raw_beta, e.direction));
  }
  return value;
}

namespace {

void require_klein_contractible(const LinkDiagram& d) {
  if (d.surface != SurfaceKind::klein)
    throw input_error("degree-2 invariant: unsupported group (Klein surface only)");
  if (!d.comp1.closure.is_identity() || !d.comp2.closure.is_identity())
    throw input_error("degree-2 invariant: components not contractible");
}

}  // namespace

namespace {

Int stratum_coefficient_impl(const LinkDiagram& snapshot, const Point* expected_rep) {
  require_klein_contractible(snapshot);
  if (auto report = validate(snapshot, GenericityMode::singular)) throw degeneracy_error(*report);
  const std::vector<Crossing> cs = crossings(snapshot, GenericityMode::singular);
  const Crossing* singular = nullptr;
  for (const Crossing& c : cs) {
    if (c.over == 0) singular = &c;
  }
  if (singular == nullptr) throw input_error("not a singular snapshot");
  if (expected_rep != nullptr && !(*expected_rep == singular->rep))
    throw input_error("not a singular snapshot: the marked crossing has distinct heights");
  const GroupElement b_class = free_class_canonical(GroupElement::klein(0, 1));
  Int total = 0;
  for (const Crossing& q : cs) {
    if (q.over != 1) continue;
    // With trivial closures the connecting loop's class is the ratio of
    // the two deck translates, independent of arc and chart choices.
    const GroupElement loop = multiply(q.translate, inverse(singular->translate));
    if (free_class_canonical(loop) == b_class) total += q.sign;
  }
  return total;
}

}  // namespace

Int stratum_coefficient(const LinkDiagram& snapshot, const Crossing& at) {
  return stratum_coefficient_impl(snapshot, &at.rep);
}

Int stratum_coefficient(const LinkDiagram& snapshot) {
  return stratum_coefficient_impl(snapshot, nullptr);
}

Int i2(const MoveScript& s) {
  require_klein_contractible(s.initial);
  if (!is_split_position(s.initial))
    throw input_error("degree-2 invariant: initial diagram is not in split position");
  Int total = 0;
  for (const DiscriminantEvent& e : events(s)) {
    total += Int(e.direction) * stratum_coefficient(e.snapshot);
  }
  return total;
}

ManifoldDescriptor klein_times_line() {
  return {"klein-r", true, true, false, GroupId::klein};
}
ManifoldDescriptor torus_times_line() {
  return {"torus-r", true, true, true, GroupId::zxz};
}
ManifoldDescriptor projective_plane_times_line() {
  return {"rp2-r", true, false, false, GroupId::z2};
}
ManifoldDescriptor sphere_times_circle() {
  return {"s2xs1", false, false, true, GroupId::z};
}

Applicability applicability(const ManifoldDescriptor& m, const GroupElement& class1,
                            const GroupElement& class2) {
  if (class1.group() != m.group || class2.group() != m.group)
    throw group_mismatch("applicability: classes not in the manifold's group");
  if (m.thickened_surface) {
    return {true, InvarianceReason::thickened_surface,
            "thickened surface: every loop of links can be pushed off the discriminant by "
            "splitting the two components along the line factor"};
  }
  const bool has_contractible = free_class_canonical(class1).is_identity() ||
                                free_class_canonical(class2).is_identity();
  if (m.pi2_trivial && has_contractible) {
    return {true, InvarianceReason::contractible_part_pi2,
            "one component is contractible and pi_2 vanishes: loops of links keep the "
            "contractible part inside a small ball"};
  }
  std::string why = "no criterion applies: not a thickened surface";
  if (!m.pi2_trivial) why += ", pi_2 is nontrivial";
  if (!has_contractible) why += ", neither component is contractible";
  why += "; intersection counts with a discriminant component can differ between paths";
  return {false, std::nullopt, why};
}

}  // namespace linkhom
