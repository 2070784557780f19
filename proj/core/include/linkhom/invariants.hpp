#pragma once

#include "linkhom/linking_value.hpp"
#include "linkhom/moves.hpp"

namespace linkhom {

// Degree-1 generalized linking number: the signed, code-weighted count of
// crossings where component 1 passes over component 2, valued in the
// twisted module.  Zero on every split diagram; changes only when a
// homotopy crosses the discriminant.
LinkingValue lk1(const LinkDiagram& d);

// The same invariant recomputed as the intersection count of the script's
// path with the discriminant: sum over events of direction * [code].  The
// script must start in split position; then the result equals lk1 of the
// final diagram.
LinkingValue lk1_via_path(const MoveScript& s);

// Coefficient of the correcting chain of the degree-2 invariant at a
// singular snapshot (heights equal exactly at the event crossing, both
// components contractible, Klein surface): the sum over the other
// crossings q with component 1 on top of sign(q) * chi(q), where chi
// detects whether the loop along component 1 from the event crossing to q
// and back along component 2 is freely homotopic to b.  The forward
// parameterization arcs are used for both connecting paths; with both
// closures trivial the wrap choices cancel, so any arc choice gives the
// same class.
Int stratum_coefficient(const LinkDiagram& snapshot, const Crossing& at);

// Locates the unique equal-height crossing itself.
Int stratum_coefficient(const LinkDiagram& snapshot);

// Degree-2 invariant of the final link of the script, normalized to 0 on
// the split link with trivial components: the sum over discriminant
// events of direction * stratum coefficient of the snapshot.  Requires a
// Klein-surface script starting at a split diagram with both closures
// trivial; path independent.
Int i2(const MoveScript& s);

struct ManifoldDescriptor {
  std::string name;
  bool thickened_surface = false;  // of the form (surface) x R
  bool pi2_trivial = false;
  bool orientable = false;
  GroupId group = GroupId::trivial;
};

ManifoldDescriptor klein_times_line();
ManifoldDescriptor torus_times_line();
ManifoldDescriptor projective_plane_times_line();
ManifoldDescriptor sphere_times_circle();

enum class InvarianceReason {
  thickened_surface,        // every 1-cycle of links moves off the discriminant
  contractible_part_pi2,    // one part contractible and pi_2 trivial
};

struct Applicability {
  bool guaranteed = false;
  std::optional<InvarianceReason> reason;
  std::string explanation;
};

// Whether the degree-1 value is guaranteed to be a link-homotopy
// invariant for links with the given free homotopy classes.
Applicability applicability(const ManifoldDescriptor& m, const GroupElement& class1,
                            const GroupElement& class2);

}  // namespace linkhom
