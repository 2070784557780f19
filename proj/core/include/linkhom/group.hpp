#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "linkhom/errors.hpp"
#include "linkhom/numeric.hpp"

namespace linkhom {

// Fundamental groups of the supported base surfaces / 3-manifolds.
//
//   trivial  pi_1(R^2)            = 1
//   z        pi_1(annulus)        = Z
//   z2       pi_1(RP^2)           = Z/2
//   zxz      pi_1(torus)          = Z x Z
//   klein    pi_1(Klein bottle)   = <a, b | a = bab>
enum class GroupId { trivial, z, z2, zxz, klein };

std::string group_name(GroupId g);

// An element in unique normal form.  For the Klein bottle group every
// element is a^r b^s; the product rule
//
//   (a^r b^s)(a^r' b^s') = a^(r+r') b^(s*(-1)^r' + s')
//
// is forced by the relation a = bab.  Equality of elements is equality of
// the exponent tuples.  Elements of different groups never mix; every
// operation below rejects mixed arguments with group_mismatch.
class GroupElement {
 public:
  GroupElement() : group_(GroupId::trivial) {}

  static GroupElement trivial() { return GroupElement{}; }
  static GroupElement z(Int n) { return GroupElement(GroupId::z, std::move(n), 0); }
  static GroupElement z2(Int bit);
  static GroupElement torus(Int r, Int s) { return GroupElement(GroupId::zxz, std::move(r), std::move(s)); }
  static GroupElement klein(Int r, Int s) { return GroupElement(GroupId::klein, std::move(r), std::move(s)); }
  static GroupElement identity(GroupId g) { return GroupElement(g, 0, 0); }

  GroupId group() const { return group_; }
  // First exponent: r for klein/torus, n for z, the bit for z2.
  const Int& r() const { return r_; }
  // Second exponent: s for klein/torus; always 0 otherwise.
  const Int& s() const { return s_; }

  bool is_identity() const { return r_ == 0 && s_ == 0; }

  friend bool operator==(const GroupElement& x, const GroupElement& y) = default;
  friend bool operator!=(const GroupElement& x, const GroupElement& y) = default;
  friend bool operator<(const GroupElement& x, const GroupElement& y) {
    if (x.group_ != y.group_) return x.group_ < y.group_;
    if (x.r_ != y.r_) return x.r_ < y.r_;
    return x.s_ < y.s_;
  }

 private:
  GroupElement(GroupId g, Int r, Int s) : group_(g), r_(std::move(r)), s_(std::move(s)) {}

  GroupId group_;
  Int r_;
  Int s_;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

// The homomorphism pi_1 -> {+1,-1} recording whether a loop reverses the
// orientation of the thickened surface.  Klein: (-1)^r; z2: (-1)^bit;
// orientable cases: always +1.
int orientation_character(const GroupElement& g);

bool commutes(const GroupElement& g, const GroupElement& h);

// c^-1 g c.  Klein closed form: (r,s) -> (r, s*(-1)^u + v*(1-(-1)^r)) for
// c = (u,v).
GroupElement conjugate(const GroupElement& g, const GroupElement& c);

// Canonical representative of the conjugacy class (free homotopy class).
// Klein: r is invariant; r even -> (r, |s|); r odd -> (r, s mod 2).
GroupElement free_class_canonical(const GroupElement& g);

// An ordered pair of elements modulo simultaneous conjugation; the label
// of one irreducible component of the discriminant, together with its
// coorientability.
struct PairClass {
  GroupElement alpha;
  GroupElement beta;
  bool coorientable = true;

  friend bool operator==(const PairClass& x, const PairClass& y) = default;
  friend bool operator<(const PairClass& x, const PairClass& y) {
    if (x.alpha != y.alpha) return x.alpha < y.alpha;
    if (x.beta != y.beta) return x.beta < y.beta;
    return x.coorientable < y.coorientable;
  }
};

std::ostream& operator<<(std::ostream& os, const PairClass& p);

// Result of canonicalizing a pair: the class, the conjugator c that maps
// the input onto the stored representative, and its character w(c).  The
// character is what twists coefficients in LinkingValue: whenever the pair
// is coorientable, w(c) is independent of the choice of c.
struct CanonicalizedPair {
  PairClass cls;
  GroupElement conjugator;
  int character = 1;
};

CanonicalizedPair canonicalize_pair(const GroupElement& alpha, const GroupElement& beta);

// Canonical representative of the simultaneous-conjugation orbit of
// (alpha, beta).  Deterministic choice: among the finite candidate set
// (Klein: conjugator parity u in {0,1}, v fixed by bringing the first
// odd-r coordinate's s into {0,1}; v irrelevant when both r are even) the
// lexicographic minimum under (r1, s1, r2, s2).
PairClass pair_canonical(const GroupElement& alpha, const GroupElement& beta);

// Decides whether the discriminant component labelled (alpha, beta) is
// coorientable: it fails exactly when some orientation-reversing c
// commutes with both entries.  Klein closed form, with c = (u,v), u odd:
// c commutes with (r,s) iff (r even and s = 0) or (r odd and v = s), so
// the component is non-coorientable iff
//   - both entries have the form (even r, 0), or
//   - both have odd r and equal s, or
//   - one is (even r, 0) and the other has odd r.
// Orientable groups (trivial, z, zxz): always coorientable.  z2: never
// (the group is commutative and its nontrivial element reverses
// orientation).
bool coorientable(const GroupElement& alpha, const GroupElement& beta);

// Test oracle for the closed form: searches conjugators with exponents
// bounded by `bound` for an orientation-reversing element commuting with
// both entries.  Bound 10 already suffices for exhaustive small grids:
// the Klein commutation constraints are linear in (u,v), so a witness
// exists within the bound iff one exists at all.
bool coorientable_bruteforce(const GroupElement& alpha, const GroupElement& beta, int bound);

}  // namespace linkhom
