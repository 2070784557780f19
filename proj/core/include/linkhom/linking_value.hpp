#pragma once

#include <iosfwd>
#include <map>

#include "linkhom/group.hpp"

namespace linkhom {

// Value group of the degree-1 invariants: the free abelian group on the
// coorientable pair classes plus a Z/2 summand for every non-coorientable
// class.  The twisted relation (alpha,beta) ~ w(c) * (c^-1 alpha c,
// c^-1 beta c) is built into singleton(): coefficients are stored against
// canonical representatives multiplied by the character of the
// canonicalizing conjugator.  Negating every coefficient would be an
// equally consistent convention; one global sign is fixed here and all
// invariants report against it.
class LinkingValue {
 public:
  explicit LinkingValue(GroupId group) : group_(group) {}

  static LinkingValue zero(GroupId group) { return LinkingValue(group); }
  static LinkingValue singleton(const GroupElement& alpha, const GroupElement& beta, Int coeff);

  GroupId group() const { return group_; }
  bool is_zero() const { return terms_.empty(); }
  // Canonical pair -> reduced coefficient; torsion classes carry 1 only.
  const std::map<PairClass, Int>& terms() const { return terms_; }

  friend LinkingValue add(const LinkingValue& u, const LinkingValue& v);
  friend LinkingValue negate(const LinkingValue& u);
  friend LinkingValue subtract(const LinkingValue& u, const LinkingValue& v) {
    return add(u, negate(v));
  }

  friend bool operator==(const LinkingValue& u, const LinkingValue& v) = default;

 private:
  void insert(const PairClass& cls, Int coeff);

  GroupId group_;
  std::map<PairClass, Int> terms_;
};

std::ostream& operator<<(std::ostream& os, const LinkingValue& v);

}  // namespace linkhom
