#include "linkhom/linking_value.hpp"

#include <ostream>

namespace linkhom {

void LinkingValue::insert(const PairClass& cls, Int coeff) {
  if (!cls.coorientable) {
    coeff %= 2;
    if (coeff < 0) coeff += 2;
  }
  if (coeff == 0) return;
  terms_.insert_or_assign(cls, std::move(coeff));
}

LinkingValue LinkingValue::singleton(const GroupElement& alpha, const GroupElement& beta, Int coeff) {
  CanonicalizedPair canon = canonicalize_pair(alpha, beta);
  LinkingValue out(alpha.group());
  out.insert(canon.cls, canon.character * std::move(coeff));
  return out;
}

LinkingValue add(const LinkingValue& u, const LinkingValue& v) {
  if (u.group() != v.group()) throw group_mismatch("add");
  LinkingValue out(u.group());
  out.terms_ = u.terms_;
  for (const auto& [cls, coeff] : v.terms_) {
    auto [it, fresh] = out.terms_.emplace(cls, coeff);
    if (fresh) continue;
    it->second += coeff;
    if (!cls.coorientable) {
      it->second %= 2;
      if (it->second < 0) it->second += 2;
    }
    if (it->second == 0) out.terms_.erase(it);
  }
  return out;
}

LinkingValue negate(const LinkingValue& u) {
  LinkingValue out(u.group());
  for (const auto& [cls, coeff] : u.terms_) {
    out.terms_.emplace(cls, cls.coorientable ? -coeff : coeff);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LinkingValue& v) {
  if (v.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [cls, coeff] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    if (cls.coorientable) {
      os << (coeff >= 0 ? "+" : "") << coeff << "*" << cls;
    } else {
      os << coeff << "*" << cls;
    }
  }
  return os;
}

}  // namespace linkhom
