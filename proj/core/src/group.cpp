#include "linkhom/group.hpp"

#include <array>
#include <ostream>

namespace linkhom {

namespace {

void require_same_group(const GroupElement& g, const GroupElement& h, const char* op) {
  if (g.group() != h.group()) throw group_mismatch(op);
}

}  // namespace

std::string group_name(GroupId g) {
  switch (g) {
    case GroupId::trivial: return "trivial";
    case GroupId::z: return "z";
    case GroupId::z2: return "z2";
    case GroupId::zxz: return "torus";
    case GroupId::klein: return "klein";
  }
  return "?";
}

GroupElement GroupElement::z2(Int bit) {
  Int b = bit % 2;
  if (b < 0) b += 2;
  return GroupElement(GroupId::z2, std::move(b), 0);
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
  if (g.is_identity()) return os << "1";
  switch (g.group()) {
    case GroupId::trivial: return os << "1";
    case GroupId::z: return os << "t^" << g.r();
    case GroupId::z2: return os << (g.r() == 0 ? "1" : "t");
    case GroupId::zxz:
    case GroupId::klein: {
      bool first = true;
      if (g.r() != 0) {
        os << 'a';
        if (g.r() != 1) os << '^' << g.r();
        first = false;
      }
      if (g.s() != 0) {
        if (!first) os << ' ';
        os << 'b';
        if (g.s() != 1) os << '^' << g.s();
      }
      return os;
    }
  }
  return os;
}

std::ostream& operator<<(std::ostream& os, const PairClass& p) {
  os << '(' << p.alpha << ", " << p.beta << ')';
  if (!p.coorientable) os << " [mod 2]";
  return os;
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  require_same_group(g, h, "multiply");
  switch (g.group()) {
    case GroupId::trivial:
      return g;
    case GroupId::z:
      return GroupElement::z(g.r() + h.r());
    case GroupId::z2:
      return GroupElement::z2(g.r() + h.r());
    case GroupId::zxz:
      return GroupElement::torus(g.r() + h.r(), g.s() + h.s());
    case GroupId::klein:
      return GroupElement::klein(g.r() + h.r(), g.s() * parity_sign(h.r()) + h.s());
  }
  throw std::logic_error("unreachable");
}

GroupElement inverse(const GroupElement& g) {
  switch (g.group()) {
    case GroupId::trivial:
      return g;
    case GroupId::z:
      return GroupElement::z(-g.r());
    case GroupId::z2:
      return g;
    case GroupId::zxz:
      return GroupElement::torus(-g.r(), -g.s());
    case GroupId::klein:
      return GroupElement::klein(-g.r(), -g.s() * parity_sign(g.r()));
  }
  throw std::logic_error("unreachable");
}

int orientation_character(const GroupElement& g) {
  switch (g.group()) {
    case GroupId::klein:
    case GroupId::z2:
      return parity_sign(g.r());
    default:
      return 1;
  }
}

bool commutes(const GroupElement& g, const GroupElement& h) {
  require_same_group(g, h, "commutes");
  return multiply(g, h) == multiply(h, g);
}

GroupElement conjugate(const GroupElement& g, const GroupElement& c) {
  require_same_group(g, c, "conjugate");
  return multiply(multiply(inverse(c), g), c);
}

GroupElement free_class_canonical(const GroupElement& g) {
  if (g.group() != GroupId::klein) return g;  // the other groups are abelian
  if (is_even(g.r())) return GroupElement::klein(g.r(), abs(g.s()));
  Int s = g.s() % 2;
  if (s < 0) s += 2;
  return GroupElement::klein(g.r(), std::move(s));
}

namespace {

// Klein conjugator of parity u whose v-exponent moves the first odd-r
// coordinate's s into {0,1}; v = 0 when both coordinates have even r.
GroupElement klein_candidate_conjugator(const GroupElement& alpha, const GroupElement& beta, int u) {
  const GroupElement* first_odd = nullptr;
  if (is_odd(alpha.r())) {
    first_odd = &alpha;
  } else if (is_odd(beta.r())) {
    first_odd = &beta;
  }
  Int v = 0;
  if (first_odd != nullptr) {
    Int flipped = first_odd->s() * (u == 0 ? 1 : -1);
    Int target = flipped % 2;
    if (target < 0) target += 2;     // target in {0,1}, same parity as s
    v = (target - flipped) / 2;      // exact: conjugation shifts s by 2v
  }
  return GroupElement::klein(u, std::move(v));
}

// Lexicographic order on (r1, s1, r2, s2).
bool pair_less(const std::pair<GroupElement, GroupElement>& x,
               const std::pair<GroupElement, GroupElement>& y) {
  if (x.first.r() != y.first.r()) return x.first.r() < y.first.r();
  if (x.first.s() != y.first.s()) return x.first.s() < y.first.s();
  if (x.second.r() != y.second.r()) return x.second.r() < y.second.r();
  return x.second.s() < y.second.s();
}

}  // namespace

CanonicalizedPair canonicalize_pair(const GroupElement& alpha, const GroupElement& beta) {
  require_same_group(alpha, beta, "canonicalize_pair");
  const bool co = coorientable(alpha, beta);
  if (alpha.group() != GroupId::klein) {
    return CanonicalizedPair{PairClass{alpha, beta, co}, GroupElement::identity(alpha.group()), 1};
  }
  GroupElement best_c = klein_candidate_conjugator(alpha, beta, 0);
  std::pair<GroupElement, GroupElement> best{conjugate(alpha, best_c), conjugate(beta, best_c)};
  GroupElement c1 = klein_candidate_conjugator(alpha, beta, 1);
  std::pair<GroupElement, GroupElement> cand{conjugate(alpha, c1), conjugate(beta, c1)};
  if (pair_less(cand, best)) {
    best = std::move(cand);
    best_c = std::move(c1);
  }
  return CanonicalizedPair{PairClass{best.first, best.second, co}, best_c,
                           orientation_character(best_c)};
}

PairClass pair_canonical(const GroupElement& alpha, const GroupElement& beta) {
  return canonicalize_pair(alpha, beta).cls;
}

bool coorientable(const GroupElement& alpha, const GroupElement& beta) {
  require_same_group(alpha, beta, "coorientable");
  switch (alpha.group()) {
    case GroupId::trivial:
    case GroupId::z:
    case GroupId::zxz:
      return true;
    case GroupId::z2:
      return false;
    case GroupId::klein:
      break;
  }
  const bool odd1 = is_odd(alpha.r());
  const bool odd2 = is_odd(beta.r());
  if (!odd1 && !odd2) return !(alpha.s() == 0 && beta.s() == 0);
  if (odd1 && odd2) return alpha.s() != beta.s();
  const GroupElement& even_one = odd1 ? beta : alpha;
  return even_one.s() != 0;
}

bool coorientable_bruteforce(const GroupElement& alpha, const GroupElement& beta, int bound) {
  require_same_group(alpha, beta, "coorientable_bruteforce");
  if (bound < 1) throw input_error("coorientable_bruteforce: bound must be >= 1");
  std::vector<GroupElement> candidates;
  switch (alpha.group()) {
    case GroupId::trivial:
      candidates.push_back(GroupElement::trivial());
      break;
    case GroupId::z:
      for (int u = -bound; u <= bound; ++u) candidates.push_back(GroupElement::z(u));
      break;
    case GroupId::z2:
      candidates.push_back(GroupElement::z2(0));
      candidates.push_back(GroupElement::z2(1));
      break;
    case GroupId::zxz:
      for (int u = -bound; u <= bound; ++u)
        for (int v = -bound; v <= bound; ++v) candidates.push_back(GroupElement::torus(u, v));
      break;
    case GroupId::klein:
      for (int u = -bound; u <= bound; ++u)
        for (int v = -bound; v <= bound; ++v) candidates.push_back(GroupElement::klein(u, v));
      break;
  }
  for (const GroupElement& c : candidates) {
    if (orientation_character(c) == -1 && commutes(c, alpha) && commutes(c, beta)) return false;
  }
  return true;
}

}  // namespace linkhom
