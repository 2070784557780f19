#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace linkhom::oracle {

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  return AffineMap{f.sx * g.sx, f.sx * g.tx + f.tx, f.ty + g.ty};
}

AffineMap letter_map(char letter) {
  switch (letter) {
    case 'a': return {-1, 1, 1};
    case 'A': return {-1, 1, -1};
    case 'b': return {1, 1, 0};
    case 'B': return {1, -1, 0};
    default: throw std::invalid_argument("letter must be one of a A b B");
  }
}

AffineMap eval_word_affine(const Word& w) {
  AffineMap acc;
  for (char c : w) acc = compose(acc, letter_map(c));
  return acc;
}

AffineMap affine_of_normal_form(const GroupElement& g) {
  AffineMap m;
  m.ty = g.r();
  if (is_even(g.r())) {
    m.sx = 1;
    m.tx = g.s();
  } else {
    m.sx = -1;
    m.tx = 1 - g.s();
  }
  return m;
}

GroupElement rewrite_normal_form(const Word& input) {
  Word w = input;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const char x = w[i], y = w[i + 1];
      const bool cancel = (x == 'a' && y == 'A') || (x == 'A' && y == 'a') ||
                          (x == 'b' && y == 'B') || (x == 'B' && y == 'b');
      if (cancel) {
        w.erase(i, 2);
        changed = true;
        break;
      }
      if ((x == 'b' || x == 'B') && (y == 'a' || y == 'A')) {
        w[i] = y;
        w[i + 1] = x == 'b' ? 'B' : 'b';
        changed = true;
        break;
      }
    }
  }
  Int r = 0, s = 0;
  for (char c : w) {
    if (c == 'a') ++r;
    if (c == 'A') --r;
    if (c == 'b') ++s;
    if (c == 'B') --s;
  }
  return GroupElement::klein(r, s);
}

GroupElement letter_product(const Word& w) {
  GroupElement acc = GroupElement::identity(GroupId::klein);
  for (char c : w) {
    switch (c) {
      case 'a': acc = multiply(acc, GroupElement::klein(1, 0)); break;
      case 'A': acc = multiply(acc, GroupElement::klein(-1, 0)); break;
      case 'b': acc = multiply(acc, GroupElement::klein(0, 1)); break;
      case 'B': acc = multiply(acc, GroupElement::klein(0, -1)); break;
      default: throw std::invalid_argument("letter must be one of a A b B");
    }
  }
  return acc;
}

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  static const char letters[] = {'a', 'A', 'b', 'B'};
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, 3);
  Word w;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) w.push_back(letters[pick(rng)]);
  return w;
}

std::vector<std::pair<GroupElement, GroupElement>> pair_orbit(const GroupElement& alpha,
                                                              const GroupElement& beta, int bound) {
  std::vector<std::pair<GroupElement, GroupElement>> orbit;
  for (int u = -bound; u <= bound; ++u) {
    for (int v = -bound; v <= bound; ++v) {
      const GroupElement c = GroupElement::klein(u, v);
      orbit.emplace_back(conjugate(alpha, c), conjugate(beta, c));
    }
  }
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

std::vector<GroupElement> conjugacy_orbit(const GroupElement& g, int bound) {
  std::vector<GroupElement> orbit;
  for (int u = -bound; u <= bound; ++u) {
    for (int v = -bound; v <= bound; ++v) {
      orbit.push_back(conjugate(g, GroupElement::klein(u, v)));
    }
  }
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

}  // namespace linkhom::oracle
