#include "linkhom/config_space.hpp"

#include <algorithm>
#include <set>

namespace linkhom {

Configuration make_configuration(std::vector<std::vector<SourcePoint>> sets) {
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  Configuration c{std::move(sets)};
  validate_configuration(c);
  return c;
}

void validate_configuration(const Configuration& c) {
  std::set<SourcePoint> seen;
  for (const auto& s : c.sets) {
    if (s.size() < 2) throw input_error("configuration set needs at least two points");
    bool c1 = false, c2 = false;
    for (const SourcePoint& p : s) {
      if (p.circle != 1 && p.circle != 2) throw input_error("circle must be 1 or 2");
      if (p.angle < 0 || p.angle >= 1) throw input_error("angle must lie in [0,1)");
      if (!seen.insert(p).second) throw input_error("configuration sets must be disjoint");
      (p.circle == 1 ? c1 : c2) = true;
    }
    if (!c1 || !c2) throw input_error("each set must contain points of both circles");
  }
}

Int complexity(const std::vector<Int>& profile) {
  Int total = 0;
  for (const Int& j : profile) {
    if (j < 2) throw input_error("complexity: every multiplicity must be at least 2");
    total += j - 1;
  }
  return total;
}

Int configuration_complexity(const Configuration& c) {
  std::vector<Int> profile;
  profile.reserve(c.sets.size());
  for (const auto& s : c.sets) profile.emplace_back(s.size());
  return complexity(profile);
}

bool subordinate(const Configuration& c1, const Configuration& c2) {
  for (const auto& a : c1.sets) {
    bool contained = false;
    for (const auto& b : c2.sets) {
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) return false;
  }
  return true;
}

Rat point_distance(const SourcePoint& x, const SourcePoint& y) {
  if (x.circle != y.circle) return 2;
  Rat gap = x.angle - y.angle;
  if (gap < 0) gap = -gap;
  return std::min(gap, Rat(1) - gap);
}

namespace {

template <typename T, typename Dist>
Rat max_min(const std::vector<T>& from, const std::vector<T>& to, Dist dist) {
  Rat worst = 0;
  for (const T& x : from) {
    Rat best;
    bool have = false;
    for (const T& y : to) {
      const Rat d = dist(x, y);
      if (!have || d < best) {
        best = d;
        have = true;
      }
    }
    if (have && best > worst) worst = best;
  }
  return worst;
}

}  // namespace

Rat set_distance(const std::vector<SourcePoint>& a, const std::vector<SourcePoint>& b) {
  return max_min(a, b, point_distance) + max_min(b, a, point_distance);
}

Rat config_distance(const Configuration& c1, const Configuration& c2) {
  validate_configuration(c1);
  validate_configuration(c2);
  const auto dist = [](const std::vector<SourcePoint>& a, const std::vector<SourcePoint>& b) {
    return set_distance(a, b);
  };
  return max_min(c1.sets, c2.sets, dist) + max_min(c2.sets, c1.sets, dist);
}

namespace {

void extend_profile(const Int& budget, const Int& max_next, std::vector<Int>& acc,
                    std::vector<std::vector<Int>>& out) {
  if (!acc.empty()) out.push_back(acc);
  // Next part j costs j - 1; parts are non-increasing.
  for (Int j = std::min(max_next, budget + 1); j >= 2; --j) {
    acc.push_back(j);
    extend_profile(budget - (j - 1), j, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Int>> profiles_up_to(const Int& p) {
  std::vector<std::vector<Int>> out;
  if (p < 1) return out;
  std::vector<Int> acc;
  extend_profile(p, p + 1, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace linkhom
