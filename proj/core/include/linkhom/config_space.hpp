#pragma once

#include <vector>

#include "linkhom/errors.hpp"
#include "linkhom/numeric.hpp"

namespace linkhom {

// A marked point on the two-circle source: circle 1 or 2, angle as a
// rational fraction of a full turn in [0,1).
struct SourcePoint {
  int circle = 1;
  Rat angle;

  friend bool operator==(const SourcePoint& a, const SourcePoint& b) = default;
  friend bool operator<(const SourcePoint& a, const SourcePoint& b) {
    if (a.circle != b.circle) return a.circle < b.circle;
    return a.angle < b.angle;
  }
};

// An unordered collection of disjoint finite sets of source points; each
// set must have at least two points and meet both circles.  Sets are kept
// sorted, as is the collection, so equality is structural.
struct Configuration {
  std::vector<std::vector<SourcePoint>> sets;

  friend bool operator==(const Configuration& a, const Configuration& b) = default;
};

Configuration make_configuration(std::vector<std::vector<SourcePoint>> sets);

// Throws input_error when a set is too small, misses one of the circles,
// repeats a point, or uses an angle outside [0,1).
void validate_configuration(const Configuration& c);

// Complexity of a multiplicity profile <j_1,...,j_k>: sum of (j_i - 1).
// Every j_i must be at least 2.
Int complexity(const std::vector<Int>& profile);
Int configuration_complexity(const Configuration& c);

// True when every set of c1 is contained in some set of c2.
bool subordinate(const Configuration& c1, const Configuration& c2);

// Distance of two source points: the angular distance scaled so that the
// half turn is the maximum, or the fixed cross-part constant 2 (any value
// above the half turn works) when the points sit on different circles.
Rat point_distance(const SourcePoint& x, const SourcePoint& y);

// Two-sided Hausdorff-style sum  max min + max min  over point distances.
Rat set_distance(const std::vector<SourcePoint>& a, const std::vector<SourcePoint>& b);

// The same combination one level up, over set_distance.  Symmetric and
// zero exactly on equal configurations; the triangle inequality is not
// part of the contract.
Rat config_distance(const Configuration& c1, const Configuration& c2);

// All multiplicity profiles of complexity <= p, each sorted descending,
// the list sorted lexicographically.
std::vector<std::vector<Int>> profiles_up_to(const Int& p);

}  // namespace linkhom
