#pragma once

#include <cstdint>
#include <utility>

#include "linkhom/moves.hpp"

namespace linkhom {

struct ScriptGenOptions {
  std::size_t length = 12;
  bool allow_events = true;
  std::size_t max_events = 4;
};

// Deterministic in (inputs, seed); every generated move is applicable, so
// all prefixes of the returned script validate.  May return fewer moves
// than requested when no further move applies.
MoveScript random_script(const LinkDiagram& d, const ScriptGenOptions& opt, std::uint64_t seed);
MoveScript random_script(const LinkDiagram& d, std::size_t length, std::uint64_t seed);

// Two distinct scripts with the same initial and the same final diagram:
// the second is the first with no-op move pairs spliced in and
// independent adjacent height changes transposed.  Used by the
// path-independence checks.
std::pair<MoveScript, MoveScript> script_pair(const LinkDiagram& d, const ScriptGenOptions& opt,
                                              std::uint64_t seed);

}  // namespace linkhom
