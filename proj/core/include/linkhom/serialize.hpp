#pragma once

#include <string>
#include <vector>

#include "linkhom/config_space.hpp"
#include "linkhom/invariants.hpp"
#include "linkhom/moves.hpp"

namespace linkhom {

// JSON text formats.  Rationals travel as exact "p/q" strings (integers
// without the slash), integers as JSON numbers when they fit 64 bits and
// as decimal strings beyond that.  Printing then parsing any value
// reproduces it bit-exactly.

std::string format_rational(const Rat& q);
Rat parse_rational(const std::string& text);

// {"group":"klein","r":1,"s":0} and analogues ("z": n, "z2": bit).
std::string element_to_json(const GroupElement& g);
GroupElement element_from_json(const std::string& text);

// Human word form: "1", "a", "b^-1", "a^2 b^3"; z/z2 use the letter t.
std::string element_to_word(const GroupElement& g);
GroupElement element_from_word(const std::string& word, GroupId group);

// {"alpha":...,"beta":...,"coorientable":bool}
std::string pair_class_to_json(const PairClass& p);

std::string diagram_to_json(const LinkDiagram& d);
LinkDiagram diagram_from_json(const std::string& text);

std::string script_to_json(const MoveScript& s);
MoveScript script_from_json(const std::string& text);

// Bare list [{"pair":{"alpha":...,"beta":...},"coeff":n,"torsion":bool}].
std::string value_to_json(const LinkingValue& v);
LinkingValue value_from_json(const std::string& text, GroupId group);

std::string configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const std::string& text);

std::string events_to_json(const std::vector<DiscriminantEvent>& events);

// Stable human-readable renderings used by the CLI text format.
std::string value_to_text(const LinkingValue& v);

}  // namespace linkhom
