#include "linkhom/serialize.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace linkhom {

using nlohmann::json;

namespace {

json int_to_json(const Int& n) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (n >= lo && n <= hi) return n.convert_to<std::int64_t>();
  return n.str();
}

Int int_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      return Int(s);
    } catch (const std::exception&) {
      throw input_error("expected an integer", path);
    }
  }
  throw input_error("expected an integer", path);
}

std::int64_t i64_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw input_error("expected a 64-bit integer", path);
  return j.get<std::int64_t>();
}

// Cursor over a parsed document carrying the field path for error
// messages.
struct Reader {
  const json* j;
  std::string path;

  Reader at(const char* key) const {
    if (!j->is_object()) throw input_error("expected an object", path);
    auto it = j->find(key);
    if (it == j->end()) throw input_error(std::string("missing field \"") + key + '"', path);
    return Reader{&*it, path.empty() ? key : path + "." + key};
  }
  Reader item(std::size_t i) const {
    if (!j->is_array()) throw input_error("expected an array", path);
    if (i >= j->size()) throw input_error("index out of range", path);
    return Reader{&(*j)[i], path + "[" + std::to_string(i) + "]"};
  }
  std::size_t size() const {
    if (!j->is_array()) throw input_error("expected an array", path);
    return j->size();
  }
  std::string str() const {
    if (!j->is_string()) throw input_error("expected a string", path);
    return j->get<std::string>();
  }
  bool boolean() const {
    if (!j->is_boolean()) throw input_error("expected a boolean", path);
    return j->get<bool>();
  }
  Int integer() const { return int_from_json(*j, path); }
  std::int64_t i64() const { return i64_from_json(*j, path); }
  Rat rational() const;
  int component() const {
    const std::int64_t c = i64();
    if (c != 1 && c != 2) throw input_error("component must be 1 or 2", path);
    return static_cast<int>(c);
  }
};

json parse_document(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("malformed JSON");
  return j;
}

}  // namespace

std::string format_rational(const Rat& q) {
  const Int num = numerator(q);
  const Int den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rat parse_rational_at(const std::string& text, const std::string& path) {
  std::string num = text, den = "1";
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  int sign = 1;
  if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
    if (num[0] == '-') sign = -1;
    num.erase(0, 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw input_error("malformed rational \"" + text + "\"", path);
  const Int d(den);
  if (d == 0) throw input_error("rational with zero denominator", path);
  return Rat(sign * Int(num), d);
}

Rat Reader::rational() const { return parse_rational_at(str(), path); }

Point point_from(const Reader& r) {
  if (r.size() != 2) throw input_error("expected a point [x, y]", r.path);
  return Point{r.item(0).rational(), r.item(1).rational()};
}

json point_to_json(const Point& p) {
  return json::array({format_rational(p.x), format_rational(p.y)});
}

json element_to_tree(const GroupElement& g) {
  json j;
  j["group"] = group_name(g.group());
  switch (g.group()) {
    case GroupId::trivial: break;
    case GroupId::z: j["n"] = int_to_json(g.r()); break;
    case GroupId::z2: j["bit"] = int_to_json(g.r()); break;
    case GroupId::zxz:
    case GroupId::klein:
      j["r"] = int_to_json(g.r());
      j["s"] = int_to_json(g.s());
      break;
  }
  return j;
}

GroupElement element_from_tree(const Reader& r) {
  const std::string name = r.at("group").str();
  if (name == "trivial") return GroupElement::trivial();
  if (name == "z") return GroupElement::z(r.at("n").integer());
  if (name == "z2") {
    const Int bit = r.at("bit").integer();
    if (bit != 0 && bit != 1) throw input_error("bit must be 0 or 1", r.path);
    return GroupElement::z2(bit);
  }
  if (name == "torus") return GroupElement::torus(r.at("r").integer(), r.at("s").integer());
  if (name == "klein") return GroupElement::klein(r.at("r").integer(), r.at("s").integer());
  throw input_error("unknown group \"" + name + "\"", r.path);
}

json component_to_tree(const Component& c) {
  json vertices = json::array();
  for (const Point& p : c.vertices) vertices.push_back(point_to_json(p));
  json heights = json::array();
  for (std::int64_t h : c.heights) heights.push_back(h);
  return json{{"vertices", vertices}, {"closure", element_to_tree(c.closure)}, {"heights", heights}};
}

Component component_from_tree(const Reader& r, GroupId group) {
  Component c;
  const Reader verts = r.at("vertices");
  for (std::size_t i = 0; i < verts.size(); ++i) c.vertices.push_back(point_from(verts.item(i)));
  if (c.vertices.empty()) throw input_error("component needs at least one vertex", verts.path);
  c.closure = element_from_tree(r.at("closure"));
  if (c.closure.group() != group)
    throw input_error("closure element is not in the surface group", r.at("closure").path);
  const Reader heights = r.at("heights");
  for (std::size_t i = 0; i < heights.size(); ++i) c.heights.push_back(heights.item(i).i64());
  if (c.heights.size() != c.vertices.size())
    throw input_error("need exactly one height per segment", heights.path);
  return c;
}

json diagram_to_tree(const LinkDiagram& d) {
  return json{{"surface", surface_name(d.surface)},
              {"comp1", component_to_tree(d.comp1)},
              {"comp2", component_to_tree(d.comp2)}};
}

LinkDiagram diagram_from_tree(const Reader& r) {
  LinkDiagram d;
  const std::string kind = r.at("surface").str();
  if (kind == "klein") {
    d.surface = SurfaceKind::klein;
  } else if (kind == "torus") {
    d.surface = SurfaceKind::torus;
  } else {
    throw input_error("unknown surface \"" + kind + "\"", r.at("surface").path);
  }
  d.comp1 = component_from_tree(r.at("comp1"), surface_group(d.surface));
  d.comp2 = component_from_tree(r.at("comp2"), surface_group(d.surface));
  return d;
}

json move_to_tree(const Move& m) {
  json j;
  std::visit(
      [&](const auto& mv) {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, JiggleVertex>) {
          j = json{{"op", "jiggleVertex"},
                   {"component", mv.component},
                   {"index", mv.index},
                   {"point", point_to_json(mv.new_point)}};
        } else if constexpr (std::is_same_v<T, Subdivide>) {
          j = json{{"op", "subdivide"},
                   {"component", mv.component},
                   {"segment", mv.segment},
                   {"point", point_to_json(mv.point)}};
        } else if constexpr (std::is_same_v<T, MergeCollinear>) {
          j = json{{"op", "mergeCollinear"}, {"component", mv.component}, {"index", mv.index}};
        } else if constexpr (std::is_same_v<T, SlidePeriod>) {
          j = json{{"op", "slidePeriod"}, {"component", mv.component}, {"deck", element_to_tree(mv.deck)}};
        } else if constexpr (std::is_same_v<T, R2Insert>) {
          j = json{{"op", "r2insert"},
                   {"component", mv.component},
                   {"segment", mv.segment},
                   {"from", format_rational(mv.from)},
                   {"to", format_rational(mv.to)},
                   {"apex", point_to_json(mv.apex)}};
        } else if constexpr (std::is_same_v<T, R2Delete>) {
          j = json{{"op", "r2delete"}, {"component", mv.component}, {"apex", mv.apex}};
        } else if constexpr (std::is_same_v<T, SetHeight>) {
          j = json{{"op", "setHeight"},
                   {"component", mv.component},
                   {"segment", mv.segment},
                   {"height", mv.height}};
        }
      },
      m);
  return j;
}

std::size_t index_from(const Reader& r) {
  const std::int64_t v = r.i64();
  if (v < 0) throw input_error("index must be nonnegative", r.path);
  return static_cast<std::size_t>(v);
}

Move move_from_tree(const Reader& r) {
  const std::string op = r.at("op").str();
  const int component = r.at("component").component();
  if (op == "jiggleVertex")
    return JiggleVertex{component, index_from(r.at("index")), point_from(r.at("point"))};
  if (op == "subdivide")
    return Subdivide{component, index_from(r.at("segment")), point_from(r.at("point"))};
  if (op == "mergeCollinear") return MergeCollinear{component, index_from(r.at("index"))};
  if (op == "slidePeriod") return SlidePeriod{component, element_from_tree(r.at("deck"))};
  if (op == "r2insert")
    return R2Insert{component, index_from(r.at("segment")), r.at("from").rational(),
                    r.at("to").rational(), point_from(r.at("apex"))};
  if (op == "r2delete") return R2Delete{component, index_from(r.at("apex"))};
  if (op == "setHeight") return SetHeight{component, index_from(r.at("segment")), r.at("height").i64()};
  throw input_error("unknown move op \"" + op + "\"", r.at("op").path);
}

json pair_class_to_tree(const PairClass& p) {
  return json{{"alpha", element_to_tree(p.alpha)},
              {"beta", element_to_tree(p.beta)},
              {"coorientable", p.coorientable}};
}

json value_to_tree(const LinkingValue& v) {
  json terms = json::array();
  for (const auto& [cls, coeff] : v.terms()) {
    terms.push_back(json{{"pair", json{{"alpha", element_to_tree(cls.alpha)},
                                       {"beta", element_to_tree(cls.beta)}}},
                         {"coeff", int_to_json(coeff)},
                         {"torsion", !cls.coorientable}});
  }
  return terms;
}

}  // namespace

Rat parse_rational(const std::string& text) { return parse_rational_at(text, ""); }

std::string element_to_json(const GroupElement& g) { return element_to_tree(g).dump(2); }

GroupElement element_from_json(const std::string& text) {
  const json j = parse_document(text);
  return element_from_tree(Reader{&j, ""});
}

std::string element_to_word(const GroupElement& g) {
  std::ostringstream os;
  os << g;
  return os.str();
}

GroupElement element_from_word(const std::string& word, GroupId group) {
  GroupElement out = GroupElement::identity(group);
  std::istringstream in(word);
  std::string token;
  bool any = false;
  while (in >> token) {
    any = true;
    if (token == "1") continue;
    const char letter = token[0];
    Int exp = 1;
    if (token.size() > 1) {
      if (token[1] != '^') throw input_error("malformed word token \"" + token + "\"");
      try {
        exp = Int(token.substr(2));
      } catch (const std::exception&) {
        throw input_error("malformed word token \"" + token + "\"");
      }
    }
    GroupElement factor = GroupElement::identity(group);
    switch (group) {
      case GroupId::klein:
        if (letter == 'a') factor = GroupElement::klein(exp, 0);
        else if (letter == 'b') factor = GroupElement::klein(0, exp);
        else throw input_error("unknown generator in \"" + token + "\"");
        break;
      case GroupId::zxz:
        if (letter == 'a') factor = GroupElement::torus(exp, 0);
        else if (letter == 'b') factor = GroupElement::torus(0, exp);
        else throw input_error("unknown generator in \"" + token + "\"");
        break;
      case GroupId::z:
        if (letter == 't') factor = GroupElement::z(exp);
        else throw input_error("unknown generator in \"" + token + "\"");
        break;
      case GroupId::z2:
        if (letter == 't') factor = GroupElement::z2(exp);
        else throw input_error("unknown generator in \"" + token + "\"");
        break;
      case GroupId::trivial:
        throw input_error("the trivial group has no generators; use \"1\"");
    }
    out = multiply(out, factor);
  }
  if (!any) throw input_error("empty group word");
  return out;
}

std::string pair_class_to_json(const PairClass& p) { return pair_class_to_tree(p).dump(2); }

std::string diagram_to_json(const LinkDiagram& d) { return diagram_to_tree(d).dump(2); }

LinkDiagram diagram_from_json(const std::string& text) {
  const json j = parse_document(text);
  return diagram_from_tree(Reader{&j, ""});
}

std::string script_to_json(const MoveScript& s) {
  json moves = json::array();
  for (const Move& m : s.moves) moves.push_back(move_to_tree(m));
  return json{{"initial", diagram_to_tree(s.initial)}, {"moves", moves}}.dump(2);
}

MoveScript script_from_json(const std::string& text) {
  const json j = parse_document(text);
  const Reader root{&j, ""};
  MoveScript s;
  s.initial = diagram_from_tree(root.at("initial"));
  const Reader moves = root.at("moves");
  for (std::size_t i = 0; i < moves.size(); ++i) s.moves.push_back(move_from_tree(moves.item(i)));
  return s;
}

std::string value_to_json(const LinkingValue& v) { return value_to_tree(v).dump(2); }

LinkingValue value_from_json(const std::string& text, GroupId group) {
  const json j = parse_document(text);
  const Reader root{&j, ""};
  LinkingValue out = LinkingValue::zero(group);
  for (std::size_t i = 0; i < root.size(); ++i) {
    const Reader term = root.item(i);
    const Reader pair = term.at("pair");
    const GroupElement alpha = element_from_tree(pair.at("alpha"));
    const GroupElement beta = element_from_tree(pair.at("beta"));
    if (alpha.group() != group || beta.group() != group)
      throw input_error("term is not in the expected group", pair.path);
    out = add(out, LinkingValue::singleton(alpha, beta, term.at("coeff").integer()));
  }
  return out;
}

std::string configuration_to_json(const Configuration& c) {
  json sets = json::array();
  for (const auto& s : c.sets) {
    json set = json::array();
    for (const SourcePoint& p : s) {
      set.push_back(json{{"circle", p.circle}, {"angle", format_rational(p.angle)}});
    }
    sets.push_back(set);
  }
  return sets.dump(2);
}

Configuration configuration_from_json(const std::string& text) {
  const json j = parse_document(text);
  const Reader root{&j, ""};
  std::vector<std::vector<SourcePoint>> sets;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const Reader set = root.item(i);
    std::vector<SourcePoint> points;
    for (std::size_t k = 0; k < set.size(); ++k) {
      const Reader p = set.item(k);
      points.push_back(SourcePoint{p.at("circle").component(), p.at("angle").rational()});
    }
    sets.push_back(std::move(points));
  }
  return make_configuration(std::move(sets));
}

std::string events_to_json(const std::vector<DiscriminantEvent>& events) {
  json out = json::array();
  for (const DiscriminantEvent& e : events) {
    out.push_back(json{{"move", e.move_index},
                       {"code", pair_class_to_tree(e.code)},
                       {"rawAlpha", element_to_tree(e.raw_alpha)},
                       {"rawBeta", element_to_tree(e.raw_beta)},
                       {"direction", e.direction}});
  }
  return out.dump(2);
}

std::string value_to_text(const LinkingValue& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [cls, coeff] : v.terms()) {
    if (!first) os << "  +  ";
    first = false;
    os << coeff << " * (" << element_to_word(cls.alpha) << " ; " << element_to_word(cls.beta) << ")";
    if (!cls.coorientable) os << " mod 2";
  }
  return os.str();
}

}  // namespace linkhom
