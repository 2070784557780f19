#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "linkhom/script_gen.hpp"
#include "linkhom/serialize.hpp"

using nlohmann::json;
using namespace linkhom;

namespace {

constexpr const char* kConvention = "right-handed, split-normalized";

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupId group_from_name(const std::string& name) {
  if (name == "trivial") return GroupId::trivial;
  if (name == "z") return GroupId::z;
  if (name == "z2") return GroupId::z2;
  if (name == "torus") return GroupId::zxz;
  if (name == "klein") return GroupId::klein;
  throw input_error("unknown group \"" + name + "\"");
}

GroupElement parse_element_arg(const std::string& text, GroupId group) {
  if (!text.empty() && text[0] == '{') {
    const GroupElement g = element_from_json(text);
    if (g.group() != group) throw input_error("element is not in the expected group");
    return g;
  }
  return element_from_word(text, group);
}

json element_tree(const GroupElement& g) { return json::parse(element_to_json(g)); }

void emit(const json& out, const std::string& format, const std::string& text_rendering) {
  if (format == "text") {
    std::cout << text_rendering << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
}

// An orientation-reversing element commuting with both entries, when one
// exists.  The commutation constraints are linear, so small exponents
// always suffice.
std::optional<GroupElement> noncoorientability_witness(const GroupElement& alpha,
                                                       const GroupElement& beta) {
  std::vector<GroupElement> candidates;
  switch (alpha.group()) {
    case GroupId::z2:
      candidates.push_back(GroupElement::z2(1));
      break;
    case GroupId::klein: {
      const long bound =
          10 + std::max({abs(alpha.s()), abs(beta.s())}).convert_to<long>();
      for (long v = -bound; v <= bound; ++v) candidates.push_back(GroupElement::klein(1, v));
      break;
    }
    default:
      break;
  }
  for (const GroupElement& c : candidates) {
    if (orientation_character(c) == -1 && commutes(c, alpha) && commutes(c, beta)) return c;
  }
  return std::nullopt;
}

struct CommonOptions {
  std::string format = "json";
  std::string surface = "klein";
  std::string input;
  std::string moves;
  std::uint64_t seed = 1;
  int bound = 0;
};

int run(int argc, char** argv) {
  CLI::App app{"generalized linking numbers of two-component links in thickened surfaces"};
  app.require_subcommand(1);
  CommonOptions opt;

  std::string alpha_text, beta_text;
  std::string manifold = "klein-r";
  std::string class1_text = "1", class2_text = "1";
  bool custom_thickened = false, custom_pi2 = false, custom_orientable = false;
  std::string custom_group = "klein";
  std::string first_file, second_file;
  std::size_t fuzz_scripts = 40, fuzz_length = 10;
  std::string fuzz_mode = "both";

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* classify = app.add_subcommand("classify", "free homotopy classes of a diagram's components");
  classify->add_option("--input", opt.input, "diagram file")->required();
  add_format(classify);

  CLI::App* coorient = app.add_subcommand("coorient", "is the discriminant component of a code coorientable");
  coorient->add_option("--alpha", alpha_text, "first code entry (word or JSON)")->required();
  coorient->add_option("--beta", beta_text, "second code entry")->required();
  coorient->add_option("--surface", opt.surface, "klein or torus (word parsing)");
  coorient->add_option("--bound", opt.bound, "cross-check with the bounded search");
  add_format(coorient);

  CLI::App* canon = app.add_subcommand("canon-pair", "canonical representative of a code pair");
  canon->add_option("--alpha", alpha_text)->required();
  canon->add_option("--beta", beta_text)->required();
  canon->add_option("--surface", opt.surface);
  add_format(canon);

  CLI::App* lk = app.add_subcommand("lk", "degree-1 generalized linking number of a diagram");
  lk->add_option("--input", opt.input, "diagram file")->required();
  add_format(lk);

  CLI::App* i2cmd = app.add_subcommand("i2", "degree-2 invariant of a move script from the split link");
  i2cmd->add_option("--moves", opt.moves, "move-script file")->required();
  add_format(i2cmd);

  CLI::App* eventscmd = app.add_subcommand("events", "discriminant events of a move script");
  eventscmd->add_option("--moves", opt.moves, "move-script file")->required();
  add_format(eventscmd);

  CLI::App* fuzz = app.add_subcommand("fuzz", "randomized self-checks of the move engine");
  fuzz->add_option("--seed", opt.seed, "base seed");
  fuzz->add_option("--scripts", fuzz_scripts, "scripts per mode");
  fuzz->add_option("--length", fuzz_length, "moves per script");
  fuzz->add_option("--mode", fuzz_mode, "lk1, i2, or both")
      ->check(CLI::IsMember({"lk1", "i2", "both"}));
  add_format(fuzz);

  CLI::App* dist = app.add_subcommand("distance", "distance between two configuration files");
  dist->add_option("first", first_file, "configuration file")->required();
  dist->add_option("second", second_file, "configuration file")->required();
  add_format(dist);

  CLI::App* applic = app.add_subcommand("applicability", "is the degree-1 value an invariant here");
  applic->add_option("--manifold", manifold, "klein-r, torus-r, rp2-r, s2xs1, or custom");
  applic->add_option("--class1", class1_text, "free class of component 1");
  applic->add_option("--class2", class2_text, "free class of component 2");
  applic->add_flag("--thickened", custom_thickened, "custom: product of a surface and a line");
  applic->add_flag("--pi2-trivial", custom_pi2, "custom: trivial second homotopy group");
  applic->add_flag("--orientable", custom_orientable, "custom: orientable");
  applic->add_option("--group", custom_group, "custom: fundamental group");
  add_format(applic);

  CLI11_PARSE(app, argc, argv);

  if (*classify) {
    const LinkDiagram d = diagram_from_json(slurp(opt.input));
    if (auto report = validate(d)) throw degeneracy_error(*report);
    json out;
    for (int which : {1, 2}) {
      const GroupElement closure = component_class(d, which);
      const GroupElement cls = free_class_canonical(closure);
      out[which == 1 ? "comp1" : "comp2"] = {
          {"closure", element_tree(closure)},
          {"freeClass", element_tree(cls)},
          {"word", element_to_word(cls)},
      };
    }
    emit(out, opt.format,
         "comp1: " + element_to_word(free_class_canonical(component_class(d, 1))) +
             "\ncomp2: " + element_to_word(free_class_canonical(component_class(d, 2))));
    return 0;
  }

  if (*coorient) {
    const GroupId group = group_from_name(opt.surface == "torus" ? "torus" : opt.surface);
    const GroupElement alpha = parse_element_arg(alpha_text, group);
    const GroupElement beta = parse_element_arg(beta_text, group);
    const bool co = coorientable(alpha, beta);
    if (opt.bound > 0 && coorientable_bruteforce(alpha, beta, opt.bound) != co) {
      throw oracle_mismatch("closed form and bounded search disagree");
    }
    json out{{"coorientable", co}};
    std::string text = co ? "coorientable" : "not coorientable";
    if (!co) {
      const auto witness = noncoorientability_witness(alpha, beta);
      out["witness"] = witness ? json(element_to_word(*witness)) : json(nullptr);
      if (witness) text += " (witness: " + element_to_word(*witness) + ")";
    }
    emit(out, opt.format, text);
    return 0;
  }

  if (*canon) {
    const GroupId group = group_from_name(opt.surface == "torus" ? "torus" : opt.surface);
    const CanonicalizedPair c = canonicalize_pair(parse_element_arg(alpha_text, group),
                                                  parse_element_arg(beta_text, group));
    json out = json::parse(pair_class_to_json(c.cls));
    out["conjugator"] = element_tree(c.conjugator);
    out["character"] = c.character;
    emit(out, opt.format,
         "(" + element_to_word(c.cls.alpha) + " ; " + element_to_word(c.cls.beta) + ")" +
             (c.cls.coorientable ? "" : " [mod 2]"));
    return 0;
  }

  if (*lk) {
    const LinkDiagram d = diagram_from_json(slurp(opt.input));
    const LinkingValue v = lk1(d);
    json out{{"group", group_name(v.group())},
             {"value", json::parse(value_to_json(v))},
             {"zero", v.is_zero()},
             {"convention", kConvention}};
    emit(out, opt.format, "lk1 = " + value_to_text(v));
    return 0;
  }

  if (*i2cmd) {
    const MoveScript s = script_from_json(slurp(opt.moves));
    const Int value = i2(s);
    json out{{"i2", value.convert_to<std::int64_t>()},
             {"events", events(s).size()},
             {"convention", kConvention}};
    emit(out, opt.format, "i2 = " + value.str());
    return 0;
  }

  if (*eventscmd) {
    const MoveScript s = script_from_json(slurp(opt.moves));
    const auto es = events(s);
    json out{{"events", json::parse(events_to_json(es))}, {"convention", kConvention}};
    std::ostringstream text;
    text << es.size() << " event(s)";
    for (const auto& e : es) {
      text << "\n  move " << e.move_index << ": (" << element_to_word(e.raw_alpha) << " ; "
           << element_to_word(e.raw_beta) << ") direction " << e.direction;
    }
    emit(out, opt.format, text.str());
    return 0;
  }

  if (*fuzz) {
    std::size_t failures = 0, events_seen = 0, pairs = 0;
    std::mt19937_64 seeds(opt.seed);
    std::vector<LinkDiagram> lk_bases;
    {
      Component inner{{{Rat(1, 5), Rat(9, 20)},
                       {Rat(1, 2), Rat(9, 20)},
                       {Rat(4, 5), Rat(9, 20)},
                       {Rat(4, 5), Rat(3, 4)},
                       {Rat(1, 5), Rat(3, 4)}},
                      GroupElement::identity(GroupId::klein),
                      {-1, -1, -1, -1, -1}};
      Component wide{{{Rat(-2, 5), Rat(1, 4)},
                      {Rat(2, 5), Rat(1, 4)},
                      {Rat(2, 5), Rat(3, 5)},
                      {Rat(-2, 5), Rat(3, 5)}},
                     GroupElement::identity(GroupId::klein),
                     {+1, +1, +1, +1}};
      lk_bases.push_back(LinkDiagram{SurfaceKind::klein, inner, wide});
      lk_bases.push_back(make_split(GroupElement::klein(1, 0), GroupElement::klein(0, 1)));
      lk_bases.push_back(make_split(GroupElement::klein(0, 1), GroupElement::klein(1, 1)));
    }
    if (fuzz_mode == "lk1" || fuzz_mode == "both") {
      for (std::size_t i = 0; i < fuzz_scripts; ++i) {
        const LinkDiagram& base = lk_bases[i % lk_bases.size()];
        const MoveScript keep = random_script(base, ScriptGenOptions{fuzz_length, false, 0}, seeds());
        if (!(lk1(final_diagram(keep)) == lk1(base))) ++failures;
        const MoveScript jump = random_script(base, ScriptGenOptions{fuzz_length, true, 4}, seeds());
        events_seen += events(jump).size();
        if (!(lk1_via_path(jump) == lk1(final_diagram(jump)))) ++failures;
      }
    }
    if (fuzz_mode == "i2" || fuzz_mode == "both") {
      for (std::size_t i = 0; i < fuzz_scripts; ++i) {
        const auto [a, b] =
            script_pair(lk_bases[0], ScriptGenOptions{fuzz_length, true, 3}, seeds());
        ++pairs;
        if (!(final_diagram(a) == final_diagram(b)) || i2(a) != i2(b)) ++failures;
      }
    }
    json out{{"mode", fuzz_mode},
             {"scripts", fuzz_scripts},
             {"events", events_seen},
             {"scriptPairs", pairs},
             {"failures", failures}};
    emit(out, opt.format,
         "failures: " + std::to_string(failures) + " (events " + std::to_string(events_seen) +
             ", pairs " + std::to_string(pairs) + ")");
    if (failures > 0) throw oracle_mismatch("fuzz checks failed");
    return 0;
  }

  if (*dist) {
    const Configuration a = configuration_from_json(slurp(first_file));
    const Configuration b = configuration_from_json(slurp(second_file));
    const Rat d = config_distance(a, b);
    emit(json{{"distance", format_rational(d)}}, opt.format, format_rational(d));
    return 0;
  }

  if (*applic) {
    ManifoldDescriptor m;
    if (manifold == "klein-r") m = klein_times_line();
    else if (manifold == "torus-r") m = torus_times_line();
    else if (manifold == "rp2-r") m = projective_plane_times_line();
    else if (manifold == "s2xs1") m = sphere_times_circle();
    else if (manifold == "custom")
      m = ManifoldDescriptor{"custom", custom_thickened, custom_pi2, custom_orientable,
                             group_from_name(custom_group)};
    else throw input_error("unknown manifold \"" + manifold + "\"");
    const GroupElement c1 = parse_element_arg(class1_text, m.group);
    const GroupElement c2 = parse_element_arg(class2_text, m.group);
    const Applicability a = applicability(m, c1, c2);
    json out{{"manifold", m.name}, {"status", a.guaranteed ? "guaranteed" : "not-guaranteed"}};
    if (a.reason) {
      out["reason"] = *a.reason == InvarianceReason::thickened_surface ? "thickened-surface"
                                                                       : "contractible-part";
    }
    out["explanation"] = a.explanation;
    emit(out, opt.format,
         (a.guaranteed ? std::string("guaranteed: ") : std::string("not guaranteed: ")) +
             a.explanation);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const oracle_mismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const degeneracy_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const move_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
