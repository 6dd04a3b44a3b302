#include "regsem/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "regsem/sreg.hpp"
#include "regsem/verify.hpp"

namespace regsem {

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;
constexpr int kCapExceeded = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Human output is the JSON report rendered as an indented key/value tree,
// so the two formats carry exactly the same information.
void render(const json& j, std::ostream& out, int indent) {
  const std::string pad(indent * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        out << pad << key << ":";
        if (value.empty()) {
          out << (value.is_array() ? " []" : " {}") << "\n";
        } else {
          out << "\n";
          render(value, out, indent + 1);
        }
      } else {
        out << pad << key << ": " << (value.is_string()
                                          ? value.get<std::string>()
                                          : value.dump())
            << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object() || value.is_array()) {
        out << pad << "-\n";
        render(value, out, indent + 1);
      } else {
        out << pad << "- "
            << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
      }
    }
  }
}

void emit(const json& j, bool as_json, std::ostream& out) {
  if (as_json)
    out << j.dump(2) << "\n";
  else
    render(j, out, 0);
}

struct Common {
  std::string input;
  std::string reps_file;
  bool force = false;
  bool as_json = false;
  long cap_steps = 0;
  int max_order = Semigroup::kDefaultMaxOrder;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("input", c.input, "multiplication table file")->required();
  sub->add_option("--reps", c.reps_file,
                  "representative override file (lines 'R <member> <rep>' "
                  "or 'L <member> <rep>')");
  sub->add_flag("--force", c.force,
                "proceed on ambiguous input or incoherent representatives; "
                "results are marked non-authoritative");
  sub->add_flag("--json", c.as_json, "emit the report as JSON");
  sub->add_option("--cap-steps", c.cap_steps,
                  "step budget per reduction (0 = 4 len^2 |S|^2; the "
                  "REGSEM_CAP_STEPS environment variable sets the default)");
  sub->add_option("--max-order", c.max_order, "largest accepted input order");
}

long effective_cap(const Common& c) {
  if (c.cap_steps > 0) return c.cap_steps;
  if (const char* env = std::getenv("REGSEM_CAP_STEPS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 0;
}

struct Loaded {
  Context cx;
  std::vector<std::string> rep_violations;
};

Loaded load(const Common& c) {
  Semigroup sg = Semigroup::parse(read_file(c.input), c.max_order);
  GreenData g = compute_green(sg);
  RepChoice rc = choose_representatives(sg, g);
  if (!c.reps_file.empty())
    rc = apply_rep_overrides(sg, g, std::move(rc), read_file(c.reps_file));
  Loaded ld{make_context(std::move(sg), std::move(rc)), {}};
  ld.rep_violations =
      validate_representatives(ld.cx.sg, ld.cx.green, ld.cx.reps);
  return ld;
}

// reduce/multiply/enumerate refuse unusable inputs unless --force.
void require_usable(const Loaded& ld, const Common& c) {
  if (!ld.rep_violations.empty() && !c.force)
    throw ParseError("representative choice rejected: " +
                     ld.rep_violations.front() + " (use --force to override)");
  if (!ld.cx.unamb.verdict && !c.force) {
    const auto& w = ld.cx.unamb;
    throw ParseError(
        "semigroup is ambiguous (witness on the " + std::string(1, w.side) +
        " side: " + ld.cx.sg.name(w.s) + " > " + ld.cx.sg.name(w.u) + " < " +
        ld.cx.sg.name(w.t) + "); use --force to reduce anyway");
  }
}

json word_json(const Semigroup& sg, const Word& w) {
  return format_word(sg, w);
}

json unambiguity_json(const Context& cx) {
  json j;
  j["unambiguous"] = cx.unamb.verdict;
  if (!cx.unamb.verdict) {
    j["violation"] = {{"side", std::string(1, cx.unamb.side)},
                      {"upper_left", cx.sg.name(cx.unamb.s)},
                      {"lower", cx.sg.name(cx.unamb.u)},
                      {"upper_right", cx.sg.name(cx.unamb.t)}};
  }
  return j;
}

json classes_json(const Semigroup& sg,
                  const std::vector<std::vector<Elem>>& classes) {
  json arr = json::array();
  for (const auto& members : classes) {
    json cls = json::array();
    for (Elem x : members) cls.push_back(sg.name(x));
    arr.push_back(cls);
  }
  return arr;
}

json strict_order_json(const Semigroup& sg, const GreenData& g, bool left) {
  // Strict order between distinct nonzero classes, as "lower < upper".
  json arr = json::array();
  const auto& classes = left ? g.l_members : g.r_members;
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = 0; b < classes.size(); ++b) {
      if (a == b) continue;
      const Elem x = classes[a][0], y = classes[b][0];
      if (sg.is_zero(x) || sg.is_zero(y)) continue;
      const bool lt = left ? g.lt_L(x, y) : g.lt_R(x, y);
      if (lt) arr.push_back(sg.name(x) + " < " + sg.name(y));
    }
  return arr;
}

json reps_json(const Context& cx) {
  json r = json::array(), l = json::array();
  for (const auto& members : cx.green.r_members) {
    if (cx.sg.is_zero(members[0])) continue;
    json cls = json::array();
    for (Elem x : members) cls.push_back(cx.sg.name(x));
    r.push_back({{"class", cls}, {"rep", cx.sg.name(cx.reps.r(members[0]))}});
  }
  for (const auto& members : cx.green.l_members) {
    if (cx.sg.is_zero(members[0])) continue;
    json cls = json::array();
    for (Elem x : members) cls.push_back(cx.sg.name(x));
    l.push_back({{"class", cls}, {"rep", cx.sg.name(cx.reps.l(members[0]))}});
  }
  return {{"r", r}, {"l", l}};
}

int cmd_analyze(const Common& c, std::ostream& out) {
  Loaded ld = load(c);
  const Context& cx = ld.cx;
  json j;
  j["command"] = "analyze";
  j["input"] = c.input;
  j["order"] = cx.sg.order();
  j["elements"] = json(cx.sg.names());
  j["zero"] = cx.sg.zero() ? json(cx.sg.name(*cx.sg.zero())) : json();
  j["identity"] =
      cx.sg.identity() ? json(cx.sg.name(*cx.sg.identity())) : json();
  j["green"] = {{"r_classes", classes_json(cx.sg, cx.green.r_members)},
                {"l_classes", classes_json(cx.sg, cx.green.l_members)},
                {"h_classes", classes_json(cx.sg, cx.green.h_members)},
                {"d_classes", classes_json(cx.sg, cx.green.d_members)},
                {"j_classes", classes_json(cx.sg, cx.green.j_members)},
                {"r_order", strict_order_json(cx.sg, cx.green, false)},
                {"l_order", strict_order_json(cx.sg, cx.green, true)}};
  j.update(unambiguity_json(cx));
  json reg = json::array();
  for (Elem s = 0; s < cx.sg.order(); ++s)
    if (is_regular_element(cx.sg, s)) reg.push_back(cx.sg.name(s));
  j["regular_elements"] = reg;
  j["representatives"] = reps_json(cx);
  j["representative_violations"] = json(ld.rep_violations);
  emit(j, c.as_json, out);
  return ld.rep_violations.empty() ? kOk : kVerificationFailure;
}

int cmd_reduce(const Common& c, const std::string& word_text,
               const std::string& strategy_name_opt, std::uint64_t seed,
               bool with_trace, std::ostream& out) {
  Loaded ld = load(c);
  require_usable(ld, c);
  auto st = strategy_by_name(strategy_name_opt);
  if (!st) throw ParseError("unknown strategy '" + strategy_name_opt + "'");
  RewriteSystem rs(ld.cx, c.force, effective_cap(c));
  Word w = parse_word(ld.cx.sg, word_text);
  Trace trace;
  Word nf = rs.reduce_with(w, *st, seed, &trace);
  json j;
  j["command"] = "reduce";
  j["input"] = c.input;
  j["word"] = word_json(ld.cx.sg, w);
  j["normal_form"] = word_json(ld.cx.sg, nf);
  j["steps"] = trace.size();
  j["strategy"] = strategy_name(*st);
  j["authoritative"] = ld.cx.unamb.verdict && ld.rep_violations.empty();
  if (with_trace) {
    json tr = json::array();
    for (const RewriteStep& step : trace)
      tr.push_back({{"rule", rule_name(step.redex.rule)},
                    {"pos", step.redex.pos},
                    {"result", word_json(ld.cx.sg, step.result)}});
    j["trace"] = tr;
  }
  emit(j, c.as_json, out);
  return kOk;
}

int cmd_multiply(const Common& c, const std::string& a_text,
                 const std::string& b_text, std::ostream& out) {
  Loaded ld = load(c);
  require_usable(ld, c);
  RewriteSystem rs(ld.cx, c.force, effective_cap(c));
  Word a = rs.reduce(parse_word(ld.cx.sg, a_text));
  Word b = rs.reduce(parse_word(ld.cx.sg, b_text));
  Word prod = multiply(rs, a, b);
  json j;
  j["command"] = "multiply";
  j["input"] = c.input;
  j["a"] = word_json(ld.cx.sg, a);
  j["b"] = word_json(ld.cx.sg, b);
  j["product"] = word_json(ld.cx.sg, prod);
  j["authoritative"] = ld.cx.unamb.verdict && ld.rep_violations.empty();
  emit(j, c.as_json, out);
  return kOk;
}

json j_structure_json(const JStructureReport& r) {
  return {{"s_nonzero_j_classes", r.s_j_classes},
          {"cover_nonzero_j_classes", r.cover_j_classes},
          {"map_injective", r.map_injective},
          {"map_order_preserving", r.map_order_preserving},
          {"map_order_reflecting", r.map_order_reflecting},
          {"every_cover_class_meets_image", r.image_covers_all},
          {"class_map", json(r.class_map)},
          {"class_size", json(r.class_size)},
          {"regular_count", json(r.regular_count)}};
}

int cmd_enumerate(const Common& c, const std::string& out_file,
                  std::size_t max_elements, std::ostream& out) {
  Loaded ld = load(c);
  require_usable(ld, c);
  RewriteSystem rs(ld.cx, c.force, effective_cap(c));
  EnumLimits lim;
  if (max_elements) lim.max_elements = max_elements;
  SRegTable table = enumerate_elements(rs, lim);
  auto axioms = check_axioms(rs, table);
  auto fact = fact_2_5_check(rs);
  json j;
  j["command"] = "enumerate";
  j["input"] = c.input;
  j["size"] = table.elements.size();
  json elems = json::array();
  for (const Word& w : table.elements)
    elems.push_back(word_json(ld.cx.sg, w));
  j["elements"] = elems;
  j["zero_index"] = table.zero_index;
  j["inv"] = json(table.inv);
  j["axiom_violations"] = json(axioms);
  j["conjugate_consistency_violations"] = json(fact);
  j["j_structure"] = j_structure_json(compare_j_structure(rs, table));
  j["authoritative"] = ld.cx.unamb.verdict && ld.rep_violations.empty();
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw ParseError("cannot write '" + out_file + "'");
    f << export_table(rs, table);
    j["export_file"] = out_file;
  }
  emit(j, c.as_json, out);
  return axioms.empty() && fact.empty() ? kOk : kVerificationFailure;
}

int cmd_verify(const Common& c, int maxlen, const std::string& lemmas_arg,
               int seeds, std::ostream& out) {
  Loaded ld = load(c);
  if (!ld.rep_violations.empty() && !c.force)
    throw ParseError("representative choice rejected: " +
                     ld.rep_violations.front() + " (use --force to override)");
  // The checks themselves are the point here, so an ambiguous input is
  // examined rather than refused; the report carries the verdict.
  RewriteSystem rs(ld.cx, true, effective_cap(c));
  json j;
  j["command"] = "verify";
  j["input"] = c.input;
  j.update(unambiguity_json(ld.cx));
  j["representative_violations"] = json(ld.rep_violations);

  bool failed = !ld.cx.unamb.verdict || !ld.rep_violations.empty();
  bool capped = false;

  long words = 0, multi_nf = 0, cyclic = 0, incomplete = 0;
  json confl_failures = json::array();
  std::vector<Word> probe_words;
  for_each_word(ld.cx, maxlen, [&](const Word& w) {
    ++words;
    BfsResult r = confluence_bfs(rs, w);
    if (!r.complete) ++incomplete;
    if (!r.acyclic) {
      ++cyclic;
      if (confl_failures.size() < 10)
        confl_failures.push_back("cycle from " + format_word(ld.cx.sg, w));
    }
    if (r.sinks.size() != 1) {
      ++multi_nf;
      if (confl_failures.size() < 10)
        confl_failures.push_back(format_word(ld.cx.sg, w) + " has " +
                                 std::to_string(r.sinks.size()) +
                                 " normal forms");
    }
    if (static_cast<int>(w.size()) <= std::min(maxlen, 4))
      probe_words.push_back(w);
  });
  j["confluence"] = {{"maxlen", maxlen},
                     {"words", words},
                     {"multiple_normal_forms", multi_nf},
                     {"cycles", cyclic},
                     {"incomplete", incomplete},
                     {"failures", confl_failures}};
  failed = failed || multi_nf || cyclic;
  capped = capped || incomplete;

  CriticalPairStats cp = critical_pairs(rs, maxlen);
  json divergent = json::array();
  for (const CriticalPair& p : cp.divergent)
    divergent.push_back({{"peak", word_json(ld.cx.sg, p.peak)},
                         {"left", word_json(ld.cx.sg, p.left_nf)},
                         {"right", word_json(ld.cx.sg, p.right_nf)}});
  j["critical_pairs"] = {{"pairs", cp.pairs},
                         {"joinable", cp.joinable},
                         {"divergent", divergent},
                         {"unresolved", cp.unresolved.size()}};
  failed = failed || !cp.divergent.empty();
  capped = capped || !cp.unresolved.empty();

  std::vector<std::string> ids;
  if (!lemmas_arg.empty() && lemmas_arg != "all") {
    std::istringstream in(lemmas_arg);
    std::string id;
    while (std::getline(in, id, ',')) ids.push_back(id);
  }
  LemmaReport lr = lemma_suite(ld.cx, ids);
  j["laws"] = {{"checked", json(lr.checked)},
               {"violations", json(lr.violations)},
               {"notes", json(lr.notes)}};
  failed = failed || !lr.violations.empty();

  std::vector<std::pair<Strategy, std::uint64_t>> strategies = {
      {Strategy::Deterministic, 0}, {Strategy::Rightmost, 0}};
  for (int k = 1; k <= seeds; ++k) strategies.push_back({Strategy::Random, static_cast<std::uint64_t>(k)});
  ProbeResult pr = termination_probe(rs, probe_words, strategies);
  j["termination"] = {{"runs", pr.runs},
                      {"cap_exceeded", pr.cap_exceeded},
                      {"strategy_disagreements", pr.disagreements},
                      {"max_steps", pr.max_steps},
                      {"max_changes_at_maximal", pr.max_changes_at_maximal},
                      {"notes", json(pr.notes)}};
  failed = failed || pr.disagreements;
  capped = capped || pr.cap_exceeded;

  j["status"] = failed ? "fail" : (capped ? "capped" : "ok");
  emit(j, c.as_json, out);
  if (failed) return kVerificationFailure;
  if (capped) return kCapExceeded;
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Green's relations, unambiguity and the regular-cover "
               "rewrite system of a finite semigroup"};
  app.require_subcommand(1);

  Common c;
  std::string word_text, a_text, b_text, strategy = "deterministic";
  std::string out_file, lemmas_arg = "all";
  std::uint64_t seed = 0;
  bool with_trace = false;
  int maxlen = 5, seeds = 2;
  std::size_t max_elements = 0;

  auto* analyze = app.add_subcommand(
      "analyze", "Green structure, unambiguity and representatives");
  add_common(analyze, c);

  auto* reduce = app.add_subcommand("reduce", "reduce a word to normal form");
  add_common(reduce, c);
  reduce->add_option("-w,--word", word_text, "word (e.g. \"b' b\")")
      ->required();
  reduce->add_option("--strategy", strategy,
                     "deterministic | rightmost | random");
  reduce->add_option("--seed", seed, "seed for the random strategy");
  reduce->add_flag("--trace", with_trace, "include the rewrite trace");

  auto* multiply = app.add_subcommand("multiply", "multiply two words");
  add_common(multiply, c);
  multiply->add_option("-a", a_text, "left factor")->required();
  multiply->add_option("-b", b_text, "right factor")->required();

  auto* enumerate =
      app.add_subcommand("enumerate", "enumerate the regular cover");
  add_common(enumerate, c);
  enumerate->add_option("-o,--output", out_file,
                        "write the cover multiplication table here");
  enumerate->add_option("--max-elements", max_elements,
                        "element cap for the enumeration");

  auto* verify = app.add_subcommand(
      "verify", "confluence, termination and algebraic-law checks");
  add_common(verify, c);
  verify->add_option("--maxlen", maxlen, "scan all words up to this length");
  verify->add_option("--lemmas", lemmas_arg,
                     "'all' or a comma-separated list of law ids");
  verify->add_option("--seeds", seeds, "number of random-strategy seeds");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& pe) {
    const int rc = app.exit(pe, out, err);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(c, out);
    if (reduce->parsed())
      return cmd_reduce(c, word_text, strategy, seed, with_trace, out);
    if (multiply->parsed()) return cmd_multiply(c, a_text, b_text, out);
    if (enumerate->parsed())
      return cmd_enumerate(c, out_file, max_elements, out);
    if (verify->parsed())
      return cmd_verify(c, maxlen, lemmas_arg, seeds, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace regsem
