#include "conjcat/cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "conjcat/ccg.hpp"
#include "conjcat/conj_grammar.hpp"
#include "conjcat/cvp.hpp"
#include "conjcat/error.hpp"
#include "conjcat/grammar.hpp"
#include "conjcat/macll.hpp"
#include "conjcat/prover.hpp"
#include "conjcat/transforms.hpp"

namespace conjcat {

namespace {

using nlohmann::json;

std::size_t default_budget() {
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultBudget;
}

struct Common {
  std::string output = "text";
  std::string out_path;
  std::size_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--output", c.output, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app->add_option("--out", c.out_path, "Write the result to this file instead of stdout");
  app->add_option("--budget", c.budget, "Work budget (default from $" + std::string(kBudgetEnv) + ")")
      ->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed, "Seed for randomized checks");
}

// Result of one subcommand: the payload in the requested format plus an exit
// code. Diagnostics go to stderr directly.
struct Outcome {
  int code = kExitYes;
  std::string text;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// --- text renderers for derivations -----------------------------------------

void ccg_tree_text(const CcgDerivation& d, std::string_view w, int depth, std::ostringstream& out) {
  static const char* names[] = {"axiom", "conjunction", "left-division", "right-division"};
  const std::string cat = d.category.is_prim() ? to_string(d.category) : "(" + to_string(d.category) + ")";
  out << std::string(2 * depth, ' ') << cat << "(" << w.substr(d.begin, d.end - d.begin) << ")  ["
      << names[static_cast<int>(d.kind)] << "]\n";
  for (const auto& c : d.children) ccg_tree_text(c, w, depth + 1, out);
}

void cg_tree_text(const CgDerivation& d, const ConjGrammar& g, std::string_view w, int depth, std::ostringstream& out) {
  std::string span(w.substr(d.begin, d.end - d.begin));
  out << std::string(2 * depth, ' ') << d.label << "(" << (span.empty() ? "eps" : span) << ")";
  if (d.kind == CgDerivation::Kind::kRule) out << "  [" << to_string(g.rules[d.rule_index]) << "]";
  out << "\n";
  for (const auto& c : d.children) cg_tree_text(c, g, w, depth + 1, out);
}

// --- grammar rendering -------------------------------------------------------

std::string latex_terminal(char c) { return std::string("\\mathtt{") + c + "}"; }

std::string grammar_latex(const AnyGrammar& any) {
  std::ostringstream out;
  out << "\\begin{align*}\n";
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, ConjGrammar>) {
          for (const auto& r : g.rules) {
            out << "  \\mathit{" << r.head << "} &\\to ";
            for (std::size_t k = 0; k < r.conjuncts.size(); ++k) {
              if (k) out << " \\mathop{\\&} ";
              if (r.conjuncts[k].empty()) out << "\\varepsilon";
              for (const auto& s : r.conjuncts[k])
                out << (s.is_terminal() ? latex_terminal(s.letter()) : "\\mathit{" + s.name + "}") << "\\,";
            }
            out << " \\\\\n";
          }
        } else if constexpr (std::is_same_v<T, CCG>) {
          for (const auto& a : g.axioms) out << "  & " << to_latex(a.category) << "(" << latex_terminal(a.letter) << ") \\\\\n";
          out << "  & \\text{target } " << g.target << "\n";
        } else if constexpr (std::is_same_v<T, LambekGrammar>) {
          for (const auto& [c, cats] : g.lexicon)
            for (const auto& cat : cats) out << "  " << latex_terminal(c) << " &\\mapsto " << to_latex(cat) << " \\\\\n";
          out << "  & \\text{target } " << to_latex(g.target) << "\n";
        } else {
          out << "  & \\text{quotient bundle}\n";
        }
      },
      any);
  out << "\\end{align*}\n";
  return out.str();
}

std::string grammar_text(const AnyGrammar& any) {
  return std::visit([](const auto& g) { return to_text(g); }, any);
}

// --- member ------------------------------------------------------------------

struct MemberArgs {
  std::string grammar;
  std::string word;
  std::string start;
  bool derive = false;
};

Outcome run_member(const MemberArgs& a, const Common& c) {
  GrammarFile gf = load_grammar_file(a.grammar);
  const std::string& w = a.word;
  bool member = false;
  bool exhausted = false;
  json tree = nullptr;
  std::string tree_text, tree_latex;
  const bool want_tree = a.derive || c.output != "text";

  auto run_ccg = [&](const CCG& g) {
    if (w.empty()) return;  // categorial grammars never derive the empty string
    CcgRecognizer r(g);
    Category b = Category::prim(a.start.empty() ? g.target : a.start);
    auto d = r.derive(b, w);
    member = d.has_value();
    if (d && want_tree) {
      tree = to_json(*d, w);
      tree_latex = to_latex(*d, w);
      std::ostringstream o;
      ccg_tree_text(*d, w, 0, o);
      tree_text = o.str();
    }
  };

  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, ConjGrammar>) {
          auto d = cg_derive(g, w, a.start);
          member = d.has_value();
          if (d && want_tree) {
            tree = to_json(*d, g, w);
            tree_latex = to_latex(*d, g, w);
            std::ostringstream o;
            cg_tree_text(*d, g, w, 0, o);
            tree_text = o.str();
          }
        } else if constexpr (std::is_same_v<T, CCG>) {
          run_ccg(g);
        } else if constexpr (std::is_same_v<T, LambekGrammar>) {
          if (!a.start.empty()) throw GrammarError("--start applies to conjunctive and categorial grammars only");
          LambekRecognizer r(g, c.budget);
          Verdict v = r.member(w);
          member = v == Verdict::kProved;
          exhausted = v == Verdict::kBudgetExhausted;
          if (member && want_tree) {
            auto p = r.derive(w);
            if (p) {
              tree = to_json(*p);
              tree_latex = to_latex(*p);
              tree_text = to_text(*p);
            }
          }
        } else {
          run_ccg(bundle_to_ccg(g));
        }
      },
      gf.grammar);

  Outcome o;
  o.code = exhausted ? kExitBudget : member ? kExitYes : kExitNo;
  const char* verdict = exhausted ? "budget exhausted" : member ? "member" : "not a member";
  if (c.output == "json") {
    json j;
    j["command"] = "member";
    j["kind"] = gf.kind;
    j["string"] = w;
    j["verdict"] = verdict;
    j["member"] = member;
    j["derivation"] = tree;
    o.text = dump(j);
  } else if (c.output == "latex") {
    o.text = member ? tree_latex + "\n" : std::string("% ") + verdict + "\n";
  } else {
    o.text = std::string(verdict) + "\n" + (a.derive ? tree_text : "");
  }
  return o;
}

// --- prove -------------------------------------------------------------------

struct ProveArgs {
  std::string calculus = "MALC";
  std::string sequent;
  bool no_proof = false;
};

Outcome run_prove(const ProveArgs& a, const Common& c) {
  Calculus calc = parse_calculus(a.calculus);
  Outcome o;
  json j;
  j["command"] = "prove";
  j["calculus"] = to_string(calc);
  std::string proof_text, proof_latex;
  json proof = nullptr;
  Verdict v;
  std::size_t expansions = 0;
  if (calc == Calculus::kMACLL) {
    MacllSequent s = a.sequent.find("|-") != std::string::npos
                         ? parse_macll_sequent(a.sequent)
                         : [&] {
                             Sequent two = parse_sequent(a.sequent);
                             return translate_sequent(two.antecedent, two.succedent);
                           }();
    j["sequent"] = to_string(s);
    MacllResult r = MacllProver(c.budget).prove(s, !a.no_proof);
    v = r.verdict;
    expansions = r.expansions;
    if (r.proof) {
      proof = to_json(*r.proof);
      proof_text = to_text(*r.proof);
      proof_latex = to_latex(*r.proof);
    }
  } else {
    Sequent s = parse_sequent(a.sequent);
    j["sequent"] = to_string(s);
    ProveResult r = LambekProver(calc, c.budget).prove(s, !a.no_proof);
    v = r.verdict;
    expansions = r.expansions;
    if (r.proof) {
      proof = to_json(*r.proof);
      proof_text = to_text(*r.proof);
      proof_latex = to_latex(*r.proof);
    }
  }
  o.code = v == Verdict::kProved ? kExitYes : v == Verdict::kRefuted ? kExitNo : kExitBudget;
  const char* verdict = v == Verdict::kProved ? "derivable" : v == Verdict::kRefuted ? "not derivable" : "budget exhausted";
  if (c.output == "json") {
    j["verdict"] = verdict;
    j["expansions"] = expansions;
    j["proof"] = proof;
    o.text = dump(j);
  } else if (c.output == "latex") {
    o.text = v == Verdict::kProved && !proof_latex.empty() ? proof_latex + "\n" : std::string("% ") + verdict + "\n";
  } else {
    o.text = std::string(verdict) + "\n" + proof_text;
  }
  return o;
}

// --- translate ---------------------------------------------------------------

struct TranslateArgs {
  std::string grammar;
  std::string from;
  std::string to;
};

AnyGrammar translate_ccg(const CCG& g, const std::string& to) {
  if (to == "cg") return ccg_to_cg(g);
  if (to == "ccg") return g;
  if (to == "malc") return ccg_to_malc(g);
  if (to == "malc-empty") return add_empty_string(ccg_to_malc(g));
  if (to == "malc-disj") return to_disjunction_grammar(g, false);
  return to_disjunction_grammar(g, true);
}

Outcome run_translate(const TranslateArgs& a, const Common& c) {
  GrammarFile gf = load_grammar_file(a.grammar);
  AnyGrammar result;
  if (a.from == "ccg") {
    const CCG* g = std::get_if<CCG>(&gf.grammar);
    if (!g) throw GrammarError("--from ccg needs a ccg or bcg file, got kind '" + gf.kind + "'");
    result = translate_ccg(*g, a.to);
  } else {
    const QuotientBundle* b = std::get_if<QuotientBundle>(&gf.grammar);
    if (!b) throw GrammarError("--from bundle needs a bundle file, got kind '" + gf.kind + "'");
    result = a.to == "cg" ? AnyGrammar(join_bundle(*b)) : translate_ccg(bundle_to_ccg(*b), a.to);
  }
  Outcome o;
  if (c.output == "json") {
    json j;
    j["command"] = "translate";
    j["from"] = a.from;
    j["to"] = a.to;
    j["grammar"] = grammar_text(result);
    o.text = dump(j);
  } else if (c.output == "latex") {
    o.text = grammar_latex(result);
  } else {
    o.text = grammar_text(result);
  }
  return o;
}

// --- enumerate ---------------------------------------------------------------

struct EnumerateArgs {
  std::string grammar;
  std::size_t max_length = 6;
};

Outcome run_enumerate(const EnumerateArgs& a, const Common& c) {
  GrammarFile gf = load_grammar_file(a.grammar);
  Language lang;
  bool exhausted = false;
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, ConjGrammar>) {
          lang = cg_enumerate(g, a.max_length, c.budget);
        } else if constexpr (std::is_same_v<T, CCG>) {
          lang = ccg_enumerate(g, a.max_length, c.budget);
        } else if constexpr (std::is_same_v<T, LambekGrammar>) {
          LambekRecognizer r(g, c.budget);
          for (const auto& w : all_strings(g.alphabet, a.max_length, c.budget)) {
            Verdict v = r.member(w);
            if (v == Verdict::kProved) lang.insert(w);
            if (v == Verdict::kBudgetExhausted) exhausted = true;
          }
        } else {
          lang = ccg_enumerate(bundle_to_ccg(g), a.max_length, c.budget);
        }
      },
      gf.grammar);
  Outcome o;
  o.code = exhausted ? kExitBudget : kExitYes;
  if (c.output == "json") {
    json j;
    j["command"] = "enumerate";
    j["kind"] = gf.kind;
    j["max_length"] = a.max_length;
    j["members"] = json::array();
    for (const auto& w : lang) j["members"].push_back(w);
    j["count"] = lang.size();
    j["complete"] = !exhausted;
    o.text = dump(j);
  } else {
    std::ostringstream out;
    if (c.output == "latex") out << "\\{";
    bool first = true;
    for (const auto& w : lang) {
      if (c.output == "latex") {
        out << (first ? "" : ", ") << (w.empty() ? "\\varepsilon" : "\\mathtt{" + w + "}");
      } else {
        out << (w.empty() ? "eps" : w) << "\n";
      }
      first = false;
    }
    if (c.output == "latex") out << "\\}\n";
    o.text = out.str();
  }
  return o;
}

// --- check-odd-form ----------------------------------------------------------

Outcome run_check_odd_form(const std::string& path, const Common& c) {
  GrammarFile gf = load_grammar_file(path);
  json violations = json::array();
  auto add = [&](const ConjGrammar& g, const std::string& letter) {
    for (const auto& v : check_odd_normal_form(g).violations) {
      json e{{"rule", v.rule_index}, {"message", v.message}};
      if (!letter.empty()) e["quotient"] = letter;
      violations.push_back(e);
    }
  };
  if (const auto* g = std::get_if<ConjGrammar>(&gf.grammar)) {
    add(*g, "");
  } else if (const auto* b = std::get_if<QuotientBundle>(&gf.grammar)) {
    validate(*b);
    for (const auto& [letter, q] : b->quotients) add(q, std::string(1, letter));
  } else {
    throw GrammarError("check-odd-form needs a cg or bundle file, got kind '" + gf.kind + "'");
  }
  Outcome o;
  o.code = violations.empty() ? kExitYes : kExitNo;
  if (c.output == "json") {
    o.text = dump(json{{"command", "check-odd-form"}, {"ok", violations.empty()}, {"violations", violations}});
  } else {
    std::ostringstream out;
    out << (violations.empty() ? "odd normal form" : "not in odd normal form") << "\n";
    for (const auto& v : violations) {
      if (v.contains("quotient")) out << "quotient " << v["quotient"].get<std::string>() << ": ";
      out << "rule " << v["rule"].get<std::size_t>() << ": " << v["message"].get<std::string>() << "\n";
    }
    o.text = c.output == "latex" ? "% " + out.str() : out.str();
  }
  return o;
}

// --- cvp ---------------------------------------------------------------------

struct CvpArgs {
  std::string circuit;
  std::string word;
  std::string start = "T";
  std::size_t max_gates = 5;
  std::size_t max_inputs = 3;
  std::size_t patterns = 200;
};

Outcome run_cvp_encode(const CvpArgs& a, const Common& c) {
  Circuit circ = parse_circuit(a.circuit);
  std::string w = encode_circuit(circ);
  Outcome o;
  if (c.output == "json")
    o.text = dump(json{{"command", "cvp encode"}, {"circuit", to_string(circ)}, {"encoding", w}});
  else
    o.text = c.output == "latex" ? "\\mathtt{" + w + "}\n" : w + "\n";
  return o;
}

Outcome run_cvp_eval(const CvpArgs& a, const Common& c) {
  Circuit circ = parse_circuit(a.circuit);
  bool v = eval_circuit(circ);
  Outcome o;
  o.code = v ? kExitYes : kExitNo;
  if (c.output == "json")
    o.text = dump(json{{"command", "cvp eval"}, {"circuit", to_string(circ)}, {"value", v ? 1 : 0}});
  else
    o.text = std::string(v ? "1" : "0") + "\n";
  return o;
}

Outcome run_cvp_member(const CvpArgs& a, const Common& c) {
  bool member;
  if (a.word.find('?') != std::string::npos) {
    if (a.start != "T") throw GrammarError("patterns with ? are checked against T only");
    member = csp_member(a.word, c.budget);
  } else {
    member = cg_member(cvp_grammar(), a.word, a.start);
  }
  Outcome o;
  o.code = member ? kExitYes : kExitNo;
  if (c.output == "json")
    o.text = dump(json{{"command", "cvp member"}, {"string", a.word}, {"start", a.start}, {"member", member}});
  else
    o.text = std::string(member ? "member" : "not a member") + "\n";
  return o;
}

// Evaluator agreement over every small circuit, then seeded patterns checked
// against an explicit loop over all instantiations of their question marks.
Outcome run_cvp_fuzz(const CvpArgs& a, const Common& c) {
  const ConjGrammar g = cvp_grammar();
  std::mt19937_64 rng(c.seed);
  json failures = json::array();
  auto circuits = enumerate_circuits(a.max_gates, a.max_inputs);
  std::size_t true_count = 0;
  for (const auto& circ : circuits) {
    const std::string w = encode_circuit(circ);
    const bool v = eval_circuit(circ);
    const bool t = cg_member(g, w, "T");
    const bool f = cg_member(g, w, "F");
    true_count += v;
    if (t != v || f == v)
      failures.push_back({{"circuit", to_string(circ)}, {"encoding", w}, {"value", v}, {"T", t}, {"F", f}});
  }

  json patterns = json::array();
  for (std::size_t k = 0; k < a.patterns; ++k) {
    std::string p;
    if (k % 2 == 0 && !circuits.empty()) {
      p = encode_circuit(circuits[rng() % circuits.size()]);
    } else {
      std::size_t len = 1 + rng() % 8;
      for (std::size_t i = 0; i < len; ++i) p += "ab01"[rng() % 4];
    }
    // Hide at most four digits.
    std::vector<std::size_t> digits;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] == '0' || p[i] == '1') digits.push_back(i);
    std::size_t hide = digits.empty() ? 0 : rng() % (std::min<std::size_t>(digits.size(), 4) + 1);
    for (std::size_t h = 0; h < hide; ++h) {
      std::size_t pick = h + rng() % (digits.size() - h);
      std::swap(digits[h], digits[pick]);
      p[digits[h]] = '?';
    }
    for (char& ch : p)
      if (ch == '0' || ch == '1') ch = "ab"[rng() % 2];

    std::vector<std::size_t> holes;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] == '?') holes.push_back(i);
    bool brute = false;
    for (std::size_t mask = 0; mask < (std::size_t{1} << holes.size()) && !brute; ++mask) {
      std::string u = p;
      for (std::size_t h = 0; h < holes.size(); ++h) u[holes[h]] = (mask >> h) & 1 ? '1' : '0';
      brute = cg_member(g, u);
    }
    const bool got = csp_member(p, c.budget);
    patterns.push_back({{"pattern", p}, {"member", got}});
    if (got != brute) failures.push_back({{"pattern", p}, {"csp_member", got}, {"brute_force", brute}});
  }

  Outcome o;
  o.code = failures.empty() ? kExitYes : kExitNo;
  json j{{"command", "cvp fuzz"}, {"seed", c.seed},          {"max_gates", a.max_gates},
         {"max_inputs", a.max_inputs}, {"circuits", circuits.size()}, {"true_circuits", true_count},
         {"patterns", patterns}, {"failures", failures}, {"ok", failures.empty()}};
  if (c.output == "json") {
    o.text = dump(j);
  } else {
    std::ostringstream out;
    out << circuits.size() << " circuits, " << a.patterns << " patterns, " << failures.size() << " failures\n";
    for (const auto& f : failures) out << f.dump() << "\n";
    o.text = c.output == "latex" ? "% " + out.str() : out.str();
  }
  return o;
}

bool emit(const Outcome& o, const Common& c, std::ostream& out, std::ostream& err) {
  if (c.out_path.empty()) {
    out << o.text;
    return true;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  f << o.text;
  if (!f) {
    err << "error: cannot write " << c.out_path << "\n";
    return false;
  }
  return true;
}

}  // namespace

int cli_main(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
  CLI::App app{"Conjunctive grammars, categorial grammars and Lambek calculus provers"};
  app.require_subcommand(1);
  Common common;
  common.budget = default_budget();

  MemberArgs member;
  auto* m = app.add_subcommand("member", "Decide membership of a string");
  m->add_option("--grammar", member.grammar, "Grammar file")->required();
  m->add_option("word", member.word, "The string (\"\" for the empty string)")->required();
  m->add_option("--start", member.start, "Nonterminal or primitive category to derive instead of the start");
  m->add_flag("--derive", member.derive, "Print the derivation in text mode");
  add_common(m, common);

  ProveArgs prove;
  auto* p = app.add_subcommand("prove", "Search for a cut-free proof of a sequent");
  p->add_option("--calculus", prove.calculus, "L, L*, MALC, MALC* or MACLL")
      ->check(CLI::IsMember({"L", "L*", "MALC", "MALC*", "MACLL"}));
  p->add_option("sequent", prove.sequent, "Sequent such as \"p, p\\q -> q\" or \"|- ~p, p\"")->required();
  p->add_flag("--no-proof", prove.no_proof, "Only report the verdict");
  add_common(p, common);

  TranslateArgs translate;
  auto* t = app.add_subcommand("translate", "Translate a grammar");
  t->add_option("--grammar", translate.grammar, "Grammar file")->required();
  t->add_option("--from", translate.from, "Source kind")->required()->check(CLI::IsMember({"ccg", "bundle"}));
  t->add_option("--to", translate.to, "Target kind")
      ->required()
      ->check(CLI::IsMember({"cg", "ccg", "malc", "malc-empty", "malc-disj", "malc-disj-empty"}));
  add_common(t, common);

  EnumerateArgs enumerate;
  auto* e = app.add_subcommand("enumerate", "List all members up to a length");
  e->add_option("--grammar", enumerate.grammar, "Grammar file")->required();
  e->add_option("--max-length", enumerate.max_length, "Longest string to test");
  add_common(e, common);

  std::string odd_path;
  auto* o = app.add_subcommand("check-odd-form", "Check odd normal form of a grammar or bundle");
  o->add_option("--grammar", odd_path, "Grammar or bundle file")->required();
  add_common(o, common);

  CvpArgs cvp;
  auto* cv = app.add_subcommand("cvp", "Sequential NOR circuits and their grammar");
  cv->require_subcommand(1);
  auto* enc = cv->add_subcommand("encode", "Encode a circuit as a string");
  enc->add_option("circuit", cvp.circuit, "Circuit such as \"in:0,1 nor:1 nor:2\"")->required();
  add_common(enc, common);
  auto* ev = cv->add_subcommand("eval", "Evaluate a circuit (exit 0 when it outputs 1)");
  ev->add_option("circuit", cvp.circuit, "Circuit literal")->required();
  add_common(ev, common);
  auto* cm = cv->add_subcommand("member", "Grammar membership; a pattern with ? asks for satisfiability");
  cm->add_option("word", cvp.word, "String over 0, 1, a, b, or a pattern over a, b, ?")->required();
  cm->add_option("--start", cvp.start, "T or F")->check(CLI::IsMember({"T", "F"}));
  add_common(cm, common);
  auto* fz = cv->add_subcommand("fuzz", "Cross-check grammar, evaluator and satisfiability");
  fz->add_option("--max-gates", cvp.max_gates, "Largest circuit size")->check(CLI::PositiveNumber);
  fz->add_option("--max-inputs", cvp.max_inputs, "Most input gates")->check(CLI::PositiveNumber);
  fz->add_option("--patterns", cvp.patterns, "Random satisfiability patterns");
  add_common(fz, common);

  // A sequent with an empty antecedent starts with "->", which would read as
  // an option; a leading space keeps it positional and parses the same.
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) {
    std::string a = argv[i];
    if (a.rfind("->", 0) == 0) a = " " + a;
    args.push_back(std::move(a));
  }

  try {
    app.parse(args);
  } catch (const CLI::ParseError& ex) {
    int code = app.exit(ex, out, err);
    return code == 0 ? kExitYes : kExitUsage;
  }

  try {
    Outcome result;
    if (m->parsed()) result = run_member(member, common);
    else if (p->parsed()) result = run_prove(prove, common);
    else if (t->parsed()) result = run_translate(translate, common);
    else if (e->parsed()) result = run_enumerate(enumerate, common);
    else if (o->parsed()) result = run_check_odd_form(odd_path, common);
    else if (enc->parsed()) result = run_cvp_encode(cvp, common);
    else if (ev->parsed()) result = run_cvp_eval(cvp, common);
    else if (cm->parsed()) result = run_cvp_member(cvp, common);
    else result = run_cvp_fuzz(cvp, common);
    if (!emit(result, common, out, err)) return kExitUsage;
    if (result.code == kExitBudget) err << "budget of " << common.budget << " exhausted before an answer\n";
    return result.code;
  } catch (const BudgetExceeded& ex) {
    err << "budget exhausted: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const SyntaxError& ex) {
    err << "syntax error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const GrammarError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace conjcat
