#include <doctest.h>

#include <functional>

#include "conjcat/ccg.hpp"
#include "conjcat/conj_grammar.hpp"
#include "conjcat/cvp.hpp"
#include "conjcat/error.hpp"
#include "conjcat/prover.hpp"
#include "conjcat/transforms.hpp"
#include "support/data.hpp"
#include "support/oracles.hpp"

using namespace conjcat;

namespace {

Category C(const char* t) { return parse_category(t); }

bool conjunction_free(const Category& c) {
  if (c.is(Category::Kind::kAnd)) return false;
  if (c.is_prim()) return true;
  return conjunction_free(c.left()) && conjunction_free(c.right());
}

bool conjunction_free(const LambekGrammar& g) {
  if (!conjunction_free(g.target)) return false;
  for (const auto& [letter, cats] : g.lexicon)
    for (const auto& c : cats)
      if (!conjunction_free(c)) return false;
  return true;
}

Language lambek_language(const LambekGrammar& g, std::size_t max_len) {
  LambekRecognizer rec(g);
  Language out;
  for (const std::string& w : all_strings(g.alphabet, max_len))
    if (rec.member(w) == Verdict::kProved) out.insert(w);
  return out;
}

std::set<std::string> primitives(const Category& c) {
  std::set<std::string> out;
  collect_primitives(c, out);
  return out;
}

QuotientBundle bundle(const char* name) { return data::load<QuotientBundle>(name); }

}  // namespace

TEST_SUITE("transforms") {

TEST_CASE("single axiom to conjunctive grammar") {
  ConjGrammar g = ccg_to_cg(make_ccg({'a'}, "s", {{C("s"), 'a'}}));
  REQUIRE(g.rules.size() == 1);
  CHECK(g.start == "s");
  CHECK(g.rules[0] == ConjRule{"s", {{GrammarSymbol::terminal('a')}}});
}

TEST_CASE("conjunctive denominator to conjunctive grammar") {
  CcgToCgResult r = ccg_to_cg_named(make_ccg({'b'}, "s", {{C("s/(x&y)"), 'b'}}));
  const auto& n = r.names;
  auto nt = [&](const char* t) { return GrammarSymbol::nonterminal(n.at(C(t))); };
  const auto& rules = r.grammar.rules;
  auto has = [&](const ConjRule& want) { return std::find(rules.begin(), rules.end(), want) != rules.end(); };
  CHECK(has({"s", {{nt("s/(x&y)"), nt("x&y")}}}));
  CHECK(has({n.at(C("x&y")), {{nt("x")}, {nt("y")}}}));
  CHECK(has({n.at(C("s/(x&y)")), {{GrammarSymbol::terminal('b')}}}));
  CHECK_NOTHROW(validate(r.grammar));
}

TEST_CASE("categorial grammar and its conjunctive grammar agree") {
  CCG g = data::example4();
  CHECK(cg_enumerate(ccg_to_cg(g), 9) == ccg_enumerate(g, 9));
  CCG b = data::example1();
  CHECK(cg_enumerate(ccg_to_cg(b), 7) == ccg_enumerate(b, 7));
}

TEST_CASE("bundle for {ab}") {
  QuotientBundle b = bundle("bundle_ab.bundle");
  CCG g = bundle_to_ccg(b);
  CHECK(g.target == "p_S");
  std::set<std::pair<char, Category>> axioms;
  for (const auto& a : g.axioms) axioms.insert({a.letter, a.category});
  CHECK(axioms == std::set<std::pair<char, Category>>{{'b', C("p_Z1")}, {'a', C("p_S / p_Z1")}});
  CHECK(ccg_enumerate(g, 6) == Language{"ab"});
  CHECK(check_odd_normal_form(b.quotients.at('a')).ok());
  CHECK(cg_enumerate(join_bundle(b), 6) == Language{"ab"});
  CHECK(verify_bundle(b, [](std::string_view w) { return w == "ab"; }, 6).empty());
  CHECK_FALSE(verify_bundle(b, [](std::string_view w) { return w == "ab" || w == "b"; }, 6).empty());
}

TEST_CASE("bundle for {a}") {
  QuotientBundle b = bundle("bundle_a.bundle");
  CCG g = bundle_to_ccg(b);
  CHECK(ccg_enumerate(g, 6) == Language{"a"});
  CHECK(verify_bundle(b, [](std::string_view w) { return w == "a"; }, 6).empty());
}

TEST_CASE("empty bundle") {
  QuotientBundle b;
  b.alphabet = {'a'};
  CHECK(ccg_enumerate(bundle_to_ccg(b), 6).empty());
}

TEST_CASE("bundle with a conjunctive quotient") {
  // a^-1 L = { b^n : n odd } ∩ ... built from an odd-form rule with two conjuncts.
  QuotientBundle b = std::get<QuotientBundle>(parse_grammar_file(
                                                  "kind: bundle\nalphabet: a b\n"
                                                  "quotient a {\n"
                                                  "  start: S\n"
                                                  "  S -> B 'b' B & B 'b' B | 'b' ;\n"
                                                  "  B -> 'b' ;\n"
                                                  "}\n")
                                                  .grammar);
  const Language want{"ab", "abbb"};
  CHECK(cg_enumerate(join_bundle(b), 6) == want);
  CHECK(ccg_enumerate(bundle_to_ccg(b), 6) == want);
}

TEST_CASE("bundle preconditions") {
  QuotientBundle bad = std::get<QuotientBundle>(
      parse_grammar_file("kind: bundle\nalphabet: a b\nquotient a {\n start: S\n S -> 'b' 'b' ;\n}\n").grammar);
  CHECK_THROWS_AS(bundle_to_ccg(bad), GrammarError);
}

TEST_CASE("lexicon grouping") {
  LambekGrammar g = ccg_to_malc(data::example4());
  CHECK(g.calculus == Calculus::kMALC);
  CHECK(g.target == C("s"));
  CHECK(g.lexicon.at('b') == std::vector<Category>{C("s/(x&y)")});
  CHECK(g.lexicon.at('a') == std::vector<Category>{C("r & (r/r) & (p/q) & (p\\q)")});
  CHECK(g.lexicon.at('c') == std::vector<Category>{C("p & (p\\(x/r)) & ((r\\y)/p)")});
  LambekGrammar one = ccg_to_malc(make_ccg({'a'}, "s", {{C("s"), 'a'}}));
  CHECK(one.lexicon.at('a') == std::vector<Category>{C("s")});
}

TEST_CASE("grouped lexicon recognizes the same short strings") {
  CCG g = data::example4();
  LambekGrammar m = ccg_to_malc(g);
  LambekRecognizer rec(m);
  for (const std::string& w : all_strings(g.alphabet, 5)) {
    if (w.empty()) continue;
    CHECK((rec.member(w) == Verdict::kProved) == ccg_member(g, w));
  }
}

TEST_CASE("empty-string formula") {
  CHECK(empty_string_formula("q", "r", "t") == C("((r\\r)\\((t\\t)\\q))\\q"));
  CHECK(empty_string_premise("q", "r", "t") == C("(r\\r)\\((t\\t)\\q)"));
}

TEST_CASE("adding the empty string") {
  LambekGrammar g = add_empty_string(ccg_to_malc(data::example4()));
  CHECK(g.calculus == Calculus::kMALCStar);
  // q and r are taken by the grammar, so the construction picks fresh names.
  for (const auto& [letter, cats] : ccg_to_malc(data::example4()).lexicon)
    for (const auto& c : cats)
      for (const auto& n : primitives(c))
        if (n != "s") CHECK(primitives(g.target).count(n) == 0);
  LambekRecognizer rec(g);
  CHECK(rec.member("") == Verdict::kProved);
  CHECK(rec.member("bacaca") == Verdict::kProved);
  CHECK(rec.member("ba") == Verdict::kRefuted);
}

TEST_CASE("adding the empty string to a single-letter grammar") {
  LambekGrammar g = add_empty_string(ccg_to_malc(make_ccg({'a'}, "s", {{C("s"), 'a'}})));
  CHECK(g.target == C("((r\\r)\\((t\\t)\\q))\\q"));
  CHECK(lambek_language(g, 3) == Language{"", "a"});
}

TEST_CASE("adding the empty string checks its input") {
  LambekGrammar compound{{'a'}, {{'a', {C("p")}}}, C("p/p"), Calculus::kMALC};
  CHECK_THROWS_AS(add_empty_string(compound), GrammarError);
  LambekGrammar under{{'a'}, {{'a', {C("p/s")}}}, C("s"), Calculus::kMALC};
  CHECK_THROWS_AS(add_empty_string(under), GrammarError);
  LambekGrammar additive{{'a'}, {{'a', {C("p + s")}}}, C("s"), Calculus::kMALC};
  CHECK_THROWS_AS(add_empty_string(additive), GrammarError);
}

TEST_CASE("no premise of the empty-string construction cancels against a lexical item") {
  LambekGrammar g = add_empty_string(ccg_to_malc(data::example4()));
  const Category& d = g.target;
  const Category e = d.denominator();
  std::vector<Category> items;
  for (const auto& [letter, cats] : g.lexicon)
    for (const auto& c : cats)
      for (const auto& item : conjunction_items(c)) items.push_back(item);
  LambekProver prover(Calculus::kMALCStar);
  std::size_t checked = 0;
  for (const auto& x : items) {
    CHECK_FALSE(prover.derivable({{e, x}, e}));
    ++checked;
    for (const auto& y : items) {
      CHECK_FALSE(prover.derivable({{e, x, y}, e}));
      ++checked;
    }
  }
  CHECK(checked == items.size() * (items.size() + 1));
  CHECK(prover.derivable({{e}, e}));
}

TEST_CASE("relative double negation") {
  CHECK(relative_double_negation(C("p"), "f") == C("(p\\f)\\f"));
  CHECK(relative_double_negation(C("p\\q"), "f") == C("((p\\q)\\f)\\f"));
  CHECK_THROWS_AS(relative_double_negation(C("p"), "p"), GrammarError);
}

TEST_CASE("conjunction-free translation of a single axiom") {
  CCG one = make_ccg({'a'}, "s", {{C("s"), 'a'}});
  LambekGrammar g = to_disjunction_grammar(one);
  CHECK(conjunction_free(g));
  CHECK(g.calculus == Calculus::kMALC);
  CHECK(lambek_language(g, 4) == Language{"a"});
  LambekGrammar e = to_disjunction_grammar(one, true);
  CHECK(conjunction_free(e));
  CHECK(e.calculus == Calculus::kMALCStar);
  CHECK(lambek_language(e, 3) == Language{"", "a"});
}

TEST_CASE("conjunction-free translation has no conjunction") {
  CHECK(conjunction_free(to_disjunction_grammar(data::example4())));
  CHECK(conjunction_free(to_disjunction_grammar(data::example4(), true)));
  CHECK(conjunction_free(to_disjunction_grammar(data::example1())));
}

TEST_CASE("conjunct-level rewriting is an equivalence") {
  CHECK(categories_equivalent(Calculus::kMALC, C("((x\\f)\\f) & ((y\\f)\\f)"), C("((x\\f)+(y\\f))\\f")));
  CHECK(categories_equivalent(Calculus::kMALC, C("((x\\f)\\f) & ((y\\f)\\f) & ((z\\f)\\f)"),
                              C("((x\\f)+(y\\f)+(z\\f))\\f")));
}

TEST_CASE("conjunction-free translation of a conjunction-free grammar") {
  CCG g = data::example1();
  LambekGrammar d = to_disjunction_grammar(g);
  LambekRecognizer rec(d);
  for (const std::string& w : all_strings(g.alphabet, 4)) {
    if (w.empty()) continue;
    CHECK((rec.member(w) == Verdict::kProved) == oracle::two_blocks(w));
  }
}

TEST_CASE("homomorphic images") {
  Homomorphism h = csp_homomorphism();
  CHECK(h.apply("b01a") == "b??a");
  CHECK(h.preimage('?') == std::vector<char>{'0', '1'});
  ConjGrammar cvp = cvp_grammar();
  auto oracle = [&](std::string_view u) { return cg_member(cvp, u); };
  CHECK(image_member(oracle, h, "b?", 16));
  CHECK(image_member(oracle, h, "?", 16));
  CHECK_FALSE(image_member(oracle, h, "a", 16));
  CHECK_THROWS_AS(image_member(oracle, h, "????", 8), BudgetExceeded);

  Homomorphism id{{{'a', 'a'}, {'b', 'b'}, {'c', 'c'}}};
  ConjGrammar ex3 = data::example3();
  auto ex3_oracle = [&](std::string_view u) { return cg_member(ex3, u); };
  for (const std::string& w : all_strings({'a', 'b', 'c'}, 6)) CHECK(image_member(ex3_oracle, id, w, 1) == ex3_oracle(w));
}

}  // TEST_SUITE
