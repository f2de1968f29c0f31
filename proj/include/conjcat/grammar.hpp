#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "conjcat/category.hpp"
#include "conjcat/sequent.hpp"

namespace conjcat {

// Terminal letters are single characters; nonterminals are identifiers.
struct GrammarSymbol {
  enum class Kind : std::uint8_t { kTerminal, kNonterminal };
  Kind kind = Kind::kTerminal;
  std::string name;

  static GrammarSymbol terminal(char c) { return {Kind::kTerminal, std::string(1, c)}; }
  static GrammarSymbol nonterminal(std::string n) { return {Kind::kNonterminal, std::move(n)}; }

  bool is_terminal() const { return kind == Kind::kTerminal; }
  char letter() const { return name[0]; }

  friend bool operator==(const GrammarSymbol&, const GrammarSymbol&) = default;
  friend auto operator<=>(const GrammarSymbol&, const GrammarSymbol&) = default;
};

using Body = std::vector<GrammarSymbol>;

// head -> conjuncts[0] & conjuncts[1] & ...; an empty body is epsilon.
struct ConjRule {
  std::string head;
  std::vector<Body> conjuncts;

  friend bool operator==(const ConjRule&, const ConjRule&) = default;
};

struct ConjGrammar {
  std::set<char> terminals;
  std::set<std::string> nonterminals;
  std::string start;
  std::vector<ConjRule> rules;

  friend bool operator==(const ConjGrammar&, const ConjGrammar&) = default;
};

// Throws GrammarError on undeclared symbols, empty conjunct lists or an
// undeclared start symbol.
void validate(const ConjGrammar& g);

struct Axiom {
  Category category;
  char letter;

  friend bool operator==(const Axiom&, const Axiom&) = default;
};

// Conjunctive categorial grammar. Axioms keep declaration order and are
// structurally deduplicated by make_ccg.
struct CCG {
  std::set<char> alphabet;
  std::string target;
  std::vector<Axiom> axioms;

  friend bool operator==(const CCG&, const CCG&) = default;
};

CCG make_ccg(std::set<char> alphabet, std::string target, const std::vector<Axiom>& axioms);
void validate(const CCG& g);

struct LambekGrammar {
  std::set<char> alphabet;
  std::map<char, std::vector<Category>> lexicon;
  Category target;
  Calculus calculus = Calculus::kMALC;

  friend bool operator==(const LambekGrammar&, const LambekGrammar&) = default;
};

void validate(const LambekGrammar& g);

// Per-letter left-quotient grammars a^{-1}L - {ε} in odd normal form, with
// flags recording whether ε ∈ a^{-1}L. A missing entry means the quotient
// minus ε is empty.
struct QuotientBundle {
  std::set<char> alphabet;
  std::map<char, ConjGrammar> quotients;
  std::set<char> epsilon_letters;

  friend bool operator==(const QuotientBundle&, const QuotientBundle&) = default;
};

void validate(const QuotientBundle& b);

// Grammar file format (line oriented, '#' starts a comment):
//   kind: cg | bcg | ccg | lambek | bundle
//   cg:      terminals: a b c        start: S
//            S -> 'b' B c A & b A c B | eps ;
//   ccg/bcg: target: s               'b' : (s / (x & y)) ;
//   lambek:  target: <category>      calculus: L | L* | MALC | MALC*
//   bundle:  alphabet: a b           eps: a
//            quotient a { <cg lines> }
// Bare identifiers in a cg body are nonterminals when they head a rule or are
// listed under `nonterminals:`, otherwise declared terminals.
using AnyGrammar = std::variant<ConjGrammar, CCG, LambekGrammar, QuotientBundle>;

struct GrammarFile {
  std::string kind;
  AnyGrammar grammar;
};

GrammarFile parse_grammar_file(std::string_view text);
GrammarFile load_grammar_file(const std::string& path);

std::string to_text(const ConjGrammar& g);
std::string to_text(const CCG& g, bool basic = false);
std::string to_text(const LambekGrammar& g);
std::string to_text(const QuotientBundle& b);

std::string to_string(const ConjRule& r);
std::string body_to_string(const Body& b);

}  // namespace conjcat
