#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "conjcat/category.hpp"
#include "conjcat/grammar.hpp"

namespace conjcat {

// Conjunctive grammar with one nonterminal per universe category. Primitive
// categories keep their names; compound ones get `_fresh_<n>` names.
struct CcgToCgResult {
  ConjGrammar grammar;
  std::map<Category, std::string> names;
};
CcgToCgResult ccg_to_cg_named(const CCG& g);
ConjGrammar ccg_to_cg(const CCG& g);

// The per-letter quotient grammars joined under a new start symbol, after
// splitting every rule so that tilde nonterminals carry all terminals.
// Throws GrammarError when the bundle is malformed or a quotient grammar is
// not in odd normal form.
ConjGrammar join_bundle(const QuotientBundle& b);
CCG bundle_to_ccg(const QuotientBundle& b);

// Compares each quotient against a reference language for strings up to
// max_len (counting the leading letter). Returns one message per mismatch.
std::vector<std::string> verify_bundle(const QuotientBundle& b,
                                       const std::function<bool(std::string_view)>& reference,
                                       std::size_t max_len);

// One lexicon entry per letter: the conjunction of its axiom categories in
// declaration order, bare when there is only one.
LambekGrammar ccg_to_malc(const CCG& g);

// ((r\r)\((t\t)\q))\q for the given primitive names.
Category empty_string_formula(const std::string& q, const std::string& r, const std::string& t);
// (r\r)\((t\t)\q)
Category empty_string_premise(const std::string& q, const std::string& r, const std::string& t);

// Substitutes the formula above (with fresh q, r, t) for the primitive target
// and switches to MALC*. Lexicon entries must be conjunctions of basic
// categories whose denominators never mention the target.
LambekGrammar add_empty_string(const LambekGrammar& g);

// (a\f)\f; throws GrammarError when f occurs in a.
Category relative_double_negation(const Category& a, const std::string& f);

// Equivalent grammar over \, / and + only. With include_empty the result
// also accepts the empty string and is meant for MALC*.
LambekGrammar to_disjunction_grammar(const CCG& g, bool include_empty = false);

struct Homomorphism {
  std::map<char, char> map;

  std::string apply(std::string_view u) const;
  // Source symbols sent to `c`, in ascending order.
  std::vector<char> preimage(char c) const;
};

// Some u with h(u) = w satisfies the oracle. Throws BudgetExceeded when the
// preimage has more than max_check strings.
bool image_member(const std::function<bool(std::string_view)>& oracle, const Homomorphism& h,
                  std::string_view w, std::size_t max_check);

}  // namespace conjcat
