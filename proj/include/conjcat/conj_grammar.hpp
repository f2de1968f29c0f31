#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "conjcat/grammar.hpp"

namespace conjcat {

// Shortlex order: shorter strings first, then lexicographic.
struct ShortLex {
  bool operator()(const std::string& a, const std::string& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};
using Language = std::set<std::string, ShortLex>;

// Derivation of a proposition X(w[begin, end)).
//   kTerminal  leaf a(a)
//   kEmpty     leaf eps(eps)
//   kConcat    body proposition from its symbols, one child per symbol
//   kRule      A(v) from one child per conjunct of rules[rule_index]
struct CgDerivation {
  enum class Kind { kTerminal, kEmpty, kConcat, kRule };
  Kind kind = Kind::kEmpty;
  std::string label;  // terminal letter, body text or nonterminal
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t rule_index = 0;
  std::vector<CgDerivation> children;
};

std::set<std::string> nullable_nonterminals(const ConjGrammar& g);

// `start` overrides the grammar's start symbol when nonempty.
bool cg_member(const ConjGrammar& g, std::string_view w, const std::string& start = {});
std::optional<CgDerivation> cg_derive(const ConjGrammar& g, std::string_view w, const std::string& start = {});

// Every nonterminal that derives w, in name order.
std::set<std::string> cg_derivable_nonterminals(const ConjGrammar& g, std::string_view w);

// All members of length <= max_len. Throws BudgetExceeded when more than
// `budget` candidate strings would be tested.
Language cg_enumerate(const ConjGrammar& g, std::size_t max_len, std::size_t budget = 10'000'000);

// Every string over `alphabet` of length <= max_len, in shortlex order.
std::vector<std::string> all_strings(const std::set<char>& alphabet, std::size_t max_len,
                                     std::size_t budget = 10'000'000);

struct OddFormViolation {
  std::size_t rule_index;
  std::string message;
};

struct OddFormReport {
  std::vector<OddFormViolation> violations;
  bool ok() const { return violations.empty(); }
};

OddFormReport check_odd_normal_form(const ConjGrammar& g);

nlohmann::json to_json(const CgDerivation& d, const ConjGrammar& g, std::string_view w);
std::string to_latex(const CgDerivation& d, const ConjGrammar& g, std::string_view w);

}  // namespace conjcat
