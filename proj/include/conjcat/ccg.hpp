#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "conjcat/conj_grammar.hpp"
#include "conjcat/grammar.hpp"

namespace conjcat {

// Derivation of a categorial proposition B(w[begin, end)).
//   kAxiom        leaf B(a) with B(a) an axiom
//   kConjunction  (p1 & ... & pk)(v) from p1(v), ..., pk(v)
//   kLeftDiv      A(uv) from C(u) and (C \ A)(v)
//   kRightDiv     A(vu) from (A / C)(v) and C(u)
struct CcgDerivation {
  enum class Kind { kAxiom, kConjunction, kLeftDiv, kRightDiv };
  Kind kind;
  Category category;
  std::size_t begin;
  std::size_t end;
  std::vector<CcgDerivation> children;
};

// Every category that can occur in a derivation: subexpressions of the
// axiom categories plus the target.
std::set<Category> ccg_universe(const CCG& g);

// Chart parser over the universe, compiled once per grammar and reusable
// across strings.
class CcgRecognizer {
 public:
  explicit CcgRecognizer(const CCG& g);

  const std::vector<Category>& universe() const { return universe_; }

  bool member(std::string_view w) const;
  // Throws GrammarError for an empty string or a category outside the universe.
  std::optional<CcgDerivation> derive(const Category& b, std::string_view w) const;
  // Universe categories B with B(w) derivable.
  std::set<Category> derivable(std::string_view w) const;

 private:
  friend class CcgChart;
  struct Entry {
    Category category;
    int numerator = -1;    // for divisions
    int denominator = -1;  // for divisions
    std::vector<int> conjuncts;  // primitives of a compound conjunct
  };

  int index_of(const Category& c) const;

  CCG grammar_;
  std::vector<Category> universe_;
  std::vector<Entry> entries_;
  std::map<Category, int> index_;
  std::map<char, std::vector<int>> lexical_;
  std::vector<int> ldivs_, rdivs_, compound_conjuncts_;
  int target_ = -1;
};

bool ccg_member(const CCG& g, std::string_view w);
std::optional<CcgDerivation> ccg_derive(const CCG& g, const Category& b, std::string_view w);

// Nonempty members up to max_len over the grammar's alphabet.
Language ccg_enumerate(const CCG& g, std::size_t max_len, std::size_t budget = 10'000'000);

// g plus the axiom a(b) for a letter b not yet in the alphabet.
CCG ccg_extend(const CCG& g, char b, const Category& a);

nlohmann::json to_json(const CcgDerivation& d, std::string_view w);
std::string to_latex(const CcgDerivation& d, std::string_view w);

}  // namespace conjcat
