#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "conjcat/category.hpp"

namespace conjcat {

// Formula of multiplicative-additive cyclic linear logic with negation on
// atoms only.
class MacllFormula {
 public:
  enum class Kind : std::uint8_t { kAtom, kOne, kBottom, kTop, kZero, kTensor, kPar, kWith, kPlus };

  static MacllFormula atom(std::string name, bool negated = false);
  static MacllFormula one();
  static MacllFormula bottom();
  static MacllFormula top();
  static MacllFormula zero();
  static MacllFormula tensor(MacllFormula a, MacllFormula b);
  static MacllFormula par(MacllFormula a, MacllFormula b);
  static MacllFormula with(MacllFormula a, MacllFormula b);
  static MacllFormula plus(MacllFormula a, MacllFormula b);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  bool is_binary() const { return node_->operands.size() == 2; }

  const std::string& name() const;
  bool negated() const { return node_->negated; }
  const MacllFormula& left() const;
  const MacllFormula& right() const;

  std::size_t connectives() const { return node_->connectives; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const MacllFormula& a, const MacllFormula& b);
  friend std::strong_ordering operator<=>(const MacllFormula& a, const MacllFormula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    bool negated;
    std::vector<MacllFormula> operands;
    std::size_t connectives;
    std::size_t hash;
  };
  explicit MacllFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static MacllFormula make(Kind kind, std::string name, bool negated, std::vector<MacllFormula> operands);

  std::shared_ptr<const Node> node_;
};

// Nonempty, read up to cyclic rotation.
struct MacllSequent {
  std::vector<MacllFormula> formulas;

  friend bool operator==(const MacllSequent&, const MacllSequent&) = default;
};

// External negation: De Morgan with operand swap on the multiplicatives.
MacllFormula macll_negate(const MacllFormula& f);

// Embedding of Lambek formulas with additives.
MacllFormula hat_translate(const Category& c);

// Positive occurrences of `atom` become `replacement`, negated ones its negation.
MacllFormula macll_substitute(const MacllFormula& f, const std::string& atom, const MacllFormula& replacement);

// Lambek sequent A1..An -> B as the one-sided sequent |- hat(An)^⊥, ..., hat(A1)^⊥, hat(B).
MacllSequent translate_sequent(const std::vector<Category>& antecedent, const Category& succedent);

// Syntax: atoms `p`, `~p`; constants `1`, `bot`, `top`, `0`; loosest to
// tightest `|` (par), `+` (plus), `&` (with), `*` (tensor), all grouping left.
MacllFormula parse_macll(std::string_view text);
MacllSequent parse_macll_sequent(std::string_view text);  // "|- F1, F2"
std::string to_string(const MacllFormula& f);
std::string to_string(const MacllSequent& s);
std::string to_latex(const MacllFormula& f);
std::string to_latex(const MacllSequent& s);

}  // namespace conjcat
