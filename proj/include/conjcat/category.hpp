#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace conjcat {

// Immutable formula of the multiplicative-additive Lambek calculus:
// primitives, product, both divisions, additive conjunction and disjunction.
//
// Operands are stored in textual order: `A \ B` has left() == A (the
// denominator) and right() == B; `B / A` has left() == B (the numerator) and
// right() == A. Copies share structure.
class Category {
 public:
  enum class Kind : std::uint8_t { kPrim, kProd, kLDiv, kRDiv, kAnd, kOr };

  static Category prim(std::string name);
  static Category product(Category a, Category b);
  // den \ num
  static Category ldiv(Category den, Category num);
  // num / den
  static Category rdiv(Category num, Category den);
  static Category conj(Category a, Category b);
  static Category disj(Category a, Category b);

  Kind kind() const;
  bool is_prim() const;
  bool is(Kind k) const;

  const std::string& name() const;
  const Category& left() const;
  const Category& right() const;
  const Category& numerator() const;
  const Category& denominator() const;

  // Number of binary connectives.
  std::size_t connectives() const;
  std::size_t hash() const;

  friend bool operator==(const Category& a, const Category& b);
  friend std::strong_ordering operator<=>(const Category& a, const Category& b);

 private:
  struct Node;
  explicit Category(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Category binary(Kind kind, Category a, Category b);

  std::shared_ptr<const Node> node_;
};

struct Category::Node {
  Kind kind;
  std::string name;
  std::vector<Category> operands;  // empty for primitives, two otherwise
  std::size_t connectives;
  std::size_t hash;
};

inline Category::Kind Category::kind() const { return node_->kind; }
inline bool Category::is_prim() const { return node_->kind == Kind::kPrim; }
inline bool Category::is(Kind k) const { return node_->kind == k; }
inline std::size_t Category::connectives() const { return node_->connectives; }
inline std::size_t Category::hash() const { return node_->hash; }

struct CategoryHash {
  std::size_t operator()(const Category& c) const { return c.hash(); }
};

// Concrete syntax, loosest to tightest: `+` (or), `&` (and), then `\` and `/`
// (`\` groups right, `/` groups left, mixing them needs parentheses), then `.`
// (product). `+`, `&` and `.` group left.
Category parse_category(std::string_view text);
std::string to_string(const Category& c);
std::string to_latex(const Category& c);

// A primitive, or an and-combination (any association) of primitives.
bool is_conjunct(const Category& c);
// Primitives of a conjunct in left-to-right order, duplicates kept.
std::vector<Category> conjunct_primitives(const Category& c);
// Primitive, or C\A / A/C with C a conjunct and A in the same class.
bool is_bcat_conj(const Category& c);
// Conjunction-free basic category: primitive denominators only.
bool is_bcat(const Category& c);
bool has_additives(const Category& c);

// Left-associated and/or chains; a single element is returned bare.
Category make_conjunction(const std::vector<Category>& items);
Category make_disjunction(const std::vector<Category>& items);
// Flattens the top-level and-tree into its items (a non-and is one item).
std::vector<Category> conjunction_items(const Category& c);

// Subexpression closure of a category in BCat∧ ∪ Conj. A conjunct is a
// subexpression of itself only. Throws GrammarError outside that class.
std::set<Category> subexpressions(const Category& c);

Category substitute_primitive(const Category& c, const std::string& prim, const Category& replacement);
bool occurs(const Category& c, const std::string& prim);
void collect_primitives(const Category& c, std::set<std::string>& out);

}  // namespace conjcat
