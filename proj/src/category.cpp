#include "conjcat/category.hpp"

#include <functional>
#include <stdexcept>

#include "conjcat/error.hpp"
#include "conjcat/names.hpp"
#include "lexer.hpp"
#include "parse_internal.hpp"

namespace conjcat {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Category Category::prim(std::string name) {
  if (!is_identifier(name)) throw GrammarError("invalid primitive category name '" + name + "'");
  std::size_t h = mix(static_cast<std::size_t>(Kind::kPrim), std::hash<std::string>{}(name));
  return Category(std::make_shared<const Node>(Node{Kind::kPrim, std::move(name), {}, 0, h}));
}

Category Category::binary(Kind kind, Category a, Category b) {
  std::size_t h = mix(mix(static_cast<std::size_t>(kind) * 31 + 7, a.hash()), b.hash());
  std::size_t conns = a.connectives() + b.connectives() + 1;
  return Category(std::make_shared<const Node>(Node{kind, {}, {std::move(a), std::move(b)}, conns, h}));
}

Category Category::product(Category a, Category b) { return binary(Kind::kProd, std::move(a), std::move(b)); }
Category Category::ldiv(Category den, Category num) { return binary(Kind::kLDiv, std::move(den), std::move(num)); }
Category Category::rdiv(Category num, Category den) { return binary(Kind::kRDiv, std::move(num), std::move(den)); }
Category Category::conj(Category a, Category b) { return binary(Kind::kAnd, std::move(a), std::move(b)); }
Category Category::disj(Category a, Category b) { return binary(Kind::kOr, std::move(a), std::move(b)); }

const std::string& Category::name() const {
  if (!is_prim()) throw std::logic_error("name() on a compound category");
  return node_->name;
}

const Category& Category::left() const {
  if (is_prim()) throw std::logic_error("left() on a primitive category");
  return node_->operands[0];
}

const Category& Category::right() const {
  if (is_prim()) throw std::logic_error("right() on a primitive category");
  return node_->operands[1];
}

const Category& Category::numerator() const {
  if (kind() == Kind::kLDiv) return right();
  if (kind() == Kind::kRDiv) return left();
  throw std::logic_error("numerator() on a non-division");
}

const Category& Category::denominator() const {
  if (kind() == Kind::kLDiv) return left();
  if (kind() == Kind::kRDiv) return right();
  throw std::logic_error("denominator() on a non-division");
}

bool operator==(const Category& a, const Category& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.connectives() != b.connectives()) return false;
  if (a.is_prim()) return a.node_->name == b.node_->name;
  return a.left() == b.left() && a.right() == b.right();
}

std::strong_ordering operator<=>(const Category& a, const Category& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.is_prim()) return a.node_->name <=> b.node_->name;
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

using detail::Lexer;
using detail::Token;

class CategoryParser {
 public:
  explicit CategoryParser(Lexer& lex) : lex_(lex) {}

  Category parse_or() {
    Category c = parse_and();
    while (lex_.accept(Token::Kind::kPlus)) c = Category::disj(c, parse_and());
    return c;
  }

 private:
  Category parse_and() {
    Category c = parse_div();
    while (lex_.accept(Token::Kind::kAmp)) c = Category::conj(c, parse_div());
    return c;
  }

  Category parse_div() {
    Category first = parse_prod();
    if (lex_.peek().kind == Token::Kind::kBackslash) {
      std::vector<Category> chain{first};
      while (lex_.accept(Token::Kind::kBackslash)) chain.push_back(parse_prod());
      if (lex_.peek().kind == Token::Kind::kSlash) lex_.fail("mixed '\\' and '/' need parentheses");
      Category c = chain.back();
      for (std::size_t i = chain.size() - 1; i-- > 0;) c = Category::ldiv(chain[i], c);
      return c;
    }
    if (lex_.peek().kind == Token::Kind::kSlash) {
      Category c = first;
      while (lex_.accept(Token::Kind::kSlash)) c = Category::rdiv(c, parse_prod());
      if (lex_.peek().kind == Token::Kind::kBackslash) lex_.fail("mixed '/' and '\\' need parentheses");
      return c;
    }
    return first;
  }

  Category parse_prod() {
    Category c = parse_atom();
    while (lex_.accept(Token::Kind::kDot)) c = Category::product(c, parse_atom());
    return c;
  }

  Category parse_atom() {
    if (lex_.accept(Token::Kind::kLParen)) {
      Category c = parse_or();
      lex_.expect(Token::Kind::kRParen, "')'");
      return c;
    }
    if (lex_.peek().kind == Token::Kind::kIdent) return Category::prim(lex_.take().text);
    lex_.fail("expected a category");
  }

  Lexer& lex_;
};

// Binding strength; higher binds tighter.
int level(Category::Kind k) {
  switch (k) {
    case Category::Kind::kOr: return 1;
    case Category::Kind::kAnd: return 2;
    case Category::Kind::kLDiv:
    case Category::Kind::kRDiv: return 3;
    case Category::Kind::kProd: return 4;
    case Category::Kind::kPrim: return 5;
  }
  return 0;
}

struct Printer {
  bool latex;

  std::string op(Category::Kind k) const {
    switch (k) {
      case Category::Kind::kOr: return latex ? " \\vee " : " + ";
      case Category::Kind::kAnd: return latex ? " \\wedge " : " & ";
      case Category::Kind::kLDiv: return latex ? " \\mathop{\\backslash} " : " \\ ";
      case Category::Kind::kRDiv: return latex ? " \\mathop{/} " : " / ";
      case Category::Kind::kProd: return latex ? " \\cdot " : " . ";
      case Category::Kind::kPrim: break;
    }
    return "";
  }

  static std::string wrap(const std::string& s) { return "(" + s + ")"; }

  std::string name(const std::string& n) const {
    if (!latex) return n;
    std::string out;
    for (char c : n) {
      if (c == '_') out += "\\_";
      else out += c;
    }
    return out;
  }

  std::string print(const Category& c) const {
    if (c.is_prim()) return name(c.name());
    const Category& l = c.left();
    const Category& r = c.right();
    int lv = level(c.kind());
    std::string ls = print(l);
    std::string rs = print(r);
    switch (c.kind()) {
      case Category::Kind::kLDiv:
        if (level(l.kind()) <= 3) ls = wrap(ls);
        if (level(r.kind()) < 3 || r.kind() == Category::Kind::kRDiv) rs = wrap(rs);
        break;
      case Category::Kind::kRDiv:
        if (level(l.kind()) < 3 || l.kind() == Category::Kind::kLDiv) ls = wrap(ls);
        if (level(r.kind()) <= 3) rs = wrap(rs);
        break;
      default:
        if (level(l.kind()) < lv) ls = wrap(ls);
        if (level(r.kind()) <= lv) rs = wrap(rs);
        break;
    }
    return ls + op(c.kind()) + rs;
  }
};

}  // namespace

Category parse_category(std::string_view text) {
  Lexer lex(text);
  CategoryParser parser(lex);
  Category c = parser.parse_or();
  if (lex.peek().kind != Token::Kind::kEnd) lex.fail("trailing input after category");
  return c;
}

namespace detail {
Category parse_category_from(Lexer& lex) {
  CategoryParser parser(lex);
  return parser.parse_or();
}
}  // namespace detail

std::string to_string(const Category& c) { return Printer{false}.print(c); }
std::string to_latex(const Category& c) { return Printer{true}.print(c); }

// ---------------------------------------------------------------------------
// Recognizers and structural operations

bool is_conjunct(const Category& c) {
  if (c.is_prim()) return true;
  if (c.kind() != Category::Kind::kAnd) return false;
  return is_conjunct(c.left()) && is_conjunct(c.right());
}

std::vector<Category> conjunct_primitives(const Category& c) {
  if (!is_conjunct(c)) throw GrammarError("not a conjunct: " + to_string(c));
  return conjunction_items(c);
}

bool is_bcat_conj(const Category& c) {
  switch (c.kind()) {
    case Category::Kind::kPrim: return true;
    case Category::Kind::kLDiv:
    case Category::Kind::kRDiv: return is_conjunct(c.denominator()) && is_bcat_conj(c.numerator());
    default: return false;
  }
}

bool is_bcat(const Category& c) {
  switch (c.kind()) {
    case Category::Kind::kPrim: return true;
    case Category::Kind::kLDiv:
    case Category::Kind::kRDiv: return c.denominator().is_prim() && is_bcat(c.numerator());
    default: return false;
  }
}

bool has_additives(const Category& c) {
  if (c.is_prim()) return false;
  if (c.kind() == Category::Kind::kAnd || c.kind() == Category::Kind::kOr) return true;
  return has_additives(c.left()) || has_additives(c.right());
}

namespace {
Category make_chain(const std::vector<Category>& items, Category (*op)(Category, Category)) {
  if (items.empty()) throw std::invalid_argument("empty additive chain");
  Category c = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) c = op(c, items[i]);
  return c;
}

void flatten_and(const Category& c, std::vector<Category>& out) {
  if (c.kind() == Category::Kind::kAnd) {
    flatten_and(c.left(), out);
    flatten_and(c.right(), out);
  } else {
    out.push_back(c);
  }
}
}  // namespace

Category make_conjunction(const std::vector<Category>& items) { return make_chain(items, &Category::conj); }
Category make_disjunction(const std::vector<Category>& items) { return make_chain(items, &Category::disj); }

std::vector<Category> conjunction_items(const Category& c) {
  std::vector<Category> out;
  flatten_and(c, out);
  return out;
}

namespace {
void collect_subexpressions(const Category& c, std::set<Category>& out) {
  if (is_conjunct(c)) {
    out.insert(c);
    return;
  }
  if (!is_bcat_conj(c)) throw GrammarError("subexpressions are defined on BCat∧ and conjuncts only: " + to_string(c));
  out.insert(c);
  out.insert(c.denominator());
  collect_subexpressions(c.numerator(), out);
}
}  // namespace

std::set<Category> subexpressions(const Category& c) {
  std::set<Category> out;
  collect_subexpressions(c, out);
  return out;
}

Category substitute_primitive(const Category& c, const std::string& prim, const Category& replacement) {
  if (c.is_prim()) return c.name() == prim ? replacement : c;
  Category l = substitute_primitive(c.left(), prim, replacement);
  Category r = substitute_primitive(c.right(), prim, replacement);
  switch (c.kind()) {
    case Category::Kind::kProd: return Category::product(l, r);
    case Category::Kind::kLDiv: return Category::ldiv(l, r);
    case Category::Kind::kRDiv: return Category::rdiv(l, r);
    case Category::Kind::kAnd: return Category::conj(l, r);
    case Category::Kind::kOr: return Category::disj(l, r);
    case Category::Kind::kPrim: break;
  }
  return c;
}

bool occurs(const Category& c, const std::string& prim) {
  if (c.is_prim()) return c.name() == prim;
  return occurs(c.left(), prim) || occurs(c.right(), prim);
}

void collect_primitives(const Category& c, std::set<std::string>& out) {
  if (c.is_prim()) {
    out.insert(c.name());
    return;
  }
  collect_primitives(c.left(), out);
  collect_primitives(c.right(), out);
}

}  // namespace conjcat
