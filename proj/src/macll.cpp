#include "conjcat/macll.hpp"

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

MacllFormula MacllFormula::make(Kind kind, std::string name, bool negated, std::vector<MacllFormula> operands) {
  std::size_t h = mix(static_cast<std::size_t>(kind) * 131 + (negated ? 1 : 0), std::hash<std::string>{}(name));
  std::size_t conns = 0;
  for (const auto& o : operands) {
    h = mix(h, o.hash());
    conns += o.connectives();
  }
  if (!operands.empty()) ++conns;
  return MacllFormula(std::make_shared<const Node>(Node{kind, std::move(name), negated, std::move(operands), conns, h}));
}

MacllFormula MacllFormula::atom(std::string name, bool negated) {
  if (!is_identifier(name)) throw GrammarError("invalid atom name '" + name + "'");
  return make(Kind::kAtom, std::move(name), negated, {});
}
MacllFormula MacllFormula::one() { return make(Kind::kOne, {}, false, {}); }
MacllFormula MacllFormula::bottom() { return make(Kind::kBottom, {}, false, {}); }
MacllFormula MacllFormula::top() { return make(Kind::kTop, {}, false, {}); }
MacllFormula MacllFormula::zero() { return make(Kind::kZero, {}, false, {}); }
MacllFormula MacllFormula::tensor(MacllFormula a, MacllFormula b) { return make(Kind::kTensor, {}, false, {std::move(a), std::move(b)}); }
MacllFormula MacllFormula::par(MacllFormula a, MacllFormula b) { return make(Kind::kPar, {}, false, {std::move(a), std::move(b)}); }
MacllFormula MacllFormula::with(MacllFormula a, MacllFormula b) { return make(Kind::kWith, {}, false, {std::move(a), std::move(b)}); }
MacllFormula MacllFormula::plus(MacllFormula a, MacllFormula b) { return make(Kind::kPlus, {}, false, {std::move(a), std::move(b)}); }

const std::string& MacllFormula::name() const {
  if (kind() != Kind::kAtom) throw std::logic_error("name() on a non-atom");
  return node_->name;
}
const MacllFormula& MacllFormula::left() const {
  if (!is_binary()) throw std::logic_error("left() on a non-binary formula");
  return node_->operands[0];
}
const MacllFormula& MacllFormula::right() const {
  if (!is_binary()) throw std::logic_error("right() on a non-binary formula");
  return node_->operands[1];
}

bool operator==(const MacllFormula& a, const MacllFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.connectives() != b.connectives()) return false;
  if (a.kind() == MacllFormula::Kind::kAtom) return a.negated() == b.negated() && a.name() == b.name();
  if (!a.is_binary()) return true;
  return a.left() == b.left() && a.right() == b.right();
}

std::strong_ordering operator<=>(const MacllFormula& a, const MacllFormula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.kind() == MacllFormula::Kind::kAtom) {
    if (auto c = a.name() <=> b.name(); c != 0) return c;
    return a.negated() <=> b.negated();
  }
  if (!a.is_binary()) return std::strong_ordering::equal;
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

MacllFormula macll_negate(const MacllFormula& f) {
  using K = MacllFormula::Kind;
  switch (f.kind()) {
    case K::kAtom: return MacllFormula::atom(f.name(), !f.negated());
    case K::kOne: return MacllFormula::bottom();
    case K::kBottom: return MacllFormula::one();
    case K::kTop: return MacllFormula::zero();
    case K::kZero: return MacllFormula::top();
    case K::kTensor: return MacllFormula::par(macll_negate(f.right()), macll_negate(f.left()));
    case K::kPar: return MacllFormula::tensor(macll_negate(f.right()), macll_negate(f.left()));
    case K::kWith: return MacllFormula::plus(macll_negate(f.left()), macll_negate(f.right()));
    case K::kPlus: return MacllFormula::with(macll_negate(f.left()), macll_negate(f.right()));
  }
  return f;
}

MacllFormula hat_translate(const Category& c) {
  using K = Category::Kind;
  switch (c.kind()) {
    case K::kPrim: return MacllFormula::atom(c.name());
    case K::kProd: return MacllFormula::tensor(hat_translate(c.left()), hat_translate(c.right()));
    case K::kLDiv: return MacllFormula::par(macll_negate(hat_translate(c.left())), hat_translate(c.right()));
    case K::kRDiv: return MacllFormula::par(hat_translate(c.left()), macll_negate(hat_translate(c.right())));
    case K::kAnd: return MacllFormula::with(hat_translate(c.left()), hat_translate(c.right()));
    case K::kOr: return MacllFormula::plus(hat_translate(c.left()), hat_translate(c.right()));
  }
  throw std::logic_error("unreachable");
}

MacllFormula macll_substitute(const MacllFormula& f, const std::string& atom, const MacllFormula& replacement) {
  using K = MacllFormula::Kind;
  switch (f.kind()) {
    case K::kAtom:
      if (f.name() != atom) return f;
      return f.negated() ? macll_negate(replacement) : replacement;
    case K::kTensor:
      return MacllFormula::tensor(macll_substitute(f.left(), atom, replacement), macll_substitute(f.right(), atom, replacement));
    case K::kPar:
      return MacllFormula::par(macll_substitute(f.left(), atom, replacement), macll_substitute(f.right(), atom, replacement));
    case K::kWith:
      return MacllFormula::with(macll_substitute(f.left(), atom, replacement), macll_substitute(f.right(), atom, replacement));
    case K::kPlus:
      return MacllFormula::plus(macll_substitute(f.left(), atom, replacement), macll_substitute(f.right(), atom, replacement));
    default: return f;
  }
}

MacllSequent translate_sequent(const std::vector<Category>& antecedent, const Category& succedent) {
  MacllSequent out;
  for (auto it = antecedent.rbegin(); it != antecedent.rend(); ++it) out.formulas.push_back(macll_negate(hat_translate(*it)));
  out.formulas.push_back(hat_translate(succedent));
  return out;
}

// ---------------------------------------------------------------------------
// Text

namespace {

using detail::Lexer;
using detail::Token;

class MacllParser {
 public:
  explicit MacllParser(Lexer& lex) : lex_(lex) {}

  MacllFormula parse_par() {
    MacllFormula f = parse_plus();
    while (lex_.accept(Token::Kind::kBar)) f = MacllFormula::par(f, parse_plus());
    return f;
  }

 private:
  MacllFormula parse_plus() {
    MacllFormula f = parse_with();
    while (lex_.accept(Token::Kind::kPlus)) f = MacllFormula::plus(f, parse_with());
    return f;
  }
  MacllFormula parse_with() {
    MacllFormula f = parse_tensor();
    while (lex_.accept(Token::Kind::kAmp)) f = MacllFormula::with(f, parse_tensor());
    return f;
  }
  MacllFormula parse_tensor() {
    MacllFormula f = parse_atom();
    while (lex_.accept(Token::Kind::kStar)) f = MacllFormula::tensor(f, parse_atom());
    return f;
  }
  MacllFormula parse_atom() {
    if (lex_.accept(Token::Kind::kLParen)) {
      MacllFormula f = parse_par();
      lex_.expect(Token::Kind::kRParen, "')'");
      return f;
    }
    if (lex_.accept(Token::Kind::kTilde)) {
      Token t = lex_.expect(Token::Kind::kIdent, "an atom after '~'");
      return MacllFormula::atom(t.text, true);
    }
    if (lex_.peek().kind == Token::Kind::kIdent) {
      std::string name = lex_.take().text;
      if (name == "1") return MacllFormula::one();
      if (name == "0") return MacllFormula::zero();
      if (name == "bot") return MacllFormula::bottom();
      if (name == "top") return MacllFormula::top();
      return MacllFormula::atom(name);
    }
    lex_.fail("expected a formula");
  }

  Lexer& lex_;
};

int level(MacllFormula::Kind k) {
  using K = MacllFormula::Kind;
  switch (k) {
    case K::kPar: return 1;
    case K::kPlus: return 2;
    case K::kWith: return 3;
    case K::kTensor: return 4;
    default: return 5;
  }
}

std::string print(const MacllFormula& f, bool latex) {
  using K = MacllFormula::Kind;
  switch (f.kind()) {
    case K::kAtom: {
      std::string n;
      for (char c : f.name()) n += (latex && c == '_') ? std::string("\\_") : std::string(1, c);
      if (!f.negated()) return n;
      return latex ? "\\bar{" + n + "}" : "~" + n;
    }
    case K::kOne: return "1";
    case K::kZero: return "0";
    case K::kBottom: return latex ? "\\bot" : "bot";
    case K::kTop: return latex ? "\\top" : "top";
    default: break;
  }
  std::string op;
  switch (f.kind()) {
    case K::kPar: op = latex ? " \\parr " : " | "; break;
    case K::kPlus: op = latex ? " \\oplus " : " + "; break;
    case K::kWith: op = latex ? " \\mathbin{\\&} " : " & "; break;
    case K::kTensor: op = latex ? " \\otimes " : " * "; break;
    default: break;
  }
  int lv = level(f.kind());
  std::string ls = print(f.left(), latex);
  std::string rs = print(f.right(), latex);
  if (level(f.left().kind()) < lv) ls = "(" + ls + ")";
  if (level(f.right().kind()) <= lv) rs = "(" + rs + ")";
  return ls + op + rs;
}

}  // namespace

namespace detail {
MacllFormula parse_macll_from(Lexer& lex) {
  MacllParser p(lex);
  return p.parse_par();
}
}  // namespace detail

MacllFormula parse_macll(std::string_view text) {
  Lexer lex(text);
  MacllFormula f = detail::parse_macll_from(lex);
  if (lex.peek().kind != Token::Kind::kEnd) lex.fail("trailing input after formula");
  return f;
}

MacllSequent parse_macll_sequent(std::string_view text) {
  Lexer lex(text);
  lex.expect(Token::Kind::kTurnstile, "'|-'");
  MacllSequent s;
  s.formulas.push_back(detail::parse_macll_from(lex));
  while (lex.accept(Token::Kind::kComma)) s.formulas.push_back(detail::parse_macll_from(lex));
  if (lex.peek().kind != Token::Kind::kEnd) lex.fail("trailing input after sequent");
  return s;
}

std::string to_string(const MacllFormula& f) { return print(f, false); }
std::string to_latex(const MacllFormula& f) { return print(f, true); }

std::string to_string(const MacllSequent& s) {
  std::string out = "|-";
  for (std::size_t i = 0; i < s.formulas.size(); ++i) out += (i ? ", " : " ") + to_string(s.formulas[i]);
  return out;
}

std::string to_latex(const MacllSequent& s) {
  std::string out = "\\vdash";
  for (std::size_t i = 0; i < s.formulas.size(); ++i) out += (i ? ", " : " ") + to_latex(s.formulas[i]);
  return out;
}

}  // namespace conjcat
