#include "conjcat/sequent.hpp"

#include "conjcat/error.hpp"
#include "lexer.hpp"
#include "parse_internal.hpp"

namespace conjcat {

using detail::Lexer;
using detail::Token;

Sequent parse_sequent(std::string_view text) {
  Lexer lex(text);
  std::vector<Category> antecedent;
  if (lex.peek().kind != Token::Kind::kArrow) {
    antecedent.push_back(detail::parse_category_from(lex));
    while (lex.accept(Token::Kind::kComma)) antecedent.push_back(detail::parse_category_from(lex));
  }
  lex.expect(Token::Kind::kArrow, "'->'");
  Category succedent = detail::parse_category_from(lex);
  if (lex.peek().kind != Token::Kind::kEnd) lex.fail("trailing input after sequent");
  return Sequent{std::move(antecedent), std::move(succedent)};
}

std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.antecedent[i]);
  }
  out += out.empty() ? "-> " : " -> ";
  return out + to_string(s.succedent);
}

std::string to_latex(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
    if (i) out += ", ";
    out += to_latex(s.antecedent[i]);
  }
  out += out.empty() ? "\\to " : " \\to ";
  return out + to_latex(s.succedent);
}

Calculus parse_calculus(std::string_view name) {
  if (name == "L") return Calculus::kL;
  if (name == "L*") return Calculus::kLStar;
  if (name == "MALC") return Calculus::kMALC;
  if (name == "MALC*") return Calculus::kMALCStar;
  if (name == "MACLL") return Calculus::kMACLL;
  throw GrammarError("unknown calculus '" + std::string(name) + "'");
}

std::string to_string(Calculus c) {
  switch (c) {
    case Calculus::kL: return "L";
    case Calculus::kLStar: return "L*";
    case Calculus::kMALC: return "MALC";
    case Calculus::kMALCStar: return "MALC*";
    case Calculus::kMACLL: return "MACLL";
  }
  return "?";
}

bool has_lambek_restriction(Calculus c) { return c == Calculus::kL || c == Calculus::kMALC; }
bool allows_additives(Calculus c) { return c == Calculus::kMALC || c == Calculus::kMALCStar || c == Calculus::kMACLL; }

}  // namespace conjcat
