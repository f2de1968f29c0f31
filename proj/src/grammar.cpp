#include "conjcat/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "conjcat/error.hpp"
#include "conjcat/names.hpp"
#include "lexer.hpp"
#include "parse_internal.hpp"

namespace conjcat {

using detail::Lexer;
using detail::Token;

// ---------------------------------------------------------------------------
// Validation

void validate(const ConjGrammar& g) {
  if (!g.nonterminals.count(g.start)) throw GrammarError("start symbol '" + g.start + "' is not a declared nonterminal");
  for (const auto& n : g.nonterminals)
    if (!is_identifier(n) || n == "eps") throw GrammarError("invalid nonterminal name '" + n + "'");
  for (const auto& r : g.rules) {
    if (!g.nonterminals.count(r.head)) throw GrammarError("rule head '" + r.head + "' is not declared");
    if (r.conjuncts.empty()) throw GrammarError("rule for '" + r.head + "' has no conjuncts");
    for (const auto& body : r.conjuncts) {
      for (const auto& s : body) {
        if (s.is_terminal()) {
          if (s.name.size() != 1 || !g.terminals.count(s.letter()))
            throw GrammarError("undeclared terminal '" + s.name + "' in rule for '" + r.head + "'");
        } else if (!g.nonterminals.count(s.name)) {
          throw GrammarError("undeclared nonterminal '" + s.name + "' in rule for '" + r.head + "'");
        }
      }
    }
  }
}

void validate(const CCG& g) {
  if (!is_identifier(g.target)) throw GrammarError("invalid target category '" + g.target + "'");
  for (const auto& a : g.axioms) {
    if (!is_bcat_conj(a.category)) throw GrammarError("axiom category is not in BCat∧: " + to_string(a.category));
    if (!g.alphabet.count(a.letter)) throw GrammarError(std::string("axiom letter '") + a.letter + "' is not in the alphabet");
  }
}

CCG make_ccg(std::set<char> alphabet, std::string target, const std::vector<Axiom>& axioms) {
  CCG g{std::move(alphabet), std::move(target), {}};
  for (const auto& a : axioms) {
    g.alphabet.insert(a.letter);
    if (std::find(g.axioms.begin(), g.axioms.end(), a) == g.axioms.end()) g.axioms.push_back(a);
  }
  validate(g);
  return g;
}

void validate(const LambekGrammar& g) {
  for (char c : g.alphabet) {
    auto it = g.lexicon.find(c);
    if (it == g.lexicon.end() || it->second.empty())
      throw GrammarError(std::string("letter '") + c + "' has no lexicon entry");
  }
  for (const auto& [c, cats] : g.lexicon) {
    if (!g.alphabet.count(c)) throw GrammarError(std::string("lexicon letter '") + c + "' is not in the alphabet");
    if (!allows_additives(g.calculus))
      for (const auto& cat : cats)
        if (has_additives(cat)) throw GrammarError("additive connective in a " + to_string(g.calculus) + " grammar");
  }
  if (g.calculus == Calculus::kMACLL) throw GrammarError("a Lambek grammar cannot use MACLL");
}

void validate(const QuotientBundle& b) {
  std::set<std::string> seen;
  for (const auto& [letter, g] : b.quotients) {
    if (!b.alphabet.count(letter)) throw GrammarError(std::string("quotient for letter '") + letter + "' outside the alphabet");
    validate(g);
    for (const auto& n : g.nonterminals)
      if (!seen.insert(n).second) throw GrammarError("quotient grammars share nonterminal '" + n + "'");
  }
  for (char c : b.epsilon_letters)
    if (!b.alphabet.count(c)) throw GrammarError(std::string("epsilon flag for letter '") + c + "' outside the alphabet");
}

// ---------------------------------------------------------------------------
// Reading

namespace {

struct Statement {
  std::string text;
  std::size_t offset;
};

struct Section {
  std::map<std::string, std::pair<std::string, std::size_t>> headers;
  std::vector<Statement> statements;
  std::size_t offset = 0;
};

const std::set<std::string> kHeaderKeys = {"kind",     "start",        "target",   "calculus",
                                           "terminals", "nonterminals", "alphabet", "eps"};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

struct SplitFile {
  Section top;
  std::vector<std::pair<char, Section>> quotients;
};

SplitFile split_sections(std::string_view text) {
  SplitFile out;
  Section* current = &out.top;
  std::string pending;
  std::size_t pending_offset = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    std::size_t line_offset = pos;
    pos = eol + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      // '#' inside a quoted symbol is kept
      bool quoted = hash >= 1 && hash + 1 < raw.size() && raw[hash - 1] == '\'' && raw[hash + 1] == '\'';
      if (!quoted) raw = raw.substr(0, hash);
    }
    std::string line = trim(raw);
    if (line.empty()) continue;

    if (pending.empty()) {
      std::size_t colon = line.find(':');
      if (colon != std::string::npos) {
        std::string key = trim(line.substr(0, colon));
        if (kHeaderKeys.count(key)) {
          if (current->headers.count(key)) throw SyntaxError("duplicate header '" + key + "'", line_offset);
          current->headers[key] = {trim(line.substr(colon + 1)), line_offset + colon + 1};
          continue;
        }
      }
      if (line.rfind("quotient", 0) == 0 && line.back() == '{') {
        if (current != &out.top) throw SyntaxError("nested quotient block", line_offset);
        Lexer lex(std::string_view(line).substr(8, line.size() - 9), line_offset + 8);
        Token t = lex.take();
        if ((t.kind != Token::Kind::kIdent && t.kind != Token::Kind::kQuoted) || t.text.size() != 1 ||
            lex.peek().kind != Token::Kind::kEnd)
          throw SyntaxError("expected 'quotient <letter> {'", line_offset);
        out.quotients.emplace_back(t.text[0], Section{});
        current = &out.quotients.back().second;
        current->offset = line_offset;
        continue;
      }
      if (line == "}") {
        if (current == &out.top) throw SyntaxError("unmatched '}'", line_offset);
        current = &out.top;
        continue;
      }
    }

    if (pending.empty()) pending_offset = line_offset;
    if (!pending.empty()) pending += ' ';
    pending += line;
    std::size_t semi;
    while ((semi = pending.find(';')) != std::string::npos) {
      std::string stmt = trim(std::string_view(pending).substr(0, semi));
      if (!stmt.empty()) current->statements.push_back({stmt, pending_offset});
      pending = trim(std::string_view(pending).substr(semi + 1));
    }
  }
  if (!pending.empty()) throw SyntaxError("statement not terminated by ';'", pending_offset);
  if (current != &out.top) throw SyntaxError("quotient block not closed", text.size());
  return out;
}

const std::string* header(const Section& s, const std::string& key) {
  auto it = s.headers.find(key);
  return it == s.headers.end() ? nullptr : &it->second.first;
}

std::size_t header_offset(const Section& s, const std::string& key) {
  auto it = s.headers.find(key);
  return it == s.headers.end() ? s.offset : it->second.second;
}

std::set<char> parse_letters(const Section& s, const std::string& key) {
  std::set<char> out;
  const std::string* v = header(s, key);
  if (!v) return out;
  Lexer lex(*v, header_offset(s, key));
  while (lex.peek().kind != Token::Kind::kEnd) {
    Token t = lex.take();
    if ((t.kind != Token::Kind::kIdent && t.kind != Token::Kind::kQuoted) || t.text.size() != 1)
      throw SyntaxError("expected single-character letters in '" + key + "'", t.position);
    out.insert(t.text[0]);
    lex.accept(Token::Kind::kComma);
  }
  return out;
}

std::vector<std::string> parse_names(const Section& s, const std::string& key) {
  std::vector<std::string> out;
  const std::string* v = header(s, key);
  if (!v) return out;
  Lexer lex(*v, header_offset(s, key));
  while (lex.peek().kind != Token::Kind::kEnd) {
    out.push_back(lex.expect(Token::Kind::kIdent, "an identifier").text);
    lex.accept(Token::Kind::kComma);
  }
  return out;
}

struct RawSymbol {
  bool quoted;
  std::string text;
  std::size_t position;
};

struct RawRule {
  std::string head;
  std::vector<std::vector<RawSymbol>> conjuncts;
  std::size_t position;
};

ConjGrammar build_cg(const Section& s) {
  std::set<char> terminals = parse_letters(s, "terminals");
  std::set<std::string> nonterminals;
  for (auto& n : parse_names(s, "nonterminals")) nonterminals.insert(n);

  std::vector<RawRule> raw;
  for (const auto& st : s.statements) {
    Lexer lex(st.text, st.offset);
    Token head = lex.expect(Token::Kind::kIdent, "a rule head");
    lex.expect(Token::Kind::kArrow, "'->'");
    nonterminals.insert(head.text);
    for (;;) {
      RawRule rule{head.text, {}, head.position};
      for (;;) {
        std::vector<RawSymbol> body;
        bool eps = false;
        while (lex.peek().kind == Token::Kind::kIdent || lex.peek().kind == Token::Kind::kQuoted) {
          Token t = lex.take();
          if (t.kind == Token::Kind::kIdent && t.text == "eps") {
            eps = true;
            continue;
          }
          body.push_back({t.kind == Token::Kind::kQuoted, t.text, t.position});
        }
        if (body.empty() && !eps) lex.fail("expected a conjunct body (use 'eps' for the empty string)");
        if (eps && !body.empty()) throw SyntaxError("'eps' mixed with other symbols", lex.peek().position);
        rule.conjuncts.push_back(std::move(body));
        if (!lex.accept(Token::Kind::kAmp)) break;
      }
      raw.push_back(std::move(rule));
      if (!lex.accept(Token::Kind::kBar)) break;
    }
    if (lex.peek().kind != Token::Kind::kEnd) lex.fail("unexpected token in rule");
  }

  for (const auto& r : raw)
    for (const auto& body : r.conjuncts)
      for (const auto& sym : body)
        if (sym.quoted) terminals.insert(sym.text[0]);

  ConjGrammar g;
  g.terminals = terminals;
  g.nonterminals = nonterminals;
  for (const auto& r : raw) {
    ConjRule rule{r.head, {}};
    for (const auto& body : r.conjuncts) {
      Body b;
      for (const auto& sym : body) {
        if (sym.quoted) {
          b.push_back(GrammarSymbol::terminal(sym.text[0]));
        } else if (nonterminals.count(sym.text)) {
          b.push_back(GrammarSymbol::nonterminal(sym.text));
        } else if (sym.text.size() == 1 && terminals.count(sym.text[0])) {
          b.push_back(GrammarSymbol::terminal(sym.text[0]));
        } else {
          throw SyntaxError("undeclared symbol '" + sym.text + "'", sym.position);
        }
      }
      rule.conjuncts.push_back(std::move(b));
    }
    g.rules.push_back(std::move(rule));
  }

  const std::string* start = header(s, "start");
  if (!start) throw SyntaxError("missing 'start:' header", s.offset);
  g.start = trim(*start);
  if (!g.nonterminals.count(g.start)) g.nonterminals.insert(g.start);
  validate(g);
  return g;
}

std::vector<Axiom> parse_axioms(const Section& s) {
  std::vector<Axiom> axioms;
  for (const auto& st : s.statements) {
    Lexer lex(st.text, st.offset);
    Token t = lex.take();
    if ((t.kind != Token::Kind::kIdent && t.kind != Token::Kind::kQuoted) || t.text.size() != 1)
      throw SyntaxError("expected a letter at the start of an axiom", t.position);
    lex.expect(Token::Kind::kColon, "':'");
    Category c = detail::parse_category_from(lex);
    if (lex.peek().kind != Token::Kind::kEnd) lex.fail("unexpected token after axiom category");
    axioms.push_back({c, t.text[0]});
  }
  return axioms;
}

Category parse_header_category(const Section& s, const std::string& key) {
  const std::string* v = header(s, key);
  if (!v) throw SyntaxError("missing '" + key + ":' header", s.offset);
  Lexer lex(*v, header_offset(s, key));
  Category c = detail::parse_category_from(lex);
  if (lex.peek().kind != Token::Kind::kEnd) lex.fail("trailing input after category");
  return c;
}

CCG build_ccg(const Section& s, bool basic) {
  Category target = parse_header_category(s, "target");
  if (!target.is_prim()) throw GrammarError("the target of a categorial grammar must be primitive");
  auto axioms = parse_axioms(s);
  if (basic)
    for (const auto& a : axioms)
      if (!is_bcat(a.category)) throw GrammarError("bcg axiom is not a basic category: " + to_string(a.category));
  return make_ccg(parse_letters(s, "alphabet"), target.name(), axioms);
}

LambekGrammar build_lambek(const Section& s) {
  LambekGrammar g{{}, {}, parse_header_category(s, "target"), Calculus::kMALC};
  const std::string* calc = header(s, "calculus");
  g.calculus = calc ? parse_calculus(trim(*calc)) : Calculus::kMALC;
  g.alphabet = parse_letters(s, "alphabet");
  for (const auto& a : parse_axioms(s)) {
    g.alphabet.insert(a.letter);
    auto& entry = g.lexicon[a.letter];
    if (std::find(entry.begin(), entry.end(), a.category) == entry.end()) entry.push_back(a.category);
  }
  validate(g);
  return g;
}

}  // namespace

GrammarFile parse_grammar_file(std::string_view text) {
  SplitFile file = split_sections(text);
  const std::string* kind = header(file.top, "kind");
  if (!kind) throw SyntaxError("missing 'kind:' header", 0);
  std::string k = trim(*kind);
  if (k != "bundle" && !file.quotients.empty()) throw GrammarError("quotient blocks are only allowed in bundle files");
  if (k == "cg") return {k, build_cg(file.top)};
  if (k == "ccg") return {k, build_ccg(file.top, false)};
  if (k == "bcg") return {k, build_ccg(file.top, true)};
  if (k == "lambek") return {k, build_lambek(file.top)};
  if (k == "bundle") {
    if (!file.top.statements.empty()) throw SyntaxError("rules outside a quotient block", file.top.statements[0].offset);
    QuotientBundle b;
    b.alphabet = parse_letters(file.top, "alphabet");
    b.epsilon_letters = parse_letters(file.top, "eps");
    for (const auto& [letter, section] : file.quotients) {
      if (b.quotients.count(letter)) throw GrammarError(std::string("duplicate quotient for letter '") + letter + "'");
      b.quotients.emplace(letter, build_cg(section));
    }
    validate(b);
    return {k, b};
  }
  throw SyntaxError("unknown grammar kind '" + k + "'", header_offset(file.top, "kind"));
}

GrammarFile load_grammar_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open grammar file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_grammar_file(ss.str());
}

// ---------------------------------------------------------------------------
// Writing

namespace {

std::string letter_token(char c) {
  if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') return std::string(1, c);
  return std::string("'") + c + "'";
}

std::string letters_line(const std::set<char>& letters) {
  std::string out;
  for (char c : letters) {
    if (!out.empty()) out += ' ';
    out += letter_token(c);
  }
  return out;
}

void write_cg_body(std::ostringstream& out, const ConjGrammar& g) {
  out << "terminals: " << letters_line(g.terminals) << "\n";
  out << "nonterminals:";
  for (const auto& n : g.nonterminals) out << ' ' << n;
  out << "\nstart: " << g.start << "\n";
  for (const auto& r : g.rules) out << to_string(r) << " ;\n";
}

}  // namespace

std::string body_to_string(const Body& b) {
  if (b.empty()) return "eps";
  std::string out;
  for (const auto& s : b) {
    if (!out.empty()) out += ' ';
    out += s.is_terminal() ? std::string("'") + s.letter() + "'" : s.name;
  }
  return out;
}

std::string to_string(const ConjRule& r) {
  std::string out = r.head + " ->";
  for (std::size_t i = 0; i < r.conjuncts.size(); ++i) {
    if (i) out += " &";
    out += ' ' + body_to_string(r.conjuncts[i]);
  }
  return out;
}

std::string to_text(const ConjGrammar& g) {
  std::ostringstream out;
  out << "kind: cg\n";
  write_cg_body(out, g);
  return out.str();
}

std::string to_text(const CCG& g, bool basic) {
  std::ostringstream out;
  out << "kind: " << (basic ? "bcg" : "ccg") << "\n";
  out << "alphabet: " << letters_line(g.alphabet) << "\n";
  out << "target: " << g.target << "\n";
  for (const auto& a : g.axioms) out << "'" << a.letter << "' : " << to_string(a.category) << " ;\n";
  return out.str();
}

std::string to_text(const LambekGrammar& g) {
  std::ostringstream out;
  out << "kind: lambek\n";
  out << "calculus: " << to_string(g.calculus) << "\n";
  out << "alphabet: " << letters_line(g.alphabet) << "\n";
  out << "target: " << to_string(g.target) << "\n";
  for (const auto& [c, cats] : g.lexicon)
    for (const auto& cat : cats) out << "'" << c << "' : " << to_string(cat) << " ;\n";
  return out.str();
}

std::string to_text(const QuotientBundle& b) {
  std::ostringstream out;
  out << "kind: bundle\n";
  out << "alphabet: " << letters_line(b.alphabet) << "\n";
  if (!b.epsilon_letters.empty()) out << "eps: " << letters_line(b.epsilon_letters) << "\n";
  for (const auto& [letter, g] : b.quotients) {
    out << "quotient " << letter_token(letter) << " {\n";
    write_cg_body(out, g);
    out << "}\n";
  }
  return out.str();
}

}  // namespace conjcat
