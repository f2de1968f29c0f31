#include "conjcat/conj_grammar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "conjcat/error.hpp"

namespace conjcat {

namespace {

struct Sym {
  bool terminal;
  char letter;
  int nt;
};

struct CompiledRule {
  int head;
  std::vector<std::vector<Sym>> conjuncts;
};

struct Compiled {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  std::vector<CompiledRule> rules;

  explicit Compiled(const ConjGrammar& g) {
    for (const auto& n : g.nonterminals) {
      index[n] = static_cast<int>(names.size());
      names.push_back(n);
    }
    for (const auto& r : g.rules) {
      CompiledRule cr{index.at(r.head), {}};
      for (const auto& body : r.conjuncts) {
        std::vector<Sym> b;
        for (const auto& s : body)
          b.push_back(s.is_terminal() ? Sym{true, s.letter(), -1} : Sym{false, 0, index.at(s.name)});
        cr.conjuncts.push_back(std::move(b));
      }
      rules.push_back(std::move(cr));
    }
  }
};

using Split = std::pair<std::size_t, std::size_t>;

// Span chart, grown one letter at a time so enumeration can share prefixes.
// Pushing a letter fills the new column right to left; within one span the
// rules are rescanned until nothing changes. Each fact records the rule that
// first established it and a serial number. Derivations are rebuilt by
// matching only facts with smaller serials, so they are well founded even
// through nullable symbols.
class Chart {
 public:
  Chart(const Compiled& c, std::size_t capacity)
      : c_(c), n_(capacity), serial_(c.names.size() * (n_ + 1) * (n_ + 1), 0), rule_(serial_.size(), 0),
        reach_(n_ + 1), next_(n_ + 1) {
    fill(0, 0);
  }

  Chart(const Compiled& c, std::string_view w) : Chart(c, w.size()) {
    for (char ch : w) push(ch);
  }

  std::size_t size() const { return w_.size(); }

  void push(char letter) {
    w_.push_back(letter);
    const std::size_t j = w_.size();
    for (std::size_t i = j + 1; i-- > 0;) fill(i, j);
  }

  void pop() {
    const std::size_t j = w_.size();
    for (std::size_t a = 0; a < c_.names.size(); ++a)
      for (std::size_t i = 0; i <= j; ++i) serial_[key(static_cast<int>(a), i, j)] = 0;
    w_.pop_back();
  }

  bool holds(int a, std::size_t i, std::size_t j) const { return serial_[key(a, i, j)] != 0; }

  CgDerivation build(const ConjGrammar& g, int a, std::size_t i, std::size_t j) const {
    const std::size_t k0 = key(a, i, j);
    const std::size_t r = rule_[k0];
    CgDerivation d{CgDerivation::Kind::kRule, c_.names[a], i, j, r, {}};
    const CompiledRule& rule = c_.rules[r];
    for (std::size_t k = 0; k < rule.conjuncts.size(); ++k) {
      const auto& body = rule.conjuncts[k];
      std::vector<Split> splits;
      if (!spans(body, i, j, serial_[k0], splits)) throw std::logic_error("chart backpointer lost");
      if (body.empty()) {
        d.children.push_back({CgDerivation::Kind::kEmpty, "eps", i, i, 0, {}});
      } else if (body.size() == 1) {
        d.children.push_back(symbol(g, body[0], splits[0]));
      } else {
        CgDerivation cat{CgDerivation::Kind::kConcat, body_to_string(g.rules[r].conjuncts[k]), i, j, 0, {}};
        for (std::size_t s = 0; s < body.size(); ++s) cat.children.push_back(symbol(g, body[s], splits[s]));
        d.children.push_back(std::move(cat));
      }
    }
    return d;
  }

 private:
  std::size_t key(int a, std::size_t i, std::size_t j) const {
    return (static_cast<std::size_t>(a) * (n_ + 1) + i) * (n_ + 1) + j;
  }

  CgDerivation symbol(const ConjGrammar& g, const Sym& s, Split sp) const {
    if (s.terminal) return {CgDerivation::Kind::kTerminal, std::string(1, s.letter), sp.first, sp.second, 0, {}};
    return build(g, s.nt, sp.first, sp.second);
  }

  // Forward reach-set matching of a body against w[i, j).
  bool matches(const std::vector<Sym>& body, std::size_t i, std::size_t j) {
    std::fill(reach_.begin() + i, reach_.begin() + j + 1, 0);
    reach_[i] = 1;
    for (const Sym& s : body) {
      std::fill(next_.begin() + i, next_.begin() + j + 1, 0);
      bool any = false;
      for (std::size_t p = i; p <= j; ++p) {
        if (!reach_[p]) continue;
        if (s.terminal) {
          if (p < j && w_[p] == s.letter) {
            next_[p + 1] = 1;
            any = true;
          }
          continue;
        }
        for (std::size_t q = p; q <= j; ++q)
          if (serial_[key(s.nt, p, q)]) {
            next_[q] = 1;
            any = true;
          }
      }
      if (!any) return false;
      std::swap(reach_, next_);
    }
    return reach_[j] != 0;
  }

  // Symbol spans of a body over w[i, j) using only facts older than `limit`.
  bool spans(const std::vector<Sym>& body, std::size_t i, std::size_t j, std::size_t limit,
             std::vector<Split>& out) const {
    const std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::vector<std::size_t>> pred(body.size() + 1, std::vector<std::size_t>(j - i + 1, none));
    pred[0][0] = i;
    for (std::size_t k = 0; k < body.size(); ++k)
      for (std::size_t p = i; p <= j; ++p) {
        if (pred[k][p - i] == none) continue;
        for (std::size_t q = p; q <= j; ++q) {
          if (pred[k + 1][q - i] != none) continue;
          const Sym& s = body[k];
          bool ok = s.terminal ? q == p + 1 && w_[p] == s.letter
                               : serial_[key(s.nt, p, q)] != 0 && serial_[key(s.nt, p, q)] < limit;
          if (ok) pred[k + 1][q - i] = p;
        }
      }
    if (pred[body.size()][j - i] == none) return false;
    out.assign(body.size(), {0, 0});
    std::size_t q = j;
    for (std::size_t k = body.size(); k-- > 0;) {
      std::size_t p = pred[k + 1][q - i];
      out[k] = {p, q};
      q = p;
    }
    return true;
  }

  void fill(std::size_t i, std::size_t j) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t r = 0; r < c_.rules.size(); ++r) {
        const CompiledRule& rule = c_.rules[r];
        const std::size_t k = key(rule.head, i, j);
        if (serial_[k]) continue;
        bool ok = true;
        for (std::size_t c = 0; c < rule.conjuncts.size() && ok; ++c) ok = matches(rule.conjuncts[c], i, j);
        if (!ok) continue;
        serial_[k] = ++counter_;
        rule_[k] = r;
        changed = true;
      }
    }
  }

  const Compiled& c_;
  std::string w_;
  std::size_t n_;
  std::vector<std::size_t> serial_;
  std::vector<std::size_t> rule_;
  std::vector<char> reach_, next_;
  std::size_t counter_ = 0;
};

void check_word(const ConjGrammar& g, std::string_view w) {
  for (char c : w)
    if (!g.terminals.count(c)) throw GrammarError(std::string("symbol '") + c + "' is not a terminal of the grammar");
}

int start_index(const Compiled& c, const ConjGrammar& g, const std::string& start) {
  const std::string& s = start.empty() ? g.start : start;
  auto it = c.index.find(s);
  if (it == c.index.end()) throw GrammarError("unknown nonterminal '" + s + "'");
  return it->second;
}

}  // namespace

std::set<std::string> nullable_nonterminals(const ConjGrammar& g) {
  Compiled c(g);
  Chart chart(c, "");
  std::set<std::string> out;
  for (std::size_t a = 0; a < c.names.size(); ++a)
    if (chart.holds(static_cast<int>(a), 0, 0)) out.insert(c.names[a]);
  return out;
}

bool cg_member(const ConjGrammar& g, std::string_view w, const std::string& start) {
  check_word(g, w);
  Compiled c(g);
  int s = start_index(c, g, start);
  return Chart(c, w).holds(s, 0, w.size());
}

std::optional<CgDerivation> cg_derive(const ConjGrammar& g, std::string_view w, const std::string& start) {
  check_word(g, w);
  Compiled c(g);
  int s = start_index(c, g, start);
  Chart chart(c, w);
  if (!chart.holds(s, 0, w.size())) return std::nullopt;
  return chart.build(g, s, 0, w.size());
}

std::set<std::string> cg_derivable_nonterminals(const ConjGrammar& g, std::string_view w) {
  check_word(g, w);
  Compiled c(g);
  Chart chart(c, w);
  std::set<std::string> out;
  for (std::size_t a = 0; a < c.names.size(); ++a)
    if (chart.holds(static_cast<int>(a), 0, w.size())) out.insert(c.names[a]);
  return out;
}

namespace {

void all_strings_count_check(const std::set<char>& alphabet, std::size_t max_len, std::size_t budget) {
  std::size_t total = 0, layer = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    total += layer;
    if (total > budget) throw BudgetExceeded("enumeration needs more than " + std::to_string(budget) + " candidates");
    if (len < max_len) {
      if (!alphabet.empty() && layer > budget / alphabet.size() + 1)
        throw BudgetExceeded("enumeration needs more than " + std::to_string(budget) + " candidates");
      layer *= alphabet.size();
    }
  }
}

}  // namespace

std::vector<std::string> all_strings(const std::set<char>& alphabet, std::size_t max_len, std::size_t budget) {
  all_strings_count_check(alphabet, max_len, budget);
  std::vector<char> letters(alphabet.begin(), alphabet.end());
  std::vector<std::string> out{""};
  std::size_t from = 0;
  for (std::size_t len = 1; len <= max_len && !letters.empty(); ++len) {
    std::size_t to = out.size();
    for (std::size_t k = from; k < to; ++k)
      for (char c : letters) out.push_back(out[k] + c);
    from = to;
  }
  return out;
}

Language cg_enumerate(const ConjGrammar& g, std::size_t max_len, std::size_t budget) {
  all_strings_count_check(g.terminals, max_len, budget);
  Compiled c(g);
  int s = start_index(c, g, {});
  Language out;
  Chart chart(c, max_len);
  std::string w;
  // Depth-first over prefixes; each letter costs one chart column.
  auto walk = [&](auto&& self) -> void {
    if (chart.holds(s, 0, w.size())) out.insert(w);
    if (w.size() == max_len) return;
    for (char a : g.terminals) {
      w.push_back(a);
      chart.push(a);
      self(self);
      chart.pop();
      w.pop_back();
    }
  };
  walk(walk);
  return out;
}

OddFormReport check_odd_normal_form(const ConjGrammar& g) {
  std::set<std::string> referenced;
  for (const auto& r : g.rules)
    for (const auto& body : r.conjuncts)
      for (const auto& s : body)
        if (!s.is_terminal()) referenced.insert(s.name);

  auto bac = [](const Body& b) {
    return b.size() == 3 && !b[0].is_terminal() && b[1].is_terminal() && !b[2].is_terminal();
  };

  OddFormReport report;
  for (std::size_t i = 0; i < g.rules.size(); ++i) {
    const ConjRule& r = g.rules[i];
    if (r.conjuncts.size() == 1 && r.conjuncts[0].size() == 1 && r.conjuncts[0][0].is_terminal()) continue;
    bool all_bac = true;
    for (const auto& b : r.conjuncts) all_bac = all_bac && bac(b);
    if (all_bac) continue;
    const Body& b0 = r.conjuncts[0];
    if (r.conjuncts.size() == 1 && b0.size() == 2 && b0[0].is_terminal() && !b0[1].is_terminal() && r.head == g.start) {
      if (referenced.count(g.start))
        report.violations.push_back({i, "rule " + to_string(r) + " needs an unreferenced start symbol, but '" +
                                            g.start + "' occurs in a rule body"});
      continue;
    }
    report.violations.push_back({i, "rule " + to_string(r) + " is not of the form A -> a, A -> B a C & ... or S -> a A"});
  }
  return report;
}

nlohmann::json to_json(const CgDerivation& d, const ConjGrammar& g, std::string_view w) {
  nlohmann::json j;
  switch (d.kind) {
    case CgDerivation::Kind::kTerminal: j["rule"] = "axiom"; break;
    case CgDerivation::Kind::kEmpty: j["rule"] = "empty"; break;
    case CgDerivation::Kind::kConcat: j["rule"] = "concat"; break;
    case CgDerivation::Kind::kRule: j["rule"] = to_string(g.rules[d.rule_index]); break;
  }
  j["head"] = d.label;
  j["span"] = {d.begin, d.end};
  j["string"] = std::string(w.substr(d.begin, d.end - d.begin));
  j["children"] = nlohmann::json::array();
  for (const auto& c : d.children) j["children"].push_back(to_json(c, g, w));
  return j;
}

namespace {
std::string latex_word(std::string_view v) {
  if (v.empty()) return "\\varepsilon";
  return "\\mathit{" + std::string(v) + "}";
}

std::string latex_name(const std::string& s) {
  std::string out;
  for (char c : s) out += c == '_' ? std::string("\\_") : std::string(1, c);
  return out;
}

void latex_rec(const CgDerivation& d, std::string_view w, std::string& out) {
  std::string_view v = w.substr(d.begin, d.end - d.begin);
  switch (d.kind) {
    case CgDerivation::Kind::kTerminal:
      out += latex_name(d.label) + "(" + latex_word(v) + ")";
      return;
    case CgDerivation::Kind::kEmpty:
      out += "\\varepsilon(\\varepsilon)";
      return;
    default: break;
  }
  std::string head = latex_name(d.label);
  if (d.kind == CgDerivation::Kind::kConcat) {
    // bodies as conventionally written: symbols juxtaposed, no quotes
    head.clear();
    for (const auto& c : d.children) head += latex_name(c.label);
    head = "\\mathrm{" + head + "}";
  }
  out += "\\infer{" + head + "(" + latex_word(v) + ")}{";
  for (std::size_t i = 0; i < d.children.size(); ++i) {
    if (i) out += " & ";
    latex_rec(d.children[i], w, out);
  }
  out += "}";
}
}  // namespace

std::string to_latex(const CgDerivation& d, const ConjGrammar&, std::string_view w) {
  std::string out;
  latex_rec(d, w, out);
  return out;
}

}  // namespace conjcat
