#include "conjcat/ccg.hpp"

#include <algorithm>

#include "conjcat/error.hpp"

namespace conjcat {

std::set<Category> ccg_universe(const CCG& g) {
  std::set<Category> out;
  for (const auto& a : g.axioms) {
    auto sub = subexpressions(a.category);
    out.insert(sub.begin(), sub.end());
  }
  out.insert(Category::prim(g.target));
  return out;
}

CcgRecognizer::CcgRecognizer(const CCG& g) : grammar_(g) {
  validate(g);
  auto u = ccg_universe(g);
  universe_.assign(u.begin(), u.end());
  auto add = [&](const Category& c) {
    auto [it, fresh] = index_.emplace(c, static_cast<int>(entries_.size()));
    if (fresh) entries_.push_back({c, -1, -1, {}});
    return it->second;
  };
  for (const auto& c : universe_) add(c);
  // Primitives of compound conjuncts get chart rows even when they are not
  // subexpressions themselves; they simply never become derivable then.
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    const Category c = universe_[i];
    if (c.kind() == Category::Kind::kAnd) {
      std::vector<int> prims;
      for (const auto& p : conjunction_items(c)) prims.push_back(add(p));
      entries_[index_.at(c)].conjuncts = std::move(prims);
      compound_conjuncts_.push_back(index_.at(c));
    } else if (c.kind() == Category::Kind::kLDiv || c.kind() == Category::Kind::kRDiv) {
      int self = index_.at(c);
      int num = add(c.numerator());
      int den = add(c.denominator());
      entries_[self].numerator = num;
      entries_[self].denominator = den;
      (c.kind() == Category::Kind::kLDiv ? ldivs_ : rdivs_).push_back(self);
    }
  }
  for (const auto& a : g.axioms) lexical_[a.letter].push_back(index_.at(a.category));
  target_ = index_.at(Category::prim(g.target));
}

int CcgRecognizer::index_of(const Category& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) throw GrammarError("category " + to_string(c) + " is outside the grammar's category universe");
  return it->second;
}

class CcgChart {
 public:
  CcgChart(const CcgRecognizer& r, std::string_view w)
      : r_(r), w_(w), n_(w.size()), cells_(r.entries_.size() * (n_ + 1) * (n_ + 1)) {
    for (char c : w)
      if (!r.grammar_.alphabet.count(c)) throw GrammarError(std::string("symbol '") + c + "' is not in the alphabet");
    for (std::size_t len = 1; len <= n_; ++len)
      for (std::size_t i = 0; i + len <= n_; ++i) fill(i, i + len);
  }

  bool holds(int u, std::size_t i, std::size_t j) const { return cells_[key(u, i, j)].set; }

  CcgDerivation build(int u, std::size_t i, std::size_t j) const {
    const Cell& c = cells_[key(u, i, j)];
    CcgDerivation d{c.kind, r_.entries_[u].category, i, j, {}};
    switch (c.kind) {
      case CcgDerivation::Kind::kAxiom: break;
      case CcgDerivation::Kind::kConjunction:
        for (int p : r_.entries_[u].conjuncts) d.children.push_back(build(p, i, j));
        break;
      case CcgDerivation::Kind::kLeftDiv:
        d.children.push_back(build(r_.entries_[c.functor].denominator, i, c.split));
        d.children.push_back(build(c.functor, c.split, j));
        break;
      case CcgDerivation::Kind::kRightDiv:
        d.children.push_back(build(c.functor, i, c.split));
        d.children.push_back(build(r_.entries_[c.functor].denominator, c.split, j));
        break;
    }
    return d;
  }

 private:
  struct Cell {
    bool set = false;
    CcgDerivation::Kind kind = CcgDerivation::Kind::kAxiom;
    std::size_t split = 0;
    int functor = -1;
  };

  std::size_t key(int u, std::size_t i, std::size_t j) const {
    return (static_cast<std::size_t>(u) * (n_ + 1) + i) * (n_ + 1) + j;
  }

  void set(int u, std::size_t i, std::size_t j, CcgDerivation::Kind kind, std::size_t split, int functor) {
    Cell& c = cells_[key(u, i, j)];
    if (!c.set) c = Cell{true, kind, split, functor};
  }

  void fill(std::size_t i, std::size_t j) {
    if (j == i + 1) {
      auto it = r_.lexical_.find(w_[i]);
      if (it != r_.lexical_.end())
        for (int u : it->second) set(u, i, j, CcgDerivation::Kind::kAxiom, 0, -1);
    }
    for (std::size_t k = i + 1; k < j; ++k) {
      for (int x : r_.ldivs_) {
        const auto& e = r_.entries_[x];
        if (holds(x, k, j) && holds(e.denominator, i, k)) set(e.numerator, i, j, CcgDerivation::Kind::kLeftDiv, k, x);
      }
      for (int x : r_.rdivs_) {
        const auto& e = r_.entries_[x];
        if (holds(x, i, k) && holds(e.denominator, k, j)) set(e.numerator, i, j, CcgDerivation::Kind::kRightDiv, k, x);
      }
    }
    // Division results never feed a conjunct of the same span except through
    // primitives, which are all settled above.
    for (int c : r_.compound_conjuncts_) {
      bool all = true;
      for (int p : r_.entries_[c].conjuncts) all = all && holds(p, i, j);
      if (all) set(c, i, j, CcgDerivation::Kind::kConjunction, 0, -1);
    }
  }

  const CcgRecognizer& r_;
  std::string_view w_;
  std::size_t n_;
  std::vector<Cell> cells_;
};

bool CcgRecognizer::member(std::string_view w) const {
  if (w.empty()) throw GrammarError("categorial grammars describe nonempty strings only");
  return CcgChart(*this, w).holds(target_, 0, w.size());
}

std::optional<CcgDerivation> CcgRecognizer::derive(const Category& b, std::string_view w) const {
  if (w.empty()) throw GrammarError("categorial grammars describe nonempty strings only");
  if (!std::binary_search(universe_.begin(), universe_.end(), b))
    throw GrammarError("category " + to_string(b) + " is outside the grammar's category universe");
  int u = index_of(b);
  CcgChart chart(*this, w);
  if (!chart.holds(u, 0, w.size())) return std::nullopt;
  return chart.build(u, 0, w.size());
}

std::set<Category> CcgRecognizer::derivable(std::string_view w) const {
  if (w.empty()) throw GrammarError("categorial grammars describe nonempty strings only");
  CcgChart chart(*this, w);
  std::set<Category> out;
  for (const auto& c : universe_)
    if (chart.holds(index_.at(c), 0, w.size())) out.insert(c);
  return out;
}

bool ccg_member(const CCG& g, std::string_view w) { return CcgRecognizer(g).member(w); }

std::optional<CcgDerivation> ccg_derive(const CCG& g, const Category& b, std::string_view w) {
  return CcgRecognizer(g).derive(b, w);
}

Language ccg_enumerate(const CCG& g, std::size_t max_len, std::size_t budget) {
  CcgRecognizer r(g);
  Language out;
  for (const auto& w : all_strings(g.alphabet, max_len, budget))
    if (!w.empty() && r.member(w)) out.insert(w);
  return out;
}

CCG ccg_extend(const CCG& g, char b, const Category& a) {
  if (g.alphabet.count(b)) throw GrammarError(std::string("letter '") + b + "' is already in the alphabet");
  if (!is_bcat_conj(a)) throw GrammarError("new axiom category is not in BCat∧: " + to_string(a));
  std::vector<Axiom> axioms = g.axioms;
  axioms.push_back({a, b});
  std::set<char> alphabet = g.alphabet;
  alphabet.insert(b);
  return make_ccg(alphabet, g.target, axioms);
}

namespace {
const char* rule_name(CcgDerivation::Kind k) {
  switch (k) {
    case CcgDerivation::Kind::kAxiom: return "axiom";
    case CcgDerivation::Kind::kConjunction: return "conjunction";
    case CcgDerivation::Kind::kLeftDiv: return "left-division";
    case CcgDerivation::Kind::kRightDiv: return "right-division";
  }
  return "?";
}
}  // namespace

nlohmann::json to_json(const CcgDerivation& d, std::string_view w) {
  nlohmann::json j;
  j["rule"] = rule_name(d.kind);
  j["head"] = to_string(d.category);
  j["span"] = {d.begin, d.end};
  j["string"] = std::string(w.substr(d.begin, d.end - d.begin));
  j["children"] = nlohmann::json::array();
  for (const auto& c : d.children) j["children"].push_back(to_json(c, w));
  return j;
}

std::string to_latex(const CcgDerivation& d, std::string_view w) {
  std::string prop = "(" + to_latex(d.category) + ")(\\mathit{" + std::string(w.substr(d.begin, d.end - d.begin)) + "})";
  if (d.category.is_prim()) prop = to_latex(d.category) + "(\\mathit{" + std::string(w.substr(d.begin, d.end - d.begin)) + "})";
  if (d.children.empty()) return prop;
  std::string out = "\\infer{" + prop + "}{";
  for (std::size_t i = 0; i < d.children.size(); ++i) {
    if (i) out += " & ";
    out += to_latex(d.children[i], w);
  }
  return out + "}";
}

}  // namespace conjcat
