#include "conjcat/prover.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

#include "conjcat/error.hpp"

namespace conjcat {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kProved: return "proved";
    case Verdict::kRefuted: return "refuted";
    case Verdict::kBudgetExhausted: return "budget exhausted";
  }
  return "?";
}

namespace {

// Occurrence balance of one primitive, as an interval over the choices the
// additives allow. A derivable sequent balances every primitive to zero.
struct Interval {
  long long lo = 0;
  long long hi = 0;
};

constexpr long long kInf = 1LL << 40;

long long clamp(long long v) { return std::clamp(v, -kInf, kInf); }

using Counts = std::vector<Interval>;

Interval at(const Counts& c, std::size_t i) { return i < c.size() ? c[i] : Interval{}; }

Counts combine(const Counts& a, const Counts& b, Interval (*op)(Interval, Interval)) {
  Counts out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(at(a, i), at(b, i));
  return out;
}

Interval add(Interval x, Interval y) { return {clamp(x.lo + y.lo), clamp(x.hi + y.hi)}; }
Interval hull(Interval x, Interval y) { return {std::min(x.lo, y.lo), std::max(x.hi, y.hi)}; }
// y minus x
Interval sub(Interval x, Interval y) { return {clamp(y.lo - x.hi), clamp(y.hi - x.lo)}; }
Interval rsub(Interval y, Interval x) { return sub(x, y); }

std::u32string encode(const std::vector<int>& ids, int tail = -1) {
  std::u32string key;
  key.reserve(ids.size() + 2);
  for (int id : ids) key.push_back(static_cast<char32_t>(id + 1));
  if (tail >= 0) {
    key.push_back(0);
    key.push_back(static_cast<char32_t>(tail + 1));
  }
  return key;
}

std::vector<int> splice(const std::vector<int>& v, std::size_t from, std::size_t to, std::initializer_list<int> mid) {
  std::vector<int> out;
  out.reserve(v.size() + mid.size());
  out.insert(out.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(from));
  out.insert(out.end(), mid.begin(), mid.end());
  out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(to), v.end());
  return out;
}

std::vector<int> slice(const std::vector<int>& v, std::size_t from, std::size_t to) {
  return std::vector<int>(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to));
}

}  // namespace

// ---------------------------------------------------------------------------
// Two-sided calculi

class LambekProver::Impl {
 public:
  Impl(Calculus c, std::size_t budget) : calculus_(c), budget_(budget) {
    if (c == Calculus::kMACLL) throw GrammarError("use MacllProver for MACLL sequents");
    if (budget == 0) throw GrammarError("budget must be positive");
  }

  ProveResult prove(const Sequent& s, bool want_proof) {
    check_language(s);
    std::vector<int> ant;
    for (const auto& a : s.antecedent) ant.push_back(intern(a));
    int succ = intern(s.succedent);
    used_ = 0;
    ProveResult r;
    try {
      bool ok = search(ant, succ);
      r.verdict = ok ? Verdict::kProved : Verdict::kRefuted;
      if (ok && want_proof) r.proof = rebuild(ant, succ);
    } catch (const BudgetExceeded&) {
      r.verdict = Verdict::kBudgetExhausted;
    }
    r.expansions = used_;
    return r;
  }

  Calculus calculus() const { return calculus_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Node {
    Category::Kind kind;
    int a = -1;
    int b = -1;
    Counts counts;
  };

  struct Entry {
    bool proved = false;
    const char* rule = "";
    std::vector<std::pair<std::vector<int>, int>> premises;
  };

  void check_language(const Sequent& s) const {
    if (allows_additives(calculus_)) return;
    for (const auto& a : s.antecedent)
      if (has_additives(a)) throw GrammarError("additive connective in a " + to_string(calculus_) + " sequent");
    if (has_additives(s.succedent)) throw GrammarError("additive connective in a " + to_string(calculus_) + " sequent");
  }

  int intern(const Category& c) {
    auto it = ids_.find(c);
    if (it != ids_.end()) return it->second;
    Node n{c.kind(), -1, -1, {}};
    if (c.is_prim()) {
      auto [p, fresh] = prims_.emplace(c.name(), prims_.size());
      n.counts.assign(p->second + 1, Interval{});
      n.counts[p->second] = {1, 1};
    } else {
      n.a = intern(c.left());
      n.b = intern(c.right());
      const Counts& ca = nodes_[n.a].counts;
      const Counts& cb = nodes_[n.b].counts;
      switch (c.kind()) {
        case Category::Kind::kProd: n.counts = combine(ca, cb, add); break;
        case Category::Kind::kLDiv: n.counts = combine(ca, cb, sub); break;
        case Category::Kind::kRDiv: n.counts = combine(ca, cb, rsub); break;
        default: n.counts = combine(ca, cb, hull); break;
      }
    }
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(std::move(n));
    cats_.push_back(c);
    ids_.emplace(c, id);
    return id;
  }

  bool balanced(const std::vector<int>& ant, int succ) const {
    for (std::size_t p = 0; p < prims_.size(); ++p) {
      Interval sum{};
      for (int a : ant) sum = add(sum, at(nodes_[a].counts, p));
      Interval s = at(nodes_[succ].counts, p);
      if (sum.lo - s.hi > 0 || sum.hi - s.lo < 0) return false;
    }
    return true;
  }

  bool search(const std::vector<int>& ant, int succ) {
    if (has_lambek_restriction(calculus_) && ant.empty()) return false;
    if (!balanced(ant, succ)) return false;
    std::u32string key = encode(ant, succ);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.proved;
    if (++used_ > budget_) throw BudgetExceeded("proof search exceeded " + std::to_string(budget_) + " expansions");
    Entry e = decide(ant, succ);
    bool proved = e.proved;
    memo_.emplace(std::move(key), std::move(e));
    return proved;
  }

  // Tries premises in order; all must hold.
  Entry attempt(const char* rule, std::vector<std::pair<std::vector<int>, int>> premises) {
    for (const auto& [a, s] : premises)
      if (!search(a, s)) return {};
    return {true, rule, std::move(premises)};
  }

  Entry decide(const std::vector<int>& ant, int succ) {
    const bool restricted = has_lambek_restriction(calculus_);
    const std::size_t n = ant.size();
    if (n == 1 && ant[0] == succ) return {true, "ax", {}};

    const Node& s = nodes_[succ];
    switch (s.kind) {
      case Category::Kind::kLDiv: return attempt("->\\", {{splice(ant, 0, 0, {s.a}), s.b}});
      case Category::Kind::kRDiv: return attempt("->/", {{splice(ant, n, n, {s.b}), s.a}});
      case Category::Kind::kAnd: return attempt("->&", {{ant, s.a}, {ant, s.b}});
      default: break;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Node& f = nodes_[ant[i]];
      if (f.kind == Category::Kind::kProd) return attempt(".->", {{splice(ant, i, i + 1, {f.a, f.b}), succ}});
      if (f.kind == Category::Kind::kOr)
        return attempt("+->", {{splice(ant, i, i + 1, {f.a}), succ}, {splice(ant, i, i + 1, {f.b}), succ}});
    }

    if (s.kind == Category::Kind::kOr) {
      if (Entry e = attempt("->+1", {{ant, s.a}}); e.proved) return e;
      if (Entry e = attempt("->+2", {{ant, s.b}}); e.proved) return e;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Node& f = nodes_[ant[i]];
      if (f.kind != Category::Kind::kAnd) continue;
      if (Entry e = attempt("&->1", {{splice(ant, i, i + 1, {f.a}), succ}}); e.proved) return e;
      if (Entry e = attempt("&->2", {{splice(ant, i, i + 1, {f.b}), succ}}); e.proved) return e;
    }
    if (s.kind == Category::Kind::kProd) {
      for (std::size_t k = 0; k <= n; ++k) {
        if (restricted && (k == 0 || k == n)) continue;
        if (Entry e = attempt("->.", {{slice(ant, 0, k), s.a}, {slice(ant, k, n), s.b}}); e.proved) return e;
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      const Node& f = nodes_[ant[k]];
      if (f.kind == Category::Kind::kLDiv) {
        // Γ, Π, A\B, Δ with Π = ant[i, k)
        for (std::size_t i = k + 1; i-- > 0;) {
          if (restricted && i == k) continue;
          Entry e = attempt("\\->", {{slice(ant, i, k), f.a}, {splice(ant, i, k + 1, {f.b}), succ}});
          if (e.proved) return e;
        }
      } else if (f.kind == Category::Kind::kRDiv) {
        // Γ, B/A, Π, Δ with Π = ant(k, j)
        for (std::size_t j = k + 1; j <= n; ++j) {
          if (restricted && j == k + 1) continue;
          Entry e = attempt("/->", {{slice(ant, k + 1, j), f.b}, {splice(ant, k, j, {f.a}), succ}});
          if (e.proved) return e;
        }
      }
    }
    return {};
  }

  ProofTree rebuild(const std::vector<int>& ant, int succ) const {
    const Entry& e = memo_.at(encode(ant, succ));
    ProofTree t{e.rule, to_sequent(ant, succ), {}};
    for (const auto& [a, s] : e.premises) t.premises.push_back(rebuild(a, s));
    return t;
  }

  Sequent to_sequent(const std::vector<int>& ant, int succ) const {
    Sequent s{{}, cats_[succ]};
    for (int a : ant) s.antecedent.push_back(cats_[a]);
    return s;
  }

  Calculus calculus_;
  std::size_t budget_;
  std::size_t used_ = 0;
  std::vector<Node> nodes_;
  std::vector<Category> cats_;
  std::unordered_map<Category, int, CategoryHash> ids_;
  std::map<std::string, std::size_t> prims_;
  std::unordered_map<std::u32string, Entry> memo_;
};

LambekProver::LambekProver(Calculus calculus, std::size_t budget) : impl_(std::make_unique<Impl>(calculus, budget)) {}
LambekProver::~LambekProver() = default;
LambekProver::LambekProver(LambekProver&&) noexcept = default;
LambekProver& LambekProver::operator=(LambekProver&&) noexcept = default;
Calculus LambekProver::calculus() const { return impl_->calculus(); }
ProveResult LambekProver::prove(const Sequent& s, bool want_proof) { return impl_->prove(s, want_proof); }
std::size_t LambekProver::memo_size() const { return impl_->memo_size(); }

bool LambekProver::derivable(const Sequent& s) {
  ProveResult r = prove(s, false);
  if (r.verdict == Verdict::kBudgetExhausted) throw BudgetExceeded("proof search budget exhausted on " + to_string(s));
  return r.verdict == Verdict::kProved;
}

// ---------------------------------------------------------------------------
// MACLL

class MacllProver::Impl {
 public:
  explicit Impl(std::size_t budget) : budget_(budget) {
    if (budget == 0) throw GrammarError("budget must be positive");
  }

  MacllResult prove(const MacllSequent& s, bool want_proof) {
    if (s.formulas.empty()) throw GrammarError("a MACLL sequent needs at least one formula");
    std::vector<int> seq;
    for (const auto& f : s.formulas) seq.push_back(intern(f));
    used_ = 0;
    MacllResult r;
    try {
      bool ok = search(seq);
      r.verdict = ok ? Verdict::kProved : Verdict::kRefuted;
      if (ok && want_proof) r.proof = rebuild(seq);
    } catch (const BudgetExceeded&) {
      r.verdict = Verdict::kBudgetExhausted;
    }
    r.expansions = used_;
    return r;
  }

 private:
  using K = MacllFormula::Kind;

  struct Node {
    K kind;
    int a = -1;
    int b = -1;
    int neg = -1;
    bool wild = false;  // contains ⊤, balances anything
    Counts counts;
  };

  struct Entry {
    bool proved = false;
    const char* rule = "";
    std::vector<int> conclusion;  // the rotation the rule applies to
    std::vector<std::vector<int>> premises;
  };

  int intern(const MacllFormula& f) {
    auto it = ids_.find(f);
    if (it != ids_.end()) return it->second;
    Node n{f.kind(), -1, -1, -1, false, {}};
    switch (f.kind()) {
      case K::kAtom: {
        auto [p, fresh] = prims_.emplace(f.name(), prims_.size());
        n.counts.assign(p->second + 1, Interval{});
        n.counts[p->second] = f.negated() ? Interval{-1, -1} : Interval{1, 1};
        break;
      }
      case K::kTop: n.wild = true; break;
      case K::kOne:
      case K::kBottom:
      case K::kZero: break;
      default: {
        n.a = intern(f.left());
        n.b = intern(f.right());
        const Counts& ca = nodes_[n.a].counts;
        const Counts& cb = nodes_[n.b].counts;
        n.counts = (f.kind() == K::kTensor || f.kind() == K::kPar) ? combine(ca, cb, add) : combine(ca, cb, hull);
        n.wild = nodes_[n.a].wild || nodes_[n.b].wild;
        break;
      }
    }
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(std::move(n));
    forms_.push_back(f);
    ids_.emplace(f, id);
    return id;
  }

  int neg(int id) {
    if (nodes_[id].neg < 0) {
      int n = intern(macll_negate(forms_[id]));
      nodes_[id].neg = n;
      nodes_[n].neg = id;
    }
    return nodes_[id].neg;
  }

  bool balanced(const std::vector<int>& seq) const {
    for (int f : seq)
      if (nodes_[f].wild) return true;
    for (std::size_t p = 0; p < prims_.size(); ++p) {
      Interval sum{};
      for (int f : seq) sum = add(sum, at(nodes_[f].counts, p));
      if (sum.lo > 0 || sum.hi < 0) return false;
    }
    return true;
  }

  static std::vector<int> rotate(const std::vector<int>& v, std::size_t k) {
    std::vector<int> out(v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
    out.insert(out.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
  }

  static std::vector<int> canonical(const std::vector<int>& v) {
    std::vector<int> best = v;
    for (std::size_t k = 1; k < v.size(); ++k) {
      std::vector<int> r = rotate(v, k);
      if (r < best) best = std::move(r);
    }
    return best;
  }

  bool search(const std::vector<int>& seq) {
    if (!balanced(seq)) return false;
    std::vector<int> c = canonical(seq);
    std::u32string key = encode(c);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.proved;
    if (++used_ > budget_) throw BudgetExceeded("proof search exceeded " + std::to_string(budget_) + " expansions");
    Entry e = decide(c);
    bool proved = e.proved;
    memo_.emplace(std::move(key), std::move(e));
    return proved;
  }

  Entry attempt(const char* rule, std::vector<int> conclusion, std::vector<std::vector<int>> premises) {
    for (const auto& p : premises)
      if (!search(p)) return {};
    return {true, rule, std::move(conclusion), std::move(premises)};
  }

  static std::vector<int> with_head(int head, const std::vector<int>& r, std::size_t from) {
    std::vector<int> out{head};
    out.insert(out.end(), r.begin() + static_cast<std::ptrdiff_t>(from), r.end());
    return out;
  }

  Entry decide(const std::vector<int>& c) {
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
      if (nodes_[c[i]].kind == K::kTop) return {true, "top", rotate(c, i), {}};

    for (std::size_t i = 0; i < n; ++i) {
      const Node f = nodes_[c[i]];
      std::vector<int> r = rotate(c, i);
      if (f.kind == K::kPar) {
        std::vector<int> p{f.a, f.b};
        p.insert(p.end(), r.begin() + 1, r.end());
        return attempt("par", r, {p});
      }
      if (f.kind == K::kWith) return attempt("with", r, {with_head(f.a, r, 1), with_head(f.b, r, 1)});
      if (f.kind == K::kBottom && n >= 2) return attempt("bot", r, {slice(r, 1, n)});
    }

    if (n == 2 && c[1] == neg(c[0])) return {true, "ax", c, {}};
    if (n == 1 && nodes_[c[0]].kind == K::kOne) return {true, "1", c, {}};

    for (std::size_t i = 0; i < n; ++i) {
      const Node f = nodes_[c[i]];
      if (f.kind != K::kPlus) continue;
      std::vector<int> r = rotate(c, i);
      if (Entry e = attempt("plus1", r, {with_head(f.a, r, 1)}); e.proved) return e;
      if (Entry e = attempt("plus2", r, {with_head(f.b, r, 1)}); e.proved) return e;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Node f = nodes_[c[i]];
      if (f.kind != K::kTensor) continue;
      std::vector<int> r = rotate(c, i);
      std::vector<int> rest = slice(r, 1, n);
      const std::size_t m = rest.size();
      // Γ, A*B, Δ with Γ = rest[k, m) and Δ = rest[0, k)
      for (std::size_t k = 0; k <= m; ++k) {
        std::vector<int> gamma_a = slice(rest, k, m);
        gamma_a.push_back(f.a);
        std::vector<int> b_delta{f.b};
        b_delta.insert(b_delta.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(k));
        std::vector<int> concl = slice(rest, k, m);
        concl.push_back(c[i]);
        concl.insert(concl.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(k));
        if (Entry e = attempt("tensor", concl, {gamma_a, b_delta}); e.proved) return e;
      }
    }
    return {};
  }

  MacllSequent to_sequent(const std::vector<int>& v) const {
    MacllSequent s;
    for (int f : v) s.formulas.push_back(forms_[f]);
    return s;
  }

  MacllProof rebuild(const std::vector<int>& seq) const {
    const Entry& e = memo_.at(encode(canonical(seq)));
    MacllProof node{e.rule, to_sequent(e.conclusion), {}};
    for (const auto& p : e.premises) node.premises.push_back(rebuild(p));
    if (e.conclusion == seq) return node;
    return MacllProof{"cycle", to_sequent(seq), {std::move(node)}};
  }

  std::size_t budget_;
  std::size_t used_ = 0;
  std::vector<Node> nodes_;
  std::vector<MacllFormula> forms_;
  std::map<MacllFormula, int> ids_;
  std::map<std::string, std::size_t> prims_;
  std::unordered_map<std::u32string, Entry> memo_;
};

MacllProver::MacllProver(std::size_t budget) : impl_(std::make_unique<Impl>(budget)) {}
MacllProver::~MacllProver() = default;
MacllProver::MacllProver(MacllProver&&) noexcept = default;
MacllProver& MacllProver::operator=(MacllProver&&) noexcept = default;
MacllResult MacllProver::prove(const MacllSequent& s, bool want_proof) { return impl_->prove(s, want_proof); }

bool MacllProver::derivable(const MacllSequent& s) {
  MacllResult r = prove(s, false);
  if (r.verdict == Verdict::kBudgetExhausted) throw BudgetExceeded("proof search budget exhausted on " + to_string(s));
  return r.verdict == Verdict::kProved;
}

ProveResult prove(Calculus c, const Sequent& s, std::size_t budget) { return LambekProver(c, budget).prove(s); }
MacllResult prove_macll(const MacllSequent& s, std::size_t budget) { return MacllProver(budget).prove(s); }

bool categories_equivalent(Calculus c, const Category& a, const Category& b, std::size_t budget) {
  LambekProver p(c, budget);
  return p.derivable({{a}, b}) && p.derivable({{b}, a});
}

// ---------------------------------------------------------------------------
// Grammars

LambekRecognizer::LambekRecognizer(const LambekGrammar& g, std::size_t budget)
    : grammar_(g), prover_(g.calculus, budget) {
  validate(g);
}

namespace {
// Calls `visit` on every lexicon choice for w in lexicographic order of
// choice indices; stops when it returns true.
template <typename F>
bool for_each_choice(const LambekGrammar& g, std::string_view w, F visit) {
  std::vector<const std::vector<Category>*> options;
  for (char c : w) {
    auto it = g.lexicon.find(c);
    if (it == g.lexicon.end() || it->second.empty())
      throw GrammarError(std::string("symbol '") + c + "' has no lexicon entry");
    options.push_back(&it->second);
  }
  std::vector<std::size_t> idx(w.size(), 0);
  for (;;) {
    std::vector<Category> ant;
    for (std::size_t i = 0; i < w.size(); ++i) ant.push_back((*options[i])[idx[i]]);
    if (visit(Sequent{std::move(ant), g.target})) return true;
    std::size_t k = w.size();
    while (k > 0) {
      --k;
      if (++idx[k] < options[k]->size()) break;
      idx[k] = 0;
      if (k == 0) return false;
    }
    if (w.empty()) return false;
  }
}
}  // namespace

Verdict LambekRecognizer::member(std::string_view w) {
  if (w.empty() && has_lambek_restriction(grammar_.calculus)) return Verdict::kRefuted;
  bool exhausted = false;
  bool found = for_each_choice(grammar_, w, [&](const Sequent& s) {
    Verdict v = prover_.prove(s, false).verdict;
    if (v == Verdict::kBudgetExhausted) exhausted = true;
    return v == Verdict::kProved;
  });
  if (found) return Verdict::kProved;
  return exhausted ? Verdict::kBudgetExhausted : Verdict::kRefuted;
}

std::optional<ProofTree> LambekRecognizer::derive(std::string_view w) {
  if (w.empty() && has_lambek_restriction(grammar_.calculus)) return std::nullopt;
  std::optional<ProofTree> out;
  for_each_choice(grammar_, w, [&](const Sequent& s) {
    ProveResult r = prover_.prove(s, true);
    if (r.verdict == Verdict::kProved) out = std::move(r.proof);
    return out.has_value();
  });
  return out;
}

Verdict lambek_member(const LambekGrammar& g, std::string_view w, std::size_t budget) {
  return LambekRecognizer(g, budget).member(w);
}

// ---------------------------------------------------------------------------
// Export

nlohmann::json to_json(const ProofTree& p) {
  nlohmann::json j;
  j["sequent"] = to_string(p.sequent);
  j["rule"] = p.rule;
  j["premises"] = nlohmann::json::array();
  for (const auto& q : p.premises) j["premises"].push_back(to_json(q));
  return j;
}

nlohmann::json to_json(const MacllProof& p) {
  nlohmann::json j;
  j["sequent"] = to_string(p.sequent);
  j["rule"] = p.rule;
  j["premises"] = nlohmann::json::array();
  for (const auto& q : p.premises) j["premises"].push_back(to_json(q));
  return j;
}

namespace {

std::string latex_rule(const std::string& r) {
  static const std::map<std::string, std::string> names = {
      {"ax", "\\mathrm{ax}"},
      {"\\->", "\\mathop{\\backslash}\\to"},
      {"->\\", "\\to\\mathop{\\backslash}"},
      {"/->", "\\mathop{/}\\to"},
      {"->/", "\\to\\mathop{/}"},
      {".->", "\\cdot\\to"},
      {"->.", "\\to\\cdot"},
      {"&->1", "\\wedge\\to_1"},
      {"&->2", "\\wedge\\to_2"},
      {"->&", "\\to\\wedge"},
      {"+->", "\\vee\\to"},
      {"->+1", "\\to\\vee_1"},
      {"->+2", "\\to\\vee_2"},
      {"1", "1"},
      {"bot", "\\bot"},
      {"top", "\\top"},
      {"par", "\\parr"},
      {"tensor", "\\otimes"},
      {"with", "\\mathbin{\\&}"},
      {"plus1", "\\oplus_1"},
      {"plus2", "\\oplus_2"},
      {"cycle", "\\mathrm{cycle}"},
  };
  auto it = names.find(r);
  return "($" + (it == names.end() ? r : it->second) + "$)";
}

template <typename P>
std::string latex_tree(const P& p) {
  std::string out = "\\infer[" + latex_rule(p.rule) + "]{" + to_latex(p.sequent) + "}{";
  for (std::size_t i = 0; i < p.premises.size(); ++i) {
    if (i) out += " & ";
    out += latex_tree(p.premises[i]);
  }
  return out + "}";
}

template <typename P>
void text_tree(const P& p, std::size_t depth, std::string& out) {
  out += std::string(depth * 2, ' ') + to_string(p.sequent) + "   [" + p.rule + "]\n";
  for (const auto& q : p.premises) text_tree(q, depth + 1, out);
}

}  // namespace

std::string to_latex(const ProofTree& p) { return latex_tree(p); }
std::string to_latex(const MacllProof& p) { return latex_tree(p); }

std::string to_text(const ProofTree& p) {
  std::string out;
  text_tree(p, 0, out);
  return out;
}

std::string to_text(const MacllProof& p) {
  std::string out;
  text_tree(p, 0, out);
  return out;
}

}  // namespace conjcat
