#include "conjcat/transforms.hpp"

#include "conjcat/ccg.hpp"
#include "conjcat/conj_grammar.hpp"
#include "conjcat/error.hpp"
#include "conjcat/names.hpp"

namespace conjcat {

// ---------------------------------------------------------------------------
// Categorial grammar to conjunctive grammar

CcgToCgResult ccg_to_cg_named(const CCG& g) {
  validate(g);
  std::set<Category> universe = ccg_universe(g);
  // Primitives of compound conjuncts need nonterminals too.
  for (const auto& c : std::set<Category>(universe))
    if (c.kind() == Category::Kind::kAnd)
      for (const auto& p : conjunct_primitives(c)) universe.insert(p);

  FreshNames fresh;
  for (const auto& c : universe)
    if (c.is_prim()) fresh.reserve(c.name());

  CcgToCgResult out;
  for (const auto& c : universe) out.names.emplace(c, c.is_prim() ? c.name() : fresh.next());

  ConjGrammar& cg = out.grammar;
  cg.terminals = g.alphabet;
  for (const auto& [c, n] : out.names) cg.nonterminals.insert(n);
  cg.start = out.names.at(Category::prim(g.target));

  auto nt = [&](const Category& c) { return GrammarSymbol::nonterminal(out.names.at(c)); };
  for (const auto& c : universe) {
    switch (c.kind()) {
      case Category::Kind::kAnd: {
        ConjRule r{out.names.at(c), {}};
        for (const auto& p : conjunct_primitives(c)) r.conjuncts.push_back({nt(p)});
        cg.rules.push_back(std::move(r));
        break;
      }
      case Category::Kind::kLDiv:
        cg.rules.push_back({out.names.at(c.numerator()), {{nt(c.denominator()), nt(c)}}});
        break;
      case Category::Kind::kRDiv:
        cg.rules.push_back({out.names.at(c.numerator()), {{nt(c), nt(c.denominator())}}});
        break;
      default: break;
    }
  }
  for (const auto& a : g.axioms)
    cg.rules.push_back({out.names.at(a.category), {{GrammarSymbol::terminal(a.letter)}}});
  validate(cg);
  return out;
}

ConjGrammar ccg_to_cg(const CCG& g) { return ccg_to_cg_named(g).grammar; }

// ---------------------------------------------------------------------------
// Quotient bundle to categorial grammar

namespace {

// The joined grammar in split form. Untilded nonterminals only have rules
// A -> X1 & ... & Xk over tilde nonterminals; every tilde nonterminal has
// exactly one rule, of shape B a C, a A or a.
struct SplitGrammar {
  struct Tilde {
    char letter;
    std::string left;   // B in B a C, empty otherwise
    std::string right;  // C in B a C or A in a A, empty otherwise
  };
  std::string start;
  std::set<char> alphabet;
  std::map<std::string, Tilde> tildes;
  std::vector<std::string> tilde_order;
  std::set<std::string> plain;
  std::map<std::string, std::vector<std::vector<std::string>>> plain_rules;
};

class UniqueNames {
 public:
  explicit UniqueNames(std::set<std::string> taken) : taken_(std::move(taken)) {}
  std::string make(const std::string& base) {
    if (taken_.insert(base).second) return base;
    for (std::size_t k = 1;; ++k) {
      std::string c = base + "_" + std::to_string(k);
      if (taken_.insert(c).second) return c;
    }
  }

 private:
  std::set<std::string> taken_;
};

SplitGrammar split_bundle(const QuotientBundle& b) {
  validate(b);
  std::set<std::string> taken;
  for (const auto& [letter, g] : b.quotients) {
    OddFormReport report = check_odd_normal_form(g);
    if (!report.ok())
      throw GrammarError(std::string("quotient grammar for '") + letter +
                         "' is not in odd normal form: " + report.violations.front().message);
    for (char t : g.terminals)
      if (!b.alphabet.count(t))
        throw GrammarError(std::string("quotient grammar for '") + letter + "' uses letter '" + t +
                           "' outside the alphabet");
    taken.insert(g.nonterminals.begin(), g.nonterminals.end());
  }

  SplitGrammar s;
  s.alphabet = b.alphabet;
  s.plain = taken;
  UniqueNames names(taken);
  std::size_t nx = 0, ny = 0, nz = 0;
  auto add_tilde = [&](const std::string& base, SplitGrammar::Tilde t) {
    std::string n = names.make(base);
    s.tildes.emplace(n, std::move(t));
    s.tilde_order.push_back(n);
    return n;
  };
  s.start = names.make("S");

  for (const auto& [letter, g] : b.quotients) {
    for (const auto& r : g.rules) {
      const Body& b0 = r.conjuncts.front();
      std::vector<std::string> xs;
      if (r.conjuncts.size() == 1 && b0.size() == 1) {
        xs.push_back(add_tilde("Z" + std::to_string(++nz), {b0[0].letter(), "", ""}));
      } else if (r.conjuncts.size() == 1 && b0.size() == 2) {
        xs.push_back(add_tilde("Y" + std::to_string(++ny), {b0[0].letter(), "", b0[1].name}));
      } else {
        for (const auto& body : r.conjuncts)
          xs.push_back(add_tilde("X" + std::to_string(++nx), {body[1].letter(), body[0].name, body[2].name}));
      }
      s.plain_rules[r.head].push_back(std::move(xs));
    }
  }
  s.tilde_order.insert(s.tilde_order.begin(), s.start);
  return s;
}

}  // namespace

ConjGrammar join_bundle(const QuotientBundle& b) {
  SplitGrammar s = split_bundle(b);
  ConjGrammar g;
  g.terminals = b.alphabet;
  g.nonterminals = s.plain;
  g.start = s.start;
  g.nonterminals.insert(s.tilde_order.begin(), s.tilde_order.end());
  for (char a : b.alphabet) {
    auto it = b.quotients.find(a);
    if (it != b.quotients.end())
      g.rules.push_back({s.start, {{GrammarSymbol::terminal(a), GrammarSymbol::nonterminal(it->second.start)}}});
    if (b.epsilon_letters.count(a)) g.rules.push_back({s.start, {{GrammarSymbol::terminal(a)}}});
  }
  for (const auto& [head, alts] : s.plain_rules)
    for (const auto& xs : alts) {
      ConjRule r{head, {}};
      for (const auto& x : xs) r.conjuncts.push_back({GrammarSymbol::nonterminal(x)});
      g.rules.push_back(std::move(r));
    }
  for (const auto& n : s.tilde_order) {
    if (n == s.start) continue;
    const auto& t = s.tildes.at(n);
    Body body;
    if (!t.left.empty()) body.push_back(GrammarSymbol::nonterminal(t.left));
    body.push_back(GrammarSymbol::terminal(t.letter));
    if (!t.right.empty()) body.push_back(GrammarSymbol::nonterminal(t.right));
    g.rules.push_back({n, {body}});
  }
  validate(g);
  return g;
}

CCG bundle_to_ccg(const QuotientBundle& b) {
  SplitGrammar s = split_bundle(b);
  // Tilde names are unique, so the prefixed ones are as well.
  std::map<std::string, std::string> prim;
  for (const auto& n : s.tilde_order) prim[n] = "p_" + n;
  auto conj_of = [&](const std::vector<std::string>& xs) {
    std::vector<Category> items;
    for (const auto& x : xs) items.push_back(Category::prim(prim.at(x)));
    return make_conjunction(items);
  };
  auto alts = [&](const std::string& a) -> const std::vector<std::vector<std::string>>& {
    static const std::vector<std::vector<std::string>> none;
    auto it = s.plain_rules.find(a);
    return it == s.plain_rules.end() ? none : it->second;
  };

  std::vector<Axiom> axioms;
  Category target = Category::prim(prim.at(s.start));
  // Rules of the new start symbol: S~ -> a S_i and S~ -> a.
  for (char a : b.alphabet) {
    if (b.epsilon_letters.count(a)) axioms.push_back({target, a});
    auto it = b.quotients.find(a);
    if (it != b.quotients.end())
      for (const auto& xs : alts(it->second.start)) axioms.push_back({Category::rdiv(target, conj_of(xs)), a});
  }
  for (const auto& n : s.tilde_order) {
    if (n == s.start) continue;
    const auto& t = s.tildes.at(n);
    Category p = Category::prim(prim.at(n));
    if (t.left.empty() && t.right.empty()) {
      axioms.push_back({p, t.letter});
    } else if (t.left.empty()) {
      for (const auto& xs : alts(t.right)) axioms.push_back({Category::rdiv(p, conj_of(xs)), t.letter});
    } else {
      for (const auto& ys : alts(t.left))
        for (const auto& zs : alts(t.right))
          axioms.push_back({Category::rdiv(Category::ldiv(conj_of(ys), p), conj_of(zs)), t.letter});
    }
  }
  return make_ccg(b.alphabet, prim.at(s.start), axioms);
}

std::vector<std::string> verify_bundle(const QuotientBundle& b,
                                       const std::function<bool(std::string_view)>& reference,
                                       std::size_t max_len) {
  validate(b);
  std::vector<std::string> out;
  if (max_len == 0) return out;
  auto rest = all_strings(b.alphabet, max_len - 1);
  for (char a : b.alphabet) {
    auto it = b.quotients.find(a);
    for (const auto& v : rest) {
      std::string w = std::string(1, a) + v;
      bool want = reference(w);
      bool got = v.empty() ? b.epsilon_letters.count(a) != 0 : (it != b.quotients.end() && cg_member(it->second, v));
      if (want != got)
        out.push_back("quotient of '" + std::string(1, a) + "' disagrees on \"" + w + "\": reference says " +
                      (want ? "member" : "non-member"));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lambek grammars

LambekGrammar ccg_to_malc(const CCG& g) {
  validate(g);
  std::map<char, std::vector<Category>> by_letter;
  for (const auto& a : g.axioms) by_letter[a.letter].push_back(a.category);
  LambekGrammar out{g.alphabet, {}, Category::prim(g.target), Calculus::kMALC};
  for (const auto& [c, cats] : by_letter) out.lexicon[c] = {make_conjunction(cats)};
  return out;
}

Category empty_string_premise(const std::string& q, const std::string& r, const std::string& t) {
  Category rr = Category::ldiv(Category::prim(r), Category::prim(r));
  Category tt = Category::ldiv(Category::prim(t), Category::prim(t));
  return Category::ldiv(rr, Category::ldiv(tt, Category::prim(q)));
}

Category empty_string_formula(const std::string& q, const std::string& r, const std::string& t) {
  return Category::ldiv(empty_string_premise(q, r, t), Category::prim(q));
}

namespace {

std::set<std::string> grammar_primitives(const LambekGrammar& g) {
  std::set<std::string> out;
  collect_primitives(g.target, out);
  for (const auto& [c, cats] : g.lexicon)
    for (const auto& cat : cats) collect_primitives(cat, out);
  return out;
}

bool target_in_denominator(const Category& c, const std::string& s) {
  if (c.is_prim()) return false;
  if (c.kind() == Category::Kind::kLDiv || c.kind() == Category::Kind::kRDiv)
    return occurs(c.denominator(), s) || target_in_denominator(c.numerator(), s);
  return target_in_denominator(c.left(), s) || target_in_denominator(c.right(), s);
}

// Picks the preferred names when they are free, fresh ones otherwise.
std::vector<std::string> pick_names(const std::set<std::string>& used, const std::vector<std::string>& wanted) {
  FreshNames fresh(used);
  std::vector<std::string> out;
  for (const auto& w : wanted) {
    if (!fresh.is_taken(w)) {
      fresh.reserve(w);
      out.push_back(w);
    } else {
      out.push_back(fresh.next());
    }
  }
  return out;
}

}  // namespace

LambekGrammar add_empty_string(const LambekGrammar& g) {
  validate(g);
  if (!g.target.is_prim()) throw GrammarError("target " + to_string(g.target) + " is not primitive");
  const std::string& s = g.target.name();
  for (const auto& [c, cats] : g.lexicon)
    for (const auto& cat : cats) {
      for (const auto& item : conjunction_items(cat))
        if (!is_bcat_conj(item))
          throw GrammarError(std::string("lexicon entry for '") + c + "' is not a conjunction of basic categories: " +
                             to_string(cat));
      if (target_in_denominator(cat, s))
        throw GrammarError(std::string("lexicon entry for '") + c + "' has the target " + s +
                           " under a denominator: " + to_string(cat));
    }
  auto qrt = pick_names(grammar_primitives(g), {"q", "r", "t"});
  Category d = empty_string_formula(qrt[0], qrt[1], qrt[2]);

  LambekGrammar out{g.alphabet, {}, d, Calculus::kMALCStar};
  for (const auto& [c, cats] : g.lexicon)
    for (const auto& cat : cats) out.lexicon[c].push_back(substitute_primitive(cat, s, d));
  return out;
}

Category relative_double_negation(const Category& a, const std::string& f) {
  if (occurs(a, f)) throw GrammarError("primitive " + f + " occurs in " + to_string(a));
  Category fp = Category::prim(f);
  return Category::ldiv(Category::ldiv(a, fp), fp);
}

namespace {

// Double-negated conjunct: p^ff for a primitive, ((p1\f)+...+(pk\f))\f
// otherwise.
Category negate_conjunct(const Category& c, const std::string& f) {
  Category fp = Category::prim(f);
  if (c.is_prim()) return relative_double_negation(c, f);
  std::vector<Category> items;
  for (const auto& p : conjunct_primitives(c)) items.push_back(Category::ldiv(p, fp));
  return Category::ldiv(make_disjunction(items), fp);
}

Category negate_basic(const Category& c, const std::string& f) {
  switch (c.kind()) {
    case Category::Kind::kPrim: return relative_double_negation(c, f);
    case Category::Kind::kLDiv: return Category::ldiv(negate_conjunct(c.denominator(), f), negate_basic(c.numerator(), f));
    case Category::Kind::kRDiv: return Category::rdiv(negate_basic(c.numerator(), f), negate_conjunct(c.denominator(), f));
    default: throw GrammarError("category " + to_string(c) + " is not a basic category");
  }
}

bool has_and(const Category& c) {
  if (c.is_prim()) return false;
  return c.kind() == Category::Kind::kAnd || has_and(c.left()) || has_and(c.right());
}

}  // namespace

LambekGrammar to_disjunction_grammar(const CCG& g, bool include_empty) {
  validate(g);
  std::set<std::string> used;
  used.insert(g.target);
  for (const auto& a : g.axioms) collect_primitives(a.category, used);
  auto names = pick_names(used, {"f", "q", "r", "t"});
  const std::string& f = names[0];
  Category fp = Category::prim(f);

  std::map<char, std::vector<Category>> by_letter;
  for (const auto& a : g.axioms) by_letter[a.letter].push_back(negate_basic(a.category, f));

  // The target negates twice over the same f, so no freshness check here.
  auto ff = [&](const Category& a) { return Category::ldiv(Category::ldiv(a, fp), fp); };
  LambekGrammar out{g.alphabet, {}, ff(ff(Category::prim(g.target))),
                    include_empty ? Calculus::kMALCStar : Calculus::kMALC};
  for (const auto& [c, cats] : by_letter) {
    std::vector<Category> items;
    for (const auto& a : cats) items.push_back(Category::ldiv(a, fp));
    out.lexicon[c] = {Category::ldiv(make_disjunction(items), fp)};
  }
  if (include_empty) {
    Category d = empty_string_formula(names[1], names[2], names[3]);
    out.target = substitute_primitive(out.target, g.target, d);
    for (auto& [c, cats] : out.lexicon)
      for (auto& cat : cats) cat = substitute_primitive(cat, g.target, d);
  }
  for (const auto& [c, cats] : out.lexicon)
    for (const auto& cat : cats)
      if (has_and(cat)) throw std::logic_error("conjunction left in " + to_string(cat));
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphic images

std::string Homomorphism::apply(std::string_view u) const {
  std::string out;
  for (char c : u) {
    auto it = map.find(c);
    if (it == map.end()) throw GrammarError(std::string("symbol '") + c + "' is outside the homomorphism's domain");
    out += it->second;
  }
  return out;
}

std::vector<char> Homomorphism::preimage(char c) const {
  std::vector<char> out;
  for (const auto& [from, to] : map)
    if (to == c) out.push_back(from);
  return out;
}

bool image_member(const std::function<bool(std::string_view)>& oracle, const Homomorphism& h, std::string_view w,
                  std::size_t max_check) {
  std::vector<std::vector<char>> choices;
  std::size_t total = 1;
  for (char c : w) {
    choices.push_back(h.preimage(c));
    if (choices.back().empty()) return false;
    if (total > max_check / choices.back().size())
      throw BudgetExceeded("preimage of \"" + std::string(w) + "\" exceeds " + std::to_string(max_check) + " strings");
    total *= choices.back().size();
  }
  // Odometer over the preimage product in lexicographic order.
  std::vector<std::size_t> idx(w.size(), 0);
  std::string u(w.size(), '\0');
  for (;;) {
    for (std::size_t i = 0; i < w.size(); ++i) u[i] = choices[i][idx[i]];
    if (oracle(u)) return true;
    std::size_t i = w.size();
    while (i > 0 && ++idx[i - 1] == choices[i - 1].size()) idx[--i] = 0;
    if (i == 0) return false;
  }
}

}  // namespace conjcat
