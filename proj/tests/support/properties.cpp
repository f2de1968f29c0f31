#include "support/properties.hpp"

#include <set>

#include "conjcat/ccg.hpp"
#include "conjcat/conj_grammar.hpp"
#include "conjcat/prover.hpp"
#include "conjcat/transforms.hpp"
#include "support/checkers.hpp"
#include "support/fuzz.hpp"

namespace property {

using conjcat::Calculus;
using conjcat::Category;
using conjcat::Sequent;
using conjcat::Verdict;

void Tally::fail(std::string why) {
  ++failed;
  if (examples.size() < 5) examples.push_back(std::move(why));
}

nlohmann::json Tally::to_json() const {
  return {{"checked", checked}, {"failed", failed}, {"examples", examples}};
}

namespace {

// Sequents with an empty antecedent are fine in MALC*, so one prover per
// property run shares its memo across all queries.
bool derivable(conjcat::LambekProver& prover, const Sequent& s, Tally& t) {
  const auto r = prover.prove(s, false);
  if (r.verdict == Verdict::kBudgetExhausted) t.fail("budget exhausted on " + to_string(s));
  return r.verdict == Verdict::kProved;
}

}  // namespace

Tally macll_agreement(std::uint64_t seed, std::size_t count, std::size_t max_connectives) {
  fuzz::Rng rng(seed);
  fuzz::Shape shape;
  conjcat::LambekProver two(Calculus::kMALCStar);
  conjcat::MacllProver one;
  Tally t;
  for (std::size_t k = 0; k < count; ++k) {
    const Sequent s = k % 2 == 0 ? fuzz::random_sequent(rng, rng.below(max_connectives + 1), shape)
                                 : fuzz::derivable_sequent(rng, max_connectives, shape);
    const auto a = two.prove(s);
    const auto b = one.prove(conjcat::translate_sequent(s.antecedent, s.succedent));
    ++t.checked;
    if (a.verdict == Verdict::kBudgetExhausted || b.verdict == Verdict::kBudgetExhausted) {
      t.fail("budget exhausted on " + to_string(s));
      continue;
    }
    if (a.verdict != b.verdict) {
      t.fail(to_string(s) + ": two-sided " + to_string(a.verdict) + ", one-sided " + to_string(b.verdict));
      continue;
    }
    if (a.proof)
      if (auto e = checker::lambek_proof(*a.proof, Calculus::kMALCStar)) t.fail(to_string(s) + ": " + *e);
    if (b.proof)
      if (auto e = checker::macll_proof(*b.proof)) t.fail(to_string(s) + ": " + *e);
    if (k % 2 == 1 && a.verdict != Verdict::kProved) t.fail("constructed sequent refuted: " + to_string(s));
  }
  return t;
}

Tally and_invertibility(std::uint64_t seed, std::size_t count, std::size_t max_connectives) {
  fuzz::Rng rng(seed);
  fuzz::Shape shape;
  conjcat::LambekProver prover(Calculus::kMALCStar);
  Tally t;
  while (t.checked < count) {
    const Sequent s = fuzz::derivable_sequent(rng, max_connectives, shape);
    if (!s.succedent.is(Category::Kind::kAnd)) continue;
    ++t.checked;
    if (!derivable(prover, s, t)) {
      t.fail("constructed sequent refuted: " + to_string(s));
      continue;
    }
    for (const Category& part : {s.succedent.left(), s.succedent.right()}) {
      const Sequent p{s.antecedent, part};
      if (!derivable(prover, p, t)) t.fail(to_string(s) + " derivable but " + to_string(p) + " is not");
    }
  }
  return t;
}

Tally cut_admissibility(std::uint64_t seed, std::size_t count, std::size_t max_connectives) {
  fuzz::Rng rng(seed);
  fuzz::Shape shape;
  conjcat::LambekProver prover(Calculus::kMALCStar);
  Tally t;
  for (std::size_t k = 0; k < count; ++k) {
    const Sequent minor = fuzz::derivable_sequent(rng, max_connectives, shape);
    const fuzz::Tracked major = fuzz::derivable_with(rng, minor.succedent, max_connectives, shape);
    const auto& g = major.sequent.antecedent;
    Sequent cut{{}, major.sequent.succedent};
    cut.antecedent.insert(cut.antecedent.end(), g.begin(), g.begin() + static_cast<std::ptrdiff_t>(major.index));
    cut.antecedent.insert(cut.antecedent.end(), minor.antecedent.begin(), minor.antecedent.end());
    cut.antecedent.insert(cut.antecedent.end(), g.begin() + static_cast<std::ptrdiff_t>(major.index) + 1, g.end());
    ++t.checked;
    if (!derivable(prover, minor, t) || !derivable(prover, major.sequent, t)) {
      t.fail("constructed premise refuted: " + to_string(minor) + " / " + to_string(major.sequent));
      continue;
    }
    if (!derivable(prover, cut, t))
      t.fail("cut of " + to_string(minor) + " into " + to_string(major.sequent) + " refuted: " + to_string(cut));
  }
  return t;
}

Tally substitution_monotonicity(std::uint64_t seed, std::size_t count, std::size_t max_connectives) {
  fuzz::Rng rng(seed);
  fuzz::Shape shape;
  shape.prims = {"s", "p", "q"};
  const Category d = conjcat::empty_string_formula("dq", "dr", "dt");
  conjcat::LambekProver prover(Calculus::kMALCStar);
  Tally t;
  while (t.checked < count) {
    Sequent s = fuzz::derivable_sequent(rng, max_connectives, shape);
    bool has_s = conjcat::occurs(s.succedent, "s");
    for (const auto& a : s.antecedent) has_s = has_s || conjcat::occurs(a, "s");
    if (!has_s) continue;
    ++t.checked;
    Sequent image{{}, conjcat::substitute_primitive(s.succedent, "s", d)};
    for (const auto& a : s.antecedent) image.antecedent.push_back(conjcat::substitute_primitive(a, "s", d));
    if (!derivable(prover, s, t)) t.fail("constructed sequent refuted: " + to_string(s));
    else if (!derivable(prover, image, t)) t.fail(to_string(s) + " derivable, image refuted");
  }
  return t;
}

Tally fresh_letter_substitution(const conjcat::CCG& g, char fresh, std::size_t max_u, std::size_t max_v) {
  Tally t;
  const conjcat::CcgRecognizer base(g);
  for (const std::string& u : conjcat::all_strings(g.alphabet, max_u)) {
    if (u.empty()) continue;
    for (const Category& a : base.derivable(u)) {
      if (!conjcat::is_bcat_conj(a)) continue;
      const conjcat::CcgRecognizer extended(conjcat::ccg_extend(g, fresh, a));
      for (const std::string& v : conjcat::all_strings(g.alphabet, max_v))
        for (std::size_t cut = 0; cut <= v.size(); ++cut) {
          const std::string with_b = v.substr(0, cut) + fresh + v.substr(cut);
          const std::string with_u = v.substr(0, cut) + u + v.substr(cut);
          const std::set<Category> after = base.derivable(with_u);
          for (const Category& b : extended.derivable(with_b)) {
            if (!conjcat::is_bcat_conj(b)) continue;
            ++t.checked;
            if (!after.count(b))
              t.fail(to_string(b) + "(" + with_b + ") with " + to_string(a) + "(" + u + ") but not " + to_string(b) +
                     "(" + with_u + ")");
          }
        }
    }
  }
  return t;
}

}  // namespace property
