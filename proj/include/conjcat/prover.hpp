#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "conjcat/grammar.hpp"
#include "conjcat/macll.hpp"
#include "conjcat/sequent.hpp"

namespace conjcat {

inline constexpr std::size_t kDefaultBudget = 10'000'000;

enum class Verdict { kProved, kRefuted, kBudgetExhausted };
std::string to_string(Verdict v);

// Rule labels, two-sided: "ax", "\->", "->\", "/->", "->/", ".->", "->.",
//   "&->1", "&->2", "->&", "+->", "->+1", "->+2".
// One-sided: "ax", "1", "bot", "top", "par", "tensor", "with", "plus1",
//   "plus2", "cycle".
struct ProofTree {
  std::string rule;
  Sequent sequent;
  std::vector<ProofTree> premises;
};

struct MacllProof {
  std::string rule;
  MacllSequent sequent;
  std::vector<MacllProof> premises;
};

struct ProveResult {
  Verdict verdict = Verdict::kRefuted;
  std::optional<ProofTree> proof;
  std::size_t expansions = 0;
};

struct MacllResult {
  Verdict verdict = Verdict::kRefuted;
  std::optional<MacllProof> proof;
  std::size_t expansions = 0;
};

// Backward cut-free proof search for L, L*, MALC and MALC*.
//
// Invertible rules are applied as soon as they match, everything else is
// tried exhaustively over all rule instances. Results are memoized per
// sequent; the memo survives across queries on the same prover, which is
// sound because an entry is only stored once its sub-search finished.
// `budget` caps the number of fresh sequents expanded by a single query.
class LambekProver {
 public:
  explicit LambekProver(Calculus calculus, std::size_t budget = kDefaultBudget);
  ~LambekProver();
  LambekProver(LambekProver&&) noexcept;
  LambekProver& operator=(LambekProver&&) noexcept;

  Calculus calculus() const;

  // Throws GrammarError when the sequent is outside the calculus' language.
  ProveResult prove(const Sequent& s, bool want_proof = true);
  // Throws BudgetExceeded instead of reporting it.
  bool derivable(const Sequent& s);

  std::size_t memo_size() const;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

// Cut-free search for MACLL sequents taken up to cyclic rotation.
class MacllProver {
 public:
  explicit MacllProver(std::size_t budget = kDefaultBudget);
  ~MacllProver();
  MacllProver(MacllProver&&) noexcept;
  MacllProver& operator=(MacllProver&&) noexcept;

  MacllResult prove(const MacllSequent& s, bool want_proof = true);
  bool derivable(const MacllSequent& s);

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

ProveResult prove(Calculus c, const Sequent& s, std::size_t budget = kDefaultBudget);
MacllResult prove_macll(const MacllSequent& s, std::size_t budget = kDefaultBudget);

// a -> b and b -> a both derivable. Throws BudgetExceeded.
bool categories_equivalent(Calculus c, const Category& a, const Category& b, std::size_t budget = kDefaultBudget);

// Membership by proof search over every lexicon choice. The empty string is
// a member iff the calculus drops Lambek's restriction and "-> target" holds.
class LambekRecognizer {
 public:
  explicit LambekRecognizer(const LambekGrammar& g, std::size_t budget = kDefaultBudget);

  Verdict member(std::string_view w);
  // The lexicon choice and proof behind a positive answer.
  std::optional<ProofTree> derive(std::string_view w);

  const LambekGrammar& grammar() const { return grammar_; }

 private:
  LambekGrammar grammar_;
  LambekProver prover_;
};

Verdict lambek_member(const LambekGrammar& g, std::string_view w, std::size_t budget = kDefaultBudget);

nlohmann::json to_json(const ProofTree& p);
nlohmann::json to_json(const MacllProof& p);
std::string to_latex(const ProofTree& p);
std::string to_latex(const MacllProof& p);
std::string to_text(const ProofTree& p);
std::string to_text(const MacllProof& p);

}  // namespace conjcat
