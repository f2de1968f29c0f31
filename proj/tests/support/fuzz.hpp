#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "conjcat/category.hpp"
#include "conjcat/grammar.hpp"
#include "conjcat/macll.hpp"
#include "conjcat/sequent.hpp"

namespace fuzz {

// Seeded source of choices. Uses modular reduction instead of the standard
// distributions so that sequences match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(gen_() % n); }
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937_64 gen_;
};

struct Shape {
  std::vector<std::string> prims{"p", "q", "r"};
  bool product = true;
  bool additives = true;
};

conjcat::Category random_category(Rng& rng, std::size_t connectives, const Shape& shape);

// Antecedent of zero to three formulas (at least one when nonempty is set),
// with the connective total spread over all formulas.
conjcat::Sequent random_sequent(Rng& rng, std::size_t connectives, const Shape& shape, bool nonempty = false);

std::size_t connectives(const conjcat::Sequent& s);

// Sequents derivable in MALC* by construction: built forwards from identity
// axioms by rule applications. Retries until the result has at most
// max_connectives connectives.
conjcat::Sequent derivable_sequent(Rng& rng, std::size_t max_connectives, const Shape& shape);

// A derivable sequent Γ, a, Δ -> D in which `a` occurs as one antecedent
// formula at the returned index.
struct Tracked {
  conjcat::Sequent sequent;
  std::size_t index;
};
Tracked derivable_with(Rng& rng, const conjcat::Category& a, std::size_t max_connectives, const Shape& shape);

// Primitive or C\A / A/C over conjuncts of up to three primitives.
conjcat::Category random_bcat_conj(Rng& rng, std::size_t depth, const std::vector<std::string>& prims);

conjcat::MacllFormula random_macll(Rng& rng, std::size_t connectives, const std::vector<std::string>& atoms);

conjcat::ConjGrammar random_conj_grammar(Rng& rng);
conjcat::CCG random_ccg(Rng& rng);

}  // namespace fuzz
