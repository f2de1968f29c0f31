#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "conjcat/category.hpp"

namespace conjcat {

// Two-sided intuitionistic sequent A1, ..., An -> B; n may be zero.
struct Sequent {
  std::vector<Category> antecedent;
  Category succedent;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

// "A1, A2 -> B" or "-> B".
Sequent parse_sequent(std::string_view text);
std::string to_string(const Sequent& s);
std::string to_latex(const Sequent& s);

enum class Calculus { kL, kLStar, kMALC, kMALCStar, kMACLL };

// "L", "L*", "MALC", "MALC*", "MACLL".
Calculus parse_calculus(std::string_view name);
std::string to_string(Calculus c);
// L and MALC forbid empty antecedents in the right division rules.
bool has_lambek_restriction(Calculus c);
bool allows_additives(Calculus c);

}  // namespace conjcat
