#include <doctest.h>

#include "conjcat/conj_grammar.hpp"
#include "conjcat/cvp.hpp"
#include "conjcat/error.hpp"
#include "support/data.hpp"

using namespace conjcat;

namespace {

Circuit circuit(std::initializer_list<Gate> gates) { return Circuit{gates}; }

// Every 0/1 filling of the '?' positions, tried one by one.
bool brute_force(const std::string& pattern) {
  std::vector<std::size_t> holes;
  for (std::size_t i = 0; i < pattern.size(); ++i)
    if (pattern[i] == '?') holes.push_back(i);
  const ConjGrammar g = cvp_grammar();
  for (std::size_t mask = 0; mask < (std::size_t{1} << holes.size()); ++mask) {
    std::string u = pattern;
    for (std::size_t k = 0; k < holes.size(); ++k) u[holes[k]] = (mask >> k) & 1 ? '1' : '0';
    if (cg_member(g, u)) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("cvp") {

TEST_CASE("evaluation") {
  CHECK(eval_circuit(circuit({Gate::input(true)})));
  CHECK_FALSE(eval_circuit(circuit({Gate::input(true), Gate::nor(1)})));
  CHECK_FALSE(eval_circuit(circuit({Gate::input(false), Gate::nor(1), Gate::nor(1)})));
  CHECK(eval_circuit(circuit({Gate::input(false), Gate::nor(1)})));
}

TEST_CASE("encoding") {
  CHECK(encode_circuit(circuit({Gate::input(false)})) == "0");
  CHECK(encode_circuit(circuit({Gate::input(true), Gate::nor(1)})) == "b1");
  CHECK(encode_circuit(circuit({Gate::input(false), Gate::nor(1), Gate::nor(1)})) == "abb0");
  CHECK(encode_circuit(circuit({Gate::input(false), Gate::input(true), Gate::nor(1), Gate::nor(2)})) == "abab10");
}

TEST_CASE("malformed circuits") {
  CHECK_THROWS_AS(validate(circuit({})), GrammarError);
  CHECK_THROWS_AS(validate(circuit({Gate::nor(1)})), GrammarError);
  CHECK_THROWS_AS(validate(circuit({Gate::input(true), Gate::nor(2)})), GrammarError);
  CHECK_THROWS_AS(validate(circuit({Gate::input(true), Gate::nor(1), Gate::input(false)})), GrammarError);
}

TEST_CASE("the fixed grammar") {
  ConjGrammar g = cvp_grammar();
  CHECK(cg_member(g, "1"));
  CHECK(cg_member(g, "b0"));
  CHECK_FALSE(cg_member(g, "b1"));
  CHECK(cg_member(g, "b1", "F"));
  CHECK(g == data::load<ConjGrammar>("cvp.cg"));
}

TEST_CASE("enumeration sizes") {
  auto one = enumerate_circuits(1, 1);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == circuit({Gate::input(false)}));
  CHECK(one[1] == circuit({Gate::input(true)}));
  auto two = enumerate_circuits(2, 1);
  CHECK(two.size() == 4);
  CHECK(two[2] == circuit({Gate::input(false), Gate::nor(1)}));
  CHECK(enumerate_circuits(3, 1).size() == 8);
  for (const Circuit& c : enumerate_circuits(5, 3)) CHECK_NOTHROW(validate(c));
}

TEST_CASE("grammar and evaluator agree on small circuits") {
  ConjGrammar g = cvp_grammar();
  for (const Circuit& c : enumerate_circuits(4, 2)) {
    const std::string w = encode_circuit(c);
    INFO(to_string(c) << " = " << w);
    const bool value = eval_circuit(c);
    CHECK(cg_member(g, w, "T") == value);
    CHECK(cg_member(g, w, "F") == !value);
  }
}

TEST_CASE("C derives the skip prefixes") {
  ConjGrammar g = cvp_grammar();
  const std::vector<std::string> items{"b", "ab", "0", "1"};
  for (std::size_t m = 0; m <= 3; ++m) {
    std::vector<std::size_t> idx(m, 0);
    for (;;) {
      std::string tail;
      for (std::size_t k : idx) tail += items[k];
      const std::string w = std::string(m, 'a') + "b" + tail;
      INFO(w);
      CHECK(cg_member(g, w, "C"));
      CHECK_FALSE(cg_member(g, "a" + w, "C"));
      if (m > 0) CHECK_FALSE(cg_member(g, w.substr(1), "C"));
      std::size_t k = 0;
      while (k < m && ++idx[k] == items.size()) idx[k++] = 0;
      if (k == m) break;
    }
  }
}

TEST_CASE("satisfiability patterns") {
  CHECK(csp_member("?"));
  CHECK(csp_member("b?"));
  CHECK_FALSE(csp_member("a"));
  CHECK_FALSE(csp_member(""));
  CHECK_THROWS_AS(csp_member("b0"), GrammarError);
  CHECK_THROWS_AS(csp_member("??????", 16), BudgetExceeded);
  for (const std::string& p : all_strings({'a', 'b', '?'}, 5)) {
    INFO(p);
    CHECK(csp_member(p) == brute_force(p));
  }
}

TEST_CASE("circuit literals") {
  Circuit c = parse_circuit("in:0,1 nor:1 nor:2");
  CHECK(c == circuit({Gate::input(false), Gate::input(true), Gate::nor(1), Gate::nor(2)}));
  CHECK(to_string(c) == "in:0,1 nor:1 nor:2");
  CHECK(parse_circuit(to_string(c)) == c);
  CHECK_THROWS_AS(parse_circuit("nor:1"), GrammarError);
  CHECK_THROWS_AS(parse_circuit("in:2"), SyntaxError);
  CHECK_THROWS_AS(parse_circuit("in:0, nor:1"), SyntaxError);
  CHECK_THROWS_AS(parse_circuit("in:1 xor:1"), SyntaxError);
  for (const Circuit& k : enumerate_circuits(4, 2)) CHECK(parse_circuit(to_string(k)) == k);
}

}  // TEST_SUITE
