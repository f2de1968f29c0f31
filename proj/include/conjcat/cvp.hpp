#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "conjcat/grammar.hpp"
#include "conjcat/transforms.hpp"

namespace conjcat {

// Sequential NOR circuit C_1..C_n. The first m gates are inputs; every later
// gate i computes not(C_{i-1} or C_j) for some 1 <= j < i.
struct Gate {
  enum class Kind { kInput, kNor };
  Kind kind;
  int arg;  // input bit, or the 1-based j of a NOR gate

  static Gate input(bool bit) { return {Kind::kInput, bit ? 1 : 0}; }
  static Gate nor(int j) { return {Kind::kNor, j}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct Circuit {
  std::vector<Gate> gates;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

// Throws GrammarError unless there is at least one input, inputs come first
// and every NOR argument points strictly backwards.
void validate(const Circuit& c);

bool eval_circuit(const Circuit& c);

// Gate strings from C_n down to C_1: "0", "1", or a^(i-j-1) b for NOR(j).
std::string encode_circuit(const Circuit& c);

// T derives encodings of circuits evaluating to 1, F those evaluating to 0.
ConjGrammar cvp_grammar();

// Every circuit with at most max_gates gates and max_inputs inputs, ordered
// by size, then input count, then input bits, then NOR arguments.
std::vector<Circuit> enumerate_circuits(std::size_t max_gates, std::size_t max_inputs);

// 0 and 1 both map to '?', a and b to themselves.
Homomorphism csp_homomorphism();

// Some instantiation of the '?' positions is the encoding of a true circuit.
bool csp_member(std::string_view pattern, std::size_t max_check = std::size_t{1} << 20);

// Literal syntax "in:0,1 nor:1 nor:2", gates left to right.
Circuit parse_circuit(std::string_view text);
std::string to_string(const Circuit& c);

}  // namespace conjcat
