#include "conjcat/cvp.hpp"

#include <algorithm>
#include <sstream>

#include "conjcat/conj_grammar.hpp"
#include "conjcat/error.hpp"

namespace conjcat {

void validate(const Circuit& c) {
  if (c.gates.empty() || c.gates[0].kind != Gate::Kind::kInput) throw GrammarError("a circuit starts with an input gate");
  bool inputs = true;
  for (std::size_t k = 0; k < c.gates.size(); ++k) {
    const Gate& g = c.gates[k];
    const int i = static_cast<int>(k) + 1;
    if (g.kind == Gate::Kind::kInput) {
      if (!inputs) throw GrammarError("input gate " + std::to_string(i) + " follows a NOR gate");
      if (g.arg != 0 && g.arg != 1) throw GrammarError("input gate " + std::to_string(i) + " is not a bit");
    } else {
      inputs = false;
      if (g.arg < 1 || g.arg >= i)
        throw GrammarError("NOR gate " + std::to_string(i) + " refers to gate " + std::to_string(g.arg));
    }
  }
}

bool eval_circuit(const Circuit& c) {
  validate(c);
  std::vector<bool> v;
  for (const Gate& g : c.gates) {
    if (g.kind == Gate::Kind::kInput) v.push_back(g.arg == 1);
    else v.push_back(!(v.back() || v[g.arg - 1]));
  }
  return v.back();
}

std::string encode_circuit(const Circuit& c) {
  validate(c);
  std::string out;
  for (std::size_t k = c.gates.size(); k-- > 0;) {
    const Gate& g = c.gates[k];
    if (g.kind == Gate::Kind::kInput) {
      out += g.arg ? '1' : '0';
    } else {
      // Skip the i-j-1 gates strictly between C_j and C_{i-1}.
      const int i = static_cast<int>(k) + 1;
      out += std::string(i - g.arg - 1, 'a') + 'b';
    }
  }
  return out;
}

ConjGrammar cvp_grammar() {
  auto t = [](char c) { return GrammarSymbol::terminal(c); };
  auto n = [](const char* s) { return GrammarSymbol::nonterminal(s); };
  ConjGrammar g;
  g.terminals = {'0', '1', 'a', 'b'};
  g.nonterminals = {"T", "F", "A", "C"};
  g.start = "T";
  g.rules = {
      {"T", {{n("A"), t('b'), n("F")}, {n("C"), n("F")}}},
      {"T", {{t('1'), n("T")}}},
      {"T", {{t('1'), n("F")}}},
      {"T", {{t('1')}}},
      {"F", {{n("A"), t('b'), n("T")}}},
      {"F", {{n("C"), n("T")}}},
      {"F", {{t('0'), n("T")}}},
      {"F", {{t('0'), n("F")}}},
      {"F", {{t('0')}}},
      {"A", {{t('a'), n("A")}}},
      {"A", {{}}},
      {"C", {{t('a'), n("C"), n("A"), t('b')}}},
      {"C", {{t('a'), n("C"), t('0')}}},
      {"C", {{t('a'), n("C"), t('1')}}},
      {"C", {{t('b')}}},
  };
  return g;
}

namespace {

void extend(Circuit& c, std::vector<Circuit>& out, std::size_t target) {
  if (c.gates.size() == target) {
    out.push_back(c);
    return;
  }
  const int i = static_cast<int>(c.gates.size()) + 1;
  for (int j = 1; j < i; ++j) {
    c.gates.push_back(Gate::nor(j));
    extend(c, out, target);
    c.gates.pop_back();
  }
}

}  // namespace

std::vector<Circuit> enumerate_circuits(std::size_t max_gates, std::size_t max_inputs) {
  std::vector<Circuit> out;
  for (std::size_t n = 1; n <= max_gates; ++n)
    for (std::size_t m = 1; m <= std::min(n, max_inputs); ++m)
      for (std::size_t bits = 0; bits < (std::size_t{1} << m); ++bits) {
        Circuit c;
        // Most significant bit first, so patterns come out in lexicographic order.
        for (std::size_t k = 0; k < m; ++k) c.gates.push_back(Gate::input((bits >> (m - 1 - k)) & 1));
        extend(c, out, n);
      }
  return out;
}

Homomorphism csp_homomorphism() { return Homomorphism{{{'0', '?'}, {'1', '?'}, {'a', 'a'}, {'b', 'b'}}}; }

bool csp_member(std::string_view pattern, std::size_t max_check) {
  for (char c : pattern)
    if (c != 'a' && c != 'b' && c != '?') throw GrammarError(std::string("pattern symbol '") + c + "' is not a, b or ?");
  const ConjGrammar g = cvp_grammar();
  auto oracle = [&](std::string_view u) { return cg_member(g, u); };
  return image_member(oracle, csp_homomorphism(), pattern, max_check);
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  Circuit c;
  std::size_t pos = 0;
  while (in >> tok) {
    pos = text.find(tok, pos);
    auto bad = [&](const std::string& why) { return SyntaxError(why + " in gate token '" + tok + "'", pos); };
    auto parse_int = [&](const std::string& s) {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw bad("expected a number");
      if (s.size() > 9) throw bad("number too large");
      return std::stoi(s);
    };
    if (tok.rfind("in:", 0) == 0) {
      std::string rest = tok.substr(3);
      std::stringstream bits(rest);
      std::string b;
      if (rest.empty()) throw bad("missing input bits");
      while (std::getline(bits, b, ',')) {
        if (b != "0" && b != "1") throw bad("input bits are 0 or 1");
        c.gates.push_back(Gate::input(b == "1"));
      }
      if (rest.back() == ',') throw bad("trailing comma");
    } else if (tok.rfind("nor:", 0) == 0) {
      c.gates.push_back(Gate::nor(parse_int(tok.substr(4))));
    } else {
      throw bad("expected in:<bits> or nor:<gate>");
    }
    pos += tok.size();
  }
  validate(c);
  return c;
}

std::string to_string(const Circuit& c) {
  std::string out;
  std::size_t k = 0;
  if (k < c.gates.size() && c.gates[k].kind == Gate::Kind::kInput) {
    out = "in:";
    for (; k < c.gates.size() && c.gates[k].kind == Gate::Kind::kInput; ++k) {
      if (out.size() > 3) out += ',';
      out += c.gates[k].arg ? '1' : '0';
    }
  }
  for (; k < c.gates.size(); ++k) {
    if (!out.empty()) out += ' ';
    out += c.gates[k].kind == Gate::Kind::kNor ? "nor:" + std::to_string(c.gates[k].arg)
                                              : std::string("in:") + (c.gates[k].arg ? '1' : '0');
  }
  return out;
}

}  // namespace conjcat
