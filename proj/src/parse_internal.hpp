#pragma once

#include "conjcat/category.hpp"
#include "conjcat/macll.hpp"
#include "lexer.hpp"

namespace conjcat::detail {

// Parse one category/formula starting at the lexer's current token, leaving
// the lexer on the first token after it.
Category parse_category_from(Lexer& lex);
MacllFormula parse_macll_from(Lexer& lex);

}  // namespace conjcat::detail
