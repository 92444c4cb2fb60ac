#pragma once

#include <span>
#include <string>
#include <vector>

#include "fl/forthel_ast.hpp"
#include "fl/lexicon.hpp"

namespace fl {

struct Diagnostic {
  Span span;
  std::string message;
};

/// All parses of the input, deduplicated, in a deterministic order.
/// Either `trees` is nonempty or `diagnostics` explains the failure.
template <typename T>
struct ParseResult {
  std::vector<T> trees;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return !trees.empty(); }
};

/// `ex. [assume S.]* [then] S.`
ParseResult<ForthelText> parse_text(std::span<const Token> tokens);

/// Arithmetic precedence, tightest first: `^`, `* /`, `-`, `+`; each level
/// is left-associative.
ParseResult<Term> parse_term(std::span<const Token> tokens);

/// Connective precedence, tightest first: predicate `not`, `and`, `,`, `or`,
/// `iff`, `if ... then`. `for ...,` and `if ... then` extend as far right as
/// possible.
ParseResult<Statement> parse_statement(std::span<const Token> tokens);

}  // namespace fl
