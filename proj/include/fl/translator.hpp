#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "fl/forthel_ast.hpp"
#include "fl/lean_ast.hpp"
#include "fl/simplifier.hpp"

namespace fl {

/// Lean images of the lexical categories: nouns become types, operator nouns
/// arithmetic, adjectives unary predicates, relational adjectives relations.
struct LexiconSemantics {
  std::map<std::string, lean::Type> noun_types;
  std::map<std::string, lean::ArithOp> noun2_ops;
  std::map<std::string, lean::UnaryPred> adj0_preds;
  std::map<std::string, lean::RelOp> adj1_rels;

  static const LexiconSemantics& builtin();
};

class UntranslatableNode : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lean name of a ForTheL name: the letter, or `x<id>` for a metavariable.
std::string lean_name(const Name& n);

lean::Term translate_term(const Term& t);
lean::Prop translate_predicate(const lean::Term& subject, const Predicate& p);
lean::Prop translate_statement(const Statement& s);

/// Typing assumptions `v is a <notion v>` become `(v : T)`; every other
/// assumption becomes a hypothesis `(h<k> : P)` with k counting from 1.
lean::Command translate_text(const NormalForm& nf);

}  // namespace fl
