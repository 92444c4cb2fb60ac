#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "fl/forthel_ast.hpp"

namespace fl {

/// Source of fresh metavariable ids for one pipeline run. A drawn id renders
/// as `x<id>`, which never collides with a name already in the text.
class NameSupply {
 public:
  NameSupply() = default;
  /// Reserves every name already occurring in `text`.
  explicit NameSupply(const ForthelText& text);

  Meta fresh();
  const std::set<std::string>& used() const { return used_; }

 private:
  int next_id_ = 1;
  std::set<std::string> used_;
};

/// Text-level name of a Name: the letter, or `x<id>`.
std::string display_name(const Name& n);

/// Every Unnamed notion gets Meta(fresh id).
ForthelText assign_names(const ForthelText& text, NameSupply& supply);

/// `v is a <notion (x n)>` becomes `v is a <notion v>` wherever the subject is a variable.
ForthelText unify_variables(const ForthelText& text);

/// In-situ quantified terms become ex-situ `for ... ,` prefixes: the subject's
/// quantifier outermost, then the predicate's in surface order. Requires
/// named notions.
Statement raise_quantifiers(const Statement& stmt);

/// Left adjective and right attributes move into a single right-nested
/// `such that` conjunction, left adjective first. Applies to nested notions too.
Notion flatten_attributes(const Notion& notion);

/// Top-level conjunctions split into separate assumptions; `v is a <notion v
/// such that S>` splits into the bare typing followed by the conjuncts of S.
Example split_assumptions(const Example& ex);

/// A ForthelText that satisfies the simplifier's output invariants.
class NormalForm {
 public:
  /// Throws NotNormalForm if `text` violates an invariant.
  explicit NormalForm(ForthelText text);

  const ForthelText& text() const { return text_; }
  bool operator==(const NormalForm&) const = default;

 private:
  ForthelText text_;
};

class NotNormalForm : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Description of the first normal-form violation, or nullopt if none.
std::optional<std::string> normal_form_violation(const ForthelText& text);
inline bool is_normal_form(const ForthelText& text) { return !normal_form_violation(text); }

/// assign_names, unify_variables, raise_quantifiers, flatten_attributes and
/// split_assumptions. Unification and raising are repeated after each raise
/// and flatten, since each can expose work for the other.
NormalForm simplify(const ForthelText& text);
NormalForm simplify(const ForthelText& text, NameSupply& supply);

}  // namespace fl
