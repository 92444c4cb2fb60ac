#pragma once

// Abstract syntax of Simplified ForTheL.
//
// Lexical items are referred to by their lexicon key (e.g. "INTEGER",
// "LESS_THAN", "EXP"); surface words only reappear through linearize().

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "fl/box.hpp"

namespace fl {

enum class Quantifier { Every, Some, No };
enum class Polarity { Pos, Neg };

struct Unnamed {
  bool operator==(const Unnamed&) const = default;
};
/// A user variable letter.
struct Named {
  std::string letter;
  bool operator==(const Named&) const = default;
};
/// A generated name, printed `(x id)` in ForTheL and `x<id>` in Lean.
struct Meta {
  int id = 0;
  bool operator==(const Meta&) const = default;
};

using NameSlot = std::variant<Unnamed, Named, Meta>;
using Name = std::variant<Named, Meta>;

struct Term;
struct Predicate;
struct Statement;

struct IsPred {
  Box<Predicate> predicate;
  bool operator==(const IsPred&) const = default;
};
struct SuchThat {
  Box<Statement> statement;
  bool operator==(const SuchThat&) const = default;
};
using RightAttribute = std::variant<IsPred, SuchThat>;

struct Notion {
  std::optional<std::string> left_attribute;  // RawAdjective0 key
  std::string head;                           // RawNoun0 key
  NameSlot name;
  std::optional<RightAttribute> right_attribute;

  bool operator==(const Notion&) const = default;
};

struct QuantifiedNotion {
  Quantifier quantifier = Quantifier::Every;
  Notion notion;
  bool operator==(const QuantifiedNotion&) const = default;
};

struct Var {
  Name name;
  bool operator==(const Var&) const = default;
};
struct IntLit {
  std::int64_t value = 0;
  bool operator==(const IntLit&) const = default;
};
struct BinApp {
  std::string op;  // RawNoun2 key
  Box<Term> lhs;
  Box<Term> rhs;
  bool operator==(const BinApp&) const = default;
};
struct Quantified {
  QuantifiedNotion qnotion;
  bool operator==(const Quantified&) const = default;
};

struct Term {
  std::variant<Var, IntLit, BinApp, Quantified> node;
  bool operator==(const Term&) const = default;
};

struct IsAdj {
  Polarity polarity = Polarity::Pos;
  std::string adjective;  // RawAdjective0 key
  bool operator==(const IsAdj&) const = default;
};
struct IsAdj1 {
  Polarity polarity = Polarity::Pos;
  std::string adjective;  // RawAdjective1 key
  Term argument;
  bool operator==(const IsAdj1&) const = default;
};
struct IsNotion {
  Polarity polarity = Polarity::Pos;
  Notion notion;
  bool operator==(const IsNotion&) const = default;
};
struct IsTerm {
  Polarity polarity = Polarity::Pos;
  Term term;
  bool operator==(const IsTerm&) const = default;
};

struct Predicate {
  std::variant<IsAdj, IsAdj1, IsNotion, IsTerm> node;
  bool operator==(const Predicate&) const = default;
};

struct And {
  Box<Statement> lhs, rhs;
  bool operator==(const And&) const = default;
};
struct Or {
  Box<Statement> lhs, rhs;
  bool operator==(const Or&) const = default;
};
struct IfThen {
  Box<Statement> condition, consequence;
  bool operator==(const IfThen&) const = default;
};
struct Iff {
  Box<Statement> lhs, rhs;
  bool operator==(const Iff&) const = default;
};
struct Not {
  Box<Statement> operand;
  bool operator==(const Not&) const = default;
};
struct ForQuantified {
  QuantifiedNotion qnotion;
  Box<Statement> body;
  bool operator==(const ForQuantified&) const = default;
};
struct Does {
  Term subject;
  Predicate predicate;
  bool operator==(const Does&) const = default;
};
struct ThereExists {
  Notion notion;
  bool operator==(const ThereExists&) const = default;
};
struct ThereExistsNo {
  Notion notion;
  bool operator==(const ThereExistsNo&) const = default;
};

struct Statement {
  std::variant<And, Or, IfThen, Iff, Not, ForQuantified, Does, ThereExists, ThereExistsNo> node;
  bool operator==(const Statement&) const = default;
};

struct Example {
  std::vector<Statement> assumptions;
  Statement conclusion;
  bool operator==(const Example&) const = default;
};

struct ForthelText {
  Example example;
  bool operator==(const ForthelText&) const = default;
};

template <typename T, typename Node>
const T* as(const Node& n) {
  return std::get_if<T>(&n.node);
}

// Construction helpers.
namespace build {

Term var(std::string letter);
Term meta_var(int id);
Term var(const Name& name);
Term lit(std::int64_t value);
Term bin(std::string op, Term lhs, Term rhs);
Term quantified(Quantifier q, Notion n);

Notion notion(std::string head, NameSlot name = Unnamed{}, std::optional<std::string> left = std::nullopt,
              std::optional<RightAttribute> right = std::nullopt);

Predicate adj(std::string key, Polarity p = Polarity::Pos);
Predicate adj1(std::string key, Term arg, Polarity p = Polarity::Pos);
Predicate is_notion(Notion n, Polarity p = Polarity::Pos);
Predicate is_term(Term t, Polarity p = Polarity::Pos);

Statement does(Term subject, Predicate pred);
Statement and_(Statement a, Statement b);
Statement or_(Statement a, Statement b);
Statement if_then(Statement a, Statement b);
Statement iff(Statement a, Statement b);
Statement not_(Statement s);
Statement for_q(Quantifier q, Notion n, Statement body);
Statement exists(Notion n);
Statement exists_no(Notion n);

/// Right-nested conjunction; `parts` must be nonempty.
Statement conjunction(std::vector<Statement> parts);

}  // namespace build

/// Name of a notion that has one; nullopt for Unnamed.
std::optional<Name> name_of(const NameSlot& slot);
NameSlot to_slot(const Name& name);

std::string linearize(const ForthelText& t);
std::string linearize(const Example& e);
std::string linearize(const Statement& s);
std::string linearize(const Predicate& p);
std::string linearize(const Notion& n);
std::string linearize(const Term& t);
std::string linearize(const NameSlot& n);

/// Debug tree: each node is `{"Constructor": [children...]}`; leaves are strings or numbers.
nlohmann::json to_json(const ForthelText& t);
nlohmann::json to_json(const Statement& s);
nlohmann::json to_json(const Term& t);
nlohmann::json to_json(const Notion& n);
nlohmann::json to_json(const Predicate& p);

}  // namespace fl
