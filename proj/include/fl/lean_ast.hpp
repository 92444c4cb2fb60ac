#pragma once

// Target-side Lean 4 expressions and their printer.
//
// Parenthesization is fixed, not precedence-driven: compound arithmetic and
// compound propositions are always wrapped, quantifiers, atoms and predicate
// applications never are.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "fl/box.hpp"

namespace fl::lean {

enum class Type { Real, Int, Rat };
enum class RelOp { Lt, Le, Gt, Ge, Eq, Ne };
enum class ArithOp { Add, Sub, Mul, Div, Pow };
enum class UnaryPred { Pos, Odd, Even, Nneg, Neg };

std::string_view symbol(Type t);
std::string_view symbol(RelOp op);
std::string_view symbol(ArithOp op);
std::string_view symbol(UnaryPred p);

struct Term;

struct VarT {
  std::string name;
  bool operator==(const VarT&) const = default;
};
struct LitT {
  std::int64_t value = 0;
  bool operator==(const LitT&) const = default;
};
struct ArithT {
  ArithOp op;
  Box<Term> lhs, rhs;
  bool operator==(const ArithT&) const = default;
};

struct Term {
  std::variant<VarT, LitT, ArithT> node;
  bool operator==(const Term&) const = default;
};

struct Prop;

struct Rel {
  RelOp op;
  Term lhs, rhs;
  bool operator==(const Rel&) const = default;
};
struct PredApp {
  UnaryPred pred;
  Term arg;
  bool operator==(const PredApp&) const = default;
};
struct NotP {
  Box<Prop> operand;
  bool operator==(const NotP&) const = default;
};
struct AndP {
  Box<Prop> lhs, rhs;
  bool operator==(const AndP&) const = default;
};
struct OrP {
  Box<Prop> lhs, rhs;
  bool operator==(const OrP&) const = default;
};
struct Imp {
  Box<Prop> lhs, rhs;
  bool operator==(const Imp&) const = default;
};
struct IffP {
  Box<Prop> lhs, rhs;
  bool operator==(const IffP&) const = default;
};
struct Forall {
  std::string name;
  Type type;
  Box<Prop> body;
  bool operator==(const Forall&) const = default;
};
struct Exists {
  std::string name;
  Type type;
  Box<Prop> body;
  bool operator==(const Exists&) const = default;
};
/// Body of an unrestricted `there exists`; prints `True`.
struct TrueP {
  bool operator==(const TrueP&) const = default;
};

struct Prop {
  std::variant<Rel, PredApp, NotP, AndP, OrP, Imp, IffP, Forall, Exists, TrueP> node;
  bool operator==(const Prop&) const = default;
};

struct TypeBinder {
  std::string name;
  Type type;
  bool operator==(const TypeBinder&) const = default;
};
struct HypBinder {
  std::string label;
  Prop prop;
  bool operator==(const HypBinder&) const = default;
};
using Binder = std::variant<TypeBinder, HypBinder>;

struct Command {
  std::vector<Binder> binders;
  Prop goal;
  bool operator==(const Command&) const = default;
};

class DuplicateBinderName : public std::runtime_error {
 public:
  explicit DuplicateBinderName(const std::string& name) : std::runtime_error("duplicate binder name " + name) {}
};

// Construction helpers.
Term var(std::string name);
Term lit(std::int64_t v);
Term arith(ArithOp op, Term a, Term b);
Prop rel(RelOp op, Term a, Term b);
Prop pred(UnaryPred p, Term a);
Prop not_(Prop p);
Prop and_(Prop a, Prop b);
Prop or_(Prop a, Prop b);
Prop imp(Prop a, Prop b);
Prop iff(Prop a, Prop b);
Prop forall(std::string name, Type t, Prop body);
Prop exists(std::string name, Type t, Prop body);

std::string print_term(const Term& t);
std::string print_prop(const Prop& p);
/// `example <binders> : <goal> := sorry`. Throws DuplicateBinderName.
std::string print_command(const Command& c);

/// Generated variable (`x<digits>`) or hypothesis label (`h<digits>`).
bool is_generated_var(std::string_view name);
bool is_hyp_label(std::string_view name);

/// Labels become h1, h2, ... in binder order; generated variables become
/// x1, x2, ... in order of first occurrence. User letters are untouched.
Command normalize_names(const Command& c);

/// The same renaming applied to printed text, identifier by identifier.
std::string normalize_printed(std::string_view printed);

nlohmann::json to_json(const Command& c);
nlohmann::json to_json(const Prop& p);
nlohmann::json to_json(const Term& t);

}  // namespace fl::lean
