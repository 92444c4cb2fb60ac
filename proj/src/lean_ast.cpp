#include "fl/lean_ast.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "fl/overloaded.hpp"

namespace fl::lean {

std::string_view symbol(Type t) {
  switch (t) {
    case Type::Real: return "ℝ";
    case Type::Int: return "ℤ";
    case Type::Rat: return "ℚ";
  }
  return "?";
}

std::string_view symbol(RelOp op) {
  switch (op) {
    case RelOp::Lt: return "<";
    case RelOp::Le: return "≤";
    case RelOp::Gt: return ">";
    case RelOp::Ge: return "≥";
    case RelOp::Eq: return "=";
    case RelOp::Ne: return "≠";
  }
  return "?";
}

std::string_view symbol(ArithOp op) {
  switch (op) {
    case ArithOp::Add: return "+";
    case ArithOp::Sub: return "-";
    case ArithOp::Mul: return "*";
    case ArithOp::Div: return "/";
    case ArithOp::Pow: return "^";
  }
  return "?";
}

std::string_view symbol(UnaryPred p) {
  switch (p) {
    case UnaryPred::Pos: return "pos";
    case UnaryPred::Odd: return "odd";
    case UnaryPred::Even: return "even";
    case UnaryPred::Nneg: return "nneg";
    case UnaryPred::Neg: return "neg";
  }
  return "?";
}

Term var(std::string name) { return Term{VarT{std::move(name)}}; }
Term lit(std::int64_t v) { return Term{LitT{v}}; }
Term arith(ArithOp op, Term a, Term b) { return Term{ArithT{op, std::move(a), std::move(b)}}; }
Prop rel(RelOp op, Term a, Term b) { return Prop{Rel{op, std::move(a), std::move(b)}}; }
Prop pred(UnaryPred p, Term a) { return Prop{PredApp{p, std::move(a)}}; }
Prop not_(Prop p) { return Prop{NotP{std::move(p)}}; }
Prop and_(Prop a, Prop b) { return Prop{AndP{std::move(a), std::move(b)}}; }
Prop or_(Prop a, Prop b) { return Prop{OrP{std::move(a), std::move(b)}}; }
Prop imp(Prop a, Prop b) { return Prop{Imp{std::move(a), std::move(b)}}; }
Prop iff(Prop a, Prop b) { return Prop{IffP{std::move(a), std::move(b)}}; }
Prop forall(std::string name, Type t, Prop body) { return Prop{Forall{std::move(name), t, std::move(body)}}; }
Prop exists(std::string name, Type t, Prop body) { return Prop{Exists{std::move(name), t, std::move(body)}}; }

std::string print_term(const Term& t) {
  return std::visit(overloaded{
                        [](const VarT& v) { return v.name; },
                        [](const LitT& l) { return std::to_string(l.value); },
                        [](const ArithT& a) {
                          return "(" + print_term(*a.lhs) + " " + std::string(symbol(a.op)) + " " +
                                 print_term(*a.rhs) + ")";
                        },
                    },
                    t.node);
}

namespace {

std::string wrap(const Prop& a, std::string_view op, const Prop& b) {
  return "(" + print_prop(a) + " " + std::string(op) + " " + print_prop(b) + ")";
}

std::string binder_decl(const std::string& name, Type t) { return "(" + name + " : " + std::string(symbol(t)) + ")"; }

}  // namespace

std::string print_prop(const Prop& p) {
  return std::visit(overloaded{
                        [](const Rel& r) {
                          return print_term(r.lhs) + " " + std::string(symbol(r.op)) + " " + print_term(r.rhs);
                        },
                        [](const PredApp& a) { return std::string(symbol(a.pred)) + " " + print_term(a.arg); },
                        [](const NotP& n) { return "(¬ " + print_prop(*n.operand) + ")"; },
                        [](const AndP& a) { return wrap(*a.lhs, "∧", *a.rhs); },
                        [](const OrP& a) { return wrap(*a.lhs, "∨", *a.rhs); },
                        [](const Imp& a) { return wrap(*a.lhs, "→", *a.rhs); },
                        [](const IffP& a) { return wrap(*a.lhs, "↔", *a.rhs); },
                        [](const Forall& q) { return "∀ " + binder_decl(q.name, q.type) + ", " + print_prop(*q.body); },
                        [](const Exists& q) { return "∃ " + binder_decl(q.name, q.type) + ", " + print_prop(*q.body); },
                        [](const TrueP&) { return std::string("True"); },
                    },
                    p.node);
}

std::string print_command(const Command& c) {
  std::set<std::string> names;
  std::string out = "example";
  for (const auto& b : c.binders) {
    const std::string& name = std::visit(overloaded{[](const TypeBinder& t) -> const std::string& { return t.name; },
                                                    [](const HypBinder& h) -> const std::string& { return h.label; }},
                                         b);
    if (!names.insert(name).second) throw DuplicateBinderName(name);
    out += " ";
    out += std::visit(overloaded{[](const TypeBinder& t) { return binder_decl(t.name, t.type); },
                                 [](const HypBinder& h) { return "(" + h.label + " : " + print_prop(h.prop) + ")"; }},
                      b);
  }
  out += " : " + print_prop(c.goal) + " := sorry";
  return out;
}

namespace {

bool digits_after(std::string_view name, char prefix) {
  return name.size() >= 2 && name.front() == prefix &&
         std::all_of(name.begin() + 1, name.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

// Renames identifiers in order of first occurrence, one counter per kind.
class Renamer {
 public:
  std::string operator()(const std::string& name) {
    if (is_hyp_label(name)) return lookup(name, 'h', labels_);
    if (is_generated_var(name)) return lookup(name, 'x', vars_);
    return name;
  }

 private:
  static std::string lookup(const std::string& name, char prefix, std::map<std::string, std::string>& table) {
    auto it = table.find(name);
    if (it != table.end()) return it->second;
    auto fresh = prefix + std::to_string(table.size() + 1);
    table.emplace(name, fresh);
    return fresh;
  }
  std::map<std::string, std::string> labels_, vars_;
};

Term rename(const Term& t, Renamer& r) {
  return std::visit(overloaded{
                        [&](const VarT& v) { return var(r(v.name)); },
                        [&](const LitT&) { return t; },
                        [&](const ArithT& a) {
                          auto lhs = rename(*a.lhs, r);
                          auto rhs = rename(*a.rhs, r);
                          return arith(a.op, std::move(lhs), std::move(rhs));
                        },
                    },
                    t.node);
}

// Children are renamed left to right, matching print order.
Prop rename(const Prop& p, Renamer& r) {
  auto binary = [&](const Prop& a, const Prop& b, auto make) {
    auto lhs = rename(a, r);
    auto rhs = rename(b, r);
    return make(std::move(lhs), std::move(rhs));
  };
  return std::visit(overloaded{
                        [&](const Rel& x) {
                          auto lhs = rename(x.lhs, r);
                          auto rhs = rename(x.rhs, r);
                          return rel(x.op, std::move(lhs), std::move(rhs));
                        },
                        [&](const PredApp& x) { return pred(x.pred, rename(x.arg, r)); },
                        [&](const NotP& x) { return not_(rename(*x.operand, r)); },
                        [&](const AndP& x) { return binary(*x.lhs, *x.rhs, and_); },
                        [&](const OrP& x) { return binary(*x.lhs, *x.rhs, or_); },
                        [&](const Imp& x) { return binary(*x.lhs, *x.rhs, imp); },
                        [&](const IffP& x) { return binary(*x.lhs, *x.rhs, iff); },
                        [&](const Forall& x) {
                          auto name = r(x.name);
                          return forall(std::move(name), x.type, rename(*x.body, r));
                        },
                        [&](const Exists& x) {
                          auto name = r(x.name);
                          return exists(std::move(name), x.type, rename(*x.body, r));
                        },
                        [&](const TrueP&) { return p; },
                    },
                    p.node);
}

}  // namespace

bool is_generated_var(std::string_view name) { return digits_after(name, 'x'); }
bool is_hyp_label(std::string_view name) { return digits_after(name, 'h'); }

Command normalize_names(const Command& c) {
  Renamer r;
  Command out;
  for (const auto& b : c.binders) {
    out.binders.push_back(std::visit(overloaded{
                                         [&](const TypeBinder& t) -> Binder { return TypeBinder{r(t.name), t.type}; },
                                         [&](const HypBinder& h) -> Binder {
                                           auto label = r(h.label);
                                           return HypBinder{std::move(label), rename(h.prop, r)};
                                         },
                                     },
                                     b));
  }
  out.goal = rename(c.goal, r);
  return out;
}

std::string normalize_printed(std::string_view printed) {
  auto ident_start = [](char ch) { return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '_'; };
  auto ident_char = [&](char ch) { return ident_start(ch) || (ch >= '0' && ch <= '9') || ch == '\''; };

  Renamer r;
  std::string out;
  std::size_t i = 0;
  while (i < printed.size()) {
    if (!ident_start(printed[i])) {
      out.push_back(printed[i++]);
      continue;
    }
    std::size_t j = i;
    while (j < printed.size() && ident_char(printed[j])) ++j;
    out += r(std::string(printed.substr(i, j - i)));
    i = j;
  }
  return out;
}

// Debug dump.

using nlohmann::json;

namespace {
json node(const char* ctor, json children) { return json{{ctor, std::move(children)}}; }
}  // namespace

json to_json(const Term& t) {
  return std::visit(overloaded{
                        [](const VarT& v) { return node("VarT", json::array({v.name})); },
                        [](const LitT& l) { return node("LitT", json::array({l.value})); },
                        [](const ArithT& a) {
                          return node("ArithT", json::array({symbol(a.op), to_json(*a.lhs), to_json(*a.rhs)}));
                        },
                    },
                    t.node);
}

json to_json(const Prop& p) {
  auto bin = [](const char* ctor, const Prop& a, const Prop& b) { return node(ctor, json::array({to_json(a), to_json(b)})); };
  return std::visit(
      overloaded{
          [](const Rel& r) { return node("Rel", json::array({symbol(r.op), to_json(r.lhs), to_json(r.rhs)})); },
          [](const PredApp& a) { return node("PredApp", json::array({symbol(a.pred), to_json(a.arg)})); },
          [](const NotP& n) { return node("NotP", json::array({to_json(*n.operand)})); },
          [&](const AndP& a) { return bin("AndP", *a.lhs, *a.rhs); },
          [&](const OrP& a) { return bin("OrP", *a.lhs, *a.rhs); },
          [&](const Imp& a) { return bin("Imp", *a.lhs, *a.rhs); },
          [&](const IffP& a) { return bin("IffP", *a.lhs, *a.rhs); },
          [](const Forall& q) { return node("Forall", json::array({q.name, symbol(q.type), to_json(*q.body)})); },
          [](const Exists& q) { return node("Exists", json::array({q.name, symbol(q.type), to_json(*q.body)})); },
          [](const TrueP&) { return node("TrueP", json::array()); },
      },
      p.node);
}

json to_json(const Command& c) {
  json binders = json::array();
  for (const auto& b : c.binders) {
    binders.push_back(std::visit(
        overloaded{
            [](const TypeBinder& t) { return node("TypeBinder", json::array({t.name, symbol(t.type)})); },
            [](const HypBinder& h) { return node("HypBinder", json::array({h.label, to_json(h.prop)})); },
        },
        b));
  }
  return node("LeanCommand", json::array({binders, to_json(c.goal)}));
}

}  // namespace fl::lean
