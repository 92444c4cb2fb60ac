#include "fl/forthel_ast.hpp"

#include <stdexcept>

#include "fl/lexicon.hpp"
#include "fl/overloaded.hpp"

namespace fl {

namespace build {

Term var(std::string letter) { return Term{Var{Named{std::move(letter)}}}; }
Term meta_var(int id) { return Term{Var{Meta{id}}}; }
Term var(const Name& name) { return Term{Var{name}}; }
Term lit(std::int64_t value) { return Term{IntLit{value}}; }
Term bin(std::string op, Term lhs, Term rhs) { return Term{BinApp{std::move(op), std::move(lhs), std::move(rhs)}}; }
Term quantified(Quantifier q, Notion n) { return Term{Quantified{QuantifiedNotion{q, std::move(n)}}}; }

Notion notion(std::string head, NameSlot name, std::optional<std::string> left, std::optional<RightAttribute> right) {
  return Notion{std::move(left), std::move(head), std::move(name), std::move(right)};
}

Predicate adj(std::string key, Polarity p) { return Predicate{IsAdj{p, std::move(key)}}; }
Predicate adj1(std::string key, Term arg, Polarity p) { return Predicate{IsAdj1{p, std::move(key), std::move(arg)}}; }
Predicate is_notion(Notion n, Polarity p) { return Predicate{IsNotion{p, std::move(n)}}; }
Predicate is_term(Term t, Polarity p) { return Predicate{IsTerm{p, std::move(t)}}; }

Statement does(Term subject, Predicate pred) { return Statement{Does{std::move(subject), std::move(pred)}}; }
Statement and_(Statement a, Statement b) { return Statement{And{std::move(a), std::move(b)}}; }
Statement or_(Statement a, Statement b) { return Statement{Or{std::move(a), std::move(b)}}; }
Statement if_then(Statement a, Statement b) { return Statement{IfThen{std::move(a), std::move(b)}}; }
Statement iff(Statement a, Statement b) { return Statement{Iff{std::move(a), std::move(b)}}; }
Statement not_(Statement s) { return Statement{Not{std::move(s)}}; }
Statement for_q(Quantifier q, Notion n, Statement body) {
  return Statement{ForQuantified{QuantifiedNotion{q, std::move(n)}, std::move(body)}};
}
Statement exists(Notion n) { return Statement{ThereExists{std::move(n)}}; }
Statement exists_no(Notion n) { return Statement{ThereExistsNo{std::move(n)}}; }

Statement conjunction(std::vector<Statement> parts) {
  if (parts.empty()) throw std::invalid_argument("conjunction of nothing");
  Statement acc = std::move(parts.back());
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) acc = and_(std::move(*it), std::move(acc));
  return acc;
}

}  // namespace build

std::optional<Name> name_of(const NameSlot& slot) {
  if (auto n = std::get_if<Named>(&slot)) return Name{*n};
  if (auto m = std::get_if<Meta>(&slot)) return Name{*m};
  return std::nullopt;
}

NameSlot to_slot(const Name& name) {
  return std::visit([](const auto& n) -> NameSlot { return n; }, name);
}

namespace {

std::string surface(const std::string& key) {
  const auto* e = Lexicon::builtin().find(key);
  if (!e) throw std::invalid_argument("unknown lexicon key " + key);
  return e->surface();
}

std::string quantifier_word(Quantifier q) {
  switch (q) {
    case Quantifier::Every: return "every";
    case Quantifier::Some: return "some";
    case Quantifier::No: return "no";
  }
  return "?";
}

std::string negation(Polarity p) { return p == Polarity::Neg ? "not " : ""; }

std::string with_article(const std::string& phrase) {
  const char c = phrase.empty() ? 'x' : phrase.front();
  const bool vowel = c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  return (vowel ? "an " : "a ") + phrase;
}

// Loosest = 1. `-` binds tighter than `+`.
int level_of(const std::string& op) {
  if (op == "SUM") return 1;
  if (op == "MINUS") return 2;
  if (op == "TIMES" || op == "DIV") return 3;
  if (op == "EXP") return 4;
  return 5;
}

int level_of(const Term& t) {
  if (auto b = as<BinApp>(t)) return level_of(b->op);
  return 5;
}

std::string name_text(const Name& n) {
  return std::visit(overloaded{[](const Named& v) { return v.letter; },
                               [](const Meta& m) { return "(x " + std::to_string(m.id) + ")"; }},
                    n);
}

std::string qnotion_text(const QuantifiedNotion& q) { return quantifier_word(q.quantifier) + " " + linearize(q.notion); }

}  // namespace

std::string linearize(const NameSlot& n) {
  return std::visit(overloaded{[](const Unnamed&) { return std::string(); },
                               [](const Named& v) { return v.letter; },
                               [](const Meta& m) { return "(x " + std::to_string(m.id) + ")"; }},
                    n);
}

std::string linearize(const Term& t) {
  return std::visit(overloaded{
                        [](const Var& v) { return name_text(v.name); },
                        [](const IntLit& l) { return std::to_string(l.value); },
                        [](const BinApp& b) {
                          const int lv = level_of(b.op);
                          auto lhs = linearize(*b.lhs);
                          auto rhs = linearize(*b.rhs);
                          if (level_of(*b.lhs) < lv) lhs = "(" + lhs + ")";
                          if (level_of(*b.rhs) <= lv) rhs = "(" + rhs + ")";
                          return lhs + " " + surface(b.op) + " " + rhs;
                        },
                        [](const Quantified& q) { return qnotion_text(q.qnotion); },
                    },
                    t.node);
}

std::string linearize(const Notion& n) {
  std::string out;
  if (n.left_attribute) out = surface(*n.left_attribute) + " ";
  out += surface(n.head);
  if (auto name = linearize(n.name); !name.empty()) out += " " + name;
  if (n.right_attribute) {
    out += " ";
    out += std::visit(overloaded{
                          [](const IsPred& p) {
                            const auto& pred = *p.predicate;
                            if (as<IsAdj>(pred) || as<IsAdj1>(pred)) return linearize(pred);
                            return "that is " + linearize(pred);
                          },
                          [](const SuchThat& s) { return "such that " + linearize(*s.statement); },
                      },
                      *n.right_attribute);
  }
  return out;
}

std::string linearize(const Predicate& p) {
  return std::visit(overloaded{
                        [](const IsAdj& a) { return negation(a.polarity) + surface(a.adjective); },
                        [](const IsAdj1& a) {
                          return negation(a.polarity) + surface(a.adjective) + " " + linearize(a.argument);
                        },
                        [](const IsNotion& a) { return negation(a.polarity) + with_article(linearize(a.notion)); },
                        [](const IsTerm& a) { return negation(a.polarity) + linearize(a.term); },
                    },
                    p.node);
}

std::string linearize(const Statement& s) {
  return std::visit(overloaded{
                        [](const And& a) { return linearize(*a.lhs) + " and " + linearize(*a.rhs); },
                        [](const Or& a) { return linearize(*a.lhs) + " or " + linearize(*a.rhs); },
                        [](const IfThen& a) {
                          return "if " + linearize(*a.condition) + " then " + linearize(*a.consequence);
                        },
                        [](const Iff& a) { return linearize(*a.lhs) + " iff " + linearize(*a.rhs); },
                        [](const Not& a) { return "it's not that " + linearize(*a.operand); },
                        [](const ForQuantified& a) {
                          return "for " + qnotion_text(a.qnotion) + ", " + linearize(*a.body);
                        },
                        [](const Does& a) { return linearize(a.subject) + " is " + linearize(a.predicate); },
                        [](const ThereExists& a) { return "there exists " + with_article(linearize(a.notion)); },
                        [](const ThereExistsNo& a) { return "there exists no " + linearize(a.notion); },
                    },
                    s.node);
}

std::string linearize(const Example& e) {
  std::string out = "ex .";
  for (const auto& a : e.assumptions) out += " assume " + linearize(a) + ".";
  out += " then " + linearize(e.conclusion) + ".";
  return out;
}

std::string linearize(const ForthelText& t) { return linearize(t.example); }

// Debug dump.

namespace {

using nlohmann::json;

json node(const char* ctor, json children) { return json{{ctor, std::move(children)}}; }

std::string polarity_text(Polarity p) { return p == Polarity::Pos ? "Pos" : "Neg"; }

json slot_json(const NameSlot& n) {
  return std::visit(overloaded{[](const Unnamed&) { return node("Unnamed", json::array()); },
                               [](const Named& v) { return node("Named", json::array({v.letter})); },
                               [](const Meta& m) { return node("Meta", json::array({m.id})); }},
                    n);
}

json qnotion_json(const QuantifiedNotion& q) {
  return node("QuantifiedNotion", json::array({quantifier_word(q.quantifier), to_json(q.notion)}));
}

}  // namespace

json to_json(const Term& t) {
  return std::visit(overloaded{
                        [](const Var& v) { return node("Var", json::array({slot_json(to_slot(v.name))})); },
                        [](const IntLit& l) { return node("IntLit", json::array({l.value})); },
                        [](const BinApp& b) {
                          return node("BinApp", json::array({b.op, to_json(*b.lhs), to_json(*b.rhs)}));
                        },
                        [](const Quantified& q) { return node("Quantified", json::array({qnotion_json(q.qnotion)})); },
                    },
                    t.node);
}

json to_json(const Notion& n) {
  json right = nullptr;
  if (n.right_attribute) {
    right = std::visit(overloaded{
                           [](const IsPred& p) { return node("IsPred", json::array({to_json(*p.predicate)})); },
                           [](const SuchThat& s) { return node("SuchThat", json::array({to_json(*s.statement)})); },
                       },
                       *n.right_attribute);
  }
  json left = n.left_attribute ? json(*n.left_attribute) : json(nullptr);
  return node("Notion", json::array({left, n.head, slot_json(n.name), right}));
}

json to_json(const Predicate& p) {
  return std::visit(overloaded{
                        [](const IsAdj& a) { return node("IsAdj", json::array({polarity_text(a.polarity), a.adjective})); },
                        [](const IsAdj1& a) {
                          return node("IsAdj1",
                                      json::array({polarity_text(a.polarity), a.adjective, to_json(a.argument)}));
                        },
                        [](const IsNotion& a) {
                          return node("IsNotion", json::array({polarity_text(a.polarity), to_json(a.notion)}));
                        },
                        [](const IsTerm& a) {
                          return node("IsTerm", json::array({polarity_text(a.polarity), to_json(a.term)}));
                        },
                    },
                    p.node);
}

json to_json(const Statement& s) {
  return std::visit(
      overloaded{
          [](const And& a) { return node("And", json::array({to_json(*a.lhs), to_json(*a.rhs)})); },
          [](const Or& a) { return node("Or", json::array({to_json(*a.lhs), to_json(*a.rhs)})); },
          [](const IfThen& a) {
            return node("IfThen", json::array({to_json(*a.condition), to_json(*a.consequence)}));
          },
          [](const Iff& a) { return node("Iff", json::array({to_json(*a.lhs), to_json(*a.rhs)})); },
          [](const Not& a) { return node("Not", json::array({to_json(*a.operand)})); },
          [](const ForQuantified& a) {
            return node("ForQuantified", json::array({qnotion_json(a.qnotion), to_json(*a.body)}));
          },
          [](const Does& a) { return node("Does", json::array({to_json(a.subject), to_json(a.predicate)})); },
          [](const ThereExists& a) { return node("ThereExists", json::array({to_json(a.notion)})); },
          [](const ThereExistsNo& a) { return node("ThereExistsNo", json::array({to_json(a.notion)})); },
      },
      s.node);
}

json to_json(const ForthelText& t) {
  json assumptions = json::array();
  for (const auto& a : t.example.assumptions) assumptions.push_back(to_json(a));
  return node("ForthelText", json::array({node("Example", json::array({assumptions, to_json(t.example.conclusion)}))}));
}

}  // namespace fl
