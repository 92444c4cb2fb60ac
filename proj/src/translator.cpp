#include "fl/translator.hpp"

#include "fl/overloaded.hpp"

namespace fl {

using lean::ArithOp;
using lean::RelOp;
using lean::Type;
using lean::UnaryPred;

const LexiconSemantics& LexiconSemantics::builtin() {
  static const LexiconSemantics sem{
      {{"REAL_NUMBER", Type::Real}, {"INTEGER", Type::Int}, {"RATIONAL_NUMBER", Type::Rat}},
      {{"SUM", ArithOp::Add}, {"MINUS", ArithOp::Sub}, {"TIMES", ArithOp::Mul}, {"DIV", ArithOp::Div}, {"EXP", ArithOp::Pow}},
      {{"POSITIVE", UnaryPred::Pos},
       {"ODD", UnaryPred::Odd},
       {"EVEN", UnaryPred::Even},
       {"NONNEGATIVE", UnaryPred::Nneg},
       {"NEGATIVE", UnaryPred::Neg}},
      {{"LESS_THAN", RelOp::Lt},
       {"LESS_TE", RelOp::Le},
       {"GREATER_THAN", RelOp::Gt},
       {"GREATER_TE", RelOp::Ge},
       {"EQUAL_TO", RelOp::Eq},
       {"NOT_EQUAL_TO", RelOp::Ne}},
  };
  return sem;
}

namespace {

template <typename Map>
typename Map::mapped_type lookup(const Map& m, const std::string& key, const char* what) {
  auto it = m.find(key);
  if (it == m.end()) throw UntranslatableNode(std::string("no Lean image for ") + what + " " + key);
  return it->second;
}

lean::Prop negate_if(Polarity p, lean::Prop prop) {
  return p == Polarity::Neg ? lean::not_(std::move(prop)) : prop;
}

struct Binding {
  std::string name;
  Type type;
  std::optional<lean::Prop> condition;
};

Binding bind(const Notion& n) {
  if (n.left_attribute) throw UntranslatableNode("left attribute on '" + linearize(n) + "'");
  auto name = name_of(n.name);
  if (!name) throw UntranslatableNode("unnamed notion '" + linearize(n) + "'");
  Binding b{lean_name(*name), lookup(LexiconSemantics::builtin().noun_types, n.head, "noun"), std::nullopt};
  if (n.right_attribute) {
    const auto* st = std::get_if<SuchThat>(&*n.right_attribute);
    if (!st) throw UntranslatableNode("unflattened attribute on '" + linearize(n) + "'");
    b.condition = translate_statement(*st->statement);
  }
  return b;
}

lean::Prop exists_of(const Notion& n) {
  auto b = bind(n);
  return lean::exists(b.name, b.type, b.condition ? *b.condition : lean::Prop{lean::TrueP{}});
}

lean::Prop quantify(const QuantifiedNotion& q, lean::Prop body) {
  auto b = bind(q.notion);
  switch (q.quantifier) {
    case Quantifier::Every:
      return lean::forall(b.name, b.type, b.condition ? lean::imp(*b.condition, std::move(body)) : std::move(body));
    case Quantifier::Some:
      return lean::exists(b.name, b.type, b.condition ? lean::and_(*b.condition, std::move(body)) : std::move(body));
    case Quantifier::No:
      body = lean::not_(std::move(body));
      return lean::forall(b.name, b.type, b.condition ? lean::imp(*b.condition, std::move(body)) : std::move(body));
  }
  throw UntranslatableNode("unknown quantifier");
}

// `v is a <bare notion v>`.
std::optional<lean::TypeBinder> as_type_binder(const Statement& s) {
  const auto* d = as<Does>(s);
  if (!d) return std::nullopt;
  const auto* v = as<Var>(d->subject);
  const auto* in = as<IsNotion>(d->predicate);
  if (!v || !in || in->polarity != Polarity::Pos) return std::nullopt;
  const Notion& n = in->notion;
  if (n.left_attribute || n.right_attribute || to_slot(v->name) != n.name) return std::nullopt;
  return lean::TypeBinder{lean_name(v->name), lookup(LexiconSemantics::builtin().noun_types, n.head, "noun")};
}

}  // namespace

std::string lean_name(const Name& n) { return display_name(n); }

lean::Term translate_term(const Term& t) {
  return std::visit(overloaded{
                        [](const Var& v) { return lean::var(lean_name(v.name)); },
                        [](const IntLit& l) { return lean::lit(l.value); },
                        [](const BinApp& b) {
                          return lean::arith(lookup(LexiconSemantics::builtin().noun2_ops, b.op, "operator"),
                                             translate_term(*b.lhs), translate_term(*b.rhs));
                        },
                        [&](const Quantified&) -> lean::Term {
                          throw UntranslatableNode("in-situ quantifier '" + linearize(t) + "'");
                        },
                    },
                    t.node);
}

lean::Prop translate_predicate(const lean::Term& subject, const Predicate& p) {
  const auto& sem = LexiconSemantics::builtin();
  return std::visit(overloaded{
                        [&](const IsAdj& a) {
                          return negate_if(a.polarity, lean::pred(lookup(sem.adj0_preds, a.adjective, "adjective"), subject));
                        },
                        [&](const IsAdj1& a) {
                          return negate_if(a.polarity, lean::rel(lookup(sem.adj1_rels, a.adjective, "relation"), subject,
                                                                 translate_term(a.argument)));
                        },
                        [&](const IsTerm& a) {
                          return negate_if(a.polarity, lean::rel(RelOp::Eq, subject, translate_term(a.term)));
                        },
                        [&](const IsNotion&) -> lean::Prop {
                          throw UntranslatableNode("'is " + linearize(p) + "' has no Lean proposition");
                        },
                    },
                    p.node);
}

lean::Prop translate_statement(const Statement& s) {
  return std::visit(
      overloaded{
          [](const And& a) { return lean::and_(translate_statement(*a.lhs), translate_statement(*a.rhs)); },
          [](const Or& a) { return lean::or_(translate_statement(*a.lhs), translate_statement(*a.rhs)); },
          [](const IfThen& a) { return lean::imp(translate_statement(*a.condition), translate_statement(*a.consequence)); },
          [](const Iff& a) { return lean::iff(translate_statement(*a.lhs), translate_statement(*a.rhs)); },
          [](const Not& a) { return lean::not_(translate_statement(*a.operand)); },
          [](const ForQuantified& a) { return quantify(a.qnotion, translate_statement(*a.body)); },
          [](const Does& a) { return translate_predicate(translate_term(a.subject), a.predicate); },
          [](const ThereExists& a) { return exists_of(a.notion); },
          [](const ThereExistsNo& a) { return lean::not_(exists_of(a.notion)); },
      },
      s.node);
}

lean::Command translate_text(const NormalForm& nf) {
  const Example& ex = nf.text().example;
  lean::Command out;
  int next_label = 1;
  for (const auto& a : ex.assumptions) {
    if (auto tb = as_type_binder(a)) {
      out.binders.emplace_back(std::move(*tb));
    } else {
      out.binders.emplace_back(lean::HypBinder{"h" + std::to_string(next_label++), translate_statement(a)});
    }
  }
  out.goal = translate_statement(ex.conclusion);
  return out;
}

}  // namespace fl
