#include "fl/simplifier.hpp"

#include <functional>
#include <utility>

#include "fl/overloaded.hpp"

namespace fl {
namespace {

// Structural rewrite over a whole tree. `on_notion` runs before a notion's
// children are visited; `on_statement` runs after a statement's children.
struct Rewriter {
  std::function<Notion(Notion)> on_notion = [](Notion n) { return n; };
  std::function<Statement(Statement)> on_statement = [](Statement s) { return s; };

  Notion notion(const Notion& in) {
    Notion n = on_notion(in);
    if (n.right_attribute) {
      n.right_attribute = std::visit(
          overloaded{
              [&](const IsPred& p) -> RightAttribute { return IsPred{predicate(*p.predicate)}; },
              [&](const SuchThat& s) -> RightAttribute { return SuchThat{statement(*s.statement)}; },
          },
          *n.right_attribute);
    }
    return n;
  }

  QuantifiedNotion qnotion(const QuantifiedNotion& q) { return {q.quantifier, notion(q.notion)}; }

  Term term(const Term& t) {
    return std::visit(overloaded{
                          [&](const BinApp& b) { return build::bin(b.op, term(*b.lhs), term(*b.rhs)); },
                          [&](const Quantified& q) { return Term{Quantified{qnotion(q.qnotion)}}; },
                          [&](const auto&) { return t; },
                      },
                      t.node);
  }

  Predicate predicate(const Predicate& p) {
    return std::visit(overloaded{
                          [&](const IsAdj&) { return p; },
                          [&](const IsAdj1& a) { return build::adj1(a.adjective, term(a.argument), a.polarity); },
                          [&](const IsNotion& a) { return build::is_notion(notion(a.notion), a.polarity); },
                          [&](const IsTerm& a) { return build::is_term(term(a.term), a.polarity); },
                      },
                      p.node);
  }

  Statement statement(const Statement& s) {
    Statement out = std::visit(
        overloaded{
            [&](const And& a) { return build::and_(statement(*a.lhs), statement(*a.rhs)); },
            [&](const Or& a) { return build::or_(statement(*a.lhs), statement(*a.rhs)); },
            [&](const IfThen& a) { return build::if_then(statement(*a.condition), statement(*a.consequence)); },
            [&](const Iff& a) { return build::iff(statement(*a.lhs), statement(*a.rhs)); },
            [&](const Not& a) { return build::not_(statement(*a.operand)); },
            [&](const ForQuantified& a) { return Statement{ForQuantified{qnotion(a.qnotion), statement(*a.body)}}; },
            [&](const Does& a) { return build::does(term(a.subject), predicate(a.predicate)); },
            [&](const ThereExists& a) { return build::exists(notion(a.notion)); },
            [&](const ThereExistsNo& a) { return build::exists_no(notion(a.notion)); },
        },
        s.node);
    return on_statement(std::move(out));
  }

  ForthelText text(const ForthelText& t) {
    ForthelText out = t;
    for (auto& a : out.example.assumptions) a = statement(a);
    out.example.conclusion = statement(out.example.conclusion);
    return out;
  }
};

// Read-only walk used for collecting names and checking invariants.
struct Visitor {
  std::function<void(const Notion&)> on_notion = [](const Notion&) {};
  std::function<void(const Term&)> on_term = [](const Term&) {};
  std::function<void(const Statement&)> on_statement = [](const Statement&) {};

  void notion(const Notion& n) {
    on_notion(n);
    if (!n.right_attribute) return;
    std::visit(overloaded{[&](const IsPred& p) { predicate(*p.predicate); },
                          [&](const SuchThat& s) { statement(*s.statement); }},
               *n.right_attribute);
  }
  void term(const Term& t) {
    on_term(t);
    std::visit(overloaded{
                   [&](const BinApp& b) {
                     term(*b.lhs);
                     term(*b.rhs);
                   },
                   [&](const Quantified& q) { notion(q.qnotion.notion); },
                   [&](const auto&) {},
               },
               t.node);
  }
  void predicate(const Predicate& p) {
    std::visit(overloaded{
                   [&](const IsAdj&) {},
                   [&](const IsAdj1& a) { term(a.argument); },
                   [&](const IsNotion& a) { notion(a.notion); },
                   [&](const IsTerm& a) { term(a.term); },
               },
               p.node);
  }
  void statement(const Statement& s) {
    on_statement(s);
    std::visit(overloaded{
                   [&](const And& a) {
                     statement(*a.lhs);
                     statement(*a.rhs);
                   },
                   [&](const Or& a) {
                     statement(*a.lhs);
                     statement(*a.rhs);
                   },
                   [&](const IfThen& a) {
                     statement(*a.condition);
                     statement(*a.consequence);
                   },
                   [&](const Iff& a) {
                     statement(*a.lhs);
                     statement(*a.rhs);
                   },
                   [&](const Not& a) { statement(*a.operand); },
                   [&](const ForQuantified& a) {
                     notion(a.qnotion.notion);
                     statement(*a.body);
                   },
                   [&](const Does& a) {
                     term(a.subject);
                     predicate(a.predicate);
                   },
                   [&](const ThereExists& a) { notion(a.notion); },
                   [&](const ThereExistsNo& a) { notion(a.notion); },
               },
               s.node);
  }
  void text(const ForthelText& t) {
    for (const auto& a : t.example.assumptions) statement(a);
    statement(t.example.conclusion);
  }
};

Name require_name(const Notion& n) {
  auto name = name_of(n.name);
  if (!name) throw std::invalid_argument("notion '" + linearize(n) + "' has no name");
  return *name;
}

Statement raise_in_does(const Statement& s) {
  const auto* d = as<Does>(s);
  if (!d) return s;

  std::vector<QuantifiedNotion> raised;
  auto residual = [&](const Term& t) -> Term {
    const auto* q = as<Quantified>(t);
    if (!q) return t;
    raised.push_back(q->qnotion);
    return build::var(require_name(q->qnotion.notion));
  };

  Term subject = residual(d->subject);
  Predicate pred = std::visit(overloaded{
                                  [&](const IsAdj1& a) { return build::adj1(a.adjective, residual(a.argument), a.polarity); },
                                  [&](const IsTerm& a) { return build::is_term(residual(a.term), a.polarity); },
                                  [&](const auto&) { return d->predicate; },
                              },
                              d->predicate.node);
  if (raised.empty()) return s;

  Statement body = build::does(std::move(subject), std::move(pred));
  for (auto it = raised.rbegin(); it != raised.rend(); ++it) body = Statement{ForQuantified{*it, std::move(body)}};
  return body;
}

Notion flatten_one(Notion n) {
  if (!n.left_attribute && (!n.right_attribute || std::holds_alternative<SuchThat>(*n.right_attribute))) return n;

  const Term self = build::var(require_name(n));
  std::vector<Statement> conjuncts;
  if (n.left_attribute) conjuncts.push_back(build::does(self, build::adj(*n.left_attribute)));
  if (n.right_attribute) {
    conjuncts.push_back(std::visit(overloaded{
                                       [&](const IsPred& p) { return build::does(self, *p.predicate); },
                                       [&](const SuchThat& st) { return *st.statement; },
                                   },
                                   *n.right_attribute));
  }
  n.left_attribute.reset();
  n.right_attribute = SuchThat{build::conjunction(std::move(conjuncts))};
  return n;
}

ForthelText raise_text(const ForthelText& t) {
  Rewriter r;
  r.on_statement = raise_in_does;
  return r.text(t);
}

ForthelText flatten_text(const ForthelText& t) {
  Rewriter r;
  r.on_notion = flatten_one;
  return r.text(t);
}

// `v is a <notion v ...>` with positive polarity; returns the notion.
const Notion* typing_of(const Statement& s) {
  const auto* d = as<Does>(s);
  if (!d) return nullptr;
  const auto* v = as<Var>(d->subject);
  const auto* in = as<IsNotion>(d->predicate);
  if (!v || !in || in->polarity != Polarity::Pos) return nullptr;
  if (to_slot(v->name) != in->notion.name) return nullptr;
  return &in->notion;
}

void split_into(const Statement& s, std::vector<Statement>& out) {
  if (const auto* a = as<And>(s)) {
    split_into(*a->lhs, out);
    split_into(*a->rhs, out);
    return;
  }
  if (const auto* n = typing_of(s); n && n->right_attribute) {
    if (const auto* st = std::get_if<SuchThat>(&*n->right_attribute)) {
      Notion bare = *n;
      bare.right_attribute.reset();
      const auto& d = std::get<Does>(s.node);
      out.push_back(build::does(d.subject, build::is_notion(std::move(bare))));
      split_into(*st->statement, out);
      return;
    }
  }
  out.push_back(s);
}

}  // namespace

std::string display_name(const Name& n) {
  return std::visit(overloaded{[](const Named& v) { return v.letter; },
                               [](const Meta& m) { return "x" + std::to_string(m.id); }},
                    n);
}

NameSupply::NameSupply(const ForthelText& text) {
  Visitor v;
  v.on_notion = [&](const Notion& n) {
    if (auto name = name_of(n.name)) used_.insert(display_name(*name));
  };
  v.on_term = [&](const Term& t) {
    if (const auto* var = as<Var>(t)) used_.insert(display_name(var->name));
  };
  v.text(text);
}

Meta NameSupply::fresh() {
  while (used_.count("x" + std::to_string(next_id_))) ++next_id_;
  const int id = next_id_++;
  used_.insert("x" + std::to_string(id));
  return Meta{id};
}

ForthelText assign_names(const ForthelText& text, NameSupply& supply) {
  Rewriter r;
  r.on_notion = [&](Notion n) {
    if (std::holds_alternative<Unnamed>(n.name)) n.name = supply.fresh();
    return n;
  };
  return r.text(text);
}

ForthelText unify_variables(const ForthelText& text) {
  Rewriter r;
  r.on_statement = [](Statement s) {
    const auto* d = as<Does>(s);
    if (!d) return s;
    const auto* v = as<Var>(d->subject);
    const auto* in = as<IsNotion>(d->predicate);
    if (!v || !in || !std::holds_alternative<Meta>(in->notion.name)) return s;
    Notion n = in->notion;
    n.name = to_slot(v->name);
    return build::does(d->subject, build::is_notion(std::move(n), in->polarity));
  };
  return r.text(text);
}

Statement raise_quantifiers(const Statement& stmt) {
  Rewriter r;
  r.on_statement = raise_in_does;
  return r.statement(stmt);
}

Notion flatten_attributes(const Notion& notion) {
  Rewriter r;
  r.on_notion = flatten_one;
  return r.notion(notion);
}

Example split_assumptions(const Example& ex) {
  Example out{{}, ex.conclusion};
  for (const auto& a : ex.assumptions) split_into(a, out.assumptions);
  return out;
}

std::optional<std::string> normal_form_violation(const ForthelText& text) {
  std::optional<std::string> problem;
  auto report = [&](std::string what) {
    if (!problem) problem = std::move(what);
  };

  Visitor v;
  v.on_notion = [&](const Notion& n) {
    if (std::holds_alternative<Unnamed>(n.name)) report("unnamed notion '" + linearize(n) + "'");
    if (n.left_attribute) report("left attribute on '" + linearize(n) + "'");
    if (n.right_attribute && std::holds_alternative<IsPred>(*n.right_attribute)) {
      report("unflattened right attribute on '" + linearize(n) + "'");
    }
  };
  v.on_term = [&](const Term& t) {
    if (as<Quantified>(t)) report("in-situ quantifier '" + linearize(t) + "'");
  };
  v.text(text);
  if (problem) return problem;

  for (const auto& a : text.example.assumptions) {
    if (as<And>(a)) return "conjunctive assumption '" + linearize(a) + "'";
    if (const auto* n = typing_of(a); n && n->right_attribute) return "unsplit typing assumption '" + linearize(a) + "'";
  }
  return std::nullopt;
}

NormalForm::NormalForm(ForthelText text) : text_(std::move(text)) {
  if (auto problem = normal_form_violation(text_)) throw NotNormalForm(*problem);
}

NormalForm simplify(const ForthelText& text, NameSupply& supply) {
  ForthelText t = assign_names(text, supply);
  t = unify_variables(t);
  // Raising turns quantified subjects into variables, which can then name
  // the notion they are said to be.
  t = unify_variables(raise_text(t));
  t = flatten_text(t);
  // Flattening turns `that`/adjectival attributes into statements, which may
  // expose quantified arguments ("greater than every integer").
  t = unify_variables(raise_text(t));
  t.example = split_assumptions(t.example);
  return NormalForm(std::move(t));
}

NormalForm simplify(const ForthelText& text) {
  NameSupply supply(text);
  return simplify(text, supply);
}

}  // namespace fl
