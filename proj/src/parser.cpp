#include "fl/parser.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <utility>

namespace fl {
namespace {

template <typename T>
using Alts = std::vector<std::pair<T, std::size_t>>;

// Arithmetic levels, loosest first; kPrimary is the atom level.
enum Level : int { kSum = 1, kMinus = 2, kTimes = 3, kExp = 4, kPrimary = 5 };

template <typename T>
std::vector<T> dedup(std::vector<T> items) {
  std::vector<T> out;
  for (auto& t : items) {
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
  }
  return out;
}

// Memoized all-parses recursive descent. Every nonterminal returns each
// (tree, end) pair it can derive from a start position; the grammar has no
// left recursion, so plain memoization terminates.
class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : toks_(tokens), lex_(Lexicon::builtin()) {}

  Alts<ForthelText> text();
  Alts<Statement> statement(std::size_t p) { return iff(p, true); }
  Alts<Term> term(std::size_t p);
  Alts<Term> definite_term(std::size_t p) { return arith(p, kSum); }

  std::size_t size() const { return toks_.size(); }

  void expect(std::size_t p, const std::string& what) {
    if (p > furthest_) {
      furthest_ = p;
      expected_.clear();
    }
    if (p == furthest_) expected_.insert(what);
  }

  std::vector<Diagnostic> diagnostics() const {
    Span span;
    std::string found = "end of input";
    if (furthest_ < toks_.size()) {
      span = toks_[furthest_].span;
      found = "'" + toks_[furthest_].text + "'";
    } else if (!toks_.empty()) {
      span = {toks_.back().span.end, toks_.back().span.end};
    }
    std::string msg = "unexpected " + found + " at token " + std::to_string(furthest_);
    if (!expected_.empty()) {
      msg += "; expected ";
      bool first = true;
      for (const auto& e : expected_) {
        if (!first) msg += ", ";
        msg += e;
        first = false;
      }
    }
    return {Diagnostic{span, msg}};
  }

 private:
  bool word(std::size_t p, std::string_view w) {
    if (p < toks_.size() && toks_[p].is_word(w)) return true;
    expect(p, "'" + std::string(w) + "'");
    return false;
  }
  bool symbol(std::size_t p, std::string_view s) {
    if (p < toks_.size() && toks_[p].is_symbol(s)) return true;
    expect(p, "'" + std::string(s) + "'");
    return false;
  }
  bool period(std::size_t p) {
    if (p < toks_.size() && toks_[p].kind == TokenKind::Period) return true;
    expect(p, "'.'");
    return false;
  }

  std::vector<LexiconMatch> lexical(std::size_t p, Category c, const char* what) {
    std::vector<LexiconMatch> out;
    if (p < toks_.size()) {
      for (const auto& m : lex_.match(toks_, p)) {
        if (m.entry->category == c) out.push_back(m);
      }
    }
    if (out.empty()) expect(p, what);
    return out;
  }

  Alts<Statement> iff(std::size_t p, bool open);
  Alts<Statement> disjunction(std::size_t p, bool open);
  Alts<Statement> comma(std::size_t p, bool open);
  Alts<Statement> conjunction(std::size_t p, bool open);
  Alts<Statement> atom(std::size_t p, bool open);

  Alts<Notion> notion(std::size_t p);
  Alts<NameSlot> name_slot(std::size_t p);
  Alts<QuantifiedNotion> quantified_notion(std::size_t p);
  Alts<Predicate> does_predicate(std::size_t p);
  Alts<Predicate> is_predicate(std::size_t p);
  Alts<Term> arith(std::size_t p, int level);
  Alts<Term> primary(std::size_t p);

  template <typename Make>
  Alts<Statement> binary(std::size_t p, bool open, std::string_view connective, Alts<Statement> (Parser::*lower)(std::size_t, bool),
                         Alts<Statement> (Parser::*self)(std::size_t, bool), Make make);

  std::span<const Token> toks_;
  const Lexicon& lex_;
  std::size_t furthest_ = 0;
  std::set<std::string> expected_;

  std::map<std::tuple<int, std::size_t, bool>, Alts<Statement>> stmt_memo_;
  std::map<std::pair<int, std::size_t>, Alts<Term>> term_memo_;
  std::map<std::size_t, Alts<Term>> full_term_memo_;
  std::map<std::size_t, Alts<Notion>> notion_memo_;
  std::map<std::size_t, Alts<Predicate>> pred_memo_;
};

Alts<ForthelText> Parser::text() {
  Alts<ForthelText> out;
  if (!word(0, "ex") || !period(1)) return out;

  std::vector<std::pair<std::vector<Statement>, std::size_t>> states{{{}, 2}};
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::size_t p = states[i].second;
    if (!word(p, "assume")) continue;
    for (auto& [s, e] : statement(p + 1)) {
      if (!period(e)) continue;
      auto list = states[i].first;
      list.push_back(std::move(s));
      states.emplace_back(std::move(list), e + 1);
    }
  }

  for (const auto& [assumptions, p] : states) {
    const std::size_t start = word(p, "then") ? p + 1 : p;
    for (auto& [s, e] : statement(start)) {
      if (!period(e)) continue;
      if (e + 1 != toks_.size()) {
        expect(e + 1, "end of input");
        continue;
      }
      out.push_back({ForthelText{Example{assumptions, std::move(s)}}, e + 1});
    }
  }
  return out;
}

template <typename Make>
Alts<Statement> Parser::binary(std::size_t p, bool open, std::string_view connective,
                               Alts<Statement> (Parser::*lower)(std::size_t, bool),
                               Alts<Statement> (Parser::*self)(std::size_t, bool), Make make) {
  Alts<Statement> out = (this->*lower)(p, open);
  // Only a closed operand may stand left of a connective: `for` and `if`
  // take everything to their right.
  for (auto& [lhs, e] : (this->*lower)(p, false)) {
    const bool matched = connective == "," ? symbol(e, ",") : word(e, connective);
    if (!matched) continue;
    for (auto& [rhs, e2] : (this->*self)(e + 1, open)) out.push_back({make(lhs, std::move(rhs)), e2});
  }
  return out;
}

Alts<Statement> Parser::iff(std::size_t p, bool open) {
  auto key = std::make_tuple(0, p, open);
  if (auto it = stmt_memo_.find(key); it != stmt_memo_.end()) return it->second;
  auto out = binary(p, open, "iff", &Parser::disjunction, &Parser::iff,
                    [](Statement a, Statement b) { return build::iff(std::move(a), std::move(b)); });
  stmt_memo_[key] = out;
  return out;
}

Alts<Statement> Parser::disjunction(std::size_t p, bool open) {
  auto key = std::make_tuple(1, p, open);
  if (auto it = stmt_memo_.find(key); it != stmt_memo_.end()) return it->second;
  auto out = binary(p, open, "or", &Parser::comma, &Parser::disjunction,
                    [](Statement a, Statement b) { return build::or_(std::move(a), std::move(b)); });
  stmt_memo_[key] = out;
  return out;
}

Alts<Statement> Parser::comma(std::size_t p, bool open) {
  auto key = std::make_tuple(2, p, open);
  if (auto it = stmt_memo_.find(key); it != stmt_memo_.end()) return it->second;
  auto out = binary(p, open, ",", &Parser::conjunction, &Parser::comma,
                    [](Statement a, Statement b) { return build::and_(std::move(a), std::move(b)); });
  stmt_memo_[key] = out;
  return out;
}

Alts<Statement> Parser::conjunction(std::size_t p, bool open) {
  auto key = std::make_tuple(3, p, open);
  if (auto it = stmt_memo_.find(key); it != stmt_memo_.end()) return it->second;
  auto out = binary(p, open, "and", &Parser::atom, &Parser::conjunction,
                    [](Statement a, Statement b) { return build::and_(std::move(a), std::move(b)); });
  stmt_memo_[key] = out;
  return out;
}

Alts<Statement> Parser::atom(std::size_t p, bool open) {
  auto key = std::make_tuple(4, p, open);
  if (auto it = stmt_memo_.find(key); it != stmt_memo_.end()) return it->second;
  Alts<Statement> out;

  // term doesPredicate
  for (auto& [t, e] : term(p)) {
    for (auto& [pred, e2] : does_predicate(e)) out.push_back({build::does(t, std::move(pred)), e2});
  }

  // there exist(s) [a|an|no] notion
  if (word(p, "there") && (word(p + 1, "exist") || word(p + 1, "exists"))) {
    const std::size_t q = p + 2;
    if (word(q, "no")) {
      for (auto& [n, e] : notion(q + 1)) out.push_back({build::exists_no(std::move(n)), e});
    }
    for (auto& [n, e] : notion(q)) out.push_back({build::exists(std::move(n)), e});
    if (word(q, "a") || word(q, "an")) {
      for (auto& [n, e] : notion(q + 1)) out.push_back({build::exists(std::move(n)), e});
    }
  }

  // it's not that
  if (word(p, "it's") && word(p + 1, "not") && word(p + 2, "that")) {
    for (auto& [s, e] : atom(p + 3, open)) out.push_back({build::not_(std::move(s)), e});
  }

  if (open) {
    // for quantifiedNotion , statement
    if (word(p, "for")) {
      for (auto& [qn, e] : quantified_notion(p + 1)) {
        if (!symbol(e, ",")) continue;
        for (auto& [body, e2] : statement(e + 1)) {
          out.push_back({Statement{ForQuantified{qn, std::move(body)}}, e2});
        }
      }
    }
    // if statement then statement
    if (word(p, "if")) {
      for (auto& [cond, e] : statement(p + 1)) {
        if (!word(e, "then")) continue;
        for (auto& [cons, e2] : statement(e + 1)) out.push_back({build::if_then(cond, std::move(cons)), e2});
      }
    }
  } else if (p < toks_.size() && (toks_[p].is_word("for") || toks_[p].is_word("if"))) {
    // Recorded so a dangling `for`/`if` on the left of a connective reports sensibly.
    expect(p, "a closed statement");
  }

  stmt_memo_[key] = out;
  return out;
}

Alts<QuantifiedNotion> Parser::quantified_notion(std::size_t p) {
  Alts<QuantifiedNotion> out;
  static const std::pair<std::string_view, Quantifier> kWords[] = {
      {"every", Quantifier::Every}, {"some", Quantifier::Some}, {"no", Quantifier::No}};
  for (const auto& [w, q] : kWords) {
    if (!word(p, w)) continue;
    for (auto& [n, e] : notion(p + 1)) out.push_back({QuantifiedNotion{q, std::move(n)}, e});
  }
  return out;
}

Alts<NameSlot> Parser::name_slot(std::size_t p) {
  Alts<NameSlot> out{{Unnamed{}, p}};
  for (const auto& m : lexical(p, Category::Variable, "a variable")) {
    out.push_back({Named{toks_[p].text}, p + m.length});
  }
  if (symbol(p, "(") && word(p + 1, "x")) {
    if (p + 2 < toks_.size() && toks_[p + 2].kind == TokenKind::IntLit) {
      if (symbol(p + 3, ")")) out.push_back({Meta{static_cast<int>(toks_[p + 2].value)}, p + 4});
    } else {
      expect(p + 2, "an integer");
    }
  }
  return out;
}

Alts<Notion> Parser::notion(std::size_t p) {
  if (auto it = notion_memo_.find(p); it != notion_memo_.end()) return it->second;
  Alts<Notion> out;

  std::vector<std::pair<std::optional<std::string>, std::size_t>> lefts{{std::nullopt, p}};
  for (const auto& m : lexical(p, Category::RawAdjective0, "an adjective")) lefts.push_back({m.entry->key, p + m.length});

  for (const auto& [left, q] : lefts) {
    for (const auto& noun : lexical(q, Category::RawNoun0, "a noun")) {
      for (const auto& [name, r] : name_slot(q + noun.length)) {
        Notion bare{left, noun.entry->key, name, std::nullopt};
        out.push_back({bare, r});

        for (auto& [pred, e] : is_predicate(r)) {
          Notion n = bare;
          n.right_attribute = IsPred{std::move(pred)};
          out.push_back({std::move(n), e});
        }
        if (word(r, "that")) {
          for (auto& [pred, e] : does_predicate(r + 1)) {
            Notion n = bare;
            n.right_attribute = IsPred{std::move(pred)};
            out.push_back({std::move(n), e});
          }
        }
        if (word(r, "such") && word(r + 1, "that")) {
          for (auto& [s, e] : statement(r + 2)) {
            Notion n = bare;
            n.right_attribute = SuchThat{std::move(s)};
            out.push_back({std::move(n), e});
          }
        }
      }
    }
  }
  notion_memo_[p] = out;
  return out;
}

// polarity primAdjective
Alts<Predicate> Parser::is_predicate(std::size_t p) {
  Alts<Predicate> out;
  for (const auto pol : {Polarity::Pos, Polarity::Neg}) {
    std::size_t q = p;
    if (pol == Polarity::Neg) {
      if (!word(p, "not")) continue;
      q = p + 1;
    }
    for (const auto& m : lexical(q, Category::RawAdjective0, "an adjective")) {
      out.push_back({build::adj(m.entry->key, pol), q + m.length});
    }
    for (const auto& m : lexical(q, Category::RawAdjective1, "a relation")) {
      for (auto& [t, e] : term(q + m.length)) out.push_back({build::adj1(m.entry->key, std::move(t), pol), e});
    }
  }
  return out;
}

// (is | are) isPredicate | (is | are) is_aPredicate
Alts<Predicate> Parser::does_predicate(std::size_t p) {
  if (auto it = pred_memo_.find(p); it != pred_memo_.end()) return it->second;
  Alts<Predicate> out;
  if (word(p, "is") || word(p, "are")) {
    const std::size_t q = p + 1;
    out = is_predicate(q);
    for (const auto pol : {Polarity::Pos, Polarity::Neg}) {
      std::size_t r = q;
      if (pol == Polarity::Neg) {
        if (!word(q, "not")) continue;
        r = q + 1;
      }
      for (auto& [n, e] : notion(r)) out.push_back({build::is_notion(std::move(n), pol), e});
      if (word(r, "a") || word(r, "an")) {
        for (auto& [n, e] : notion(r + 1)) out.push_back({build::is_notion(std::move(n), pol), e});
      }
      for (auto& [t, e] : definite_term(r)) out.push_back({build::is_term(std::move(t), pol), e});
    }
  }
  pred_memo_[p] = out;
  return out;
}

Alts<Term> Parser::term(std::size_t p) {
  if (auto it = full_term_memo_.find(p); it != full_term_memo_.end()) return it->second;
  Alts<Term> out;
  for (auto& [qn, e] : quantified_notion(p)) out.push_back({Term{Quantified{std::move(qn)}}, e});
  for (auto& alt : definite_term(p)) out.push_back(std::move(alt));
  full_term_memo_[p] = out;
  return out;
}

Alts<Term> Parser::arith(std::size_t p, int level) {
  if (level == kPrimary) return primary(p);
  auto key = std::make_pair(level, p);
  if (auto it = term_memo_.find(key); it != term_memo_.end()) return it->second;

  Alts<Term> out = arith(p, level + 1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto lhs = out[i].first;
    const std::size_t e = out[i].second;
    if (e >= toks_.size() || toks_[e].kind != TokenKind::Symbol) {
      expect(e, "an operator");
      continue;
    }
    for (const auto& m : lex_.match(toks_, e)) {
      if (m.entry->category != Category::RawNoun2) continue;
      const auto& op = m.entry->key;
      const int op_level = op == "SUM" ? kSum : op == "MINUS" ? kMinus : op == "EXP" ? kExp : kTimes;
      if (op_level != level) continue;
      for (auto& [rhs, e2] : arith(e + 1, level + 1)) out.push_back({build::bin(op, lhs, std::move(rhs)), e2});
    }
  }
  term_memo_[key] = out;
  return out;
}

Alts<Term> Parser::primary(std::size_t p) {
  Alts<Term> out;
  if (p < toks_.size() && toks_[p].kind == TokenKind::IntLit) {
    out.push_back({build::lit(toks_[p].value), p + 1});
    return out;
  }
  for (const auto& m : lexical(p, Category::Variable, "a term")) {
    out.push_back({build::var(toks_[p].text), p + m.length});
  }
  if (symbol(p, "(")) {
    for (auto& [t, e] : arith(p + 1, kSum)) {
      if (symbol(e, ")")) out.push_back({std::move(t), e + 1});
    }
    if (word(p + 1, "x") && p + 2 < toks_.size() && toks_[p + 2].kind == TokenKind::IntLit && symbol(p + 3, ")")) {
      out.push_back({build::meta_var(static_cast<int>(toks_[p + 2].value)), p + 4});
    }
  }
  return out;
}

template <typename T>
ParseResult<T> finish(Parser& parser, Alts<T> alts) {
  ParseResult<T> result;
  std::vector<T> complete;
  for (auto& [t, e] : alts) {
    if (e == parser.size()) {
      complete.push_back(std::move(t));
    } else {
      parser.expect(e, "end of input");
    }
  }
  result.trees = dedup(std::move(complete));
  if (result.trees.empty()) result.diagnostics = parser.diagnostics();
  return result;
}

}  // namespace

ParseResult<ForthelText> parse_text(std::span<const Token> tokens) {
  Parser parser(tokens);
  return finish(parser, parser.text());
}

ParseResult<Term> parse_term(std::span<const Token> tokens) {
  Parser parser(tokens);
  return finish(parser, parser.definite_term(0));
}

ParseResult<Statement> parse_statement(std::span<const Token> tokens) {
  Parser parser(tokens);
  return finish(parser, parser.statement(0));
}

}  // namespace fl
