#include "lean_reader.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fl/overloaded.hpp"

namespace fl::testkit {

using namespace fl::lean;

namespace {

struct Tok {
  std::string text;
  bool ident = false;
  bool number = false;
};

const std::vector<std::string> kSymbols = {":=", "∀", "∃", "∧", "∨", "¬", "→", "↔", "≤", "≥", "≠", "ℝ", "ℤ", "ℚ",
                                           "(",  ")", ":", ",", "<", ">", "=", "+", "-", "*", "/", "^"};

std::vector<Tok> lex(std::string_view s) {
  std::vector<Tok> out;
  std::size_t i = 0;
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  auto is_alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\n' || c == '\t') {
      ++i;
      continue;
    }
    if (is_digit(c) || (c == '-' && i + 1 < s.size() && is_digit(s[i + 1]))) {
      std::size_t j = i + 1;
      while (j < s.size() && is_digit(s[j])) ++j;
      out.push_back({std::string(s.substr(i, j - i)), false, true});
      i = j;
      continue;
    }
    if (is_alpha(c)) {
      std::size_t j = i;
      while (j < s.size() && (is_alpha(s[j]) || is_digit(s[j]) || s[j] == '\'')) ++j;
      out.push_back({std::string(s.substr(i, j - i)), true, false});
      i = j;
      continue;
    }
    bool hit = false;
    for (const auto& sym : kSymbols) {
      if (s.substr(i, sym.size()) == sym) {
        out.push_back({sym});
        i += sym.size();
        hit = true;
        break;
      }
    }
    if (!hit) throw ReadError("unexpected character at " + std::to_string(i));
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::vector<Tok> toks) : toks_(std::move(toks)) {}

  Command command() {
    Command c;
    if (!accept_ident("example")) fail("example");
    while (peek("(")) {
      take("(");
      std::string name = ident();
      take(":");
      if (auto t = type()) {
        c.binders.emplace_back(TypeBinder{name, *t});
      } else {
        c.binders.emplace_back(HypBinder{name, prop()});
      }
      take(")");
    }
    take(":");
    c.goal = prop();
    take(":=");
    if (!accept_ident("sorry")) fail("sorry");
    end();
    return c;
  }

  Prop whole_prop() {
    auto p = prop();
    end();
    return p;
  }

 private:
  Prop prop() {
    if (peek("∀") || peek("∃")) {
      bool all = peek("∀");
      ++pos_;
      take("(");
      std::string name = ident();
      take(":");
      auto t = type();
      if (!t) fail("type");
      take(")");
      take(",");
      auto body = prop();
      return all ? forall(name, *t, body) : exists(name, *t, body);
    }
    if (accept_ident("True")) return Prop{TrueP{}};
    static const std::map<std::string, UnaryPred> kPreds = {{"pos", UnaryPred::Pos},
                                                            {"odd", UnaryPred::Odd},
                                                            {"even", UnaryPred::Even},
                                                            {"nneg", UnaryPred::Nneg},
                                                            {"neg", UnaryPred::Neg}};
    if (pos_ < toks_.size() && toks_[pos_].ident) {
      if (auto it = kPreds.find(toks_[pos_].text); it != kPreds.end()) {
        ++pos_;
        return pred(it->second, term());
      }
    }
    if (peek("(")) {
      // A parenthesis opens either a compound proposition or a compound term.
      std::size_t save = pos_;
      try {
        return paren_prop();
      } catch (const ReadError&) {
        pos_ = save;
      }
    }
    return relation();
  }

  Prop paren_prop() {
    take("(");
    if (peek("¬")) {
      ++pos_;
      auto p = prop();
      take(")");
      return not_(p);
    }
    auto lhs = prop();
    std::string op = next();
    auto rhs = prop();
    take(")");
    if (op == "∧") return and_(lhs, rhs);
    if (op == "∨") return or_(lhs, rhs);
    if (op == "→") return imp(lhs, rhs);
    if (op == "↔") return iff(lhs, rhs);
    fail("connective");
  }

  Prop relation() {
    static const std::map<std::string, RelOp> kRels = {{"<", RelOp::Lt}, {"≤", RelOp::Le}, {">", RelOp::Gt},
                                                       {"≥", RelOp::Ge}, {"=", RelOp::Eq},  {"≠", RelOp::Ne}};
    auto lhs = term();
    auto it = kRels.find(next());
    if (it == kRels.end()) fail("relation");
    return rel(it->second, lhs, term());
  }

  Term term() {
    static const std::map<std::string, ArithOp> kOps = {{"+", ArithOp::Add}, {"-", ArithOp::Sub}, {"*", ArithOp::Mul},
                                                        {"/", ArithOp::Div}, {"^", ArithOp::Pow}};
    if (pos_ >= toks_.size()) fail("term");
    const Tok& t = toks_[pos_];
    if (t.number) {
      ++pos_;
      return lit(std::stoll(t.text));
    }
    if (t.ident) {
      ++pos_;
      return var(t.text);
    }
    take("(");
    auto lhs = term();
    auto it = kOps.find(next());
    if (it == kOps.end()) fail("operator");
    auto rhs = term();
    take(")");
    return arith(it->second, lhs, rhs);
  }

  std::optional<Type> type() {
    if (peek("ℝ")) return ++pos_, Type::Real;
    if (peek("ℤ")) return ++pos_, Type::Int;
    if (peek("ℚ")) return ++pos_, Type::Rat;
    return std::nullopt;
  }

  bool peek(std::string_view s) const { return pos_ < toks_.size() && !toks_[pos_].ident && toks_[pos_].text == s; }
  void take(std::string_view s) {
    if (!peek(s)) fail(std::string(s));
    ++pos_;
  }
  bool accept_ident(std::string_view s) {
    if (pos_ < toks_.size() && toks_[pos_].ident && toks_[pos_].text == s) return ++pos_, true;
    return false;
  }
  std::string ident() {
    if (pos_ >= toks_.size() || !toks_[pos_].ident) fail("identifier");
    return toks_[pos_++].text;
  }
  std::string next() {
    if (pos_ >= toks_.size()) fail("token");
    return toks_[pos_++].text;
  }
  void end() {
    if (pos_ != toks_.size()) fail("end of input");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ReadError("expected " + what + " at token " + std::to_string(pos_));
  }

  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
};

// Names that normalize_names is allowed to rename.
bool renameable(const std::string& n) { return is_generated_var(n) || is_hyp_label(n); }

class Alpha {
 public:
  bool name(const std::string& a, const std::string& b) {
    if (!renameable(a) || !renameable(b)) return a == b;
    if (is_hyp_label(a) != is_hyp_label(b)) return false;
    auto [ia, fresh_a] = ab_.emplace(a, b);
    auto [ib, fresh_b] = ba_.emplace(b, a);
    return ia->second == b && ib->second == a;
  }

  bool term(const Term& a, const Term& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(overloaded{
                          [&](const VarT& x) { return name(x.name, std::get<VarT>(b.node).name); },
                          [&](const LitT& x) { return x == std::get<LitT>(b.node); },
                          [&](const ArithT& x) {
                            const auto& y = std::get<ArithT>(b.node);
                            return x.op == y.op && term(*x.lhs, *y.lhs) && term(*x.rhs, *y.rhs);
                          },
                      },
                      a.node);
  }

  bool prop(const Prop& a, const Prop& b) {
    if (a.node.index() != b.node.index()) return false;
    auto pair = [&](const auto& x) {
      const auto& y = std::get<std::decay_t<decltype(x)>>(b.node);
      return prop(*x.lhs, *y.lhs) && prop(*x.rhs, *y.rhs);
    };
    auto quant = [&](const auto& x) {
      const auto& y = std::get<std::decay_t<decltype(x)>>(b.node);
      return x.type == y.type && name(x.name, y.name) && prop(*x.body, *y.body);
    };
    return std::visit(overloaded{
                          [&](const Rel& x) {
                            const auto& y = std::get<Rel>(b.node);
                            return x.op == y.op && term(x.lhs, y.lhs) && term(x.rhs, y.rhs);
                          },
                          [&](const PredApp& x) {
                            const auto& y = std::get<PredApp>(b.node);
                            return x.pred == y.pred && term(x.arg, y.arg);
                          },
                          [&](const NotP& x) { return prop(*x.operand, *std::get<NotP>(b.node).operand); },
                          [&](const AndP& x) { return pair(x); },
                          [&](const OrP& x) { return pair(x); },
                          [&](const Imp& x) { return pair(x); },
                          [&](const IffP& x) { return pair(x); },
                          [&](const Forall& x) { return quant(x); },
                          [&](const Exists& x) { return quant(x); },
                          [&](const TrueP&) { return true; },
                      },
                      a.node);
  }

 private:
  std::map<std::string, std::string> ab_, ba_;
};

}  // namespace

Command read_command(std::string_view text) { return Reader(lex(text)).command(); }
Prop read_prop(std::string_view text) { return Reader(lex(text)).whole_prop(); }

bool alpha_equivalent(const Command& a, const Command& b) {
  if (a.binders.size() != b.binders.size()) return false;
  Alpha alpha;
  for (std::size_t i = 0; i < a.binders.size(); ++i) {
    if (a.binders[i].index() != b.binders[i].index()) return false;
    if (const auto* ta = std::get_if<TypeBinder>(&a.binders[i])) {
      const auto& tb = std::get<TypeBinder>(b.binders[i]);
      if (ta->type != tb.type || !alpha.name(ta->name, tb.name)) return false;
    } else {
      const auto& ha = std::get<HypBinder>(a.binders[i]);
      const auto& hb = std::get<HypBinder>(b.binders[i]);
      if (!alpha.name(ha.label, hb.label) || !alpha.prop(ha.prop, hb.prop)) return false;
    }
  }
  return alpha.prop(a.goal, b.goal);
}

}  // namespace fl::testkit
