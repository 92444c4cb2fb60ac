#include "fl/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <utility>

namespace fl {
namespace {

#include "lexicon_data.inc"

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
char to_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

constexpr std::string_view kSymbols = "+-*/^(),";

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

bool same_lexeme(const Token& a, const Token& b) {
  return a.kind == b.kind && a.text == b.text && a.value == b.value;
}

UnknownCharacter::UnknownCharacter(Span span)
    : TokenizeError("unknown character at byte " + std::to_string(span.begin), span) {}

std::string preprocess(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char c : raw) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(to_lower(c));
  }
  return out;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_alpha(c)) {
      // Words may carry an inner apostrophe ("it's").
      std::string word;
      while (i < n && (is_alpha(text[i]) || (text[i] == '\'' && i + 1 < n && is_alpha(text[i + 1]) && !word.empty()))) {
        word.push_back(to_lower(text[i]));
        ++i;
      }
      tokens.push_back({TokenKind::Word, std::move(word), 0, {start, i}});
      continue;
    }
    if (is_digit(c) || (c == '-' && i + 1 < n && is_digit(text[i + 1]))) {
      ++i;
      while (i < n && is_digit(text[i])) ++i;
      std::string lit(text.substr(start, i - start));
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(lit.data(), lit.data() + lit.size(), value);
      if (ec != std::errc() || ptr != lit.data() + lit.size()) {
        throw TokenizeError("integer literal out of range: " + lit, {start, i});
      }
      tokens.push_back({TokenKind::IntLit, std::move(lit), value, {start, i}});
      continue;
    }
    if (kSymbols.find(c) != std::string_view::npos) {
      tokens.push_back({TokenKind::Symbol, std::string(1, c), 0, {start, start + 1}});
      ++i;
      continue;
    }
    if (c == '.') {
      tokens.push_back({TokenKind::Period, ".", 0, {start, start + 1}});
      ++i;
      continue;
    }
    // Report the whole UTF-8 sequence, not just its lead byte.
    std::size_t end = i + 1;
    while (end < n && (static_cast<unsigned char>(text[end]) & 0xC0) == 0x80) ++end;
    throw UnknownCharacter({start, end});
  }
  return tokens;
}

std::string detokenize(std::span<const Token> tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t.text;
  }
  return out;
}

std::string_view category_name(Category c) {
  switch (c) {
    case Category::RawNoun0: return "RawNoun0";
    case Category::RawNoun2: return "RawNoun2";
    case Category::RawAdjective0: return "RawAdjective0";
    case Category::RawAdjective1: return "RawAdjective1";
    case Category::Variable: return "Variable";
  }
  return "?";
}

std::string LexiconEntry::surface() const {
  std::string out;
  for (const auto& w : forms.front()) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

LexiconFormatError::LexiconFormatError(std::size_t line, const std::string& what)
    : std::runtime_error("lexicon line " + std::to_string(line) + ": " + what), line_(line) {}

Lexicon Lexicon::parse(std::string_view tsv) {
  static const std::pair<std::string_view, Category> kCategories[] = {
      {"RawNoun0", Category::RawNoun0},
      {"RawNoun2", Category::RawNoun2},
      {"RawAdjective0", Category::RawAdjective0},
      {"RawAdjective1", Category::RawAdjective1},
      {"Variable", Category::Variable},
  };

  Lexicon lex;
  std::set<std::string> keys;
  std::set<std::pair<Category, std::vector<std::string>>> seen;
  std::size_t line_no = 0;
  for (const auto& raw_line : split(tsv, '\n')) {
    ++line_no;
    std::string_view line = raw_line;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    auto fields = split(line, '\t');
    if (fields.size() != 3) throw LexiconFormatError(line_no, "expected 3 tab-separated fields");

    auto cat = std::find_if(std::begin(kCategories), std::end(kCategories),
                            [&](const auto& kv) { return kv.first == fields[0]; });
    if (cat == std::end(kCategories)) throw LexiconFormatError(line_no, "unknown category '" + fields[0] + "'");
    if (fields[1].empty()) throw LexiconFormatError(line_no, "empty key");
    if (!keys.insert(fields[1]).second) throw LexiconFormatError(line_no, "duplicate key " + fields[1]);

    LexiconEntry entry{cat->second, fields[1], {}};
    for (const auto& form : split(fields[2], '|')) {
      auto toks = tokenize(preprocess(form));
      if (toks.empty()) throw LexiconFormatError(line_no, "empty surface form");
      const bool symbolic = entry.category == Category::RawNoun2;
      std::vector<std::string> words;
      for (const auto& t : toks) {
        const bool ok = symbolic ? (t.kind == TokenKind::Symbol && toks.size() == 1) : t.kind == TokenKind::Word;
        if (!ok) throw LexiconFormatError(line_no, "malformed surface form '" + form + "'");
        words.push_back(t.text);
      }
      if (!seen.emplace(entry.category, words).second) {
        throw LexiconFormatError(line_no, "surface form '" + form + "' already used in this category");
      }
      entry.forms.push_back(std::move(words));
    }
    lex.entries_.push_back(std::move(entry));
  }
  return lex;
}

const Lexicon& Lexicon::builtin() {
  static const Lexicon lex = parse(kLexiconTsv);
  return lex;
}

const LexiconEntry* Lexicon::find(std::string_view key) const {
  for (const auto& e : entries_) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

std::vector<const LexiconEntry*> Lexicon::of(Category c) const {
  std::vector<const LexiconEntry*> out;
  for (const auto& e : entries_) {
    if (e.category == c) out.push_back(&e);
  }
  return out;
}

std::vector<LexiconMatch> Lexicon::match(std::span<const Token> tokens, std::size_t position) const {
  std::vector<LexiconMatch> out;
  for (const auto& e : entries_) {
    std::size_t best = 0;
    for (const auto& form : e.forms) {
      if (position + form.size() > tokens.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < form.size() && ok; ++k) {
        const auto& t = tokens[position + k];
        ok = (t.kind == TokenKind::Word || t.kind == TokenKind::Symbol) && t.text == form[k];
      }
      if (ok) best = std::max(best, form.size());
    }
    if (best > 0) out.push_back({&e, best});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const LexiconMatch& a, const LexiconMatch& b) { return a.length > b.length; });
  return out;
}

}  // namespace fl
