#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fl {

/// Byte offsets [begin, end) into the preprocessed source.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Span&) const = default;
};

enum class TokenKind { Word, IntLit, Symbol, Period };

struct Token {
  TokenKind kind = TokenKind::Word;
  std::string text;
  std::int64_t value = 0;  // IntLit only
  Span span;

  bool is_word(std::string_view w) const { return kind == TokenKind::Word && text == w; }
  bool is_symbol(std::string_view s) const { return kind == TokenKind::Symbol && text == s; }
};

/// Kind, text and value agree; spans are not compared.
bool same_lexeme(const Token& a, const Token& b);

class TokenizeError : public std::runtime_error {
 public:
  TokenizeError(const std::string& what, Span span) : std::runtime_error(what), span_(span) {}
  Span span() const { return span_; }

 private:
  Span span_;
};

class UnknownCharacter : public TokenizeError {
 public:
  explicit UnknownCharacter(Span span);
};

/// Lowercases ASCII letters, collapses whitespace runs to one space and trims.
std::string preprocess(std::string_view raw);

/// Splits preprocessed text into words, integer literals, the symbols
/// `+ - * / ^ ( ) ,` and the sentence terminator. A `-` glued to digits is a
/// negative literal; a spaced `-` is the operator.
std::vector<Token> tokenize(std::string_view text);

/// Joins token texts with single spaces.
std::string detokenize(std::span<const Token> tokens);

enum class Category { RawNoun0, RawNoun2, RawAdjective0, RawAdjective1, Variable };

std::string_view category_name(Category c);

struct LexiconEntry {
  Category category;
  std::string key;
  /// Each form is a sequence of words (or a single symbol for RawNoun2).
  std::vector<std::vector<std::string>> forms;

  /// First surface form joined by spaces.
  std::string surface() const;
};

struct LexiconMatch {
  const LexiconEntry* entry = nullptr;
  std::size_t length = 0;
};

class LexiconFormatError : public std::runtime_error {
 public:
  LexiconFormatError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class Lexicon {
 public:
  /// Reads `CATEGORY<TAB>KEY<TAB>form1|form2|...` lines. Blank lines and lines
  /// starting with `#` are skipped.
  static Lexicon parse(std::string_view tsv);

  /// The table compiled in from data/lexicon.tsv.
  static const Lexicon& builtin();

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  const LexiconEntry* find(std::string_view key) const;
  std::vector<const LexiconEntry*> of(Category c) const;

  /// Every entry with a surface form matching the tokens at `position`,
  /// longest match first. No pruning.
  std::vector<LexiconMatch> match(std::span<const Token> tokens, std::size_t position) const;

 private:
  std::vector<LexiconEntry> entries_;
};

inline std::vector<LexiconMatch> match_lexicon(std::span<const Token> tokens, std::size_t position) {
  return Lexicon::builtin().match(tokens, position);
}

}  // namespace fl
