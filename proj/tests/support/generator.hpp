#pragma once

// Random grammatical Simplified ForTheL texts. Trees are built so that their
// linearization parses back to (among others) the same tree: connectives
// nest to the right and `for`/`if` only appear in rightmost position.

#include <cstdint>
#include <random>

#include "fl/forthel_ast.hpp"

namespace fl::testkit {

class SentenceGenerator {
 public:
  explicit SentenceGenerator(std::uint64_t seed) : rng_(seed) {}

  ForthelText text();
  Statement statement(int depth, bool open);
  Term definite_term(int depth);

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  Statement level(int lvl, int depth, bool open);
  Statement atom(int depth, bool open);
  Term term(int depth);
  Notion notion(int depth, bool named);
  Predicate predicate(int depth);
  Predicate is_pred(int depth);
  Polarity polarity() { return chance(0.25) ? Polarity::Neg : Polarity::Pos; }

  std::mt19937_64 rng_;
};

}  // namespace fl::testkit
