// One line per acceptance criterion.

#include <chrono>
#include <iostream>
#include <sstream>

#include "fl/parser.hpp"
#include "fl/pipeline.hpp"
#include "fl/translator.hpp"
#include "properties.hpp"

using namespace fl;

namespace {

int failures = 0;

void report(int n, const std::string& title, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS " : "FAIL ") << n << ". " << title << ": " << detail << std::endl;
}

std::vector<std::string> translate(const std::string& src) {
  std::vector<std::string> out;
  for (const auto& t : run_pipeline(src)) {
    for (const auto& p : t.printed) out.push_back(normalize_output(p));
  }
  return out;
}

bool reproduces(const std::string& input, const std::string& expected) {
  auto got = translate(input);
  return got.size() == 1 && got[0] == normalize_output(expected);
}

Term term_of(const std::string& s) {
  auto r = parse_term(tokenize(preprocess(s)));
  if (r.trees.size() != 1) throw std::runtime_error("no unique parse for " + s);
  return r.trees[0];
}

void corpus_reproduction(const std::vector<CorpusCase>& cases) {
  auto start = std::chrono::steady_clock::now();
  auto rep = corpus_check(cases);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << rep.passed << "/" << rep.total << " passed in " << secs << " s";
  for (const auto& [id, diff] : rep.failures()) d << "\n    " << id << "\n" << diff;
  report(1, "corpus reproduction", rep.total == 42 && rep.passed == 42 && secs < 5.0, d.str());
}

void ambiguity(const std::vector<CorpusCase>& cases) {
  bool ok = true;
  std::ostringstream d;
  for (const auto& c : cases) {
    auto out = translate(c.input);
    if (c.id == "Exercise 3.1") {
      bool shapes = out.size() == 2 && out[0].find("≠ 0") != std::string::npos &&
                    out[1].find("(¬ (((x ^ 2) - (2 * x)) + 2) = 0)") != std::string::npos;
      if (!shapes) ok = false, d << c.id << " gave " << out.size() << " outputs; ";
    } else if (out.size() != 1) {
      ok = false;
      d << c.id << " gave " << out.size() << " outputs; ";
    }
  }
  report(2, "ambiguity fidelity", ok, ok ? "Exercise 3.1 yields 2 outputs, the other 41 yield 1" : d.str());
}

void showcase() {
  struct Pair {
    const char* in;
    const char* out;
  };
  const Pair pairs[] = {
      {"Ex. Assume x is a rational number equal to 2 * 2. Then x is greater than 3.",
       "example (x : ℚ) (h33 : x = (2 * 2)) : x > 3 := sorry"},
      {"Ex. Assume x is a real number less than 0. Then no nonnegative integer a such that a is positive is not "
       "greater than x.",
       "example (x : ℝ) (h67 : x < 0) : ∀ (a : ℤ), ((nneg a ∧ pos a) → (¬ (¬ a > x))) := sorry"},
      {"Ex. Assume x is an even integer greater than 32. Then x is greater than every integer less than 32.",
       "example (x : ℤ) (h70 : even x) (h56 : x > 32) : ∀ (x34 : ℤ), (x34 < 32 → x > x34) := sorry"},
  };
  int good = 0;
  for (const auto& p : pairs) good += reproduces(p.in, p.out);
  report(3, "showcase examples", good == 3, std::to_string(good) + "/3 reproduced");
}

void nested_quantifiers() {
  bool ok = reproduces(
      "Ex. Assume x is an odd integer greater than 3. Then no even integer greater than x is less than every negative "
      "integer.",
      "example (x : ℤ) (h111 : odd x) (h98 : x > 3) : ∀ (x32 : ℤ), ((even x32 ∧ x32 > x) → (¬ ∀ (x53 : ℤ), (neg x53 → "
      "x32 < x53))) := sorry");
  report(4, "nested quantifiers", ok, ok ? "reproduced modulo renaming" : "output differs");
}

void precedence(const std::vector<CorpusCase>& cases) {
  bool ok = term_of("2 + 2 * 2") == term_of("2 + (2 * 2)");
  std::ostringstream d;
  if (!ok) d << "2 + 2 * 2 differs from 2 + (2 * 2); ";
  auto show = [](const std::string& s) { return lean::print_term(translate_term(term_of(s))); };
  if (show("4 * n ^ 3 + 2 * n - 1") != "((4 * (n ^ 3)) + ((2 * n) - 1))") ok = false, d << "Result 3.6 grouping; ";
  if (show("x ^ 3 - 5 * x - 1") != "(((x ^ 3) - (5 * x)) - 1)") ok = false, d << "Exercise 3.4 grouping; ";

  std::size_t checked = 0;
  for (const auto& c : cases) {
    for (const auto& tree : parse_text(tokenize(preprocess(c.input))).trees) {
      for (const auto& t : testkit::arithmetic_terms(tree)) {
        ++checked;
        auto printed = lean::print_term(translate_term(t));
        bool seen = false;
        for (const auto& e : c.expected) seen = seen || e.find(printed) != std::string::npos;
        if (!seen) ok = false, d << c.id << ": " << printed << "; ";
      }
    }
  }
  report(5, "precedence", ok, ok ? std::to_string(checked) + " corpus expressions grouped as printed" : d.str());
}

void properties() {
  constexpr std::size_t kCount = 250;
  std::ostringstream d;
  bool ok = true;
  auto note = [&](const char* what, const testkit::CheckResult& r) {
    d << what << " " << r.checked << (r.ok() ? " ok" : " BROKEN") << "; ";
    if (!r.ok()) ok = false, d << "\n    " << *r.counterexample << "\n";
  };
  note("normal form + idempotence", testkit::check_simplify_normal_idempotent(11, kCount));
  note("reparse", testkit::check_linearize_reparses(12, kCount));
  note("token round trip", testkit::check_token_round_trip(13, kCount));
  note("normalize_names alpha", testkit::check_normalize_alpha(14, kCount));
  std::size_t assignments = 0, agreeing = 0;
  for (const auto& c : testkit::quantified_cases()) {
    auto r = testkit::check_truth_agreement(c);
    assignments += r.checked;
    agreeing += r.ok();
    if (!r.ok()) ok = false, d << "\n    " << *r.counterexample << "\n";
  }
  d << "truth agreement " << agreeing << "/" << testkit::quantified_cases().size() << " cases, " << assignments
    << " assignments";
  report(6, "property suites", ok && agreeing == 10, d.str());
}

}  // namespace

int main() {
  try {
    auto cases = read_corpus(FL_DATA_DIR "/textbook.corpus");
    corpus_reproduction(cases);
    ambiguity(cases);
    showcase();
    nested_quantifiers();
    precedence(cases);
    properties();
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance runner aborted: " << e.what() << std::endl;
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
