#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fl/forthel_ast.hpp"
#include "fl/lean_ast.hpp"
#include "fl/parser.hpp"
#include "fl/simplifier.hpp"

namespace fl {

struct PipelineOptions {
  bool first_parse_only = false;
};

/// Stage snapshots for one `ex.` text. `parses`, `normals` and `commands` are
/// index-aligned; `printed` holds the distinct printed commands in order.
struct PipelineTrace {
  std::string source;  // preprocessed
  std::vector<ForthelText> parses;
  std::vector<NormalForm> normals;
  std::vector<lean::Command> commands;
  std::vector<std::string> printed;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty() && !printed.empty(); }
};

/// Splits preprocessed input at each `ex.` that starts a sentence.
std::vector<std::string> split_texts(std::string_view preprocessed);

/// Runs parse, simplify, translate and print on a single text.
PipelineTrace run_text(std::string_view text, const PipelineOptions& options = {});

/// Runs every `ex.` text in `source` independently.
std::vector<PipelineTrace> run_pipeline(std::string_view source, const PipelineOptions& options = {});

struct CorpusCase {
  std::string id;
  std::string input;
  std::vector<std::string> expected;
  std::size_t line = 0;  // line of the `==` header
};

class CorpusFormatError : public std::runtime_error {
 public:
  CorpusFormatError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Blocks of `== <id>`, one or more `-- input <text>` lines (joined with a
/// space) and one or more `-- expect <lean>` lines, separated by blank lines.
/// `#` starts a comment line.
std::vector<CorpusCase> parse_corpus(std::string_view content);
std::vector<CorpusCase> read_corpus(const std::filesystem::path& path);

struct CaseOutcome {
  std::string id;
  bool passed = false;
  std::vector<std::string> expected;  // normalized
  std::vector<std::string> actual;    // normalized
  std::string diff;
};

struct CorpusReport {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<CaseOutcome> cases;  // sorted by id

  std::vector<std::pair<std::string, std::string>> failures() const;
  nlohmann::json to_json() const;
  std::string summary() const;
};

/// Whitespace collapse followed by label and generated-variable renumbering.
std::string normalize_output(std::string_view lean);

/// A case passes iff the multisets of normalized outputs agree.
CorpusReport corpus_check(const std::vector<CorpusCase>& cases);

}  // namespace fl
