#include "fl/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "fl/lexicon.hpp"
#include "fl/translator.hpp"

namespace fl {

std::vector<std::string> split_texts(std::string_view text) {
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i + 2 < text.size() + 1; ++i) {
    if (text.compare(i, 2, "ex") != 0) continue;
    if (i > 0 && text[i - 1] != ' ' && text[i - 1] != '.') continue;
    std::size_t j = i + 2;
    if (j < text.size() && text[j] == ' ') ++j;
    if (j >= text.size() || text[j] != '.') continue;
    // Only at the start of a sentence.
    std::size_t k = i;
    while (k > 0 && text[k - 1] == ' ') --k;
    if (k > 0 && text[k - 1] != '.') continue;
    starts.push_back(i);
  }

  std::vector<std::string> out;
  auto push = [&](std::size_t from, std::size_t to) {
    auto piece = text.substr(from, to - from);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    if (!piece.empty()) out.emplace_back(piece);
  };
  if (starts.empty() || starts.front() != 0) push(0, starts.empty() ? text.size() : starts.front());
  for (std::size_t s = 0; s < starts.size(); ++s) {
    push(starts[s], s + 1 < starts.size() ? starts[s + 1] : text.size());
  }
  return out;
}

PipelineTrace run_text(std::string_view text, const PipelineOptions& options) {
  PipelineTrace trace;
  trace.source = preprocess(text);

  std::vector<Token> tokens;
  try {
    tokens = tokenize(trace.source);
  } catch (const TokenizeError& e) {
    trace.diagnostics.push_back({e.span(), e.what()});
    return trace;
  }

  auto parsed = parse_text(tokens);
  if (!parsed.ok()) {
    trace.diagnostics = std::move(parsed.diagnostics);
    return trace;
  }
  if (options.first_parse_only) parsed.trees.erase(parsed.trees.begin() + 1, parsed.trees.end());

  std::set<std::string> seen;
  for (std::size_t i = 0; i < parsed.trees.size(); ++i) {
    const auto& tree = parsed.trees[i];
    try {
      NormalForm nf = simplify(tree);
      lean::Command cmd = translate_text(nf);
      std::string printed = lean::print_command(cmd);
      trace.parses.push_back(tree);
      trace.normals.push_back(std::move(nf));
      trace.commands.push_back(std::move(cmd));
      if (seen.insert(printed).second) trace.printed.push_back(std::move(printed));
    } catch (const std::exception& e) {
      trace.diagnostics.push_back(
          {Span{0, trace.source.size()}, "reading " + std::to_string(i + 1) + " (" + linearize(tree) + "): " + e.what()});
    }
  }
  return trace;
}

std::vector<PipelineTrace> run_pipeline(std::string_view source, const PipelineOptions& options) {
  std::vector<PipelineTrace> out;
  for (const auto& text : split_texts(preprocess(source))) out.push_back(run_text(text, options));
  return out;
}

CorpusFormatError::CorpusFormatError(std::size_t line, const std::string& what)
    : std::runtime_error("corpus line " + std::to_string(line) + ": " + what), line_(line) {}

std::vector<CorpusCase> parse_corpus(std::string_view content) {
  std::vector<CorpusCase> cases;
  std::set<std::string> ids;
  bool open = false;

  auto close = [&](std::size_t line) {
    if (!open) return;
    const auto& c = cases.back();
    if (c.input.empty()) throw CorpusFormatError(line, "case '" + c.id + "' has no input");
    if (c.expected.empty()) throw CorpusFormatError(line, "case '" + c.id + "' has no expected output");
    open = false;
  };
  auto trimmed = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return std::string(s);
  };

  std::istringstream in{std::string(content)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trimmed(raw);
    if (line.empty()) {
      close(line_no);
      continue;
    }
    if (line.front() == '#') continue;
    if (line.rfind("==", 0) == 0) {
      close(line_no);
      auto id = trimmed(std::string_view(line).substr(2));
      if (id.empty()) throw CorpusFormatError(line_no, "empty case id");
      if (!ids.insert(id).second) throw CorpusFormatError(line_no, "duplicate case id '" + id + "'");
      cases.push_back({id, {}, {}, line_no});
      open = true;
      continue;
    }
    if (!open) throw CorpusFormatError(line_no, "expected '== <id>'");
    auto& c = cases.back();
    if (line.rfind("-- input", 0) == 0) {
      if (!c.expected.empty()) throw CorpusFormatError(line_no, "input after expect");
      auto text = trimmed(std::string_view(line).substr(8));
      if (text.empty()) throw CorpusFormatError(line_no, "empty input line");
      if (!c.input.empty()) c.input += ' ';
      c.input += text;
    } else if (line.rfind("-- expect", 0) == 0) {
      auto text = trimmed(std::string_view(line).substr(9));
      if (text.empty()) throw CorpusFormatError(line_no, "empty expect line");
      c.expected.push_back(std::move(text));
    } else {
      throw CorpusFormatError(line_no, "unrecognized line '" + line + "'");
    }
  }
  close(line_no + 1);
  return cases;
}

std::vector<CorpusCase> read_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open corpus file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

std::string normalize_output(std::string_view lean) {
  std::string collapsed;
  bool space = false;
  for (char ch : lean) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
      space = !collapsed.empty();
      continue;
    }
    if (space) collapsed.push_back(' ');
    space = false;
    collapsed.push_back(ch);
  }
  return lean::normalize_printed(collapsed);
}

std::vector<std::pair<std::string, std::string>> CorpusReport::failures() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& c : cases) {
    if (!c.passed) out.emplace_back(c.id, c.diff);
  }
  return out;
}

nlohmann::json CorpusReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : cases) {
    cs.push_back({{"id", c.id}, {"passed", c.passed}, {"expected", c.expected}, {"actual", c.actual}, {"diff", c.diff}});
  }
  return {{"total", total}, {"passed", passed}, {"failed", failed}, {"cases", cs}};
}

std::string CorpusReport::summary() const {
  std::ostringstream out;
  for (const auto& c : cases) {
    out << (c.passed ? "PASS " : "FAIL ") << c.id << '\n';
    if (!c.passed) out << c.diff;
  }
  out << passed << '/' << total << " passed, " << failed << " failed\n";
  return out.str();
}

CorpusReport corpus_check(const std::vector<CorpusCase>& cases) {
  CorpusReport report;
  for (const auto& c : cases) {
    CaseOutcome outcome{c.id, false, {}, {}, {}};
    std::string errors;
    for (const auto& trace : run_pipeline(c.input)) {
      for (const auto& p : trace.printed) outcome.actual.push_back(normalize_output(p));
      for (const auto& d : trace.diagnostics) errors += "  ! " + d.message + "\n";
    }
    for (const auto& e : c.expected) outcome.expected.push_back(normalize_output(e));

    auto want = outcome.expected;
    auto got = outcome.actual;
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    outcome.passed = want == got;
    if (!outcome.passed) {
      std::vector<std::string> missing, extra;
      std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
      std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
      for (const auto& m : missing) outcome.diff += "  - " + m + "\n";
      for (const auto& x : extra) outcome.diff += "  + " + x + "\n";
      outcome.diff += errors;
    }
    report.cases.push_back(std::move(outcome));
  }
  std::sort(report.cases.begin(), report.cases.end(),
            [](const CaseOutcome& a, const CaseOutcome& b) { return a.id < b.id; });
  report.total = report.cases.size();
  report.passed = static_cast<std::size_t>(
      std::count_if(report.cases.begin(), report.cases.end(), [](const CaseOutcome& c) { return c.passed; }));
  report.failed = report.total - report.passed;
  return report;
}

}  // namespace fl
