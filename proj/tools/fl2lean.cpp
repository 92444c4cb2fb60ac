#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "fl/pipeline.hpp"
#include "fl/translator.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

bool slurp(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

void report(const fl::PipelineTrace& trace) {
  for (const auto& d : trace.diagnostics) {
    std::cerr << "error: " << d.message << " [" << d.span.begin << ", " << d.span.end << ")\n";
    if (d.span.end > d.span.begin && d.span.end <= trace.source.size()) {
      std::cerr << "  " << trace.source << "\n  " << std::string(d.span.begin, ' ')
                << std::string(d.span.end - d.span.begin, '^') << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplified ForTheL to Lean 4 translator"};
  app.require_subcommand(1);

  std::string input = "-";
  bool first_parse = false, show_ast = false, show_simplified = false, show_lean_ast = false;
  auto* translate = app.add_subcommand("translate", "translate texts to Lean `example` commands");
  translate->add_option("file", input, "input file, or - for stdin");
  translate->add_flag("--first-parse", first_parse, "only carry the first parse through");
  translate->add_flag("--show-ast", show_ast, "dump the parsed ForTheL trees");
  translate->add_flag("--show-simplified", show_simplified, "dump the simplified trees");
  translate->add_flag("--show-lean-ast", show_lean_ast, "dump the Lean trees");

  std::string corpus_path, json_path;
  auto* corpus = app.add_subcommand("corpus", "check a corpus file");
  corpus->add_option("corpus_file", corpus_path, "corpus file")->required();
  corpus->add_option("--json", json_path, "write a JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (translate->parsed()) {
    std::string source;
    if (!slurp(input, source)) {
      std::cerr << "error: cannot read " << input << '\n';
      return kUsage;
    }
    auto traces = fl::run_pipeline(source, fl::PipelineOptions{first_parse});
    bool all_ok = true;
    for (const auto& trace : traces) {
      if (show_ast) {
        for (const auto& p : trace.parses) std::cout << "-- ast: " << fl::to_json(p).dump() << '\n';
      }
      if (show_simplified) {
        for (const auto& n : trace.normals) {
          std::cout << "-- simplified: " << fl::linearize(n.text()) << '\n'
                    << "-- simplified ast: " << fl::to_json(n.text()).dump() << '\n';
        }
      }
      if (show_lean_ast) {
        for (const auto& c : trace.commands) std::cout << "-- lean ast: " << fl::lean::to_json(c).dump() << '\n';
      }
      for (const auto& line : trace.printed) std::cout << line << '\n';
      report(trace);
      all_ok = all_ok && trace.ok();
    }
    return all_ok ? kOk : kFailed;
  }

  std::vector<fl::CorpusCase> cases;
  try {
    cases = fl::read_corpus(corpus_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  auto rep = fl::corpus_check(cases);
  std::cout << rep.summary();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << '\n';
      return kUsage;
    }
    out << rep.to_json().dump(2) << '\n';
  }
  return rep.failed == 0 ? kOk : kFailed;
}
