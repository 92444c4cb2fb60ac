#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fl/pipeline.hpp"

namespace py = pybind11;

namespace {

py::dict trace_dict(const fl::PipelineTrace& t) {
  py::list diags;
  for (const auto& d : t.diagnostics) diags.append(py::make_tuple(d.span.begin, d.span.end, d.message));
  py::list simplified;
  for (const auto& n : t.normals) simplified.append(fl::linearize(n.text()));
  py::dict out;
  out["source"] = t.source;
  out["printed"] = t.printed;
  out["simplified"] = simplified;
  out["diagnostics"] = diags;
  out["ok"] = t.ok();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Simplified ForTheL to Lean 4 translation";

  m.def(
      "translate",
      [](const std::string& source, bool first_parse) {
        std::vector<std::string> out;
        for (const auto& t : fl::run_pipeline(source, fl::PipelineOptions{first_parse})) {
          out.insert(out.end(), t.printed.begin(), t.printed.end());
        }
        return out;
      },
      py::arg("source"), py::arg("first_parse") = false);

  m.def(
      "run",
      [](const std::string& source, bool first_parse) {
        py::list out;
        for (const auto& t : fl::run_pipeline(source, fl::PipelineOptions{first_parse})) out.append(trace_dict(t));
        return out;
      },
      py::arg("source"), py::arg("first_parse") = false);

  m.def("normalize_output", &fl::normalize_output);

  m.def("check_corpus", [](const std::string& path) {
    auto rep = fl::corpus_check(fl::read_corpus(path));
    return py::make_tuple(rep.passed, rep.total, rep.summary());
  });

  py::register_exception<fl::CorpusFormatError>(m, "CorpusFormatError", PyExc_ValueError);
}
