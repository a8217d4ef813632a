#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mvknuth/compare.hpp"
#include "mvknuth/errors.hpp"
#include "mvknuth/io.hpp"

namespace py = pybind11;
using namespace mvknuth;

namespace {

ImageOptions options(int p, int precision, std::uint64_t budget, int threads) {
  ImageOptions o;
  o.p = p;
  o.precision = precision;
  o.budget = budget;
  o.threads = threads;
  return o;
}

std::vector<int> letters_of(const Word& w) { return {w.letters().begin(), w.letters().end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Knuth equivalence, cells of galleries and their lattice images";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<InvalidValue>(m, "InvalidValue", base);
  py::register_exception<RankMismatch>(m, "RankMismatch", base);
  py::register_exception<PrecisionError>(m, "PrecisionError", base);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);
  py::register_exception<InternalError>(m, "InternalError", base);

  py::class_<Word>(m, "Word")
      .def(py::init<int, std::vector<int>>(), py::arg("n"), py::arg("letters"))
      .def_static("parse", &parse_word, py::arg("text"), py::arg("n") = 0)
      .def_property_readonly("rank", &Word::rank)
      .def_property_readonly("letters", &letters_of)
      .def("content", [](const Word& w) { return Json(w.content().canonical()).get<std::vector<int>>(); })
      .def("__len__", &Word::size)
      .def("__str__", &Word::to_string)
      .def("__repr__", [](const Word& w) { return "Word(" + std::to_string(w.rank()) + ", '" + w.to_string() + "')"; })
      .def("__hash__", [](const Word& w) { return py::hash(py::make_tuple(w.rank(), letters_of(w))); })
      .def(py::self == py::self)
      .def(py::self < py::self);

  py::class_<Gallery>(m, "Gallery")
      .def(py::init<int, std::vector<std::vector<int>>>(), py::arg("n"), py::arg("steps"))
      .def_static("parse", &parse_gallery, py::arg("text"), py::arg("n") = 0)
      .def_static("of_word", &Gallery::of_word)
      .def_property_readonly("rank", &Gallery::rank)
      .def_property_readonly("steps", &Gallery::steps)
      .def_property_readonly("type", &Gallery::type)
      .def("word", &word_of_gallery)
      .def("__len__", &Gallery::length)
      .def(py::self == py::self);

  m.def("knuth_class", [](const Word& w) {
    const WordSet cls = knuth_class(w);
    return std::vector<Word>(cls.begin(), cls.end());
  });
  m.def(
      "knuth_equivalent",
      [](const Word& u, const Word& w, const std::string& method) {
        if (method != "bfs" && method != "fingerprint") throw InvalidValue("method must be 'bfs' or 'fingerprint'");
        return knuth_equivalent(u, w, method == "bfs" ? EquivalenceMethod::Bfs : EquivalenceMethod::Fingerprint);
      },
      py::arg("u"), py::arg("w"), py::arg("method") = "fingerprint");
  m.def("ssyt_rows", [](const Word& w) { return ssyt_of_word(w).rows(); });
  m.def("ssyt_reading_word", [](const Word& w) { return reading_word(ssyt_of_word(w)); });

  m.def("_cell_report", [](const Gallery& g) { return cell_report(g).dump(); });
  m.def(
      "_compare",
      [](const Word& a, const Word& b, int p, int precision, std::uint64_t budget, int threads) {
        py::gil_scoped_release release;
        return Json(compare_images(a, b, options(p, precision, budget, threads))).dump();
      },
      py::arg("a"), py::arg("b"), py::arg("p"), py::arg("precision"), py::arg("budget"), py::arg("threads"));
  m.def(
      "_image_word",
      [](const Word& w, int p, int precision, std::uint64_t budget, int threads) {
        py::gil_scoped_release release;
        return image_to_json(image_points(w, options(p, precision, budget, threads))).dump();
      },
      py::arg("w"), py::arg("p"), py::arg("precision"), py::arg("budget"), py::arg("threads"));
  m.def(
      "_image_gallery",
      [](const Gallery& g, int p, int precision, std::uint64_t budget, int threads) {
        py::gil_scoped_release release;
        return image_to_json(image_points(g, options(p, precision, budget, threads))).dump();
      },
      py::arg("g"), py::arg("p"), py::arg("precision"), py::arg("budget"), py::arg("threads"));
  m.def("_normal_form", [](const Word& w) {
    const Gallery g = Gallery::of_word(w);
    const RewriteState s = initial_state(factor_word(g), coweight_of(g));
    return Json(ReplayTrace{s, normal_form(s).trace}).dump();
  });
  m.def(
      "_theorem_suite",
      [](int n, int max_len, int p, std::uint64_t budget, int threads) {
        py::gil_scoped_release release;
        return Json(theorem_suite(n, max_len, options(p, 0, budget, threads))).dump();
      },
      py::arg("n"), py::arg("max_len"), py::arg("p"), py::arg("budget"), py::arg("threads"));
  m.def("polyline_svg", &polyline_svg);
  m.attr("DEFAULT_BUDGET") = kDefaultBudget;
}
