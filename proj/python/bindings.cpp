// Python bindings. Subsets cross the boundary as lists of labels.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "hyperring/classify.hpp"
#include "hyperring/constructions.hpp"
#include "hyperring/corpus.hpp"
#include "hyperring/document.hpp"
#include "hyperring/lattice.hpp"
#include "hyperring/theorems.hpp"

namespace py = pybind11;
using namespace hyperring;

namespace {

  using Labels = std::vector<std::string>;

  ElementSubset to_subset(HyperringTable const& R, Labels const& labels) {
    ElementSubset s(R.size());
    for (auto const& l : labels) {
      s.insert(R.element(l));
    }
    return s;
  }

  Labels to_labels(HyperringTable const& R, ElementSubset const& s) {
    Labels out;
    s.for_each([&](Element x) { out.push_back(R.label(x)); });
    return out;
  }

  Tuple to_tuple(HyperringTable const& R, Labels const& labels) {
    Tuple t;
    for (auto const& l : labels) {
      t.push_back(R.element(l));
    }
    return t;
  }

  py::dict report_dict(ValidationReport const& rep) {
    py::dict d;
    d["structure"] = rep.structure();
    d["passed"]    = rep.passed();
    d["counts"]    = rep.counts();
    d["text"]      = rep.to_text();
    return d;
  }

  std::vector<CorpusEntry> entries_for(std::optional<std::vector<HyperringTable>> const& rings) {
    if (!rings) {
      return builtin_corpus();
    }
    std::vector<CorpusEntry> out;
    for (auto const& R : *rings) {
      out.push_back({R, validate_krasner(R)});
    }
    return out;
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite Krasner (m,n)-hyperrings";

  auto base = py::register_exception<Error>(m, "HyperringError");
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<ValidationFailedError>(m, "ValidationFailedError", base);
  py::register_exception<UnknownLabelError>(m, "UnknownLabelError", base);
  py::register_exception<NonTotalTableError>(m, "NonTotalTableError", base);
  py::register_exception<ImproperIdealError>(m, "ImproperIdealError", base);
  py::register_exception<NotAHyperidealError>(m, "NotAHyperidealError", base);
  py::register_exception<PreconditionError>(m, "PreconditionError", base);

  py::class_<HyperringTable>(m, "Hyperring")
      .def_property_readonly("name", &HyperringTable::name)
      .def_property_readonly("m", &HyperringTable::m)
      .def_property_readonly("n", &HyperringTable::n)
      .def_property_readonly("labels", &HyperringTable::labels)
      .def_property_readonly("zero", [](HyperringTable const& R) { return R.label(R.zero()); })
      .def_property_readonly("one", [](HyperringTable const& R) { return R.label(R.one()); })
      .def_property_readonly("notes", &HyperringTable::notes)
      .def("__len__", &HyperringTable::size)
      .def("f", [](HyperringTable const& R, Labels const& args) {
        return to_labels(R, R.hyperop(to_tuple(R, args)));
      })
      .def("g", [](HyperringTable const& R, Labels const& args) {
        return R.label(R.g_eval(to_tuple(R, args)));
      })
      .def("to_document", &serialize_document)
      .def("__eq__", [](HyperringTable const& a, HyperringTable const& b) { return a == b; })
      .def("__repr__", [](HyperringTable const& R) {
        return "<Hyperring " + R.name() + " (" + std::to_string(R.m()) + "," + std::to_string(R.n())
               + ") on " + std::to_string(R.size()) + " elements>";
      });

  m.def("parse_document", [](std::string const& text, bool validate) {
    return parse_document(text, ParseOptions{validate});
  }, py::arg("text"), py::arg("validate") = true);
  m.def("load_document", [](std::filesystem::path const& path, bool validate) {
    return load_document(path, ParseOptions{validate});
  }, py::arg("path"), py::arg("validate") = true);
  m.def("save_document", &save_document, py::arg("ring"), py::arg("path"));

  m.def("builtin_corpus", [] {
    std::vector<HyperringTable> out;
    for (auto& e : builtin_corpus()) {
      out.push_back(std::move(e.ring));
    }
    return out;
  });
  m.def("builtin", [](std::string const& name) {
    auto corpus = builtin_corpus();
    if (auto const* e = find_entry(corpus, name)) {
      return e->ring;
    }
    throw py::key_error(name);
  });

  m.def("validate", [](HyperringTable const& R) { return report_dict(validate_krasner(R)); });

  m.def("hyperideals", [](HyperringTable const& R) {
    std::vector<Labels> out;
    for (auto const& I : enumerate_hyperideals(R)) {
      out.push_back(to_labels(R, I));
    }
    return out;
  });
  m.def("is_hyperideal", [](HyperringTable const& R, Labels const& S) {
    return is_hyperideal(R, to_subset(R, S));
  });
  m.def("radical", [](HyperringTable const& R, Labels const& I) {
    auto     s = to_subset(R, I);
    py::dict d;
    d["by_primes"] = to_labels(R, radical_by_primes(R, s));
    d["by_powers"] = to_labels(R, radical_by_powers(R, s));
    return d;
  });
  m.def("classify", [](HyperringTable const& R, Labels const& P, std::size_t kmax) {
    Lattice  L(R);
    auto     rec = classify(L, to_subset(R, P), kmax);
    py::dict d;
    for (auto const& [name, o] : rec.outcomes) {
      d[py::str(name)] = o.holds;
    }
    return d;
  }, py::arg("ring"), py::arg("ideal"), py::arg("kmax") = 2);

  m.def("product", &direct_product);
  m.def("quotient", [](HyperringTable const& R, Labels const& Q) {
    return quotient(R, to_subset(R, Q)).ring;
  });

  m.def("run_theorems", [](std::optional<std::vector<HyperringTable>> rings) {
    Harness  h(entries_for(rings));
    auto     reports = h.run_all();
    auto     matrix  = h.implication_matrix();
    auto     s       = summarize(reports);
    py::dict d;
    d["reports"]           = s.reports;
    d["pass"]              = s.pass;
    d["fail"]              = s.fail;
    d["vacuous"]           = s.vacuous;
    d["asserted_failures"] = s.asserted_failures;
    d["known_implication_failures"] = matrix.known_failures();
    d["text"]              = render(reports);
    return d;
  }, py::arg("rings") = py::none());
}
