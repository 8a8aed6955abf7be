// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spikelab/analysis.h"
#include "spikelab/catalog.h"
#include "spikelab/error.h"
#include "spikelab/expression.h"
#include "spikelab/minors.h"
#include "spikelab/representability.h"
#include "spikelab/spike.h"
#include "spikelab/store.h"
#include "spikelab/transforms.h"
#include "spikelab/verify.h"

namespace py = pybind11;
using namespace spikelab;

namespace {

ElementSet ToSet(const std::vector<int>& elements) {
  ElementSet s;
  for (int e : elements) {
    if (e < 0 || e >= kMaxElements) {
      throw MatroidError(ErrorCode::kOutOfRangeElement, "element " + std::to_string(e));
    }
    s = s.With(e);
  }
  return s;
}

std::vector<std::vector<int>> ToLists(const std::vector<ElementSet>& sets) {
  std::vector<std::vector<int>> out;
  out.reserve(sets.size());
  for (ElementSet s : sets) out.push_back(s.elements());
  return out;
}

py::object WitnessToPython(const std::optional<MinorWitness>& w) {
  if (!w) return py::none();
  py::dict d;
  d["contracted"] = w->contracted.elements();
  d["deleted"] = w->deleted.elements();
  d["element_map"] = w->element_map;
  return d;
}

VerificationReport RunDriver(const std::string& target, int max_n) {
  if (target == "certificates") return VerifyExcludedMinorCertificates();
  const std::vector<CatalogRecord> catalog = GenerateCatalog(max_n).records;
  if (target == "theorem1") return VerifyTheorem1(catalog);
  if (target == "theorem2") return VerifyTheorem2(catalog);
  if (target == "corollaries") return VerifyCorollaries(catalog);
  if (target == "lemmas") return VerifyLemmas(catalog);
  if (target == "algebra") return VerifyAlgebra(catalog);
  throw MatroidError(ErrorCode::kBadParameters, "unknown target " + target);
}

}  // namespace

PYBIND11_MODULE(_spikelab, m) {
  m.doc() = "Exact matroid engine and spike excluded-minor verifier";

  static py::exception<MatroidError> error(m, "MatroidError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const MatroidError& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  py::class_<Matroid>(m, "Matroid")
      .def_property_readonly("size", &Matroid::size)
      .def_property_readonly("rank", py::overload_cast<>(&Matroid::rank, py::const_))
      .def(
          "rank_of",
          [](const Matroid& self, const std::vector<int>& s) { return self.rank(ToSet(s)); },
          py::arg("elements"))
      .def(
          "closure",
          [](const Matroid& self, const std::vector<int>& s) {
            return self.Closure(ToSet(s)).elements();
          },
          py::arg("elements"))
      .def("bases", [](const Matroid& self) { return ToLists(Bases(self)); })
      .def("circuits", [](const Matroid& self) { return ToLists(Circuits(self)); })
      .def("cocircuits", [](const Matroid& self) { return ToLists(Cocircuits(self)); })
      .def("dual", [](const Matroid& self) { return Dual(self); })
      .def(
          "delete",
          [](const Matroid& self, const std::vector<int>& s) { return Delete(self, ToSet(s)); },
          py::arg("elements"))
      .def(
          "contract",
          [](const Matroid& self, const std::vector<int>& s) {
            return Contract(self, ToSet(s));
          },
          py::arg("elements"))
      .def("line", [](const Matroid& self) { return ToLine(self); })
      .def("canonical_line",
           [](const Matroid& self) {
             return ToLine(FromCanonicalForm(ComputeCanonicalForm(self)));
           })
      .def("__eq__", [](const Matroid& a, const Matroid& b) { return a == b; })
      .def("__repr__", [](const Matroid& self) {
        return "<Matroid n=" + std::to_string(self.size()) +
               " r=" + std::to_string(self.rank()) + ">";
      });

  m.def("parse", [](const std::string& text) { return ParseExpression(text); },
        py::arg("expression"));
  m.def("from_line", &FromLine, py::arg("line"));
  m.def("named", [](const std::string& name) { return Named(name); }, py::arg("name"));
  m.def("uniform", &Uniform, py::arg("r"), py::arg("n"));
  m.def(
      "from_bases",
      [](int n, const std::vector<std::vector<int>>& bases) {
        std::vector<ElementSet> sets;
        for (const auto& b : bases) sets.push_back(ToSet(b));
        return FromBases(n, sets);
      },
      py::arg("n"), py::arg("bases"));
  m.def("is_isomorphic", &AreIsomorphic, py::arg("a"), py::arg("b"));
  m.def("is_three_connected", &IsThreeConnected, py::arg("m"));
  m.def("is_binary", &IsBinary, py::arg("m"));
  m.def("is_ternary", &IsTernary, py::arg("m"));
  m.def(
      "has_minor",
      [](const Matroid& host, const Matroid& pattern) {
        return WitnessToPython(HasMinor(host, pattern));
      },
      py::arg("host"), py::arg("pattern"));
  m.def(
      "is_spike_minor",
      [](const Matroid& x) { return IsSpikeMinorStructural(x).in_class; }, py::arg("m"));
  m.def(
      "is_spike_minor_excluded",
      [](const Matroid& x) { return IsSpikeMinorExcluded(x).in_class; }, py::arg("m"));
  m.def("is_in_s3", &IsInS3, py::arg("m"));
  m.def(
      "level_counts",
      [](int max_n) {
        std::vector<int> out;
        for (const auto& level : EnumerateLevels(max_n)) out.push_back(level.size());
        return out;
      },
      py::arg("max_n"));
  m.def(
      "verify",
      [](const std::string& target, int max_n) {
        VerificationReport report;
        {
          py::gil_scoped_release release;
          report = RunDriver(target, max_n);
        }
        return py::make_tuple(report.passed(), report.ToText());
      },
      py::arg("target"), py::arg("max_n") = 7);
}
