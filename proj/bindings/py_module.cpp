// Python surface: exact values cross the boundary as strings ("p/q"), so no
// precision is ever lost to floats.  Everything numeric lives over the
// rational coefficient ring.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "wittkit/errors.hpp"
#include "wittkit/gradedlog.hpp"
#include "wittkit/lambda1.hpp"
#include "wittkit/necklace.hpp"
#include "wittkit/qseries.hpp"
#include "wittkit/rational.hpp"
#include "wittkit/ring.hpp"
#include "wittkit/witt.hpp"

namespace py = pybind11;
using namespace wittkit;

namespace {

const RingPtr& field() {
  static RingPtr q = Ring::rationals();
  return q;
}

std::vector<Elem> to_elems(const std::vector<std::string>& values) {
  std::vector<Elem> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(Elem::rational(field(), parse_rational(v)));
  return out;
}

std::vector<std::string> to_strings(const std::vector<Elem>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(format_rational(v.rat()));
  return out;
}

std::vector<Rat> to_rats(const std::vector<std::string>& values) {
  std::vector<Rat> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(parse_rational(v));
  return out;
}

std::vector<std::string> rats_to_strings(const std::vector<Rat>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(format_rational(v));
  return out;
}

std::vector<std::string> series_tail(const Series1& f) {
  std::vector<std::string> out;
  for (unsigned k = 1; k <= f.order(); ++k) out.push_back(format_rational(f.coeff(k).rat()));
  return out;
}

using TermList = std::vector<std::tuple<std::vector<unsigned>, unsigned, std::string>>;

}  // namespace

PYBIND11_MODULE(_wittkit, m) {
  m.doc() = "exact arithmetic for truncated Witt vectors, necklace algebras and principal q-series";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConfigError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const TruncationError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const IntegralityError& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    } catch (const PivotError& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    }
  });

  py::class_<WittVec>(m, "WittVector")
      .def(py::init([](const std::vector<std::string>& coords) {
             return WittVec(field(), to_elems(coords));
           }),
           py::arg("coords"))
      .def_static(
          "teichmuller",
          [](const std::string& value, std::size_t n) {
            return WittVec::teichmuller(Elem::rational(field(), parse_rational(value)), n);
          },
          py::arg("value"), py::arg("order"))
      .def_static(
          "from_ghost",
          [](const std::vector<std::string>& g) { return WittVec::from_ghost(field(), to_elems(g)); },
          py::arg("ghost"))
      .def_property_readonly("coords", [](const WittVec& x) { return to_strings(x.coords()); })
      .def("ghost", [](const WittVec& x) { return to_strings(x.ghost()); })
      .def("series", [](const WittVec& x) { return series_tail(exp_map(x)); },
           "coefficients of the associated unit power series")
      .def("to_necklace", [](const WittVec& x) { return necklace_from_witt(x); })
      .def("verschiebung", [](const WittVec& x, unsigned r) { return x.verschiebung(r); },
           py::arg("r"))
      .def("frobenius", [](const WittVec& x, unsigned r) { return x.frobenius(r); }, py::arg("r"))
      .def("__add__", [](const WittVec& a, const WittVec& b) { return a + b; })
      .def("__sub__", [](const WittVec& a, const WittVec& b) { return a - b; })
      .def("__mul__", [](const WittVec& a, const WittVec& b) { return a * b; })
      .def("__neg__", [](const WittVec& a) { return -a; })
      .def("__eq__", [](const WittVec& a, const WittVec& b) { return a == b; })
      .def("__len__", [](const WittVec& a) { return a.order(); })
      .def("__repr__", [](const WittVec& a) { return "WittVector " + a.str(); });

  py::class_<NeckVec>(m, "NecklaceVector")
      .def(py::init([](const std::vector<std::string>& coords) {
             return NeckVec(field(), to_elems(coords));
           }),
           py::arg("coords"))
      .def_static(
          "from_alphabet",
          [](const std::string& size, std::size_t n) {
            return NeckVec::m_vector(Elem::rational(field(), parse_rational(size)), n);
          },
          py::arg("size"), py::arg("order"))
      .def_property_readonly("coords", [](const NeckVec& x) { return to_strings(x.coords()); })
      .def("ghost", [](const NeckVec& x) { return to_strings(x.ghost()); })
      .def("series", [](const NeckVec& x) { return series_tail(sym_map(x)); })
      .def("to_witt", [](const NeckVec& x) { return witt_from_necklace(x); })
      .def("verschiebung", [](const NeckVec& x, unsigned r) { return x.verschiebung(r); },
           py::arg("r"))
      .def("frobenius", [](const NeckVec& x, unsigned r) { return x.frobenius(r); }, py::arg("r"))
      .def("__add__", [](const NeckVec& a, const NeckVec& b) { return a + b; })
      .def("__mul__", [](const NeckVec& a, const NeckVec& b) { return a * b; })
      .def("__eq__", [](const NeckVec& a, const NeckVec& b) { return a == b; })
      .def("__len__", [](const NeckVec& a) { return a.order(); })
      .def("__repr__", [](const NeckVec& a) { return "NecklaceVector " + a.str(); });

  py::class_<QSeries>(m, "PrincipalSeries")
      .def(py::init([](const std::vector<std::string>& tail) { return QSeries(to_rats(tail)); }),
           py::arg("tail"))
      .def_static(
          "modular", [](unsigned order) { return j_invariant(order); }, py::arg("order"),
          "elliptic modular expansion with the constant term stripped")
      .def_property_readonly("tail",
                             [](const QSeries& f) {
                               std::vector<std::string> out;
                               for (unsigned k = 1; k <= f.order(); ++k)
                                 out.push_back(format_rational(f.coeff(k)));
                               return out;
                             })
      .def("coefficient", [](const QSeries& f, unsigned k) { return format_rational(f.coeff(k)); },
           py::arg("k"))
      .def("faber", [](const QSeries& f, unsigned m) { return rats_to_strings(faber_polynomial(f, m)); },
           py::arg("m"), "coefficients of the degree-m principal-part polynomial")
      .def("table_entry",
           [](const QSeries& f, unsigned mm, unsigned nn) {
             return format_rational(HTable(f).at(mm, nn));
           },
           py::arg("m"), py::arg("n"))
      .def("is_replicable",
           [](const QSeries& f) {
             auto rep = is_replicable(HTable(f));
             return py::make_tuple(rep.replicable,
                                   py::make_tuple(rep.witness[0], rep.witness[1], rep.witness[2],
                                                  rep.witness[3]));
           },
           "duplication scan; returns (ok, witness)")
      .def("replicates",
           [](const QSeries& f, unsigned amax) {
             ReplicateFamily fam(f, amax);
             std::vector<std::vector<std::string>> out;
             for (unsigned s = 1; s <= fam.count(); ++s) {
               const QSeries& r = fam.replicate(s);
               std::vector<std::string> tail;
               for (unsigned k = 1; k <= r.order(); ++k) tail.push_back(format_rational(r.coeff(k)));
               out.push_back(std::move(tail));
             }
             return py::make_tuple(out, fam.consistent());
           },
           py::arg("count"), "replicate tails and whether they substitute back consistently")
      .def("truncated", [](const QSeries& f, unsigned n) { return f.truncated(n); }, py::arg("n"))
      .def("__len__", [](const QSeries& f) { return f.order(); })
      .def("__eq__", [](const QSeries& a, const QSeries& b) { return a == b; })
      .def("__repr__", [](const QSeries& f) {
        return "PrincipalSeries with " + std::to_string(f.order()) + " coefficients";
      });

  m.def(
      "necklace_count",
      [](const std::string& size, unsigned n) {
        Elem r = Elem::rational(field(), parse_rational(size));
        return format_rational(necklace_poly(r, n).rat());
      },
      py::arg("size"), py::arg("n"), "necklaces of length n over an alphabet of the given size");

  m.def(
      "witt_from_series",
      [](const std::vector<std::string>& tail) {
        return exp_inverse(Series1(field(), to_elems(tail)));
      },
      py::arg("tail"));

  m.def(
      "necklace_from_series",
      [](const std::vector<std::string>& tail) {
        return sym_inverse(Series1(field(), to_elems(tail)));
      },
      py::arg("tail"));

  m.def(
      "lie_dimensions",
      [](const TermList& terms, unsigned rank, unsigned cap) {
        GradedSeries h(field(), rank, cap);
        for (const auto& [alpha, parity, coeff] : terms) {
          GradedIndex idx{alpha, parity};
          h.set(idx, h.coeff(idx) + Elem::rational(field(), parse_rational(coeff)));
        }
        GradedSeries dims = lie_components(h);
        TermList out;
        for (const auto& [idx, value] : dims.terms())
          out.emplace_back(idx.alpha, idx.parity, format_rational(value.rat()));
        return out;
      },
      py::arg("terms"), py::arg("rank"), py::arg("cap"),
      "graded components generated freely by a module given as (alpha, parity, coeff) terms");
}
