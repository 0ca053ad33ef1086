#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "finito/canonical.hpp"
#include "finito/document.hpp"
#include "finito/enumerate.hpp"
#include "finito/errors.hpp"
#include "finito/models.hpp"
#include "finito/order_complex.hpp"
#include "finito/pi1.hpp"
#include "finito/reduction.hpp"

namespace py = pybind11;
using namespace finito;

namespace {

std::vector<std::size_t> betti(const FinitePoset& p) { return homology(order_complex(p)).betti; }

std::vector<std::vector<std::string>> torsion(const FinitePoset& p) {
  std::vector<std::vector<std::string>> out;
  for (const auto& degree : homology(order_complex(p)).torsion) {
    std::vector<std::string> row;
    for (const auto& t : degree) row.push_back(t.str());
    out.push_back(std::move(row));
  }
  return out;
}

Element lookup(const FinitePoset& p, const std::string& label) {
  const auto& ls = p.labels();
  const auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) throw IndexError("no point labelled " + label);
  return static_cast<Element>(it - ls.begin());
}

py::list beat_point_list(const FinitePoset& p) {
  py::list out;
  for (const auto& b : beat_points(p)) {
    out.append(py::make_tuple(p.label(b.element), b.kind == BeatKind::up ? "up" : "down",
                              p.label(b.witness)));
  }
  return out;
}

py::dict mccord(const FinitePoset& src, const FinitePoset& dst, const py::dict& mapping) {
  std::vector<Element> map(src.size());
  std::vector<bool> seen(src.size(), false);
  for (const auto& [k, v] : mapping) {
    const Element a = lookup(src, k.cast<std::string>());
    map[a] = lookup(dst, v.cast<std::string>());
    seen[a] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error("map must assign an image to every source point");
  }
  const auto r = mccord_check(src, dst, map);
  py::list failures;
  for (Element y : r.failures) failures.append(dst.label(y));
  py::dict out;
  out["certified"] = r.weak_equivalence_certified;
  out["failures"] = failures;
  return out;
}

py::dict sphere_report(std::size_t h) {
  PosetCatalog catalog({2 * h});
  const auto r = verify_sphere_theorem(h, catalog);
  py::dict out;
  out["confirmed"] = r.confirmed();
  out["posets_scanned"] = r.posets_scanned;
  out["minimal_spaces"] = r.minimal_spaces;
  out["equality_classes"] = r.equality_classes;
  return out;
}

}  // namespace

PYBIND11_MODULE(_finito, m) {
  m.doc() = "Finite topological spaces as posets";

  py::register_exception<Error>(m, "FinitoError", PyExc_ValueError);

  py::class_<FinitePoset>(m, "Poset")
      .def_static("parse", [](const std::string& text) { return load_poset(text); },
                  py::arg("text"))
      .def_static("chain", &FinitePoset::chain)
      .def_static("antichain", &FinitePoset::antichain)
      .def("__len__", &FinitePoset::size)
      .def_property_readonly("labels", &FinitePoset::labels)
      .def("leq",
           [](const FinitePoset& p, const std::string& a, const std::string& b) {
             return p.leq(lookup(p, a), lookup(p, b));
           })
      .def("covers",
           [](const FinitePoset& p) {
             std::vector<std::pair<std::string, std::string>> out;
             for (auto [a, b] : hasse(p).covers) out.emplace_back(p.label(a), p.label(b));
             return out;
           })
      .def("height", [](const FinitePoset& p) { return height(p); })
      .def("is_connected", [](const FinitePoset& p) { return is_connected(p); })
      .def("opposite", [](const FinitePoset& p) { return opposite(p); })
      .def("euler_char", [](const FinitePoset& p) { return euler_char(p); })
      .def("betti", &betti)
      .def("torsion", &torsion)
      .def("f_vector", [](const FinitePoset& p) { return f_vector(order_complex(p)); })
      .def("beat_points", &beat_point_list)
      .def("is_minimal", [](const FinitePoset& p) { return is_minimal_space(p); })
      .def("core", [](const FinitePoset& p) { return core(p).final; })
      .def("is_contractible", [](const FinitePoset& p) { return is_contractible(p); })
      .def("osaki_reducible", [](const FinitePoset& p) { return osaki_reducible(p); })
      .def("first_betti", [](const FinitePoset& p) { return first_betti(p); })
      .def("presentation",
           [](const FinitePoset& p, const std::string& base) {
             const Element x0 = base.empty() ? 0 : lookup(p, base);
             return format_presentation(edge_path_presentation(p, x0).group);
           },
           py::arg("base") = "")
      .def("emit",
           [](const FinitePoset& p, const std::string& format) {
             return emit(p, parse_format(format));
           },
           py::arg("format") = "poset")
      .def("is_homeomorphic", [](const FinitePoset& p, const FinitePoset& q) {
        return is_homeomorphic(p, q);
      })
      .def("__repr__", [](const FinitePoset& p) {
        return "<Poset with " + std::to_string(p.size()) + " points>";
      });

  m.def("sphere_model", &sphere_model, py::arg("n"));
  m.def("bipartite_model", &bipartite_model, py::arg("i"), py::arg("j"));
  m.def("nh_suspension", &nh_suspension, py::arg("poset"));
  m.def("minimal_wedge_size", &minimal_wedge_size, py::arg("n"));
  m.def("minimal_wedge_size_closed_form", &minimal_wedge_size_closed_form, py::arg("n"));
  m.def("count_posets",
        [](std::size_t k, std::size_t threads) {
          return enumerate_posets(k, {std::max(k, kDefaultEnumerationCap), threads}).size();
        },
        py::arg("k"), py::arg("threads") = 1);
  m.def("wedge_models",
        [](std::size_t n) {
          PosetCatalog catalog;
          return enumerate_wedge_minimal_models(n, catalog);
        },
        py::arg("n"));
  m.def("verify_sphere_theorem", &sphere_report, py::arg("max_height"));
  m.def("mccord_check", &mccord, py::arg("src"), py::arg("dst"), py::arg("mapping"));
}
