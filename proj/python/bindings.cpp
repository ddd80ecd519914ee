#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cslab/action.hpp"
#include "cslab/fstree.hpp"
#include "cslab/series.hpp"
#include "cslab/spitzer.hpp"
#include "cslab/svg.hpp"
#include "cslab/verify.hpp"

namespace py = pybind11;
using namespace cslab;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::module_::import("builtins").attr("int")(v.get_str())); }

py::list to_py(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

std::vector<std::string> step_strings(const std::vector<LatticePath>& paths) {
  std::vector<std::string> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(p.step_string());
  return out;
}

LatticePath catalan(const std::string& steps, int k) { return LatticePath::parse(steps, k, PathKind::Catalan); }

py::dict series_dict(const MultiPoly& p) {
  py::dict out;
  for (const auto& [e, c] : p.terms()) out[py::tuple(py::cast(e))] = to_py(c);
  return out;
}

py::dict orbit_dict(const OrbitRecord& r) {
  py::dict d;
  d["rep"] = r.rep.vector();
  d["I"] = r.flip_indices;
  d["size"] = to_py(r.size);
  if (!r.members.empty()) {
    py::list m;
    for (const auto& p : r.members) m.append(p.vector());
    d["members"] = m;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lattice paths, Catalan-Spitzer permutations, Foata-Strehl trees, type series and orbits";
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);

  m.def("fuss_catalan", [](long n, long k) { return to_py(fuss_catalan(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("enumerate_catalan", [](int n, int k) { return step_strings(enumerate_catalan(n, k)); }, py::arg("n"),
        py::arg("k"));
  m.def("enumerate_bridges", [](int n, int k) { return step_strings(enumerate_bridges(n, k)); }, py::arg("n"),
        py::arg("k"));
  m.def("steps_above_axis", [](const std::string& s) { return steps_above_axis(LatticePath::parse(s, 2, PathKind::Bridge)); });
  m.def("up_steps_below_axis",
        [](const std::string& s, int k) { return up_steps_below_axis(LatticePath::parse(s, k, PathKind::Bridge)); },
        py::arg("steps"), py::arg("k"));
  m.def("huq_profile", [](const IntVector& v) { return huq_profile(v); });
  m.def("functional_order", [](const IntVector& v) {
    std::vector<std::pair<long, long>> out;
    for (const auto& p : functional_order(v)) out.emplace_back(p.u, p.w);
    return out;
  });

  m.def("full_csp", [](const std::string& s, int k) {
    const auto p = parse_catalan_or_augmented(s, k);
    return full_csp(p.kind == PathKind::Augmented ? p : augment(p)).vector();
  }, py::arg("steps"), py::arg("k"));
  m.def("short_csp", [](const std::string& s, int k) { return short_csp(catalan(s, k)).vector(); }, py::arg("steps"),
        py::arg("k"));
  m.def("reconstruct", [](std::vector<int> perm, int k) { return reconstruct(Permutation(std::move(perm)), k).step_string(); },
        py::arg("perm"), py::arg("k"));
  m.def("path_type", [](const std::string& s, int k) { return path_type(augment(catalan(s, k))); }, py::arg("steps"),
        py::arg("k"));

  m.def("fs_levels", [](const std::vector<int>& w) { return levels(build_fs_tree(w)); });
  m.def("rl_word", [](const std::vector<int>& w, int label) { return rl_word(build_fs_tree(w), label); });
  m.def("is_levelwise_numbered", [](const std::vector<int>& w) { return is_levelwise_numbered(build_fs_tree(w)); });
  m.def("k_condition", [](const std::vector<int>& w, int k) { return k_condition(build_fs_tree(w), k); });

  m.def("type_count", [](const TypeVector& t, int k) { return to_py(type_count(t, k)); }, py::arg("type"), py::arg("k"));
  m.def("q_poly", [](int k, int r) { return series_dict(q_poly(k, r)); }, py::arg("k"), py::arg("r"));
  m.def("t_series", [](int k, int r, int deg) { return series_dict(t_series(k, r, deg).poly); }, py::arg("k"),
        py::arg("r"), py::arg("deg"));
  m.def("continuant_ones", [](int k, int n) { return to_py(continuant_ones(k, n)); }, py::arg("k"), py::arg("n"));

  m.def("flip", [](const std::vector<int>& w, int x) { return flip(w, x); });
  m.def("flip_set", [](const std::vector<int>& w) { return flip_set(w); });
  m.def("orbits", [](const std::string& cls, int n, int k, bool members) {
    py::list out;
    for (const auto& r : orbits(PermClass::by_name(cls, k), n, members)) out.append(orbit_dict(r));
    return out;
  }, py::arg("cls"), py::arg("n"), py::arg("k") = 2, py::arg("members") = false);
  m.def("orbit_series", [](const std::string& cls, int deg, int k) {
    const auto s = orbit_series(PermClass::by_name(cls, k), deg);
    py::dict d;
    d["P"] = to_py(s.P.coefficients());
    d["O"] = to_py(s.O.coefficients());
    py::list oxy;
    for (const auto& c : s.Oxy.coefficients()) oxy.append(to_py(c.coefficients()));
    d["Oxy"] = oxy;
    d["agrees"] = s.agrees();
    return d;
  }, py::arg("cls"), py::arg("deg"), py::arg("k") = 2);

  m.def("render_path", [](const std::string& s, int k) { return svg::render_path(parse_catalan_or_augmented(s, k)); });
  m.def("render_tree", [](const std::vector<int>& w) { return svg::render_tree(build_fs_tree(w)); });

  m.def("verify", [](const std::string& suite, int max) {
    std::vector<std::tuple<std::string, bool, std::string>> cases;
    const bool ok = verify::run_suite(
        suite, max, [&](const verify::CaseResult& c) { cases.emplace_back(c.name, c.pass, c.detail); },
        [](const std::string&) {});
    return py::make_tuple(ok, cases);
  }, py::arg("suite"), py::arg("max"));
}
