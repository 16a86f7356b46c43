#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kzmodp/annihilator.hpp"
#include "kzmodp/derham.hpp"
#include "kzmodp/kz_system.hpp"
#include "kzmodp/serialize.hpp"
#include "kzmodp/sweep.hpp"
#include "kzmodp/verma.hpp"
#include "kzmodp/wronskian.hpp"

namespace py = pybind11;
using namespace kzmodp;

namespace {

// Reports cross the boundary as JSON text and are decoded in Python, so the
// Python side sees exactly the CLI schemas.
std::string ann_json(const KzParams& params, const std::vector<long long>& z) {
  return to_json(annihilator_basis(params, make_specialized(PrimeField(params.p), z))).dump();
}

std::string qpoly_json(const KzParams& params, const std::vector<long long>& z, int i) {
  const DeRham<PrimeField> dr(params, make_specialized(PrimeField(params.p), z));
  const auto rec = dr.q_poly_recursive(i);
  const auto clo = dr.q_poly_closed(i);
  return json{{"i", i},
              {"A_recursive", to_json(rec.A)},
              {"A_closed", to_json(clo.A)},
              {"match", rec.form == clo.form},
              {"logform", to_json(dr.q_derivative_logform(i))},
              {"form", to_json(rec.form)}}
      .dump();
}

std::vector<std::vector<std::uint32_t>> solve(const KzParams& params, const std::vector<long long>& z) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& s : arithmetic_solutions(params, make_specialized(PrimeField(params.p), z))) {
    std::vector<std::uint32_t> row;
    for (const auto& c : s.components) row.push_back(c.value());
    out.push_back(std::move(row));
  }
  return out;
}

using Coeffs = std::vector<long long>;

UPoly poly_of(const PrimeField& f, const Coeffs& c) {
  std::vector<Fp> v;
  for (auto x : c) v.push_back(f.from_int(x));
  return UPoly(f, std::move(v));
}

Coeffs coeffs_of(const UPoly& f) {
  Coeffs out;
  for (const auto& c : f.coefficients()) out.push_back(c.value());
  return out;
}

py::tuple descend_py(std::uint32_t p, const Coeffs& g, const Coeffs& h) {
  const PrimeField f(p);
  const auto d = descend(poly_of(f, g), poly_of(f, h));
  return py::make_tuple(coeffs_of(d.common), coeffs_of(d.top), coeffs_of(d.bottom));
}

std::vector<py::tuple> verma_py(long long L, long long K, std::uint64_t l_max, std::uint64_t m_max) {
  std::vector<py::tuple> out;
  for (const auto& w : reducibility(VermaParams{L, K, l_max, m_max})) {
    out.push_back(py::make_tuple(to_string(w.condition), w.l, w.m));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Arithmetic solutions of the KZ system mod p";

  py::register_exception<NotAdmissible>(m, "NotAdmissible", PyExc_ValueError);
  py::register_exception<NotPrime>(m, "NotPrime", PyExc_ValueError);
  py::register_exception<NonzeroWronskian>(m, "NonzeroWronskian", PyExc_ValueError);
  py::register_exception<InvalidPoint>(m, "InvalidPoint", PyExc_ValueError);

  py::class_<KzParams>(m, "KzParams")
      .def_static("derive", &KzParams::derive, py::arg("p"), py::arg("q"), py::arg("n"))
      .def_readonly("p", &KzParams::p)
      .def_readonly("q", &KzParams::q)
      .def_readonly("n", &KzParams::n)
      .def_readonly("k", &KzParams::k)
      .def_readonly("a", &KzParams::a)
      .def_readonly("M", &KzParams::M)
      .def_property_readonly("ak", &KzParams::ak)
      .def_property_readonly("expected_ann_dim", &KzParams::expected_ann_dim)
      .def("__repr__", [](const KzParams& k) { return "KzParams(" + to_json(k).dump() + ")"; });

  m.def("solve", &solve, py::arg("params"), py::arg("z"), "P^{lp-1} for l = 1..ak at the point z");
  m.def("solution_rank",
        [](const KzParams& params, std::size_t trials, std::uint64_t seed) {
          const auto r = solution_rank(params, trials, seed);
          return py::make_tuple(r.majority, r.agreeing, r.ranks);
        },
        py::arg("params"), py::arg("trials") = 20, py::arg("seed") = 0);
  m.def("verify_symbolic",
        [](const KzParams& params) {
          std::vector<bool> ok;
          for (const auto& s : symbolic_solutions(params)) {
            const auto r = verify_solution(params, s);
            ok.push_back(r.all_flat() && r.sum_zero);
          }
          return ok;
        },
        py::arg("params"));
  m.def("ann_json", &ann_json, py::arg("params"), py::arg("z"));
  m.def("qpoly_json", &qpoly_json, py::arg("params"), py::arg("z"), py::arg("i"));
  m.def("descend", &descend_py, py::arg("p"), py::arg("g"), py::arg("h"),
        "(common, top, bottom) coefficient lists, lowest degree first");
  m.def("reducibility", &verma_py, py::arg("L"), py::arg("K"), py::arg("l_max"), py::arg("m_max"));
  m.def("sweep_tsv",
        [](const std::vector<Triple>& triples, std::size_t trials, std::uint64_t seed) {
          return to_tsv(run_sweep(triples, trials, seed));
        },
        py::arg("triples"), py::arg("trials") = 20, py::arg("seed") = 0);
}
