/*
 * Copyright 2026 The sumrank Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Python bindings. Field elements cross the boundary as their integer
// index (the base-p packing of the coefficient array); vectors are lists
// and matrices are lists of rows.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sumrank/codes.hpp"
#include "sumrank/distinguishers.hpp"
#include "sumrank/error.hpp"
#include "sumrank/experiment.hpp"
#include "sumrank/io.hpp"
#include "sumrank/isometry.hpp"
#include "sumrank/recovery.hpp"

namespace py = pybind11;
using namespace sumrank;

namespace {

using Rows = std::vector<std::vector<std::uint32_t>>;

std::vector<Elem> to_elems(const Field& f, const std::vector<std::uint32_t>& v) {
  std::vector<Elem> out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(f.checked(x));
  return out;
}

std::vector<std::uint32_t> to_ints(std::span<const Elem> v) {
  std::vector<std::uint32_t> out;
  out.reserve(v.size());
  for (auto e : v) out.push_back(e.v);
  return out;
}

Matrix to_matrix(const Field& f, const Rows& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::MalformedInput, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.checked(rows[r][c]);
  }
  return m;
}

Rows to_rows(const Matrix& m) {
  Rows out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = to_ints(m.row(r));
  return out;
}

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict verdict_dict(const Verdict& v, std::string_view method) {
  return to_python(io::verdict_to_json(v, method)).cast<py::dict>();
}

// pybind11 holders cannot point to const, so the shared field is exposed
// through a non-const alias. No binding mutates it.
using PyFieldPtr = std::shared_ptr<Field>;

PyFieldPtr to_py(const FieldPtr& f) { return std::const_pointer_cast<Field>(f); }

OreCtx make_ore(const PyFieldPtr& f, unsigned theta_l, std::uint32_t gamma) {
  return OreCtx(f, theta_l, f->checked(gamma));
}

}  // namespace

PYBIND11_MODULE(_sumrank, m) {
  m.doc() = "Sum-rank metric codes, distinguishers and parameter recovery";

  py::register_exception<Error>(m, "SumrankError", PyExc_ValueError);

  py::class_<Field, PyFieldPtr>(m, "Field")
      .def(py::init([](unsigned p, unsigned s, unsigned mm) { return to_py(Field::build(p, s, mm)); }), py::arg("p"),
           py::arg("s"), py::arg("m"))
      .def_property_readonly("p", &Field::p)
      .def_property_readonly("s", &Field::s)
      .def_property_readonly("m", &Field::m)
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("q", &Field::q)
      .def_property_readonly("modulus", &Field::modulus)
      .def("add", [](const Field& f, std::uint32_t a, std::uint32_t b) { return f.add(f.checked(a), f.checked(b)).v; })
      .def("sub", [](const Field& f, std::uint32_t a, std::uint32_t b) { return f.sub(f.checked(a), f.checked(b)).v; })
      .def("mul", [](const Field& f, std::uint32_t a, std::uint32_t b) { return f.mul(f.checked(a), f.checked(b)).v; })
      .def("inv", [](const Field& f, std::uint32_t a) { return f.inv(f.checked(a)).v; })
      .def("pow", [](const Field& f, std::uint32_t a, std::int64_t e) { return f.pow(f.checked(a), e).v; })
      .def("frobenius", [](const Field& f, std::uint32_t a, std::int64_t t) { return f.frobenius(f.checked(a), t).v; })
      .def("primitive", [](const Field& f) { return f.primitive().v; })
      .def("coeffs", [](const Field& f, std::uint32_t a) { return f.coeffs(f.checked(a)); })
      .def("from_coeffs", [](const Field& f, const std::vector<unsigned>& c) { return f.from_coeffs(c).v; })
      .def("in_subfield", [](const Field& f, std::uint32_t a) { return f.in_subfield(f.checked(a)); })
      .def("rank", [](const Field& f, const Rows& g) { return rank(f, to_matrix(f, g)); })
      .def("rref", [](const Field& f, const Rows& g) { return to_rows(rref(f, to_matrix(f, g)).reduced); })
      .def("__repr__", [](const Field& f) {
        std::ostringstream s;
        s << "Field(p=" << f.p() << ", s=" << f.s() << ", m=" << f.m() << ")";
        return s.str();
      });

  py::class_<OreCtx>(m, "OreCtx")
      .def(py::init(&make_ore), py::arg("field"), py::arg("theta_l"), py::arg("gamma") = 0)
      .def_property_readonly("field", [](const OreCtx& o) { return to_py(o.field_ptr()); })
      .def_property_readonly("theta_l", &OreCtx::theta_l)
      .def_property_readonly("gamma", [](const OreCtx& o) { return o.gamma().v; })
      .def("theta", [](const OreCtx& o, std::uint32_t a) { return o.theta(o.field().checked(a)).v; })
      .def("der", [](const OreCtx& o, std::uint32_t a) { return o.der(o.field().checked(a)).v; })
      .def("conjugate",
           [](const OreCtx& o, std::uint32_t a, std::uint32_t c) {
             return o.conjugate(o.field().checked(a), o.field().checked(c)).v;
           })
      .def("same_class",
           [](const OreCtx& o, std::uint32_t a, std::uint32_t b) {
             return o.same_class(o.field().checked(a), o.field().checked(b));
           })
      .def("nontrivial_class_count", &OreCtx::nontrivial_class_count)
      .def("sample_class_reps", [](const OreCtx& o, std::size_t count, std::uint64_t seed) {
        Rng rng(seed);
        return to_ints(o.sample_class_reps(count, rng));
      });

  py::class_<GlrsParams>(m, "GlrsParams")
      .def(py::init([](const OreCtx& ore, const std::vector<std::size_t>& comp, const std::vector<std::uint32_t>& beta,
                       const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& v, std::size_t k) {
             const Field& f = ore.field();
             GlrsParams p{ore, Composition(comp), to_elems(f, beta), to_elems(f, a), to_elems(f, v), k};
             validate_params(p);
             return p;
           }),
           py::arg("ore"), py::arg("comp"), py::arg("beta"), py::arg("a"), py::arg("v"), py::arg("k"))
      .def_property_readonly("ore", [](const GlrsParams& p) { return p.ore; })
      .def_property_readonly("comp", [](const GlrsParams& p) { return p.comp.parts(); })
      .def_property_readonly("beta", [](const GlrsParams& p) { return to_ints(p.beta); })
      .def_property_readonly("a", [](const GlrsParams& p) { return to_ints(p.a); })
      .def_property_readonly("v", [](const GlrsParams& p) { return to_ints(p.v); })
      .def_property_readonly("k", [](const GlrsParams& p) { return p.k; })
      .def("to_json", [](const GlrsParams& p) { return to_python(io::params_to_json(p)); });

  m.def(
      "random_glrs",
      [](const OreCtx& ore, const std::vector<std::size_t>& comp, std::size_t k, std::uint64_t seed,
         bool random_multipliers) {
        Rng rng(seed);
        return random_glrs(ore, Composition(comp), k, rng,
                           random_multipliers ? Multipliers::Random : Multipliers::Ones);
      },
      py::arg("ore"), py::arg("comp"), py::arg("k"), py::arg("seed") = 1, py::arg("random_multipliers") = false);

  m.def("canonical_generator", [](const GlrsParams& p) { return to_rows(canonical_generator(p)); });

  m.def(
      "random_disguise",
      [](const GlrsParams& p, std::uint64_t seed, bool semilinear) {
        Rng rng(seed);
        const Disguise d = random_disguise(p, rng, semilinear);
        py::dict out;
        out["public_generator"] = to_rows(d.public_g);
        out["params"] = transport_params(d.iso, p);
        out["isometry"] = to_python(io::isometry_to_json(p.ore.field(), d.iso));
        return out;
      },
      py::arg("params"), py::arg("seed") = 1, py::arg("semilinear") = false);

  m.def(
      "sum_rank_weight",
      [](const Field& f, const std::vector<std::uint32_t>& x, const std::vector<std::size_t>& comp) {
        return sum_rank_weight(f, to_elems(f, x), Composition(comp));
      },
      py::arg("field"), py::arg("x"), py::arg("comp"));

  m.def(
      "min_distance",
      [](const Field& f, const Rows& g, const std::vector<std::size_t>& comp) {
        return min_distance_bruteforce(f, to_matrix(f, g), Composition(comp));
      },
      py::arg("field"), py::arg("generator"), py::arg("comp"));

  m.def(
      "square_distinguisher",
      [](const Field& f, const Rows& g, const std::vector<std::size_t>& comp) {
        return verdict_dict(square_distinguisher(f, to_matrix(f, g), Composition(comp)), "square");
      },
      py::arg("field"), py::arg("generator"), py::arg("comp"));

  m.def(
      "overbeck_distinguisher",
      [](const OreCtx& ore, const Rows& g, const std::vector<std::uint32_t>& a, const std::vector<std::size_t>& comp,
         std::optional<std::size_t> j) {
        const Field& f = ore.field();
        return verdict_dict(overbeck_distinguisher(ore, to_matrix(f, g), to_elems(f, a), Composition(comp), j),
                            "overbeck");
      },
      py::arg("ore"), py::arg("generator"), py::arg("a"), py::arg("comp"), py::arg("j") = py::none());

  m.def(
      "intersection_distinguisher",
      [](const OreCtx& ore, const Rows& g, const std::vector<std::uint32_t>& a, const std::vector<std::size_t>& comp,
         std::optional<std::size_t> j) {
        const Field& f = ore.field();
        return verdict_dict(intersection_distinguisher(ore, to_matrix(f, g), to_elems(f, a), Composition(comp), j),
                            "intersection");
      },
      py::arg("ore"), py::arg("generator"), py::arg("a"), py::arg("comp"), py::arg("j") = py::none());

  m.def(
      "recover",
      [](const OreCtx& ore, const Rows& g, const std::vector<std::size_t>& comp,
         std::optional<std::vector<std::uint32_t>> a, std::optional<std::vector<std::uint32_t>> v) {
        const Field& f = ore.field();
        RecoveryOptions opts;
        if (a) opts.a = to_elems(f, *a);
        if (v) opts.v = to_elems(f, *v);
        const RecoveryReport rep = recover_full(ore, to_matrix(f, g), Composition(comp), opts);
        py::dict out = to_python(io::report_to_json(rep)).cast<py::dict>();
        out["glrs"] = rep.params;
        return out;
      },
      py::arg("ore"), py::arg("generator"), py::arg("comp"), py::arg("a") = py::none(), py::arg("v") = py::none());

  m.def(
      "run_experiment",
      [](std::tuple<unsigned, unsigned, unsigned> field, unsigned theta_l, const std::vector<std::size_t>& comp,
         std::size_t k, std::size_t trials, std::uint64_t seed, const std::string& method, bool random_multipliers,
         std::optional<std::size_t> j, const std::string& ground_truth, unsigned threads) {
        ExperimentConfig cfg;
        std::tie(cfg.p, cfg.s, cfg.m) = field;
        cfg.theta_l = theta_l;
        cfg.comp = comp;
        cfg.k = k;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.method = parse_method(method);
        cfg.multipliers = random_multipliers ? Multipliers::Random : Multipliers::Ones;
        cfg.j = j;
        cfg.mix = parse_mix(ground_truth);
        cfg.threads = threads;
        ExperimentResult res;
        {
          py::gil_scoped_release release;
          res = run_experiment(cfg);
        }
        std::ostringstream csv;
        write_csv(csv, cfg, res);
        return py::make_tuple(csv.str(), to_python(summary_json(cfg, res)));
      },
      py::arg("field"), py::arg("theta_l"), py::arg("comp"), py::arg("k"), py::arg("trials") = 10,
      py::arg("seed") = 1, py::arg("method") = "overbeck", py::arg("random_multipliers") = false,
      py::arg("j") = py::none(), py::arg("ground_truth") = "mixed", py::arg("threads") = 0);
}
