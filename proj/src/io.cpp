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

#include "sumrank/io.hpp"

#include <fstream>

#include "sumrank/error.hpp"

namespace sumrank::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::MalformedInput, what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

template <typename T>
T as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    malformed(std::string("bad value for ") + what);
  }
}

}  // namespace

json field_to_json(const Field& f) {
  return json{{"p", f.p()}, {"s", f.s()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

FieldPtr field_from_json(const json& j) {
  auto field = Field::build(as<unsigned>(member(j, "p"), "p"), as<unsigned>(member(j, "s"), "s"),
                            as<unsigned>(member(j, "m"), "m"));
  if (j.contains("modulus") && as<std::vector<unsigned>>(j.at("modulus"), "modulus") != field->modulus()) {
    malformed("modulus does not match the deterministic field construction");
  }
  return field;
}

json elem_to_json(const Field& f, Elem e) { return f.coeffs(e); }

Elem elem_from_json(const Field& f, const json& j) {
  if (!j.is_array()) malformed("field element must be a coefficient array");
  const auto c = as<std::vector<unsigned>>(j, "field element");
  if (c.size() > f.degree()) malformed("field element has too many coefficients");
  for (auto x : c) {
    if (x >= f.p()) malformed("coefficient outside [0, p)");
  }
  return f.from_coeffs(c);
}

json vec_to_json(const Field& f, std::span<const Elem> v) {
  json out = json::array();
  for (auto e : v) out.push_back(elem_to_json(f, e));
  return out;
}

std::vector<Elem> vec_from_json(const Field& f, const json& j) {
  if (!j.is_array()) malformed("expected an array of field elements");
  std::vector<Elem> out;
  for (const auto& e : j) out.push_back(elem_from_json(f, e));
  return out;
}

json matrix_to_json(const Field& f, const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_to_json(f, m.row(r)));
  return out;
}

Matrix matrix_from_json(const Field& f, const json& j) {
  if (!j.is_array()) malformed("matrix must be an array of rows");
  std::vector<std::vector<Elem>> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(f, r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  try {
    return Matrix::from_rows(rows, cols);
  } catch (const Error&) {
    malformed("ragged matrix");
  }
}

json comp_to_json(const Composition& c) { return c.parts(); }

Composition comp_from_json(const json& j) {
  try {
    return Composition(as<std::vector<std::size_t>>(j, "composition"));
  } catch (const Error& e) {
    malformed(e.what());
  }
}

json params_to_json(const GlrsParams& p) {
  const Field& f = p.ore.field();
  return json{{"field", field_to_json(f)},
              {"beta", vec_to_json(f, p.beta)},
              {"a", vec_to_json(f, p.a)},
              {"v", vec_to_json(f, p.v)},
              {"comp", comp_to_json(p.comp)},
              {"k", p.k},
              {"theta_l", p.ore.theta_l()},
              {"gamma", elem_to_json(f, p.ore.gamma())}};
}

GlrsParams params_from_json(const json& j, FieldPtr field) {
  if (j.is_object() && j.contains("field")) field = field_from_json(j.at("field"));
  if (!field) malformed("parameters need a field");
  const Field& f = *field;
  try {
    OreCtx ore(field, as<unsigned>(member(j, "theta_l"), "theta_l"), elem_from_json(f, member(j, "gamma")));
    return GlrsParams{ore,
                      comp_from_json(member(j, "comp")),
                      vec_from_json(f, member(j, "beta")),
                      vec_from_json(f, member(j, "a")),
                      vec_from_json(f, member(j, "v")),
                      as<std::size_t>(member(j, "k"), "k")};
  } catch (const Error& e) {
    if (e.code() == Errc::MalformedInput) throw;
    malformed(e.what());
  }
}

json isometry_to_json(const Field& f, const SemilinearIsometry& iso) {
  json mats = json::array();
  for (const auto& m : iso.lin.M) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (auto e : m.row(r)) row.push_back(e.v);
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  return json{{"c", vec_to_json(f, iso.lin.c)}, {"M", std::move(mats)}, {"pi", iso.lin.pi}, {"aut_t", iso.aut_t}};
}

SemilinearIsometry isometry_from_json(const Field& f, const json& j) {
  SemilinearIsometry iso;
  iso.lin.c = vec_from_json(f, member(j, "c"));
  iso.lin.pi = as<std::vector<std::size_t>>(member(j, "pi"), "pi");
  iso.aut_t = as<std::int64_t>(member(j, "aut_t"), "aut_t");
  for (const auto& mj : member(j, "M")) {
    const auto rows = as<std::vector<std::vector<std::uint64_t>>>(mj, "M");
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols()) malformed("ragged isometry matrix");
      for (std::size_t c = 0; c < m.cols(); ++c) {
        try {
          m(r, c) = f.checked(rows[r][c]);
        } catch (const Error&) {
          malformed("isometry matrix entry out of range");
        }
      }
    }
    iso.lin.M.push_back(std::move(m));
  }
  return iso;
}

json verdict_to_json(const Verdict& v, std::string_view method) {
  return json{{"method", method},
              {"structured", v.structured},
              {"statistic", v.statistic},
              {"threshold", v.threshold},
              {"baseline", v.baseline},
              {"certainty", certainty_name(v.certainty)},
              {"j", v.j}};
}

json report_to_json(const RecoveryReport& r) {
  return json{{"params", params_to_json(r.params)},
              {"method", method_name(r.method)},
              {"beta_route", route_name(r.beta_route)},
              {"verified", r.verified},
              {"timing", {{"elapsed_ms", r.elapsed_ms}}}};
}

json public_code_to_json(const PublicCode& c) {
  const Field& f = c.ore.field();
  return json{{"field", field_to_json(f)},
              {"theta_l", c.ore.theta_l()},
              {"gamma", elem_to_json(f, c.ore.gamma())},
              {"comp", comp_to_json(c.comp)},
              {"generator", matrix_to_json(f, c.generator)}};
}

PublicCode public_code_from_json(const json& j) {
  auto field = field_from_json(member(j, "field"));
  try {
    OreCtx ore(field, as<unsigned>(member(j, "theta_l"), "theta_l"), elem_from_json(*field, member(j, "gamma")));
    PublicCode code{ore, comp_from_json(member(j, "comp")), matrix_from_json(*field, member(j, "generator"))};
    if (code.generator.cols() != code.comp.n()) malformed("generator width differs from composition");
    return code;
  } catch (const Error& e) {
    if (e.code() == Errc::MalformedInput) throw;
    malformed(e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    malformed(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::MalformedInput, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace sumrank::io
