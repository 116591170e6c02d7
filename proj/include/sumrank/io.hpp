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

// JSON encodings. Field elements are arrays of F_p coefficients in
// ascending powers of z; matrices are arrays of rows of such arrays.
// Entries of the F_q-matrices inside an isometry are written as a single
// integer, the base-p packing of the same coefficient array.
//
// Every parser throws Error(MalformedInput) on a bad document.

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "sumrank/codes.hpp"
#include "sumrank/distinguishers.hpp"
#include "sumrank/isometry.hpp"
#include "sumrank/recovery.hpp"

namespace sumrank::io {

using nlohmann::json;

json field_to_json(const Field& f);
FieldPtr field_from_json(const json& j);

json elem_to_json(const Field& f, Elem e);
Elem elem_from_json(const Field& f, const json& j);
json vec_to_json(const Field& f, std::span<const Elem> v);
std::vector<Elem> vec_from_json(const Field& f, const json& j);
json matrix_to_json(const Field& f, const Matrix& m);
Matrix matrix_from_json(const Field& f, const json& j);

json comp_to_json(const Composition& c);
Composition comp_from_json(const json& j);

json params_to_json(const GlrsParams& p);
/// Field taken from the "field" key when present, else from `field`.
GlrsParams params_from_json(const json& j, FieldPtr field = nullptr);

json isometry_to_json(const Field& f, const SemilinearIsometry& iso);
SemilinearIsometry isometry_from_json(const Field& f, const json& j);

json verdict_to_json(const Verdict& v, std::string_view method);
json report_to_json(const RecoveryReport& r);

/// Public key: the Ore context, composition and a generator matrix.
struct PublicCode {
  OreCtx ore;
  Composition comp;
  Matrix generator;
};

json public_code_to_json(const PublicCode& c);
PublicCode public_code_from_json(const json& j);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace sumrank::io
