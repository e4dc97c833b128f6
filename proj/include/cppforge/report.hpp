/*
 * Copyright 2026 The cppforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cppforge/field_maps.hpp"
#include "cppforge/lift.hpp"
#include "cppforge/perm_check.hpp"
#include "cppforge/search.hpp"

namespace cppforge {

// JSON forms of the library's verdicts and reports. Elements are written
// as their canonical integer codes.

nlohmann::json to_json(const PermVerdict& v);
nlohmann::json to_json(const AGWReport& r);
nlohmann::json to_json(const KernelCriterionVerdict& v);
nlohmann::json to_json(const Poly& f);
/// {construction, params, preconditions, subfield_witness, lifted,
///  predicted_cpp, verified_cpp, ...}
nlohmann::json to_json(const LiftResult& r, std::optional<bool> verified_cpp);
/// Catalog line: {field, table, poly_coeffs, normalized}.
nlohmann::json to_json(const CompleteMapping& m);

/// `L=[(i,a_i),...]` with base-field codes.
std::string format_ppoly(const PPoly& L);
/// Accepts the form above, with or without the leading `L=`.
PPoly parse_ppoly(const FieldPtr& tower, std::string_view text);

/// Parses a coefficient list such as `[0,2,1]` into codes of `field`.
Poly parse_poly(const FieldPtr& field, std::string_view text);

} // namespace cppforge
