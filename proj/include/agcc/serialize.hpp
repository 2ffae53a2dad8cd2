/*
   Copyright 2026 the agcc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef AGCC_SERIALIZE_HPP
#define AGCC_SERIALIZE_HPP

#include <json.hpp>

#include "agcc/families.hpp"

namespace agcc {

using json = nlohmann::ordered_json;

/// {"p", "e", "modulus"} with coefficients low-to-high; tower fields nest the
/// base field under "base" and give the modulus over that base.
json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const json& j);

/// {"field", "generator", "meta": {"name", "claimed_d"}}. Reading applies a
/// claimed distance as an exact claim; `code check` verifies it.
json code_to_json(const LinearCode& c, const std::string& name = "",
                  std::optional<std::size_t> claimed_d = std::nullopt);
LinearCode code_from_json(const json& j);
std::string code_name_from_json(const json& j);

/// {"field", "coeffs": [A_0, A_1, ...], "params"}. Reading re-certifies the
/// generator and rejects parameter blocks that do not match the matrix.
json conv_to_json(const ConvCode& v);
ConvCode conv_from_json(const json& j);

json transform_record_to_json(const TransformRecord& r);

/// CSV with the fixed column set; deterministic bytes for identical reports.
std::string report_to_csv(const FamilyReport& rep);
json report_to_json(const FamilyReport& rep);

/// Family spec file. User codes are referenced by path and loaded separately.
struct ParsedFamilySpec {
    FamilySpec spec;
    std::vector<std::string> user_files;
};
ParsedFamilySpec family_spec_from_json(const json& j);

}  // namespace agcc

#endif
