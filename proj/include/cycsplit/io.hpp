// SPDX-License-Identifier: Apache-2.0
//
// JSON records shared by the CLI, the C API and certificates:
//   form   {"p": p, "degree": d, "terms": [[i, j, k, c], ...]}
//   curve  {"p": p, "a4": a4, "a6": a6}
//   point  "inf" or [x, y]
// Integers are strict: non-negative JSON integers, never strings or floats.

#pragma once

#include <json.hpp>

#include "cycsplit/elliptic.hpp"

namespace cycsplit {

using Json = nlohmann::json;

Json form_to_json(const HomogeneousForm& f);
/// Throws InvalidInput on malformed records (exponents, coefficient range).
HomogeneousForm form_from_json(const Json& j);

Json curve_to_json(const WeierstrassCurve& e);
WeierstrassCurve curve_from_json(const Json& j);

Json point_to_json(const EPoint& p);
EPoint point_from_json(const Json& j, const WeierstrassCurve& e);

/// Field `key` of `j` as an unsigned integer no larger than `max`.
std::uint64_t json_uint(const Json& j, const char* key, std::uint64_t max = ~std::uint64_t{0});

/// Compact dump; object keys are already sorted by nlohmann::json.
std::string canonical_dump(const Json& j);

}  // namespace cycsplit
