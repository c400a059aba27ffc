//------------------------------------------------------------------------------
//
//   Copyright 2026 The conekit Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include "conekit/comparison.hpp"
#include "conekit/cone.hpp"
#include "conekit/cone_metric.hpp"
#include "conekit/fixedpoint.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>

namespace conekit::io {

/// A cone description before its interior point has been validated.
/// `e` is empty when the file gave none and the default is not interior.
struct ConeSpec
{
  ConeGeometry          geometry;
  std::optional<Vector> e;
};

// Every parser throws InputError on malformed documents.

/// {"kind": "orthant"|"halfspace"|"lorentz", "dim": n, "A": [[...]], "e": [...]}
ConeSpec        parse_cone_spec(nlohmann::json const &j);
Cone            parse_cone(nlohmann::json const &j);
nlohmann::json  cone_json(Cone const &cone);

/// {"cone": {...}, "space": {"type": "table", "points": [...], "p": [[[...]]]}
///                        | {"type": "weighted_line", "w": [...]}}
ConeMetricSpace parse_space(nlohmann::json const &j);

/// {"kind": "linear", "lambda": l}
/// | {"kind": "componentwise", "components": [{"type": "scale", "c": c}
///                                           | {"type": "rational_decay"}
///                                           | {"type": "pow", "p": p}
///                                           | {"type": "identity"}]}
VectorialComparison parse_comparison(nlohmann::json const &j, Cone const &cone);

/// {"type": "affine", "a": a, "b": b}             weighted line only
/// | {"type": "table", "map": {"a": "b", ...}}    or "map": ["b", ...]
/// | {"type": "constant", "value": label-or-number}
/// | {"type": "identity"}
SelfMap parse_map(nlohmann::json const &j, ConeMetricSpace const &space);

/// A label for table spaces; a number (given as JSON number or string) for
/// the weighted line.
Point parse_point(nlohmann::json const &j, ConeMetricSpace const &space);

nlohmann::json read_json(std::filesystem::path const &path);
void           write_json(std::filesystem::path const &path, nlohmann::json const &j);

}  // namespace conekit::io
