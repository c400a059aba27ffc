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

#include "json.hpp"

#include <cstddef>
#include <string>
#include <deque>

namespace conekit {

/// Outcome of one sampled or exhaustive property check.
///
/// `worst_violation` is the largest amount by which a failing trial missed
/// its inequality (0 when nothing failed). `witness` holds the inputs of the
/// worst failing trial. Advisory items are reported but never make the
/// enclosing report fail.
struct PropertyItem
{
  std::string    item;
  std::size_t    trials{0};
  std::size_t    failures{0};
  double         worst_violation{0.0};
  nlohmann::json witness = nlohmann::json::object();
  bool           advisory{false};

  bool passed() const
  {
    return failures == 0;
  }

  /// Counts a trial. When `ok` is false the trial is a failure and its
  /// witness replaces the stored one if `violation` is the worst so far.
  template <typename WitnessFn>
  void record(bool ok, double violation, WitnessFn &&make_witness)
  {
    ++trials;
    if (ok)
    {
      return;
    }
    ++failures;
    if (failures == 1 || violation > worst_violation)
    {
      worst_violation = violation;
      witness         = make_witness();
    }
  }
};

struct PropertyReport
{
  std::string               name;
  std::deque<PropertyItem>  items;  // add() never invalidates earlier references
  nlohmann::json            details = nlohmann::json::object();

  bool passed() const;

  /// Looks an item up by name; throws std::out_of_range when absent.
  PropertyItem const &item(std::string const &item_name) const;
  PropertyItem       &item(std::string const &item_name);

  PropertyItem &add(std::string item_name, bool advisory = false);
};

nlohmann::json to_json(PropertyItem const &item);
nlohmann::json to_json(PropertyReport const &report);

}  // namespace conekit
