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

#include "conekit/report.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace conekit {

bool PropertyReport::passed() const
{
  return std::all_of(items.begin(), items.end(),
                     [](PropertyItem const &it) { return it.advisory || it.passed(); });
}

PropertyItem const &PropertyReport::item(std::string const &item_name) const
{
  auto it = std::find_if(items.begin(), items.end(),
                         [&](PropertyItem const &p) { return p.item == item_name; });
  if (it == items.end())
  {
    throw std::out_of_range("report '" + name + "' has no item '" + item_name + "'");
  }
  return *it;
}

PropertyItem &PropertyReport::item(std::string const &item_name)
{
  return const_cast<PropertyItem &>(std::as_const(*this).item(item_name));
}

PropertyItem &PropertyReport::add(std::string item_name, bool advisory)
{
  PropertyItem p;
  p.item     = std::move(item_name);
  p.advisory = advisory;
  items.push_back(std::move(p));
  return items.back();
}

nlohmann::json to_json(PropertyItem const &item)
{
  nlohmann::json j;
  j["item"]            = item.item;
  j["trials"]          = item.trials;
  j["failures"]        = item.failures;
  j["worst_violation"] = item.worst_violation;
  j["witness"]         = item.witness;
  if (item.advisory)
  {
    j["advisory"] = true;
  }
  return j;
}

nlohmann::json to_json(PropertyReport const &report)
{
  nlohmann::json j;
  j["name"]   = report.name;
  j["passed"] = report.passed();
  j["items"]  = nlohmann::json::array();
  for (auto const &it : report.items)
  {
    j["items"].push_back(to_json(it));
  }
  if (!report.details.empty())
  {
    j["details"] = report.details;
  }
  return j;
}

}  // namespace conekit
