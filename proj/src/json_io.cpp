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

#include "conekit/json_io.hpp"

#include <cmath>
#include <fstream>
#include <string>

namespace conekit::io {

namespace {

using nlohmann::json;

json const &field(json const &j, char const *key)
{
  if (!j.is_object() || !j.contains(key))
  {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

double number(json const &j, char const *what)
{
  if (!j.is_number())
  {
    throw InputError(std::string(what) + " must be a number");
  }
  return j.get<double>();
}

std::string text(json const &j, char const *what)
{
  if (!j.is_string())
  {
    throw InputError(std::string(what) + " must be a string");
  }
  return j.get<std::string>();
}

Vector vector(json const &j, char const *what)
{
  if (!j.is_array() || j.empty())
  {
    throw InputError(std::string(what) + " must be a nonempty array of numbers");
  }
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
  {
    v(static_cast<Index>(i)) = number(j[i], what);
  }
  require_finite(v, what);
  return v;
}

Matrix matrix(json const &j, char const *what)
{
  if (!j.is_array() || j.empty())
  {
    throw InputError(std::string(what) + " must be a nonempty array of rows");
  }
  std::size_t const cols = j[0].is_array() ? j[0].size() : 0;
  Matrix            A(static_cast<Index>(j.size()), static_cast<Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i)
  {
    Vector const row = vector(j[i], what);
    if (static_cast<std::size_t>(row.size()) != cols)
    {
      throw InputError(std::string(what) + " rows must have equal length");
    }
    A.row(static_cast<Index>(i)) = row.transpose();
  }
  return A;
}

Index dimension(json const &j)
{
  json const &d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1)
  {
    throw InputError("'dim' must be a positive integer");
  }
  return static_cast<Index>(d.get<long long>());
}

}  // namespace

ConeSpec parse_cone_spec(json const &j)
{
  std::string const kind = text(field(j, "kind"), "cone kind");
  std::optional<ConeGeometry> geometry;
  if (kind == "orthant")
  {
    geometry = ConeGeometry::orthant(dimension(j));
  }
  else if (kind == "lorentz")
  {
    geometry = ConeGeometry::lorentz(dimension(j));
  }
  else if (kind == "halfspace")
  {
    geometry = ConeGeometry::halfspace(matrix(field(j, "A"), "halfspace A"));
    if (j.contains("dim") && dimension(j) != geometry->dim())
    {
      throw InputError("'dim' does not match the column count of A");
    }
  }
  else
  {
    throw InputError("unknown cone kind '" + kind + "'");
  }

  ConeSpec spec{*geometry, std::nullopt};
  if (j.contains("e"))
  {
    Vector e = vector(j.at("e"), "interior point e");
    require_dim(e, geometry->dim(), "interior point e");
    spec.e = std::move(e);
  }
  else
  {
    Vector e = geometry->default_interior_point();
    if (geometry->in_interior(e))
    {
      spec.e = std::move(e);
    }
  }
  return spec;
}

Cone parse_cone(json const &j)
{
  ConeSpec spec = parse_cone_spec(j);
  if (!spec.e)
  {
    throw InputError("the default interior point is not interior for this cone; give 'e'");
  }
  return Cone(std::move(spec.geometry), std::move(spec.e));
}

json cone_json(Cone const &cone)
{
  json j;
  j["kind"] = to_string(cone.kind());
  j["dim"]  = cone.dim();
  if (cone.kind() == ConeKind::halfspace)
  {
    Matrix const &A = cone.geometry().constraints();
    j["A"]          = json::array();
    for (Index i = 0; i < A.rows(); ++i)
    {
      j["A"].push_back(vector_json(A.row(i).transpose()));
    }
  }
  j["e"] = vector_json(cone.interior_point());
  return j;
}

ConeMetricSpace parse_space(json const &j)
{
  Cone        cone = parse_cone(field(j, "cone"));
  json const &s    = field(j, "space");
  std::string const type = text(field(s, "type"), "space type");
  if (type == "weighted_line")
  {
    return ConeMetricSpace::weighted_line(std::move(cone), vector(field(s, "w"), "line weight w"));
  }
  if (type != "table")
  {
    throw InputError("unknown space type '" + type + "'");
  }
  json const &pts = field(s, "points");
  if (!pts.is_array())
  {
    throw InputError("'points' must be an array of labels");
  }
  std::vector<std::string> labels;
  for (auto const &p : pts)
  {
    labels.push_back(p.is_string() ? p.get<std::string>() : p.dump());
  }
  json const &table = field(s, "p");
  if (!table.is_array() || table.size() != labels.size())
  {
    throw InputError("'p' must have one row per point");
  }
  std::vector<std::vector<Vector>> p;
  for (auto const &row : table)
  {
    if (!row.is_array() || row.size() != labels.size())
    {
      throw InputError("'p' must be square");
    }
    std::vector<Vector> out;
    for (auto const &v : row)
    {
      out.push_back(vector(v, "distance table entry"));
    }
    p.push_back(std::move(out));
  }
  return ConeMetricSpace::table(std::move(cone), std::move(labels), std::move(p));
}

VectorialComparison parse_comparison(json const &j, Cone const &cone)
{
  std::string const kind = text(field(j, "kind"), "comparison kind");
  if (kind == "linear")
  {
    return VectorialComparison::linear(cone, number(field(j, "lambda"), "lambda"));
  }
  if (kind != "componentwise")
  {
    throw InputError("unknown comparison kind '" + kind + "'");
  }
  json const &list = field(j, "components");
  if (!list.is_array())
  {
    throw InputError("'components' must be an array");
  }
  std::vector<ScalarFunction> components;
  for (auto const &c : list)
  {
    std::string const type = text(field(c, "type"), "component type");
    if (type == "scale")
    {
      components.push_back(functions::scale(number(field(c, "c"), "scale c")));
    }
    else if (type == "rational_decay")
    {
      components.push_back(functions::rational_decay());
    }
    else if (type == "pow")
    {
      components.push_back(functions::power(number(field(c, "p"), "pow p")));
    }
    else if (type == "identity")
    {
      components.push_back(functions::identity());
    }
    else
    {
      throw InputError("unknown component type '" + type + "'");
    }
  }
  return VectorialComparison::componentwise(cone, std::move(components));
}

Point parse_point(json const &j, ConeMetricSpace const &space)
{
  if (space.is_finite())
  {
    return space.point(j.is_string() ? j.get<std::string>() : j.dump());
  }
  if (j.is_number())
  {
    return j.get<double>();
  }
  if (j.is_string())
  {
    std::string const s = j.get<std::string>();
    try
    {
      std::size_t used  = 0;
      double const v    = std::stod(s, &used);
      if (used == s.size() && std::isfinite(v))
      {
        return v;
      }
    }
    catch (std::exception const &)
    {
    }
    throw InputError("'" + s + "' is not a point of the weighted line");
  }
  throw InputError("point must be a label or a number");
}

SelfMap parse_map(json const &j, ConeMetricSpace const &space)
{
  std::string const type = text(field(j, "type"), "map type");
  if (type == "identity")
  {
    return SelfMap::identity(space);
  }
  if (type == "affine")
  {
    return SelfMap::affine(space, number(field(j, "a"), "affine a"), number(field(j, "b"), "affine b"));
  }
  if (type == "constant")
  {
    Point const value = parse_point(field(j, "value"), space);
    if (space.is_finite())
    {
      return SelfMap::table(space, std::vector<std::size_t>(space.size(), std::get<std::size_t>(value)));
    }
    double const c = std::get<double>(value);
    return SelfMap::affine(space, 0.0, c);
  }
  if (type != "table")
  {
    throw InputError("unknown map type '" + type + "'");
  }
  if (!space.is_finite())
  {
    throw InputError("table maps need a table space");
  }
  json const              &m = field(j, "map");
  std::vector<std::size_t> assignment(space.size());
  if (m.is_array())
  {
    if (m.size() != space.size())
    {
      throw InputError("table map array needs one image per point");
    }
    for (std::size_t i = 0; i < m.size(); ++i)
    {
      assignment[i] = std::get<std::size_t>(parse_point(m[i], space));
    }
  }
  else if (m.is_object())
  {
    std::vector<bool> seen(space.size(), false);
    for (auto const &[from, to] : m.items())
    {
      std::size_t const i = std::get<std::size_t>(space.point(from));
      assignment[i]       = std::get<std::size_t>(parse_point(to, space));
      seen[i]             = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
    {
      if (!seen[i])
      {
        throw InputError("table map has no image for '" + space.labels()[i] + "'");
      }
    }
  }
  else
  {
    throw InputError("'map' must be an object or an array");
  }
  return SelfMap::table(space, std::move(assignment));
}

json read_json(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw InputError("cannot open '" + path.string() + "'");
  }
  try
  {
    return json::parse(in);
  }
  catch (json::parse_error const &err)
  {
    throw InputError("'" + path.string() + "' is not valid JSON: " + err.what());
  }
}

void write_json(std::filesystem::path const &path, json const &j)
{
  std::ofstream out(path);
  if (!out)
  {
    throw InputError("cannot write '" + path.string() + "'");
  }
  out << j.dump(2) << '\n';
}

}  // namespace conekit::io
