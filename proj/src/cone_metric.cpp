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

#include "conekit/cone_metric.hpp"

#include <cmath>

namespace conekit {

namespace {

constexpr std::size_t kExhaustiveLimit = 100;

}  // namespace

ConeMetricSpace ConeMetricSpace::table(Cone cone, std::vector<std::string> labels,
                                       std::vector<std::vector<Vector>> p)
{
  std::size_t const n = labels.size();
  if (n == 0)
  {
    throw InputError("table space needs at least one point");
  }
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = i + 1; j < n; ++j)
    {
      if (labels[i] == labels[j])
      {
        throw InputError("duplicate point label '" + labels[i] + "'");
      }
    }
  }
  if (p.size() != n)
  {
    throw InputError("distance table must have one row per point");
  }
  for (auto const &row : p)
  {
    if (row.size() != n)
    {
      throw InputError("distance table must be square");
    }
    for (auto const &v : row)
    {
      require_finite(v, "distance table entry");
      require_dim(v, cone.dim(), "distance table entry");
    }
  }
  ConeMetricSpace space(std::move(cone));
  space.table_ = std::make_shared<Table const>(Table{std::move(labels), std::move(p)});
  return space;
}

ConeMetricSpace ConeMetricSpace::weighted_line(Cone cone, Vector w)
{
  require_finite(w, "line weight w");
  require_dim(w, cone.dim(), "line weight w");
  if (!cone.contains(w) || w.norm() <= kMembershipTolerance)
  {
    throw InputError("line weight w must be a nonzero member of the cone");
  }
  ConeMetricSpace space(std::move(cone));
  space.w_ = std::move(w);
  return space;
}

std::size_t ConeMetricSpace::size() const
{
  return table_ ? table_->labels.size() : 0;
}

std::vector<std::string> const &ConeMetricSpace::labels() const
{
  if (!table_)
  {
    throw InputError("the weighted line has no point labels");
  }
  return table_->labels;
}

Vector const &ConeMetricSpace::weight() const
{
  if (table_)
  {
    throw InputError("a table space has no line weight");
  }
  return w_;
}

Point ConeMetricSpace::point(std::string_view label) const
{
  auto const &names = labels();
  for (std::size_t i = 0; i < names.size(); ++i)
  {
    if (names[i] == label)
    {
      return i;
    }
  }
  throw InputError("unknown point label '" + std::string(label) + "'");
}

std::vector<Point> ConeMetricSpace::points() const
{
  std::vector<Point> out;
  for (std::size_t i = 0; i < size(); ++i)
  {
    out.emplace_back(i);
  }
  return out;
}

bool ConeMetricSpace::contains(Point const &x) const
{
  if (table_)
  {
    auto const *i = std::get_if<std::size_t>(&x);
    return i != nullptr && *i < table_->labels.size();
  }
  auto const *v = std::get_if<double>(&x);
  return v != nullptr && std::isfinite(*v);
}

void ConeMetricSpace::require_point(Point const &x) const
{
  if (!contains(x))
  {
    throw InputError("point is not in the space");
  }
}

Vector ConeMetricSpace::distance(Point const &x, Point const &y) const
{
  require_point(x);
  require_point(y);
  if (table_)
  {
    return table_->p[std::get<std::size_t>(x)][std::get<std::size_t>(y)];
  }
  return std::abs(std::get<double>(x) - std::get<double>(y)) * w_;
}

nlohmann::json ConeMetricSpace::point_json(Point const &x) const
{
  if (table_ && std::holds_alternative<std::size_t>(x) &&
      std::get<std::size_t>(x) < table_->labels.size())
  {
    return table_->labels[std::get<std::size_t>(x)];
  }
  if (auto const *v = std::get_if<double>(&x))
  {
    return *v;
  }
  return nullptr;
}

bool operator==(ConeMetricSpace const &a, ConeMetricSpace const &b)
{
  if (!(a.cone_ == b.cone_) || a.is_finite() != b.is_finite())
  {
    return false;
  }
  if (!a.is_finite())
  {
    return a.w_ == b.w_;
  }
  if (a.table_ == b.table_)
  {
    return true;
  }
  return a.table_->labels == b.table_->labels && a.table_->p == b.table_->p;
}

InducedMetric::InducedMetric(ConeMetricSpace space)
  : space_(std::move(space))
  , scalarizer_(space_.cone())
{}

InducedMetric::InducedMetric(ConeMetricSpace space, Scalarizer scalarizer)
  : space_(std::move(space))
  , scalarizer_(std::move(scalarizer))
{
  if (!(scalarizer_.cone() == space_.cone()))
  {
    throw InputError("scalarizer and space use different cones");
  }
}

double InducedMetric::distance(Point const &x, Point const &y) const
{
  return scalarizer_.xi(space_.distance(x, y));
}

std::vector<std::pair<Point, Point>> pair_set(ConeMetricSpace const &space, std::size_t samples,
                                              std::uint64_t seed)
{
  std::vector<std::pair<Point, Point>> pairs;
  if (space.is_finite())
  {
    for (std::size_t i = 0; i < space.size(); ++i)
    {
      for (std::size_t j = 0; j < space.size(); ++j)
      {
        pairs.emplace_back(Point{i}, Point{j});
      }
    }
    return pairs;
  }
  std::mt19937_64                        rng(seed);
  std::uniform_real_distribution<double> coord(-kLineSampleRadius, kLineSampleRadius);
  pairs.reserve(samples);
  for (std::size_t t = 0; t < samples; ++t)
  {
    double const x = coord(rng);
    double const y = coord(rng);
    pairs.emplace_back(Point{x}, Point{y});
  }
  return pairs;
}

namespace {

/// Calls fn(x, y, z) on every triple of a small finite space, otherwise on
/// `samples` random triples. Returns the number of triples visited.
template <typename Fn>
std::size_t for_each_triple(ConeMetricSpace const &space, std::size_t samples,
                            std::uint64_t seed, Fn &&fn)
{
  std::mt19937_64 rng(seed);
  if (space.is_finite())
  {
    std::size_t const n = space.size();
    if (n <= kExhaustiveLimit)
    {
      for (std::size_t i = 0; i < n; ++i)
      {
        for (std::size_t j = 0; j < n; ++j)
        {
          for (std::size_t k = 0; k < n; ++k)
          {
            fn(Point{i}, Point{j}, Point{k});
          }
        }
      }
      return n * n * n;
    }
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < samples; ++t)
    {
      std::size_t const i = pick(rng);
      std::size_t const j = pick(rng);
      std::size_t const k = pick(rng);
      fn(Point{i}, Point{j}, Point{k});
    }
    return samples;
  }
  std::uniform_real_distribution<double> coord(-kLineSampleRadius, kLineSampleRadius);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t t = 0; t < samples; ++t)
  {
    double const x = coord(rng);
    // Occasional coincident points exercise the identity clauses.
    double const y = unit(rng) < 0.05 ? x : coord(rng);
    double const z = coord(rng);
    fn(Point{x}, Point{y}, Point{z});
  }
  return samples;
}

nlohmann::json triple_json(ConeMetricSpace const &space, Point const &x, Point const &y,
                           Point const &z)
{
  return nlohmann::json{
      {"x", space.point_json(x)}, {"y", space.point_json(y)}, {"z", space.point_json(z)}};
}

bool same_point(Point const &x, Point const &y)
{
  return x == y;
}

void describe_coverage(PropertyReport &report, ConeMetricSpace const &space, std::size_t visited,
                       std::uint64_t seed)
{
  bool const exhaustive      = space.is_finite() && space.size() <= kExhaustiveLimit;
  report.details["coverage"] = exhaustive ? "exhaustive" : "sampled";
  report.details["triples"]  = visited;
  if (!exhaustive)
  {
    report.details["seed"] = seed;
  }
}

}  // namespace

PropertyReport verify_cone_metric_axioms(ConeMetricSpace const &space, std::size_t samples,
                                         std::uint64_t seed)
{
  Cone const    &cone = space.cone();
  PropertyReport report;
  report.name = "cone_metric_axioms";

  auto &positivity = report.add("positivity");
  auto &identity   = report.add("identity");
  auto &symmetry   = report.add("symmetry");
  auto &triangle   = report.add("triangle");

  // Pairwise axioms are checked once per (x, y), on triples with z == first.
  auto const pairwise = [&](Point const &x, Point const &y) {
    Vector const pxy = space.distance(x, y);
    positivity.record(cone.contains(pxy), cone.violation(pxy), [&] {
      return nlohmann::json{{"x", space.point_json(x)}, {"y", space.point_json(y)},
                            {"p", vector_json(pxy)}};
    });
    bool const   same = same_point(x, y);
    double const size = pxy.norm();
    bool const   ok   = same ? size <= kMembershipTolerance : size > kMembershipTolerance;
    identity.record(ok, same ? size : kMembershipTolerance - size, [&] {
      return nlohmann::json{{"x", space.point_json(x)}, {"y", space.point_json(y)},
                            {"p", vector_json(pxy)}};
    });
    Vector const pyx = space.distance(y, x);
    double const asym = (pxy - pyx).norm();
    symmetry.record(asym <= kMembershipTolerance * (1.0 + size), asym, [&] {
      return nlohmann::json{{"x", space.point_json(x)}, {"y", space.point_json(y)},
                            {"p_xy", vector_json(pxy)}, {"p_yx", vector_json(pyx)}};
    });
  };

  std::size_t const visited =
      for_each_triple(space, samples, seed, [&](Point const &x, Point const &y, Point const &z) {
        if (!space.is_finite() || same_point(z, x))
        {
          pairwise(x, y);
        }
        Vector const lhs = space.distance(x, y);
        Vector const rhs = space.distance(x, z) + space.distance(z, y);
        triangle.record(cone.leq(lhs, rhs), cone.violation(rhs - lhs), [&] {
          auto w           = triple_json(space, x, y, z);
          w["p_xy"]        = vector_json(lhs);
          w["p_xz_plus_zy"] = vector_json(rhs);
          return w;
        });
      });
  describe_coverage(report, space, visited, seed);
  return report;
}

PropertyReport verify_induced_metric(InducedMetric const &metric, std::size_t samples,
                                     std::uint64_t seed)
{
  ConeMetricSpace const &space = metric.space();
  PropertyReport         report;
  report.name = "induced_metric_axioms";

  auto &nonnegative = report.add("nonnegative");
  auto &identity    = report.add("identity");
  auto &symmetry    = report.add("symmetry");
  auto &triangle    = report.add("triangle");

  auto const pairwise = [&](Point const &x, Point const &y) {
    double const d   = metric(x, y);
    auto const   wit = [&] {
      return nlohmann::json{{"x", space.point_json(x)}, {"y", space.point_json(y)}, {"d_p", d}};
    };
    nonnegative.record(d >= 0.0, -d, wit);
    bool const same = same_point(x, y);
    identity.record(same ? d <= kMembershipTolerance : d > 0.0, std::abs(d), wit);
    double const back = metric(y, x);
    double const asym = std::abs(d - back);
    symmetry.record(asym <= 1e-12 * (1.0 + std::abs(d)), asym, wit);
  };

  std::size_t const visited =
      for_each_triple(space, samples, seed, [&](Point const &x, Point const &y, Point const &z) {
        if (!space.is_finite() || same_point(z, x))
        {
          pairwise(x, y);
        }
        double const lhs = metric(x, y);
        double const rhs = metric(x, z) + metric(z, y);
        triangle.record(lhs <= rhs + 1e-9, lhs - rhs, [&] {
          auto w          = triple_json(space, x, y, z);
          w["d_xy"]       = lhs;
          w["d_xz_plus_zy"] = rhs;
          return w;
        });
      });
  describe_coverage(report, space, visited, seed);
  return report;
}

ConeMetricSpace random_valid_table(Cone const &cone, std::size_t points, std::mt19937_64 &rng)
{
  if (points < 1)
  {
    throw InputError("random_valid_table needs at least one point");
  }
  std::uniform_int_distribution<int> pick_dim(1, 3);
  std::normal_distribution<double>   normal(0.0, 1.0);
  Index const                        k = pick_dim(rng);

  Matrix L(cone.dim(), k);
  for (Index j = 0; j < k; ++j)
  {
    Vector column;
    do
    {
      column = sample_member(cone.geometry(), &cone.interior_point(), rng);
    } while (column.norm() < 1e-3);
    L.col(j) = column;
  }

  std::vector<Vector> coords;
  for (std::size_t i = 0; i < points; ++i)
  {
    Vector x(k);
    for (Index j = 0; j < k; ++j)
    {
      x(j) = normal(rng);
    }
    coords.push_back(std::move(x));
  }

  std::vector<std::string>         labels;
  std::vector<std::vector<Vector>> p(points, std::vector<Vector>(points));
  for (std::size_t i = 0; i < points; ++i)
  {
    labels.push_back("p" + std::to_string(i));
    for (std::size_t j = 0; j < points; ++j)
    {
      p[i][j] = L * (coords[i] - coords[j]).cwiseAbs();
    }
  }
  auto space = ConeMetricSpace::table(cone, std::move(labels), std::move(p));
  if (!verify_cone_metric_axioms(space).passed())
  {
    throw OracleError("random_valid_table produced a table that fails the cone metric axioms");
  }
  return space;
}

}  // namespace conekit
