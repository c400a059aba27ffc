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

#include "conekit/cone.hpp"
#include "conekit/report.hpp"
#include "conekit/scalarize.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace conekit {

/// A point of a cone metric space: an index into a finite table, or a
/// coordinate on the weighted real line.
using Point = std::variant<std::size_t, double>;

/// Half-width of the interval [-R, R] that parametric spaces are sampled from.
inline constexpr double kLineSampleRadius = 1e3;

/// A set X with a vector-valued distance p : X x X -> R^n ordered by a cone.
///
/// Two back-ends:
///   table          finitely many labeled points and an explicit table p
///   weighted_line  X = R with p(x, y) = |x - y| w for a fixed w in K \ {0}
///
/// Construction only checks shapes; the metric axioms are checked by
/// verify_cone_metric_axioms. Copies share the immutable table.
class ConeMetricSpace
{
public:
  static ConeMetricSpace table(Cone cone, std::vector<std::string> labels,
                               std::vector<std::vector<Vector>> p);
  static ConeMetricSpace weighted_line(Cone cone, Vector w);

  Cone const &cone() const
  {
    return cone_;
  }
  bool is_finite() const
  {
    return table_ != nullptr;
  }
  /// Number of points of a finite space; 0 for the weighted line.
  std::size_t size() const;

  std::vector<std::string> const &labels() const;
  Vector const                   &weight() const;

  /// Index of a labeled point; throws InputError for unknown labels.
  Point point(std::string_view label) const;
  std::vector<Point> points() const;

  bool   contains(Point const &x) const;
  Vector distance(Point const &x, Point const &y) const;

  /// Label for table points, the coordinate for line points.
  nlohmann::json point_json(Point const &x) const;

  /// Same cone and same points with the same distances.
  friend bool operator==(ConeMetricSpace const &a, ConeMetricSpace const &b);

private:
  struct Table
  {
    std::vector<std::string>         labels;
    std::vector<std::vector<Vector>> p;
  };

  explicit ConeMetricSpace(Cone cone)
    : cone_(std::move(cone))
  {}

  void require_point(Point const &x) const;

  Cone                         cone_;
  std::shared_ptr<Table const> table_;
  Vector                       w_;
};

/// The scalar metric d_p = xi o p.
class InducedMetric
{
public:
  explicit InducedMetric(ConeMetricSpace space);
  /// Throws InputError unless the scalarizer's cone is the space's cone.
  InducedMetric(ConeMetricSpace space, Scalarizer scalarizer);

  ConeMetricSpace const &space() const
  {
    return space_;
  }
  Scalarizer const &scalarizer() const
  {
    return scalarizer_;
  }

  double distance(Point const &x, Point const &y) const;
  double operator()(Point const &x, Point const &y) const
  {
    return distance(x, y);
  }

private:
  ConeMetricSpace space_;
  Scalarizer      scalarizer_;
};

/// Ordered pairs to check properties on: every pair of a finite space, or
/// `samples` pairs uniform on [-R, R]^2 for the weighted line.
std::vector<std::pair<Point, Point>> pair_set(ConeMetricSpace const &space, std::size_t samples,
                                              std::uint64_t seed);

/// Checks positivity, identity, symmetry and the vector triangle inequality.
/// Finite spaces of at most 100 points are checked over all triples; larger
/// ones and the weighted line use `samples` random triples.
PropertyReport verify_cone_metric_axioms(ConeMetricSpace const &space,
                                         std::size_t samples = 10000, std::uint64_t seed = 0);

/// Same coverage as verify_cone_metric_axioms, for the scalar metric axioms
/// of d_p with triangle slack 1e-9.
PropertyReport verify_induced_metric(InducedMetric const &metric, std::size_t samples = 10000,
                                     std::uint64_t seed = 0);

/// A random finite cone metric space: points x_i in R^k, a map L whose
/// columns are members of K, and p(x, y) = L |x - y| (componentwise
/// absolute value). The axioms are re-checked before returning; a failure
/// throws OracleError.
ConeMetricSpace random_valid_table(Cone const &cone, std::size_t points, std::mt19937_64 &rng);

}  // namespace conekit
