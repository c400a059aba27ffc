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
#include "conekit/cone_metric.hpp"
#include "conekit/report.hpp"
#include "conekit/scalarize.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conekit {

using PairSet = std::vector<std::pair<Point, Point>>;

/// A self-map f : X -> X of a cone metric space.
///
/// Table spaces take an assignment array (point i goes to assignment[i]);
/// the weighted line takes the affine family x -> a x + b or any callable
/// on R. Contraction is never assumed; it is checked by the verifiers.
class SelfMap
{
public:
  static SelfMap table(ConeMetricSpace domain, std::vector<std::size_t> assignment);
  static SelfMap affine(ConeMetricSpace domain, double a, double b);
  static SelfMap line_function(ConeMetricSpace domain, std::string name,
                               std::function<double(double)> fn);
  static SelfMap identity(ConeMetricSpace domain);

  ConeMetricSpace const &domain() const
  {
    return domain_;
  }
  std::string const &describe() const
  {
    return name_;
  }

  Point operator()(Point const &x) const;

private:
  SelfMap(ConeMetricSpace domain, std::string name, std::function<Point(Point const &)> rule)
    : domain_(std::move(domain))
    , name_(std::move(name))
    , rule_(std::move(rule))
  {}

  ConeMetricSpace                     domain_;
  std::string                         name_;
  std::function<Point(Point const &)> rule_;
};

/// Orbit and verdict of a Picard run. residuals[n] = d_p(x_n, x_{n+1}).
/// The orbit and residual lists stop growing at kOrbitCap entries.
struct FixedPointReport
{
  static constexpr std::size_t kOrbitCap = 10000;

  std::vector<Point>   orbit;
  std::vector<double>  residuals;
  bool                 converged{false};
  std::optional<Point> fixed_point;
  std::size_t          iterations{0};
};

nlohmann::json to_json(FixedPointReport const &report, ConeMetricSpace const &space);

/// p(f x, f y) <=_K phi(p(x, y)) on every pair.
PropertyReport verify_vector_contraction(SelfMap const &f, VectorialComparison const &vc,
                                         PairSet const &pairs);
PropertyReport verify_vector_contraction(SelfMap const &f, VectorialComparison const &vc,
                                         std::size_t samples, std::uint64_t seed);

/// d_p(f x, f y) <= psi(d_p(x, y)) + 1e-9 on every pair.
PropertyReport verify_scalar_contraction(SelfMap const &f, ScalarComparison const &sc,
                                         InducedMetric const &m, PairSet const &pairs);
PropertyReport verify_scalar_contraction(SelfMap const &f, ScalarComparison const &sc,
                                         InducedMetric const &m, std::size_t samples,
                                         std::uint64_t seed);

/// Cross-tabulates the vector contraction for phi against the scalar
/// contraction for psi = transfer_psi(phi) pair by pair. The "implication"
/// item fails on any pair that passes the vector check but fails the scalar
/// one; the two contraction items are advisory tallies.
PropertyReport check_contraction_transfer(SelfMap const &f, VectorialComparison const &vc,
                                          Scalarizer const &s, PairSet const &pairs);
PropertyReport check_contraction_transfer(SelfMap const &f, VectorialComparison const &vc,
                                          Scalarizer const &s, std::size_t samples,
                                          std::uint64_t seed);

/// Picard iteration x_{n+1} = f(x_n), stopping once d_p(x_n, x_{n+1}) < tol
/// (fixed_point = x_{n+1}) or after max_iter steps. Non-convergence is a
/// report state.
FixedPointReport picard_solve(SelfMap const &f, InducedMetric const &m, Point const &x0,
                              double tol, std::size_t max_iter);

/// Runs picard_solve from every start and checks all runs converge to limits
/// within 10 tol of each other in d_p.
PropertyReport verify_uniqueness(SelfMap const &f, InducedMetric const &m,
                                 std::vector<Point> const &starts, double tol,
                                 std::size_t max_iter);

/// Which of the three candidates witnesses the condition for the pair:
/// case 1 uses (g x, g y), case 2 (g x, f x), case 3 (g y, f y).
struct ConditionWitness
{
  Point               x;
  Point               y;
  std::array<bool, 3> cases{};

  bool any() const
  {
    return cases[0] || cases[1] || cases[2];
  }
};

struct ConditionReport
{
  PropertyReport                report;
  std::vector<ConditionWitness> witnesses;

  bool holds() const
  {
    return report.passed();
  }
};

/// Vector form: some u in {p(gx,gy), p(gx,fx), p(gy,fy)} has
/// p(fx, fy) <=_K phi(u).
ConditionReport check_condition_c(SelfMap const &f, SelfMap const &g,
                                  VectorialComparison const &vc, PairSet const &pairs);

/// Scalar form: some w in {d_p(gx,gy), d_p(gx,fx), d_p(gy,fy)} has
/// d_p(fx, fy) <= psi(w) + 1e-9.
ConditionReport check_condition_c1(SelfMap const &f, SelfMap const &g,
                                   ScalarComparison const &sc, InducedMetric const &m,
                                   PairSet const &pairs);

/// Case-preserving transfer: every case that witnesses the vector condition
/// for a pair must also witness the scalar condition with
/// psi = transfer_psi(vc, s). The per-condition items are advisory.
PropertyReport check_condition_transfer(SelfMap const &f, SelfMap const &g,
                                        VectorialComparison const &vc, Scalarizer const &s,
                                        PairSet const &pairs);

nlohmann::json to_json(ConditionReport const &report, ConeMetricSpace const &space);

}  // namespace conekit
