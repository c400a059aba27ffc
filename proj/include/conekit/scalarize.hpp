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

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace conekit {

/// Raised when the bisection oracle cannot bracket the membership
/// transition, which happens for non-finite input or a non-interior e.
class OracleError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Nonlinear scalarization with respect to the interior point e of a cone:
///
///   xi(y) = inf { r : r e - y in K }
///
/// together with the embedding M(r) = r e. The infimum is attained because K
/// is closed and e is interior, and xi is sublinear, monotone for <=_K and
/// Lipschitz with constant 1 / interior_radius().
class Scalarizer
{
public:
  explicit Scalarizer(Cone cone);

  Cone const &cone() const
  {
    return cone_;
  }

  /// Closed form where one exists (orthant, halfspace, lorentz with e on
  /// the axis); bisection otherwise.
  double xi(Vector const &y) const;

  /// Definitional bisection on r for membership of r e - y, independent of
  /// the closed forms. Returns the bracket midpoint once its width is < tol.
  double xi_oracle(Vector const &y, double tol) const;

  /// M(r) = r e.
  Vector embed(double r) const;

  bool has_closed_form() const
  {
    return closed_form_;
  }

  double lipschitz_constant() const
  {
    return 1.0 / cone_.interior_radius();
  }

private:
  /// Final (infeasible, feasible) bisection bracket around xi(y).
  std::pair<double, double> bracket(Vector const &y, double tol) const;

  Cone   cone_;
  Vector Ae_;  // halfspace only
  bool   closed_form_;
};

/// Sampled check of the scalarization's order and sublinearity properties:
///
///   le_iff_member          xi(y) <= r  iff  r e - y in K
///   gt_iff_not_member      xi(y) >  r  iff  r e - y not in K
///   ge_iff_not_interior    xi(y) >= r  iff  r e - y not in int K
///   lt_iff_interior        xi(y) <  r  iff  r e - y in int K
///   positive_homogeneity   xi(l y) = l xi(y), l > 0
///   continuity             |xi(y + h) - xi(y)| <= L |h|
///   monotone               y1 in y2 + K  implies  xi(y2) <= xi(y1)
///   subadditive            xi(y1 + y2) <= xi(y1) + xi(y2)
///
/// The four equivalences are asserted on both sides except within a band of
/// width O(tolerance / slack(e)) around xi(y) on the side where the tolerant
/// membership tests cannot resolve the answer.
PropertyReport check_scalarization_properties(Scalarizer const &s, std::size_t samples,
                                              std::uint64_t seed);

/// Sampled check of the embedding M(r) = r e against xi:
///
///   embed_zero                  M(0) = 0
///   embed_monotone              r1 <= r2  implies  M(r1) <=_K M(r2)
///   below_embedded_xi           y <=_K M(xi(y))
///   xi_of_embed_le              xi(M(r)) <= r
///   xi_of_embed_exact           xi(M(r)) = r   (holds for pointed cones)
///   strict_monotone_interior    y1 << y2  implies  xi(y1) < xi(y2)
///
/// The strict item is only asserted when the slack of y2 - y1 exceeds 1e-6.
PropertyReport check_embedding_properties(Scalarizer const &s, std::size_t samples,
                                          std::uint64_t seed);

}  // namespace conekit
