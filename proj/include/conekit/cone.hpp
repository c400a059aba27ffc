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

#include "conekit/report.hpp"
#include "conekit/vector.hpp"

#include <optional>
#include <random>

namespace conekit {

enum class ConeKind
{
  orthant,
  halfspace,
  lorentz
};

char const *to_string(ConeKind kind);

/// The point set of a closed convex cone in R^n, without a chosen interior
/// point.
///
///   orthant(n):    { y : y_i >= 0 }
///   halfspace(A):  { y : A y >= 0 }       (A is m x n, rows nonzero)
///   lorentz(n):    { y : y_n >= |y_1..n-1| }
///
/// Every kind is described by a single concave "slack" function whose
/// nonnegativity is membership; the tolerant tests below compare it against
/// kMembershipTolerance * (1 + |y|).
class ConeGeometry
{
public:
  static ConeGeometry orthant(Index n);
  static ConeGeometry halfspace(Matrix A);
  static ConeGeometry lorentz(Index n);

  ConeKind kind() const
  {
    return kind_;
  }
  Index dim() const
  {
    return dim_;
  }
  /// Constraint matrix A; empty unless kind() == halfspace.
  Matrix const &constraints() const
  {
    return A_;
  }

  /// Minimum of the defining inequalities at y (orthant: min y_i,
  /// halfspace: min (A y)_i, lorentz: y_n - |y_1..n-1|). No tolerance.
  double slack(Vector const &y) const;

  bool contains(Vector const &y) const;
  bool in_interior(Vector const &y) const;

  /// Distance by which y misses K in slack units, 0 for members.
  double violation(Vector const &y) const;

  /// (1,...,1) for orthant and halfspace, (0,...,0,1) for lorentz.
  Vector default_interior_point() const;

  friend bool operator==(ConeGeometry const &a, ConeGeometry const &b);

private:
  ConeGeometry(ConeKind kind, Index dim, Matrix A);

  void check_dim(Vector const &y) const;

  ConeKind kind_;
  Index    dim_;
  Matrix   A_;
};

/// A cone together with a designated interior point e.
///
/// Construction fails with InputError unless e lies in int K with strict
/// margin. Values are immutable and safe to share between threads.
class Cone
{
public:
  explicit Cone(ConeGeometry geometry, std::optional<Vector> e = std::nullopt);

  static Cone orthant(Index n, std::optional<Vector> e = std::nullopt);
  static Cone halfspace(Matrix A, std::optional<Vector> e = std::nullopt);
  static Cone lorentz(Index n, std::optional<Vector> e = std::nullopt);

  ConeGeometry const &geometry() const
  {
    return geometry_;
  }
  ConeKind kind() const
  {
    return geometry_.kind();
  }
  Index dim() const
  {
    return geometry_.dim();
  }
  Vector const &interior_point() const
  {
    return e_;
  }

  double slack(Vector const &y) const
  {
    return geometry_.slack(y);
  }
  bool contains(Vector const &y) const
  {
    return geometry_.contains(y);
  }
  bool in_interior(Vector const &y) const
  {
    return geometry_.in_interior(y);
  }
  double violation(Vector const &y) const
  {
    return geometry_.violation(y);
  }

  /// x <=_K y, i.e. y - x in K.
  bool leq(Vector const &x, Vector const &y) const;
  /// x << y, i.e. y - x in int K.
  bool ll(Vector const &x, Vector const &y) const;
  /// x <_K y: x <=_K y and |y - x| > tolerance.
  bool lt(Vector const &x, Vector const &y) const;

  /// Radius of the largest Euclidean ball around e contained in K.
  double interior_radius() const;

  friend bool operator==(Cone const &a, Cone const &b);

private:
  ConeGeometry geometry_;
  Vector       e_;
};

/// Draws a member of K. With an interior point available the sample is a
/// Gaussian shifted along e until it reaches K (landing on the boundary),
/// plus, half of the time, an extra interior push. Without one, Gaussians
/// are rejected until a member is found. For halfspace cones the result
/// may also include a component from ker A.
Vector sample_member(ConeGeometry const &geometry, Vector const *e, std::mt19937_64 &rng,
                     double scale = 1.0);

/// Sampled check of the cone axioms: a designated interior point exists,
/// K != {0}, closure under nonnegative combinations, and pointedness
/// (no sampled nonzero member has its negation in K). Failures are reported,
/// never thrown.
PropertyReport validate_cone(ConeGeometry const &geometry, std::optional<Vector> const &e,
                             std::size_t samples, std::uint64_t seed);
PropertyReport validate_cone(Cone const &cone, std::size_t samples, std::uint64_t seed);

nlohmann::json vector_json(Vector const &v);

}  // namespace conekit
