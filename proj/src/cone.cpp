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

#include "conekit/cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace conekit {

char const *to_string(ConeKind kind)
{
  switch (kind)
  {
  case ConeKind::orthant:
    return "orthant";
  case ConeKind::halfspace:
    return "halfspace";
  case ConeKind::lorentz:
    return "lorentz";
  }
  return "unknown";
}

ConeGeometry::ConeGeometry(ConeKind kind, Index dim, Matrix A)
  : kind_(kind)
  , dim_(dim)
  , A_(std::move(A))
{}

ConeGeometry ConeGeometry::orthant(Index n)
{
  if (n < 1)
  {
    throw InputError("orthant cone needs dimension >= 1");
  }
  return ConeGeometry(ConeKind::orthant, n, Matrix());
}

ConeGeometry ConeGeometry::halfspace(Matrix A)
{
  if (A.rows() < 1 || A.cols() < 1)
  {
    throw InputError("halfspace cone needs a nonempty constraint matrix");
  }
  if (!A.allFinite())
  {
    throw InputError("halfspace constraint matrix has non-finite entries");
  }
  for (Index i = 0; i < A.rows(); ++i)
  {
    if (A.row(i).norm() == 0.0)
    {
      throw InputError("halfspace constraint row " + std::to_string(i) + " is zero");
    }
  }
  Index const n = A.cols();
  return ConeGeometry(ConeKind::halfspace, n, std::move(A));
}

ConeGeometry ConeGeometry::lorentz(Index n)
{
  if (n < 2)
  {
    throw InputError("lorentz cone needs dimension >= 2");
  }
  return ConeGeometry(ConeKind::lorentz, n, Matrix());
}

void ConeGeometry::check_dim(Vector const &y) const
{
  require_dim(y, dim_, "cone membership");
}

double ConeGeometry::slack(Vector const &y) const
{
  check_dim(y);
  switch (kind_)
  {
  case ConeKind::orthant:
    return y.minCoeff();
  case ConeKind::halfspace:
    return (A_ * y).minCoeff();
  case ConeKind::lorentz:
    return y(dim_ - 1) - y.head(dim_ - 1).norm();
  }
  return std::numeric_limits<double>::quiet_NaN();
}

bool ConeGeometry::contains(Vector const &y) const
{
  return slack(y) >= -kMembershipTolerance * (1.0 + y.norm());
}

bool ConeGeometry::in_interior(Vector const &y) const
{
  return slack(y) > kMembershipTolerance * (1.0 + y.norm());
}

double ConeGeometry::violation(Vector const &y) const
{
  return std::max(0.0, -slack(y));
}

Vector ConeGeometry::default_interior_point() const
{
  if (kind_ == ConeKind::lorentz)
  {
    Vector e      = Vector::Zero(dim_);
    e(dim_ - 1)   = 1.0;
    return e;
  }
  return Vector::Ones(dim_);
}

bool operator==(ConeGeometry const &a, ConeGeometry const &b)
{
  if (a.kind_ != b.kind_ || a.dim_ != b.dim_)
  {
    return false;
  }
  if (a.kind_ != ConeKind::halfspace)
  {
    return true;
  }
  return a.A_.rows() == b.A_.rows() && a.A_ == b.A_;
}

Cone::Cone(ConeGeometry geometry, std::optional<Vector> e)
  : geometry_(std::move(geometry))
  , e_(e ? std::move(*e) : geometry_.default_interior_point())
{
  require_finite(e_, "interior point e");
  require_dim(e_, geometry_.dim(), "interior point e");
  if (!geometry_.in_interior(e_))
  {
    throw InputError(std::string("interior point e is not in the interior of the ") +
                     to_string(geometry_.kind()) + " cone (slack " +
                     std::to_string(geometry_.slack(e_)) + ")");
  }
}

Cone Cone::orthant(Index n, std::optional<Vector> e)
{
  return Cone(ConeGeometry::orthant(n), std::move(e));
}

Cone Cone::halfspace(Matrix A, std::optional<Vector> e)
{
  return Cone(ConeGeometry::halfspace(std::move(A)), std::move(e));
}

Cone Cone::lorentz(Index n, std::optional<Vector> e)
{
  return Cone(ConeGeometry::lorentz(n), std::move(e));
}

bool Cone::leq(Vector const &x, Vector const &y) const
{
  require_dim(x, dim(), "leq");
  require_dim(y, dim(), "leq");
  return contains(y - x);
}

bool Cone::ll(Vector const &x, Vector const &y) const
{
  require_dim(x, dim(), "ll");
  require_dim(y, dim(), "ll");
  return in_interior(y - x);
}

bool Cone::lt(Vector const &x, Vector const &y) const
{
  return leq(x, y) && (y - x).norm() > kMembershipTolerance;
}

double Cone::interior_radius() const
{
  switch (kind())
  {
  case ConeKind::orthant:
    return e_.minCoeff();
  case ConeKind::halfspace: {
    Matrix const &A     = geometry_.constraints();
    Vector const  Ae    = A * e_;
    Vector const  norms = A.rowwise().norm();
    return (Ae.array() / norms.array()).minCoeff();
  }
  case ConeKind::lorentz:
    return (e_(dim() - 1) - e_.head(dim() - 1).norm()) / std::sqrt(2.0);
  }
  return 0.0;
}

bool operator==(Cone const &a, Cone const &b)
{
  return a.geometry_ == b.geometry_ && a.e_.size() == b.e_.size() && a.e_ == b.e_;
}

namespace {

Vector gaussian(Index n, std::mt19937_64 &rng, double scale)
{
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector                           v(n);
  for (Index i = 0; i < n; ++i)
  {
    v(i) = scale * normal(rng);
  }
  return v;
}

Matrix kernel_basis(ConeGeometry const &geometry)
{
  if (geometry.kind() != ConeKind::halfspace)
  {
    return Matrix(geometry.dim(), 0);
  }
  Eigen::FullPivLU<Matrix> lu(geometry.constraints());
  if (lu.rank() == geometry.dim())
  {
    return Matrix(geometry.dim(), 0);
  }
  return lu.kernel();
}

}  // namespace

Vector sample_member(ConeGeometry const &geometry, Vector const *e, std::mt19937_64 &rng,
                     double scale)
{
  Index const                            n = geometry.dim();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double>       normal(0.0, 1.0);

  Vector y = Vector::Zero(n);
  if (e != nullptr)
  {
    // slack is superadditive, so y + t e has slack >= slack(y) + t slack(e).
    y                 = gaussian(n, rng, scale);
    double const rate = geometry.slack(*e);
    double const s    = geometry.slack(y);
    if (s < 0.0)
    {
      y += (-s / rate) * (*e);
    }
    if (unit(rng) < 0.5)
    {
      y += scale * std::abs(normal(rng)) * (*e);
    }
  }
  else
  {
    for (int attempt = 0; attempt < 1000; ++attempt)
    {
      Vector candidate = gaussian(n, rng, scale);
      if (geometry.contains(candidate))
      {
        y = std::move(candidate);
        break;
      }
    }
  }

  Matrix const kernel = kernel_basis(geometry);
  if (kernel.cols() > 0 && (e == nullptr || unit(rng) < 0.5))
  {
    y += kernel * gaussian(kernel.cols(), rng, scale);
  }
  return y;
}

nlohmann::json vector_json(Vector const &v)
{
  nlohmann::json j = nlohmann::json::array();
  for (Index i = 0; i < v.size(); ++i)
  {
    j.push_back(v(i));
  }
  return j;
}

PropertyReport validate_cone(ConeGeometry const &geometry, std::optional<Vector> const &e,
                             std::size_t samples, std::uint64_t seed)
{
  if (samples < 1)
  {
    throw InputError("validate_cone needs samples >= 1");
  }
  PropertyReport report;
  report.name                = "cone_axioms";
  report.details["kind"]     = to_string(geometry.kind());
  report.details["dim"]      = geometry.dim();
  report.details["samples"]  = samples;
  report.details["seed"]     = seed;

  Vector const *interior = nullptr;
  {
    auto &item = report.add("interior_point");
    if (!e)
    {
      item.record(false, 0.0, [] { return nlohmann::json{{"reason", "no interior point e"}}; });
    }
    else
    {
      bool const shaped = e->size() == geometry.dim() && e->allFinite();
      bool const ok     = shaped && geometry.in_interior(*e);
      double const s    = shaped ? geometry.slack(*e) : 0.0;
      item.record(ok, ok ? 0.0 : -s, [&] {
        return nlohmann::json{{"e", vector_json(*e)}, {"slack", shaped ? s : 0.0}};
      });
      if (ok)
      {
        interior = &*e;
      }
    }
  }

  std::mt19937_64                        rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double>  coefficient(1.0);

  auto &closure = report.add("closure");
  auto &pointed = report.add("pointed");
  bool  found_nonzero = interior != nullptr;

  for (std::size_t t = 0; t < samples; ++t)
  {
    double const scale = std::pow(10.0, -2.0 + 4.0 * unit(rng));
    Vector const x     = sample_member(geometry, interior, rng, scale);
    Vector const y     = sample_member(geometry, interior, rng, scale);
    double const a     = unit(rng) < 0.1 ? 0.0 : coefficient(rng);
    double const b     = unit(rng) < 0.1 ? 0.0 : coefficient(rng);

    Vector const combo = a * x + b * y;
    closure.record(geometry.contains(combo), geometry.violation(combo) / (1.0 + combo.norm()),
                   [&] {
                     return nlohmann::json{{"x", vector_json(x)},
                                           {"y", vector_json(y)},
                                           {"a", a},
                                           {"b", b}};
                   });

    for (Vector const *member : {&x, &y})
    {
      if (!geometry.contains(*member))
      {
        continue;
      }
      double const norm = member->norm();
      if (norm <= 1e-12)
      {
        continue;
      }
      found_nonzero        = true;
      Vector const unit_y  = *member / norm;
      Vector const negated = -unit_y;
      bool const   ok      = !geometry.contains(negated);
      // A failure is a unit vector of K with -y in K; report its norm.
      pointed.record(ok, ok ? 0.0 : 1.0,
                     [&] {
                       return nlohmann::json{{"y", vector_json(unit_y)},
                                             {"neg_y", vector_json(negated)}};
                     });
    }
  }

  auto &nonempty = report.add("nonempty");
  nonempty.record(found_nonzero, 0.0,
                  [] { return nlohmann::json{{"reason", "no nonzero member sampled"}}; });
  return report;
}

PropertyReport validate_cone(Cone const &cone, std::size_t samples, std::uint64_t seed)
{
  return validate_cone(cone.geometry(), cone.interior_point(), samples, seed);
}

}  // namespace conekit
