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

#include "conekit/scalarize.hpp"

#include <cmath>
#include <random>

namespace conekit {

namespace {

bool on_axis(Vector const &e)
{
  return e.head(e.size() - 1).isZero(0.0);
}

}  // namespace

Scalarizer::Scalarizer(Cone cone)
  : cone_(std::move(cone))
{
  switch (cone_.kind())
  {
  case ConeKind::orthant:
    closed_form_ = true;
    break;
  case ConeKind::halfspace:
    Ae_          = cone_.geometry().constraints() * cone_.interior_point();
    closed_form_ = true;
    break;
  case ConeKind::lorentz:
    closed_form_ = on_axis(cone_.interior_point());
    break;
  }
}

double Scalarizer::xi(Vector const &y) const
{
  require_dim(y, cone_.dim(), "xi");
  Vector const &e = cone_.interior_point();
  switch (cone_.kind())
  {
  case ConeKind::orthant:
    return (y.array() / e.array()).maxCoeff();
  case ConeKind::halfspace:
    return ((cone_.geometry().constraints() * y).array() / Ae_.array()).maxCoeff();
  case ConeKind::lorentz:
    if (closed_form_)
    {
      Index const n = cone_.dim();
      return (y(n - 1) + y.head(n - 1).norm()) / e(n - 1);
    }
    break;
  }
  // The feasible end of the bracket: never below the infimum.
  return bracket(y, 1e-13 * (1.0 + y.norm())).second;
}

double Scalarizer::xi_oracle(Vector const &y, double tol) const
{
  auto const [lo, hi] = bracket(y, tol);
  return 0.5 * (lo + hi);
}

std::pair<double, double> Scalarizer::bracket(Vector const &y, double tol) const
{
  require_dim(y, cone_.dim(), "xi_oracle");
  if (!(tol > 0.0))
  {
    throw InputError("xi_oracle needs tol > 0");
  }
  if (!y.allFinite())
  {
    throw OracleError("xi_oracle: non-finite input");
  }
  Vector const &e        = cone_.interior_point();
  auto const    feasible = [&](double r) { return cone_.slack(r * e - y) >= 0.0; };

  constexpr int max_doublings = 200;
  double const  base          = 1.0 + y.norm();
  double        hi            = base;
  double        lo            = -base;
  int           grow          = 0;
  while (!feasible(hi))
  {
    if (++grow > max_doublings)
    {
      throw OracleError("xi_oracle: upper bracket did not close");
    }
    hi *= 2.0;
  }
  grow = 0;
  while (feasible(lo))
  {
    if (++grow > max_doublings)
    {
      throw OracleError("xi_oracle: lower bracket did not close");
    }
    lo *= 2.0;
  }

  while (hi - lo >= tol)
  {
    double const mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
    {
      break;
    }
    if (feasible(mid))
    {
      hi = mid;
    }
    else
    {
      lo = mid;
    }
  }
  return {lo, hi};
}

Vector Scalarizer::embed(double r) const
{
  if (!std::isfinite(r))
  {
    throw InputError("embed: r must be finite");
  }
  return r * cone_.interior_point();
}

namespace {

struct Sampler
{
  explicit Sampler(std::uint64_t seed)
    : rng(seed)
  {}

  double uniform(double a, double b)
  {
    return std::uniform_real_distribution<double>(a, b)(rng);
  }

  double log_scale(double lo_exp, double hi_exp)
  {
    return std::pow(10.0, uniform(lo_exp, hi_exp));
  }

  Vector gaussian(Index n, double scale)
  {
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector                           v(n);
    for (Index i = 0; i < n; ++i)
    {
      v(i) = scale * normal(rng);
    }
    return v;
  }

  std::mt19937_64 rng;
};

nlohmann::json yr_witness(Vector const &y, double r, double xi)
{
  return nlohmann::json{{"y", vector_json(y)}, {"r", r}, {"xi", xi}};
}

}  // namespace

PropertyReport check_scalarization_properties(Scalarizer const &s, std::size_t samples,
                                              std::uint64_t seed)
{
  if (samples < 1)
  {
    throw InputError("check_scalarization_properties needs samples >= 1");
  }
  Cone const   &cone = s.cone();
  Vector const &e    = cone.interior_point();
  Index const   n    = cone.dim();
  double const  rate = cone.slack(e);
  double const  lip  = s.lipschitz_constant();

  PropertyReport report;
  report.name               = "scalarization";
  report.details["kind"]    = to_string(cone.kind());
  report.details["samples"] = samples;
  report.details["seed"]    = seed;
  report.details["lipschitz_constant"] = lip;

  auto &le_member   = report.add("le_iff_member");
  auto &gt_outside  = report.add("gt_iff_not_member");
  auto &ge_boundary = report.add("ge_iff_not_interior");
  auto &lt_interior = report.add("lt_iff_interior");
  auto &homogeneous = report.add("positive_homogeneity");
  auto &continuous  = report.add("continuity");
  auto &monotone    = report.add("monotone");
  auto &subadditive = report.add("subadditive");

  Sampler sampler(seed);
  for (std::size_t t = 0; t < samples; ++t)
  {
    double const scale = sampler.log_scale(-1.0, 2.0);
    Vector const y     = sampler.gaussian(n, scale);
    double const xi_y  = s.xi(y);

    double     r    = 0.0;
    int const  mode = static_cast<int>(sampler.uniform(0.0, 3.0));
    if (mode == 0)
    {
      double const sign = sampler.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
      r = xi_y + sign * sampler.log_scale(-7.0, 0.0) * (1.0 + std::abs(xi_y));
    }
    else if (mode == 1)
    {
      r = xi_y;
    }
    else
    {
      r = sampler.gaussian(1, scale)(0);
    }

    Vector const z    = s.embed(r) - y;
    double const band = 4.0 * kMembershipTolerance * (1.0 + y.norm() + std::abs(r) * e.norm()) / rate;
    double const gap  = std::abs(xi_y - r);
    auto const   wit  = [&] { return yr_witness(y, r, xi_y); };

    if (xi_y <= r)
    {
      bool const member = cone.contains(z);
      le_member.record(member, cone.violation(z), wit);
      gt_outside.record(member, cone.violation(z), wit);
    }
    else if (xi_y > r + band)
    {
      bool const outside = !cone.contains(z);
      le_member.record(outside, gap, wit);
      gt_outside.record(outside, gap, wit);
    }

    if (xi_y >= r)
    {
      bool const not_interior = !cone.in_interior(z);
      ge_boundary.record(not_interior, gap, wit);
      lt_interior.record(not_interior, gap, wit);
    }
    else if (xi_y < r - band)
    {
      bool const interior = cone.in_interior(z);
      ge_boundary.record(interior, gap, wit);
      lt_interior.record(interior, gap, wit);
    }

    {
      double const lambda = sampler.log_scale(-2.0, 2.0);
      double const lhs    = s.xi(lambda * y);
      double const err    = std::abs(lhs - lambda * xi_y);
      homogeneous.record(err <= 1e-8 * (1.0 + std::abs(xi_y)), err, [&] {
        return nlohmann::json{{"y", vector_json(y)}, {"lambda", lambda}, {"xi_scaled", lhs},
                              {"scaled_xi", lambda * xi_y}};
      });
    }

    {
      Vector h = sampler.gaussian(n, 1.0);
      h *= 1e-6 / h.norm();
      double const change = std::abs(s.xi(y + h) - xi_y);
      double const bound  = lip * h.norm() + 1e-11 * (1.0 + y.norm());
      continuous.record(change <= bound, change - bound, [&] {
        return nlohmann::json{{"y", vector_json(y)}, {"h", vector_json(h)}, {"change", change},
                              {"bound", bound}};
      });
    }

    {
      Vector const k     = sample_member(cone.geometry(), &e, sampler.rng, scale);
      Vector const above = y + k;
      double const upper = s.xi(above);
      monotone.record(xi_y <= upper + 1e-9, xi_y - upper, [&] {
        return nlohmann::json{{"y2", vector_json(y)}, {"y1", vector_json(above)},
                              {"xi_y2", xi_y}, {"xi_y1", upper}};
      });
    }

    {
      Vector const other = sampler.gaussian(n, sampler.log_scale(-1.0, 2.0));
      double const joint = s.xi(y + other);
      double const sum   = xi_y + s.xi(other);
      subadditive.record(joint <= sum + 1e-9, joint - sum, [&] {
        return nlohmann::json{{"y1", vector_json(y)}, {"y2", vector_json(other)},
                              {"xi_sum_arg", joint}, {"sum_xi", sum}};
      });
    }
  }
  return report;
}

PropertyReport check_embedding_properties(Scalarizer const &s, std::size_t samples,
                                          std::uint64_t seed)
{
  if (samples < 1)
  {
    throw InputError("check_embedding_properties needs samples >= 1");
  }
  Cone const   &cone = s.cone();
  Vector const &e    = cone.interior_point();
  Index const   n    = cone.dim();

  PropertyReport report;
  report.name               = "embedding";
  report.details["kind"]    = to_string(cone.kind());
  report.details["samples"] = samples;
  report.details["seed"]    = seed;

  auto &zero      = report.add("embed_zero");
  auto &monotone  = report.add("embed_monotone");
  auto &below     = report.add("below_embedded_xi");
  auto &xi_le     = report.add("xi_of_embed_le");
  auto &xi_exact  = report.add("xi_of_embed_exact");
  auto &strict    = report.add("strict_monotone_interior");

  {
    Vector const origin = s.embed(0.0);
    zero.record(origin.isZero(0.0), origin.norm(),
                [&] { return nlohmann::json{{"embed_0", vector_json(origin)}}; });
  }

  Sampler sampler(seed);
  for (std::size_t t = 0; t < samples; ++t)
  {
    double const scale = sampler.log_scale(-1.0, 2.0);

    {
      double r1 = sampler.gaussian(1, scale)(0);
      double r2 = sampler.uniform(0.0, 1.0) < 0.1 ? r1 : sampler.gaussian(1, scale)(0);
      if (r2 < r1)
      {
        std::swap(r1, r2);
      }
      Vector const m1 = s.embed(r1);
      Vector const m2 = s.embed(r2);
      monotone.record(cone.leq(m1, m2), cone.violation(m2 - m1),
                      [&] { return nlohmann::json{{"r1", r1}, {"r2", r2}}; });
    }

    {
      Vector const y    = sampler.gaussian(n, scale);
      double const xi_y = s.xi(y);
      Vector const top  = s.embed(xi_y);
      below.record(cone.leq(y, top), cone.violation(top - y), [&] {
        return nlohmann::json{{"y", vector_json(y)}, {"xi", xi_y}};
      });
    }

    {
      double const r    = sampler.gaussian(1, scale)(0);
      double const back = s.xi(s.embed(r));
      xi_le.record(back <= r + 1e-9, back - r,
                   [&] { return nlohmann::json{{"r", r}, {"xi_embed_r", back}}; });
      xi_exact.record(std::abs(back - r) <= 1e-9, std::abs(back - r),
                      [&] { return nlohmann::json{{"r", r}, {"xi_embed_r", back}}; });
    }

    {
      Vector const y1 = sampler.gaussian(n, scale);
      Vector const k  = sample_member(cone.geometry(), &e, sampler.rng, scale);
      if (cone.slack(k) > 1e-6)
      {
        Vector const y2  = y1 + k;
        double const xi1 = s.xi(y1);
        double const xi2 = s.xi(y2);
        strict.record(xi2 - xi1 > 1e-12, xi1 - xi2, [&] {
          return nlohmann::json{{"y1", vector_json(y1)}, {"y2", vector_json(y2)},
                                {"xi_y1", xi1}, {"xi_y2", xi2}};
        });
      }
    }
  }
  return report;
}

}  // namespace conekit
