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

#include "conekit/comparison.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

namespace conekit {

namespace functions {

ScalarFunction scale(double c)
{
  std::ostringstream name;
  name << "scale(" << c << ")";
  return {name.str(), [c](double t) { return c * t; }};
}

ScalarFunction rational_decay()
{
  return {"rational_decay", [](double t) { return t / (1.0 + t); }};
}

ScalarFunction power(double p)
{
  std::ostringstream name;
  name << "pow(" << p << ")";
  return {name.str(), [p](double t) { return std::pow(t, p); }};
}

ScalarFunction identity()
{
  return {"identity", [](double t) { return t; }};
}

}  // namespace functions

VectorialComparison::VectorialComparison(Kind kind, Cone cone, double lambda,
                                         std::vector<ScalarFunction> comps)
  : kind_(kind)
  , cone_(std::move(cone))
  , lambda_(lambda)
  , components_(std::move(comps))
{}

VectorialComparison VectorialComparison::linear(Cone cone, double lambda)
{
  if (!(lambda >= 0.0 && lambda < 1.0))
  {
    throw InputError("linear comparison needs 0 <= lambda < 1");
  }
  return VectorialComparison(Kind::linear, std::move(cone), lambda, {});
}

VectorialComparison VectorialComparison::componentwise(Cone cone,
                                                       std::vector<ScalarFunction> components)
{
  if (cone.kind() != ConeKind::orthant)
  {
    throw InputError("componentwise comparison is only available on orthant cones");
  }
  if (static_cast<Index>(components.size()) != cone.dim())
  {
    throw InputError("componentwise comparison needs one component per coordinate");
  }
  for (auto const &c : components)
  {
    if (!c.fn)
    {
      throw InputError("componentwise comparison has an empty component");
    }
  }
  return VectorialComparison(Kind::componentwise, std::move(cone), 0.0, std::move(components));
}

Vector VectorialComparison::apply(Vector const &k) const
{
  require_dim(k, cone_.dim(), "comparison argument");
  if (!cone_.contains(k))
  {
    throw InputError("comparison argument is outside the cone");
  }
  if (kind_ == Kind::linear)
  {
    return lambda_ * k;
  }
  Vector out(k.size());
  for (Index i = 0; i < k.size(); ++i)
  {
    out(i) = components_[static_cast<std::size_t>(i)](std::max(0.0, k(i)));
  }
  return out;
}

std::string VectorialComparison::describe() const
{
  std::ostringstream os;
  if (kind_ == Kind::linear)
  {
    os << "linear(" << lambda_ << ")";
    return os.str();
  }
  os << "componentwise(";
  for (std::size_t i = 0; i < components_.size(); ++i)
  {
    os << (i ? ", " : "") << components_[i].name;
  }
  os << ")";
  return os.str();
}

ScalarComparison::ScalarComparison(ScalarFunction fn, Provenance provenance, bool increasing,
                                   bool right_usc)
  : fn_(std::move(fn))
  , provenance_(provenance)
  , increasing_(increasing)
  , right_usc_(right_usc)
{
  if (!fn_.fn)
  {
    throw InputError("scalar comparison needs a callable");
  }
}

ScalarComparison ScalarComparison::linear(double c)
{
  return ScalarComparison(functions::scale(c));
}

ScalarComparison ScalarComparison::rational_decay()
{
  return ScalarComparison(functions::rational_decay());
}

ScalarComparison ScalarComparison::identity()
{
  return ScalarComparison(functions::identity());
}

char const *to_string(ScalarComparison::Provenance provenance)
{
  return provenance == ScalarComparison::Provenance::transferred ? "transferred" : "builtin";
}

PropertyReport verify_vectorial(VectorialComparison const &vc, std::size_t samples,
                                std::uint64_t seed)
{
  if (samples < 1)
  {
    throw InputError("verify_vectorial needs samples >= 1");
  }
  Cone const   &cone = vc.cone();
  Vector const &e    = cone.interior_point();
  Index const   n    = cone.dim();

  PropertyReport report;
  report.name                  = "vectorial_comparison";
  report.details["comparison"] = vc.describe();
  report.details["samples"]    = samples;
  report.details["seed"]       = seed;

  auto &monotone   = report.add("monotone");
  auto &origin     = report.add("fixes_origin");
  auto &nonneg     = report.add("nonnegative");
  auto &below      = report.add("below_identity");
  auto &strict     = report.add("strictly_below");
  auto &margin     = report.add("interior_margin");
  auto &right_cont = report.add("right_continuous");
  auto &positive   = report.add("strictly_positive", /*advisory=*/true);

  {
    Vector const zero = vc.apply(Vector::Zero(n));
    origin.record(zero.norm() <= kMembershipTolerance, zero.norm(),
                  [&] { return nlohmann::json{{"phi_0", vector_json(zero)}}; });
  }

  std::mt19937_64                        rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto const log_scale = [&](double lo, double hi) { return std::pow(10.0, lo + (hi - lo) * unit(rng)); };

  for (std::size_t t = 0; t < samples; ++t)
  {
    double const scale = log_scale(-2.0, 2.0);
    Vector const k1    = sample_member(cone.geometry(), &e, rng, scale);
    Vector const step  = sample_member(cone.geometry(), &e, rng, log_scale(-2.0, 2.0));
    Vector const k2    = k1 + step;
    Vector const phi1  = vc.apply(k1);
    Vector const phi2  = vc.apply(k2);

    monotone.record(cone.leq(phi1, phi2), cone.violation(phi2 - phi1), [&] {
      return nlohmann::json{{"k1", vector_json(k1)}, {"k2", vector_json(k2)},
                            {"phi_k1", vector_json(phi1)}, {"phi_k2", vector_json(phi2)}};
    });

    if (k1.norm() <= 1e-6)
    {
      continue;
    }
    auto const wit = [&] {
      return nlohmann::json{{"k", vector_json(k1)}, {"phi_k", vector_json(phi1)}};
    };
    nonneg.record(cone.contains(phi1), cone.violation(phi1), wit);
    below.record(cone.leq(phi1, k1), cone.violation(k1 - phi1), wit);
    double const gap = (k1 - phi1).norm();
    strict.record(gap > kMembershipTolerance, kMembershipTolerance - gap, wit);
    positive.record(phi1.norm() > kMembershipTolerance, phi1.norm(), wit);

    if (cone.slack(k1) > 1e-3 * (1.0 + k1.norm()))
    {
      Vector const rest = k1 - phi1;
      margin.record(cone.in_interior(rest), -cone.slack(rest), [&] {
        return nlohmann::json{{"k", vector_json(k1)}, {"k_minus_phi_k", vector_json(rest)},
                              {"slack", cone.slack(rest)}};
      });
    }
  }

  std::vector<double> starts = {0.0, 0.5, 1.0, 2.0, 10.0};
  for (std::size_t t = 0; t < std::min<std::size_t>(samples, 100); ++t)
  {
    starts.push_back(log_scale(-2.0, 2.0));
  }
  for (double const t0 : starts)
  {
    Vector const         base = vc.apply(t0 * e);
    std::array<double, 8> ladder{};
    for (int j = 1; j <= 8; ++j)
    {
      double const delta = std::pow(10.0, -j);
      ladder[static_cast<std::size_t>(j - 1)] = (vc.apply((t0 + delta) * e) - base).norm();
    }
    double const finest = ladder.back();
    right_cont.record(finest < 1e-6, finest, [&] {
      return nlohmann::json{{"t0", t0}, {"discrepancies", ladder}};
    });
  }
  return report;
}

ScalarComparison transfer_psi(VectorialComparison const &vc, Scalarizer const &s)
{
  if (!(vc.cone() == s.cone()))
  {
    throw InputError("transfer_psi: comparison and scalarizer use different cones");
  }
  ScalarFunction psi{"transferred " + vc.describe(), [vc, s](double t) {
                       if (t < 0.0)
                       {
                         if (t < -kMembershipTolerance)
                         {
                           throw InputError("transferred psi is defined on t >= 0");
                         }
                         t = 0.0;
                       }
                       return s.xi(vc.apply(s.embed(t)));
                     }};
  return ScalarComparison(std::move(psi), ScalarComparison::Provenance::transferred, true, true);
}

namespace {

struct Orbit
{
  bool        nonincreasing{true};
  bool        vanished{false};
  std::size_t steps{0};
  double      final_value{0.0};
};

Orbit iterate_orbit(ScalarComparison const &sc, double t, std::size_t n_max)
{
  Orbit        orbit;
  double const threshold = 1e-6 * t;
  double       value     = t;
  for (std::size_t step = 1; step <= n_max; ++step)
  {
    double const next = sc(value);
    if (next > value * (1.0 + 1e-15))
    {
      orbit.nonincreasing = false;
    }
    value       = next;
    orbit.steps = step;
    if (value < threshold)
    {
      orbit.vanished = true;
      break;
    }
  }
  orbit.final_value = value;
  return orbit;
}

void require_grid(std::span<double const> grid, std::size_t n_max, char const *what)
{
  if (grid.empty())
  {
    throw InputError(std::string(what) + ": grid is empty");
  }
  for (double t : grid)
  {
    if (!(t > 0.0) || !std::isfinite(t))
    {
      throw InputError(std::string(what) + ": grid values must be finite and > 0");
    }
  }
  if (n_max < 1)
  {
    throw InputError(std::string(what) + ": n_max must be >= 1");
  }
}

}  // namespace

PropertyReport verify_scalar(ScalarComparison const &sc, std::span<double const> t_grid,
                             std::size_t n_max)
{
  require_grid(t_grid, n_max, "verify_scalar");
  std::vector<double> grid(t_grid.begin(), t_grid.end());
  std::sort(grid.begin(), grid.end());

  PropertyReport report;
  report.name                  = "scalar_comparison";
  report.details["comparison"] = sc.name();
  report.details["provenance"] = to_string(sc.provenance());
  report.details["n_max"]      = n_max;

  auto &monotone = report.add("monotone");
  auto &vanish   = report.add("iterates_vanish");

  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
  {
    double const a = sc(grid[i]);
    double const b = sc(grid[i + 1]);
    monotone.record(a <= b * (1.0 + 1e-15) + 1e-300, a - b, [&] {
      return nlohmann::json{{"t1", grid[i]}, {"t2", grid[i + 1]}, {"psi_t1", a}, {"psi_t2", b}};
    });
  }

  nlohmann::json orbits = nlohmann::json::array();
  for (double const t : grid)
  {
    Orbit const orbit = iterate_orbit(sc, t, n_max);
    bool const  ok    = orbit.nonincreasing && orbit.vanished;
    vanish.record(ok, orbit.final_value / t, [&] {
      return nlohmann::json{{"t", t}, {"steps", orbit.steps}, {"final", orbit.final_value},
                            {"nonincreasing", orbit.nonincreasing}};
    });
    orbits.push_back({{"t", t}, {"steps", orbit.steps}, {"final", orbit.final_value}});
  }
  report.details["orbits"] = std::move(orbits);
  return report;
}

PropertyReport check_decay_equivalence(ScalarComparison const &sc,
                                       std::span<double const> t_grid, std::size_t n_max)
{
  require_grid(t_grid, n_max, "check_decay_equivalence");
  bool const hypotheses = sc.declared_increasing() && sc.declared_right_usc();

  PropertyReport report;
  report.name                  = "decay_equivalence";
  report.details["comparison"] = sc.name();
  report.details["declared_increasing"] = sc.declared_increasing();
  report.details["declared_right_usc"]  = sc.declared_right_usc();

  std::vector<double> below_fail;
  std::vector<double> decay_fail;
  for (double const t : t_grid)
  {
    double const value = sc(t);
    if (!(t - value > 1e-12))
    {
      below_fail.push_back(t);
    }
    Orbit const orbit = iterate_orbit(sc, t, n_max);
    if (!(orbit.nonincreasing && orbit.vanished))
    {
      decay_fail.push_back(t);
    }
  }
  bool const all_below = below_fail.empty();
  bool const all_decay = decay_fail.empty();
  report.details["all_below"] = all_below;
  report.details["all_decay"] = all_decay;

  auto &forward  = report.add("below_implies_decay", !hypotheses);
  auto &backward = report.add("decay_implies_below", !hypotheses);
  if (all_below)
  {
    forward.record(all_decay, static_cast<double>(decay_fail.size()), [&] {
      return nlohmann::json{{"t_without_decay", decay_fail}};
    });
  }
  if (all_decay)
  {
    backward.record(all_below, static_cast<double>(below_fail.size()), [&] {
      return nlohmann::json{{"t_not_below", below_fail}};
    });
  }
  report.details["hypotheses_violated"] =
      hypotheses && (forward.failures + backward.failures) > 0;
  return report;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n)
{
  if (!(lo > 0.0 && hi >= lo) || n < 1)
  {
    throw InputError("log_grid needs 0 < lo <= hi and n >= 1");
  }
  std::vector<double> grid;
  grid.reserve(n);
  double const a = std::log10(lo);
  double const b = std::log10(hi);
  for (std::size_t i = 0; i < n; ++i)
  {
    double const f = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    grid.push_back(std::pow(10.0, a + f * (b - a)));
  }
  return grid;
}

}  // namespace conekit
