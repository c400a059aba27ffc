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

#include "conekit/fixedpoint.hpp"

#include <cmath>
#include <sstream>

namespace conekit {

SelfMap SelfMap::table(ConeMetricSpace domain, std::vector<std::size_t> assignment)
{
  if (!domain.is_finite())
  {
    throw InputError("table maps need a finite domain");
  }
  if (assignment.size() != domain.size())
  {
    throw InputError("table map needs one image per point");
  }
  for (std::size_t image : assignment)
  {
    if (image >= domain.size())
    {
      throw InputError("table map sends a point outside the domain");
    }
  }
  std::ostringstream name;
  name << "table[";
  for (std::size_t i = 0; i < assignment.size(); ++i)
  {
    name << (i ? "," : "") << domain.labels()[assignment[i]];
  }
  name << "]";
  return SelfMap(std::move(domain), name.str(),
                 [assignment = std::move(assignment)](Point const &x) -> Point {
                   return assignment[std::get<std::size_t>(x)];
                 });
}

SelfMap SelfMap::affine(ConeMetricSpace domain, double a, double b)
{
  if (!std::isfinite(a) || !std::isfinite(b))
  {
    throw InputError("affine map needs finite coefficients");
  }
  std::ostringstream name;
  name << "affine(" << a << " x + " << b << ")";
  return line_function(std::move(domain), name.str(), [a, b](double x) { return a * x + b; });
}

SelfMap SelfMap::line_function(ConeMetricSpace domain, std::string name,
                               std::function<double(double)> fn)
{
  if (domain.is_finite())
  {
    throw InputError("line maps need the weighted line as domain");
  }
  if (!fn)
  {
    throw InputError("line map needs a callable");
  }
  return SelfMap(std::move(domain), std::move(name), [fn = std::move(fn)](Point const &x) -> Point {
    return fn(std::get<double>(x));
  });
}

SelfMap SelfMap::identity(ConeMetricSpace domain)
{
  return SelfMap(std::move(domain), "identity", [](Point const &x) { return x; });
}

Point SelfMap::operator()(Point const &x) const
{
  if (!domain_.contains(x))
  {
    throw InputError("self-map argument is not in the domain");
  }
  Point image = rule_(x);
  if (!domain_.contains(image))
  {
    throw InputError("self-map " + name_ + " leaves the domain");
  }
  return image;
}

nlohmann::json to_json(FixedPointReport const &report, ConeMetricSpace const &space)
{
  nlohmann::json j;
  j["converged"]   = report.converged;
  j["iterations"]  = report.iterations;
  j["fixed_point"] = report.fixed_point ? space.point_json(*report.fixed_point) : nullptr;
  j["orbit"]       = nlohmann::json::array();
  for (auto const &x : report.orbit)
  {
    j["orbit"].push_back(space.point_json(x));
  }
  j["residuals"] = report.residuals;
  return j;
}

namespace {

void require_same_domain(ConeMetricSpace const &a, ConeMetricSpace const &b, char const *what)
{
  if (!(a == b))
  {
    throw InputError(std::string(what) + ": maps and metric are defined on different spaces");
  }
}

void require_cone(VectorialComparison const &vc, ConeMetricSpace const &space, char const *what)
{
  if (!(vc.cone() == space.cone()))
  {
    throw InputError(std::string(what) + ": comparison cone differs from the space's cone");
  }
}

nlohmann::json pair_json(ConeMetricSpace const &space, Point const &x, Point const &y)
{
  return nlohmann::json{{"x", space.point_json(x)}, {"y", space.point_json(y)}};
}

struct VectorCheck
{
  bool   ok{false};
  double violation{0.0};
  Vector lhs;
  Vector rhs;
};

// p(f x, f y) <=_K phi(u); an argument outside K counts as a failure.
VectorCheck vector_bound(VectorialComparison const &vc, Vector const &lhs, Vector const &u)
{
  Cone const &cone = vc.cone();
  VectorCheck check;
  check.lhs = lhs;
  if (!cone.contains(u))
  {
    check.violation = cone.violation(u);
    return check;
  }
  check.rhs       = vc.apply(u);
  check.ok        = cone.leq(lhs, check.rhs);
  check.violation = cone.violation(check.rhs - lhs);
  return check;
}

}  // namespace

PropertyReport verify_vector_contraction(SelfMap const &f, VectorialComparison const &vc,
                                         PairSet const &pairs)
{
  ConeMetricSpace const &space = f.domain();
  require_cone(vc, space, "verify_vector_contraction");

  PropertyReport report;
  report.name                  = "vector_contraction";
  report.details["map"]        = f.describe();
  report.details["comparison"] = vc.describe();
  auto &item                   = report.add("vector_contraction");

  for (auto const &[x, y] : pairs)
  {
    Vector const      u     = space.distance(x, y);
    VectorCheck const check = vector_bound(vc, space.distance(f(x), f(y)), u);
    item.record(check.ok, check.violation, [&] {
      auto w            = pair_json(space, x, y);
      w["p_xy"]         = vector_json(u);
      w["p_fx_fy"]      = vector_json(check.lhs);
      w["phi_p_xy"]     = check.rhs.size() ? vector_json(check.rhs) : nlohmann::json(nullptr);
      return w;
    });
  }
  return report;
}

PropertyReport verify_vector_contraction(SelfMap const &f, VectorialComparison const &vc,
                                         std::size_t samples, std::uint64_t seed)
{
  return verify_vector_contraction(f, vc, pair_set(f.domain(), samples, seed));
}

PropertyReport verify_scalar_contraction(SelfMap const &f, ScalarComparison const &sc,
                                         InducedMetric const &m, PairSet const &pairs)
{
  require_same_domain(f.domain(), m.space(), "verify_scalar_contraction");
  PropertyReport report;
  report.name                  = "scalar_contraction";
  report.details["map"]        = f.describe();
  report.details["comparison"] = sc.name();
  auto &item                   = report.add("scalar_contraction");

  for (auto const &[x, y] : pairs)
  {
    double const d_xy  = m(x, y);
    double const lhs   = m(f(x), f(y));
    double const bound = sc(d_xy);
    item.record(lhs <= bound + 1e-9, lhs - bound, [&] {
      auto w          = pair_json(m.space(), x, y);
      w["d_xy"]       = d_xy;
      w["d_fx_fy"]    = lhs;
      w["psi_d_xy"]   = bound;
      return w;
    });
  }
  return report;
}

PropertyReport verify_scalar_contraction(SelfMap const &f, ScalarComparison const &sc,
                                         InducedMetric const &m, std::size_t samples,
                                         std::uint64_t seed)
{
  return verify_scalar_contraction(f, sc, m, pair_set(f.domain(), samples, seed));
}

PropertyReport check_contraction_transfer(SelfMap const &f, VectorialComparison const &vc,
                                          Scalarizer const &s, PairSet const &pairs)
{
  ConeMetricSpace const &space = f.domain();
  require_cone(vc, space, "check_contraction_transfer");
  InducedMetric const    m(space, s);
  ScalarComparison const psi = transfer_psi(vc, s);

  PropertyReport report;
  report.name                  = "contraction_transfer";
  report.details["map"]        = f.describe();
  report.details["comparison"] = vc.describe();

  auto &vector_item = report.add("vector_contraction", /*advisory=*/true);
  auto &scalar_item = report.add("scalar_contraction", /*advisory=*/true);
  auto &implication = report.add("implication");

  std::size_t table[2][2] = {{0, 0}, {0, 0}};
  for (auto const &[x, y] : pairs)
  {
    Point const       fx     = f(x);
    Point const       fy     = f(y);
    VectorCheck const vcheck = vector_bound(vc, space.distance(fx, fy), space.distance(x, y));
    double const      d_xy   = m(x, y);
    double const      lhs    = m(fx, fy);
    double const      bound  = psi(d_xy);
    bool const        sok    = lhs <= bound + 1e-9;

    auto const wit = [&] {
      auto w        = pair_json(space, x, y);
      w["d_xy"]     = d_xy;
      w["d_fx_fy"]  = lhs;
      w["psi_d_xy"] = bound;
      return w;
    };
    vector_item.record(vcheck.ok, vcheck.violation, wit);
    scalar_item.record(sok, lhs - bound, wit);
    if (vcheck.ok)
    {
      implication.record(sok, lhs - bound, wit);
    }
    ++table[vcheck.ok ? 0 : 1][sok ? 0 : 1];
  }
  report.details["crosstab"] = {{"vector_pass_scalar_pass", table[0][0]},
                                {"vector_pass_scalar_fail", table[0][1]},
                                {"vector_fail_scalar_pass", table[1][0]},
                                {"vector_fail_scalar_fail", table[1][1]}};
  return report;
}

PropertyReport check_contraction_transfer(SelfMap const &f, VectorialComparison const &vc,
                                          Scalarizer const &s, std::size_t samples,
                                          std::uint64_t seed)
{
  return check_contraction_transfer(f, vc, s, pair_set(f.domain(), samples, seed));
}

FixedPointReport picard_solve(SelfMap const &f, InducedMetric const &m, Point const &x0,
                              double tol, std::size_t max_iter)
{
  require_same_domain(f.domain(), m.space(), "picard_solve");
  if (!(tol > 0.0))
  {
    throw InputError("picard_solve needs tol > 0");
  }
  if (max_iter < 1)
  {
    throw InputError("picard_solve needs max_iter >= 1");
  }
  if (!m.space().contains(x0))
  {
    throw InputError("picard_solve: start point is not in the space");
  }

  FixedPointReport report;
  report.orbit.push_back(x0);
  Point x = x0;
  for (std::size_t n = 0; n < max_iter; ++n)
  {
    Point const  next     = f(x);
    double const residual = m(x, next);
    if (report.residuals.size() < FixedPointReport::kOrbitCap)
    {
      report.residuals.push_back(residual);
    }
    if (report.orbit.size() < FixedPointReport::kOrbitCap)
    {
      report.orbit.push_back(next);
    }
    report.iterations = n + 1;
    if (residual < tol)
    {
      report.converged   = true;
      report.fixed_point = next;
      break;
    }
    x = next;
  }
  return report;
}

PropertyReport verify_uniqueness(SelfMap const &f, InducedMetric const &m,
                                 std::vector<Point> const &starts, double tol,
                                 std::size_t max_iter)
{
  if (starts.size() < 2)
  {
    throw InputError("verify_uniqueness needs at least two starts");
  }
  ConeMetricSpace const &space = m.space();

  PropertyReport report;
  report.name           = "uniqueness";
  report.details["map"] = f.describe();
  auto &converged       = report.add("converged");
  auto &coincide        = report.add("limits_coincide");

  std::vector<std::pair<Point, Point>> limits;  // (start, limit)
  nlohmann::json                       runs = nlohmann::json::array();
  for (auto const &start : starts)
  {
    FixedPointReport const run = picard_solve(f, m, start, tol, max_iter);
    converged.record(run.converged, run.residuals.empty() ? 0.0 : run.residuals.back(), [&] {
      return nlohmann::json{{"start", space.point_json(start)}, {"iterations", run.iterations}};
    });
    runs.push_back({{"start", space.point_json(start)},
                    {"converged", run.converged},
                    {"iterations", run.iterations},
                    {"limit", run.fixed_point ? space.point_json(*run.fixed_point) : nullptr}});
    if (run.fixed_point)
    {
      limits.emplace_back(start, *run.fixed_point);
    }
  }
  for (std::size_t i = 0; i < limits.size(); ++i)
  {
    for (std::size_t j = i + 1; j < limits.size(); ++j)
    {
      double const gap = m(limits[i].second, limits[j].second);
      coincide.record(gap <= 10.0 * tol, gap, [&] {
        return nlohmann::json{{"start_a", space.point_json(limits[i].first)},
                              {"limit_a", space.point_json(limits[i].second)},
                              {"start_b", space.point_json(limits[j].first)},
                              {"limit_b", space.point_json(limits[j].second)},
                              {"d_p", gap}};
      });
    }
  }
  report.details["runs"] = std::move(runs);
  return report;
}

namespace {

struct PairImages
{
  Point fx, fy, gx, gy;
};

PairImages images(SelfMap const &f, SelfMap const &g, Point const &x, Point const &y)
{
  return {f(x), f(y), g(x), g(y)};
}

nlohmann::json cases_json(std::array<bool, 3> const &cases)
{
  nlohmann::json j = nlohmann::json::array();
  for (int k = 0; k < 3; ++k)
  {
    if (cases[static_cast<std::size_t>(k)])
    {
      j.push_back(k + 1);
    }
  }
  return j;
}

std::array<bool, 3> vector_cases(ConeMetricSpace const &space, VectorialComparison const &vc,
                                 PairImages const &im)
{
  Vector const              lhs = space.distance(im.fx, im.fy);
  std::array<Vector, 3> const candidates = {space.distance(im.gx, im.gy),
                                            space.distance(im.gx, im.fx),
                                            space.distance(im.gy, im.fy)};
  std::array<bool, 3> cases{};
  for (std::size_t k = 0; k < 3; ++k)
  {
    cases[k] = vector_bound(vc, lhs, candidates[k]).ok;
  }
  return cases;
}

std::array<bool, 3> scalar_cases(InducedMetric const &m, ScalarComparison const &sc,
                                 PairImages const &im)
{
  double const              lhs        = m(im.fx, im.fy);
  std::array<double, 3> const candidates = {m(im.gx, im.gy), m(im.gx, im.fx), m(im.gy, im.fy)};
  std::array<bool, 3> cases{};
  for (std::size_t k = 0; k < 3; ++k)
  {
    cases[k] = lhs <= sc(candidates[k]) + 1e-9;
  }
  return cases;
}

template <typename CaseFn>
ConditionReport check_condition(char const *name, ConeMetricSpace const &space,
                                PairSet const &pairs, CaseFn &&case_fn)
{
  ConditionReport out;
  out.report.name = name;
  auto &item      = out.report.add(name);
  std::array<std::size_t, 3> counts{};
  for (auto const &[x, y] : pairs)
  {
    ConditionWitness w{x, y, case_fn(x, y)};
    for (std::size_t k = 0; k < 3; ++k)
    {
      counts[k] += w.cases[k] ? 1 : 0;
    }
    item.record(w.any(), 1.0, [&] { return pair_json(space, x, y); });
    out.witnesses.push_back(std::move(w));
  }
  out.report.details["case_counts"] = counts;
  return out;
}

}  // namespace

ConditionReport check_condition_c(SelfMap const &f, SelfMap const &g,
                                  VectorialComparison const &vc, PairSet const &pairs)
{
  ConeMetricSpace const &space = f.domain();
  require_same_domain(space, g.domain(), "check_condition_c");
  require_cone(vc, space, "check_condition_c");
  return check_condition("condition_c", space, pairs, [&](Point const &x, Point const &y) {
    return vector_cases(space, vc, images(f, g, x, y));
  });
}

ConditionReport check_condition_c1(SelfMap const &f, SelfMap const &g,
                                   ScalarComparison const &sc, InducedMetric const &m,
                                   PairSet const &pairs)
{
  ConeMetricSpace const &space = f.domain();
  require_same_domain(space, g.domain(), "check_condition_c1");
  require_same_domain(space, m.space(), "check_condition_c1");
  return check_condition("condition_c1", space, pairs, [&](Point const &x, Point const &y) {
    return scalar_cases(m, sc, images(f, g, x, y));
  });
}

PropertyReport check_condition_transfer(SelfMap const &f, SelfMap const &g,
                                        VectorialComparison const &vc, Scalarizer const &s,
                                        PairSet const &pairs)
{
  ConeMetricSpace const &space = f.domain();
  require_same_domain(space, g.domain(), "check_condition_transfer");
  require_cone(vc, space, "check_condition_transfer");
  InducedMetric const    m(space, s);
  ScalarComparison const psi = transfer_psi(vc, s);

  PropertyReport report;
  report.name                  = "condition_transfer";
  report.details["f"]          = f.describe();
  report.details["g"]          = g.describe();
  report.details["comparison"] = vc.describe();

  auto &vector_item = report.add("condition_c", /*advisory=*/true);
  auto &scalar_item = report.add("condition_c1", /*advisory=*/true);
  auto &preserved   = report.add("case_preserving");

  for (auto const &[x, y] : pairs)
  {
    PairImages const          im      = images(f, g, x, y);
    std::array<bool, 3> const vcases  = vector_cases(space, vc, im);
    std::array<bool, 3> const scases  = scalar_cases(m, psi, im);
    auto const                wit     = [&] {
      auto w           = pair_json(space, x, y);
      w["c_cases"]     = cases_json(vcases);
      w["c1_cases"]    = cases_json(scases);
      return w;
    };
    vector_item.record(vcases[0] || vcases[1] || vcases[2], 1.0, wit);
    scalar_item.record(scases[0] || scases[1] || scases[2], 1.0, wit);
    for (std::size_t k = 0; k < 3; ++k)
    {
      if (vcases[k])
      {
        preserved.record(scases[k], 1.0, wit);
      }
    }
  }
  return report;
}

nlohmann::json to_json(ConditionReport const &report, ConeMetricSpace const &space)
{
  nlohmann::json j = to_json(report.report);
  j["witnesses"]   = nlohmann::json::array();
  for (auto const &w : report.witnesses)
  {
    j["witnesses"].push_back(
        {{"x", space.point_json(w.x)}, {"y", space.point_json(w.y)}, {"cases", cases_json(w.cases)}});
  }
  return j;
}

}  // namespace conekit
