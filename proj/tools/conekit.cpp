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

// conekit: command-line front end for the cone metric toolkit.
//
// Reports go to stdout as one JSON document, a one-line-per-item summary
// goes to stderr. Exit status: 0 all checks pass (or the solver converged),
// 1 a check failed, 2 bad input.

#include "conekit/comparison.hpp"
#include "conekit/cone.hpp"
#include "conekit/cone_metric.hpp"
#include "conekit/fixedpoint.hpp"
#include "conekit/json_io.hpp"
#include "conekit/scalarize.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using conekit::PropertyReport;
using nlohmann::json;

constexpr int kExitPass  = 0;
constexpr int kExitFail  = 1;
constexpr int kExitInput = 2;

void summarize(PropertyReport const &report)
{
  for (auto const &item : report.items)
  {
    char const *tag = item.passed() ? "PASS" : (item.advisory ? "NOTE" : "FAIL");
    std::cerr << "[" << tag << "] " << report.name << "/" << item.item << "  trials=" << item.trials
              << " failures=" << item.failures;
    if (!item.passed())
    {
      std::cerr << " worst=" << item.worst_violation;
    }
    std::cerr << '\n';
  }
}

int finish(std::string const &command, std::vector<PropertyReport> const &reports,
           json extra = json::object())
{
  bool passed = true;
  json out;
  out["command"] = command;
  out["reports"] = json::array();
  for (auto const &r : reports)
  {
    summarize(r);
    passed = passed && r.passed();
    out["reports"].push_back(conekit::to_json(r));
  }
  for (auto &[key, value] : extra.items())
  {
    out[key] = value;
  }
  out["passed"] = passed;
  std::cout << out.dump(2) << '\n';
  return passed ? kExitPass : kExitFail;
}

struct Options
{
  std::string   cone_path;
  std::string   space_path;
  std::string   map_path;
  std::string   g_path;
  std::string   phi_path;
  std::string   pairs_path;
  std::string   x0;
  std::size_t   samples{0};
  std::uint64_t seed{1};
  double        tol{1e-10};
  std::size_t   max_iter{10000};
};

int check_cone(Options const &o)
{
  auto const spec    = conekit::io::parse_cone_spec(conekit::io::read_json(o.cone_path));
  std::size_t const n = o.samples ? o.samples : 1000;
  return finish("check-cone", {conekit::validate_cone(spec.geometry, spec.e, n, o.seed)});
}

int check_properties(Options const &o)
{
  conekit::Scalarizer const s(conekit::io::parse_cone(conekit::io::read_json(o.cone_path)));
  std::size_t const n = o.samples ? o.samples : 10000;
  return finish("check-lemmas", {conekit::check_scalarization_properties(s, n, o.seed),
                                 conekit::check_embedding_properties(s, n, o.seed)});
}

int induce(Options const &o)
{
  auto const                   space = conekit::io::parse_space(conekit::io::read_json(o.space_path));
  conekit::InducedMetric const m(space);
  std::size_t const            n = o.samples ? o.samples : 10000;

  json table;
  table["cone"] = conekit::io::cone_json(space.cone());
  table["pairs"] = json::array();
  auto const pairs = conekit::pair_set(space, std::min<std::size_t>(n, 1000), o.seed);
  for (auto const &[x, y] : pairs)
  {
    table["pairs"].push_back({{"x", space.point_json(x)},
                              {"y", space.point_json(y)},
                              {"p", conekit::vector_json(space.distance(x, y))},
                              {"d_p", m(x, y)}});
  }
  if (space.is_finite())
  {
    table["points"] = space.labels();
    json rows       = json::array();
    for (auto const &x : space.points())
    {
      json row = json::array();
      for (auto const &y : space.points())
      {
        row.push_back(m(x, y));
      }
      rows.push_back(std::move(row));
    }
    table["d_p"] = std::move(rows);
  }
  if (!o.pairs_path.empty())
  {
    conekit::io::write_json(o.pairs_path, table);
  }
  return finish("induce", {conekit::verify_cone_metric_axioms(space, n, o.seed),
                           conekit::verify_induced_metric(m, n, o.seed)});
}

int verify(Options const &o)
{
  auto const space = conekit::io::parse_space(conekit::io::read_json(o.space_path));
  auto const f     = conekit::io::parse_map(conekit::io::read_json(o.map_path), space);
  auto const vc    = conekit::io::parse_comparison(conekit::io::read_json(o.phi_path), space.cone());
  conekit::Scalarizer const    s(space.cone());
  conekit::InducedMetric const m(space, s);
  auto const                   psi   = conekit::transfer_psi(vc, s);
  std::size_t const            n     = o.samples ? o.samples : 10000;
  auto const                   pairs = conekit::pair_set(space, n, o.seed);
  return finish("verify", {conekit::verify_vector_contraction(f, vc, pairs),
                           conekit::verify_scalar_contraction(f, psi, m, pairs),
                           conekit::check_contraction_transfer(f, vc, s, pairs)});
}

int solve(Options const &o)
{
  auto const space = conekit::io::parse_space(conekit::io::read_json(o.space_path));
  auto const f     = conekit::io::parse_map(conekit::io::read_json(o.map_path), space);
  conekit::InducedMetric const m(space);
  if (o.x0.empty())
  {
    throw conekit::InputError("solve needs --x0");
  }
  auto const x0     = conekit::io::parse_point(json(o.x0), space);
  auto const result = conekit::picard_solve(f, m, x0, o.tol, o.max_iter);

  std::cerr << (result.converged ? "[PASS] " : "[FAIL] ") << "picard: iterations="
            << result.iterations;
  if (result.fixed_point)
  {
    std::cerr << " fixed_point=" << space.point_json(*result.fixed_point).dump();
  }
  std::cerr << '\n';

  json out;
  out["command"] = "solve";
  out["map"]     = f.describe();
  out["tol"]     = o.tol;
  out["result"]  = conekit::to_json(result, space);
  out["passed"]  = result.converged;
  std::cout << out.dump(2) << '\n';
  return result.converged ? kExitPass : kExitFail;
}

int check_c(Options const &o)
{
  auto const space = conekit::io::parse_space(conekit::io::read_json(o.space_path));
  auto const f     = conekit::io::parse_map(conekit::io::read_json(o.map_path), space);
  auto const g     = conekit::io::parse_map(conekit::io::read_json(o.g_path), space);
  auto const vc    = conekit::io::parse_comparison(conekit::io::read_json(o.phi_path), space.cone());
  conekit::Scalarizer const    s(space.cone());
  conekit::InducedMetric const m(space, s);
  auto const                   psi   = conekit::transfer_psi(vc, s);
  std::size_t const            n     = o.samples ? o.samples : 10000;
  auto const                   pairs = conekit::pair_set(space, n, o.seed);

  auto const c  = conekit::check_condition_c(f, g, vc, pairs);
  auto const c1 = conekit::check_condition_c1(f, g, psi, m, pairs);
  json       extra;
  if (space.is_finite())
  {
    extra["witnesses"] = {{"c", conekit::to_json(c, space)["witnesses"]},
                          {"c1", conekit::to_json(c1, space)["witnesses"]}};
  }
  return finish("check-c",
                {c.report, c1.report, conekit::check_condition_transfer(f, g, vc, s, pairs)},
                std::move(extra));
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"conekit: cone metric spaces, scalarization and fixed points"};
  app.require_subcommand(1);
  Options o;

  auto add_sampling = [&](CLI::App *cmd) {
    cmd->add_option("--samples", o.samples, "Number of random samples");
    cmd->add_option("--seed", o.seed, "Random seed");
  };

  auto *cmd_cone = app.add_subcommand("check-cone", "Sampled check of the cone axioms");
  cmd_cone->add_option("cone", o.cone_path, "Cone JSON")->required();
  add_sampling(cmd_cone);

  auto *cmd_props =
      app.add_subcommand("check-lemmas", "Scalarization and embedding property suites");
  cmd_props->add_option("cone", o.cone_path, "Cone JSON")->required();
  add_sampling(cmd_props);

  auto *cmd_induce = app.add_subcommand("induce", "Induced scalar metric and its axioms");
  cmd_induce->add_option("space", o.space_path, "Space JSON")->required();
  cmd_induce->add_option("--pairs", o.pairs_path, "Write the d_p table here");
  add_sampling(cmd_induce);

  auto *cmd_verify =
      app.add_subcommand("verify", "Vector and scalar contraction, and their implication");
  cmd_verify->add_option("space", o.space_path, "Space JSON")->required();
  cmd_verify->add_option("map", o.map_path, "Map JSON")->required();
  cmd_verify->add_option("phi", o.phi_path, "Comparison JSON")->required();
  add_sampling(cmd_verify);

  auto *cmd_solve = app.add_subcommand("solve", "Picard iteration to a fixed point");
  cmd_solve->add_option("space", o.space_path, "Space JSON")->required();
  cmd_solve->add_option("map", o.map_path, "Map JSON")->required();
  cmd_solve->add_option("--x0", o.x0, "Start point (label or number)")->required();
  cmd_solve->add_option("--tol", o.tol, "Residual tolerance");
  cmd_solve->add_option("--max-iter", o.max_iter, "Iteration limit");

  auto *cmd_c = app.add_subcommand("check-c", "Conditions (C), (C1) and their case transfer");
  cmd_c->add_option("space", o.space_path, "Space JSON")->required();
  cmd_c->add_option("f", o.map_path, "Map f JSON")->required();
  cmd_c->add_option("g", o.g_path, "Map g JSON")->required();
  cmd_c->add_option("phi", o.phi_path, "Comparison JSON")->required();
  add_sampling(cmd_c);

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::CallForHelp const &e)
  {
    return app.exit(e);
  }
  catch (CLI::ParseError const &e)
  {
    app.exit(e);
    return kExitInput;
  }

  try
  {
    if (cmd_cone->parsed())
      return check_cone(o);
    if (cmd_props->parsed())
      return check_properties(o);
    if (cmd_induce->parsed())
      return induce(o);
    if (cmd_verify->parsed())
      return verify(o);
    if (cmd_solve->parsed())
      return solve(o);
    if (cmd_c->parsed())
      return check_c(o);
  }
  catch (conekit::InputError const &e)
  {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  catch (conekit::OracleError const &e)
  {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
