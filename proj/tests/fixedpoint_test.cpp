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

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace conekit {
namespace {

using testing::vec;

struct LineSetup
{
  ConeMetricSpace space = testing::weighted_line_12();
  InducedMetric   m{space};
  SelfMap         f = SelfMap::affine(space, 0.5, 1.0);
};

TEST(FixedPointTest, SelfMapDomainChecks)
{
  LineSetup const s;
  EXPECT_EQ(std::get<double>(s.f(Point{2.0})), 2.0);
  EXPECT_THROW(s.f(Point{std::size_t{0}}), InputError);
  auto const blowup = SelfMap::line_function(s.space, "inf", [](double) { return INFINITY; });
  EXPECT_THROW(blowup(Point{1.0}), InputError);

  auto const table = testing::three_points(vec({2, 2}));
  EXPECT_THROW(SelfMap::table(table, {0, 1}), InputError);
  EXPECT_THROW(SelfMap::table(table, {0, 1, 3}), InputError);
  EXPECT_THROW(SelfMap::affine(table, 0.5, 1.0), InputError);
  EXPECT_THROW(SelfMap::affine(s.space, NAN, 1.0), InputError);
  auto const shift = SelfMap::table(table, {1, 2, 0});
  EXPECT_EQ(std::get<std::size_t>(shift(Point{std::size_t{2}})), 0u);
}

TEST(FixedPointTest, VectorContractionExamples)
{
  LineSetup const s;
  auto const      half = VectorialComparison::linear(s.space.cone(), 0.5);
  auto const      pass = verify_vector_contraction(s.f, half, 2000, 1);
  EXPECT_TRUE(pass.passed()) << to_json(pass).dump(2);

  auto const tight = verify_vector_contraction(s.f, VectorialComparison::linear(s.space.cone(), 0.4), 2000, 1);
  EXPECT_FALSE(tight.passed());
  auto const &item = tight.item("vector_contraction");
  EXPECT_TRUE(item.witness.contains("x"));
  EXPECT_TRUE(item.witness.contains("p_fx_fy"));

  auto const id = verify_vector_contraction(SelfMap::identity(s.space), half, 2000, 1);
  EXPECT_FALSE(id.passed());
}

TEST(FixedPointTest, ScalarContractionWithTransferredPsi)
{
  LineSetup const  s;
  Scalarizer const xi(s.space.cone());
  auto const       psi = transfer_psi(VectorialComparison::linear(s.space.cone(), 0.5), xi);
  EXPECT_TRUE(verify_scalar_contraction(s.f, psi, s.m, 2000, 2).passed());
  EXPECT_FALSE(verify_scalar_contraction(s.f, ScalarComparison::linear(0.4), s.m, 2000, 2).passed());
}

TEST(FixedPointTest, ContractionTransferOnLine)
{
  LineSetup const  s;
  Scalarizer const xi(s.space.cone());
  for (double lambda : {0.3, 0.5, 0.7})
  {
    auto const report =
        check_contraction_transfer(s.f, VectorialComparison::linear(s.space.cone(), lambda), xi, 2000, 3);
    EXPECT_TRUE(report.passed()) << lambda;
    // On a weighted line both forms say |f x - f y| <= lambda |x - y|.
    EXPECT_EQ(report.details["crosstab"]["vector_pass_scalar_fail"], 0);
    EXPECT_EQ(report.details["crosstab"]["vector_fail_scalar_pass"], 0);
  }
}

TEST(FixedPointTest, ContractionTransferOnRandomTables)
{
  std::mt19937_64 rng(11);
  for (auto const &[name, K] : testing::all_cones())
  {
    Scalarizer const xi(K);
    for (int trial = 0; trial < 10; ++trial)
    {
      auto const space = random_valid_table(K, 8, rng);
      std::vector<std::size_t> assignment(8);
      for (auto &a : assignment)
      {
        a = rng() % 8;
      }
      auto const f      = SelfMap::table(space, assignment);
      auto const report = check_contraction_transfer(f, VectorialComparison::linear(K, 0.6), xi,
                                                     pair_set(space, 0, 0));
      EXPECT_TRUE(report.item("implication").passed()) << name << "\n" << to_json(report).dump(2);
    }
  }
}

TEST(FixedPointTest, PicardOnLine)
{
  LineSetup const s;
  auto const      run = picard_solve(s.f, s.m, Point{0.0}, 1e-10, 10000);
  ASSERT_TRUE(run.converged);
  EXPECT_NEAR(std::get<double>(*run.fixed_point), 2.0, 1e-9);
  EXPECT_LE(run.iterations, 60u);
  EXPECT_EQ(run.orbit.size(), run.iterations + 1);
  EXPECT_EQ(run.residuals.size(), run.iterations);
  // x_n = 2 - 2^-n, so d_p(x_0, x_1) = xi(w) = 2.
  EXPECT_DOUBLE_EQ(run.residuals.front(), 2.0);
}

TEST(FixedPointTest, ResidualsFollowComparison)
{
  LineSetup const  s;
  Scalarizer const xi(s.space.cone());
  auto const       psi = transfer_psi(VectorialComparison::linear(s.space.cone(), 0.5), xi);
  for (double x0 : {-100.0, 3.0, 1e4})
  {
    auto const run = picard_solve(s.f, s.m, Point{x0}, 1e-10, 10000);
    for (std::size_t n = 0; n + 1 < run.residuals.size(); ++n)
    {
      ASSERT_LE(run.residuals[n + 1], psi(run.residuals[n]) + 1e-9);
    }
  }
}

TEST(FixedPointTest, PicardOnTables)
{
  auto const     space = testing::three_points(vec({2, 2}));
  InducedMetric const m(space);
  auto const     constant = SelfMap::table(space, {1, 1, 1});
  auto const     run      = picard_solve(constant, m, Point{std::size_t{0}}, 1e-10, 100);
  ASSERT_TRUE(run.converged);
  EXPECT_EQ(std::get<std::size_t>(*run.fixed_point), 1u);
  EXPECT_EQ(run.iterations, 2u);

  auto const two = ConeMetricSpace::table(Cone::orthant(2), {"a", "b"},
                                          {{vec({0, 0}), vec({1, 1})}, {vec({1, 1}), vec({0, 0})}});
  auto const still = picard_solve(SelfMap::identity(two), InducedMetric(two), Point{std::size_t{0}}, 1e-10, 100);
  ASSERT_TRUE(still.converged);
  EXPECT_EQ(std::get<std::size_t>(*still.fixed_point), 0u);
  EXPECT_EQ(still.iterations, 1u);

  auto const swap  = SelfMap::table(two, {1, 0});
  auto const cycle = picard_solve(swap, InducedMetric(two), Point{std::size_t{0}}, 1e-10, 50);
  EXPECT_FALSE(cycle.converged);
  EXPECT_FALSE(cycle.fixed_point.has_value());
  EXPECT_EQ(cycle.iterations, 50u);
}

TEST(FixedPointTest, PicardRejectsBadInput)
{
  LineSetup const s;
  EXPECT_THROW(picard_solve(s.f, s.m, Point{0.0}, 0.0, 10), InputError);
  EXPECT_THROW(picard_solve(s.f, s.m, Point{0.0}, 1e-10, 0), InputError);
  EXPECT_THROW(picard_solve(s.f, s.m, Point{std::size_t{0}}, 1e-10, 10), InputError);
  auto const other = ConeMetricSpace::weighted_line(Cone::orthant(2), vec({2, 2}));
  EXPECT_THROW(picard_solve(s.f, InducedMetric(other), Point{0.0}, 1e-10, 10), InputError);
}

TEST(FixedPointTest, Uniqueness)
{
  LineSetup const          s;
  std::vector<Point> const starts = {Point{-100.0}, Point{0.0}, Point{100.0}};
  auto const               report = verify_uniqueness(s.f, s.m, starts, 1e-10, 10000);
  EXPECT_TRUE(report.passed()) << to_json(report).dump(2);
  EXPECT_EQ(report.details["runs"].size(), 3u);

  auto const id = verify_uniqueness(SelfMap::identity(s.space), s.m, starts, 1e-10, 10000);
  EXPECT_TRUE(id.item("converged").passed());
  EXPECT_FALSE(id.item("limits_coincide").passed());

  EXPECT_THROW(verify_uniqueness(s.f, s.m, {Point{0.0}}, 1e-10, 100), InputError);
}

TEST(FixedPointTest, UniquenessOnTables)
{
  auto const               space = testing::three_points(vec({2, 2}));
  InducedMetric const      m(space);
  std::vector<Point> const starts = {Point{std::size_t{0}}, Point{std::size_t{1}}, Point{std::size_t{2}}};
  EXPECT_TRUE(verify_uniqueness(SelfMap::table(space, {2, 2, 2}), m, starts, 1e-10, 100).passed());
  EXPECT_FALSE(verify_uniqueness(SelfMap::identity(space), m, starts, 1e-10, 100).passed());
}

TEST(FixedPointTest, ConditionCWithIdentityG)
{
  // With g = id, case 1 is the ordinary contraction bound.
  LineSetup const s;
  auto const      vc     = VectorialComparison::linear(s.space.cone(), 0.5);
  auto const      pairs  = pair_set(s.space, 500, 4);
  auto const      result = check_condition_c(s.f, SelfMap::identity(s.space), vc, pairs);
  EXPECT_TRUE(result.holds());
  ASSERT_EQ(result.witnesses.size(), pairs.size());
  for (auto const &w : result.witnesses)
  {
    EXPECT_TRUE(w.cases[0]);
  }
}

TEST(FixedPointTest, ConditionCFailsForIdentities)
{
  LineSetup const s;
  auto const      id     = SelfMap::identity(s.space);
  auto const      vc     = VectorialComparison::linear(s.space.cone(), 0.5);
  auto const      result = check_condition_c(id, id, vc, pair_set(s.space, 500, 5));
  EXPECT_FALSE(result.holds());
  auto const j = to_json(result, s.space);
  EXPECT_GT(j["items"][0]["failures"].get<int>(), 0);
  EXPECT_TRUE(j["items"][0]["witness"].contains("x"));
}

TEST(FixedPointTest, ConditionC1OnLine)
{
  LineSetup const s;
  auto const      pairs = pair_set(s.space, 500, 6);
  auto const      ok =
      check_condition_c1(s.f, SelfMap::identity(s.space), ScalarComparison::linear(0.5), s.m, pairs);
  EXPECT_TRUE(ok.holds());
  auto const bad = check_condition_c1(SelfMap::identity(s.space), SelfMap::identity(s.space),
                                      ScalarComparison::linear(0.5), s.m, pairs);
  EXPECT_FALSE(bad.holds());
}

TEST(FixedPointTest, ClusterInstancesSatisfyCaseTwo)
{
  std::mt19937_64 rng(13);
  for (auto const &[name, K] : testing::all_cones())
  {
    auto const inst   = testing::cluster_instance(K, 0.3, 6, rng);
    auto const result = check_condition_c(inst.f, inst.g, inst.vc, pair_set(inst.space, 0, 0));
    ASSERT_TRUE(result.holds()) << name;
    for (auto const &w : result.witnesses)
    {
      EXPECT_TRUE(w.cases[1]) << name;
    }
  }
}

TEST(FixedPointTest, CasesArePreservedOnRandomInstances)
{
  std::mt19937_64 rng(17);
  for (auto const &[name, K] : testing::all_cones())
  {
    Scalarizer const xi(K);
    for (int trial = 0; trial < 5; ++trial)
    {
      auto const inst   = testing::condition_instance(K, 0.5, rng);
      auto const report = check_condition_transfer(inst.f, inst.g, inst.vc, xi, pair_set(inst.space, 0, 0));
      EXPECT_TRUE(report.item("condition_c").passed()) << name;
      EXPECT_TRUE(report.item("condition_c1").passed()) << name;
      EXPECT_TRUE(report.passed()) << name << "\n" << to_json(report).dump(2);
    }
  }
}

TEST(FixedPointTest, MismatchedInputsThrow)
{
  LineSetup const s;
  auto const      other = ConeMetricSpace::weighted_line(Cone::orthant(2), vec({2, 2}));
  auto const      wrong = VectorialComparison::linear(Cone::orthant(3), 0.5);
  EXPECT_THROW(verify_vector_contraction(s.f, wrong, 10, 1), InputError);
  EXPECT_THROW(check_condition_c(s.f, SelfMap::identity(other), VectorialComparison::linear(s.space.cone(), 0.5),
                                 pair_set(s.space, 10, 1)),
               InputError);
  EXPECT_THROW(verify_scalar_contraction(s.f, ScalarComparison::linear(0.5), InducedMetric(other), 10, 1),
               InputError);
}

}  // namespace
}  // namespace conekit
