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

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace conekit {
namespace {

using testing::vec;

TEST(ConeTest, ContainsExamples)
{
  auto const orthant = Cone::orthant(2);
  EXPECT_TRUE(orthant.contains(vec({1, 2})));
  EXPECT_FALSE(orthant.contains(vec({1, -1})));

  // |(3,4)| = 5 by direct evaluation, so (3,4,5) sits exactly on the boundary.
  auto const lorentz = Cone::lorentz(3);
  EXPECT_EQ(std::hypot(3.0, 4.0), 5.0);
  EXPECT_TRUE(lorentz.contains(vec({3, 4, 5})));
}

TEST(ConeTest, InteriorExamples)
{
  auto const orthant = Cone::orthant(2);
  EXPECT_TRUE(orthant.in_interior(vec({1, 1})));
  EXPECT_FALSE(orthant.in_interior(vec({1, 0})));

  auto const lorentz = Cone::lorentz(3);
  EXPECT_EQ(lorentz.slack(vec({3, 4, 5})), 0.0);
  EXPECT_FALSE(lorentz.in_interior(vec({3, 4, 5})));
}

TEST(ConeTest, OrderExamples)
{
  auto const K = Cone::orthant(2);
  EXPECT_TRUE(K.leq(vec({1, 1}), vec({2, 3})));
  EXPECT_TRUE(K.leq(vec({1, 1}), vec({1, 1})));
  EXPECT_FALSE(K.leq(vec({2, 0}), vec({1, 5})));

  EXPECT_TRUE(K.ll(vec({0, 0}), vec({1, 1})));
  EXPECT_FALSE(K.ll(vec({0, 0}), vec({1, 0})));
  EXPECT_TRUE(Cone::lorentz(3).ll(vec({0, 0, 0}), vec({0, 0, 1})));
}

TEST(ConeTest, ToleranceBandAroundBoundary)
{
  auto const K = Cone::orthant(2);
  // Within tau (1 + |y|) of the boundary: a member, not interior.
  EXPECT_TRUE(K.contains(vec({1.0, -0.5e-9})));
  EXPECT_FALSE(K.in_interior(vec({1.0, 1e-9})));
  EXPECT_FALSE(K.contains(vec({1.0, -1e-8})));
  EXPECT_TRUE(K.in_interior(vec({1.0, 1e-8})));
}

TEST(ConeTest, DimensionMismatchThrows)
{
  auto const K = Cone::orthant(2);
  EXPECT_THROW(K.contains(vec({1, 2, 3})), InputError);
  EXPECT_THROW(K.in_interior(vec({1})), InputError);
  EXPECT_THROW(K.leq(vec({1, 2}), vec({1, 2, 3})), InputError);
  EXPECT_THROW(K.ll(vec({1, 2, 3}), vec({1, 2})), InputError);
}

TEST(ConeTest, ConstructionRejectsBadInput)
{
  EXPECT_THROW(Cone::orthant(0), InputError);
  EXPECT_THROW(Cone::lorentz(1), InputError);
  EXPECT_THROW(Cone::orthant(2, vec({1, 0})), InputError);
  EXPECT_THROW(Cone::orthant(2, vec({1, 1, 1})), InputError);
  EXPECT_THROW(Cone::lorentz(3, vec({1, 0, 1})), InputError);

  Matrix zero_row(2, 2);
  zero_row << 1, 0, 0, 0;
  EXPECT_THROW(ConeGeometry::halfspace(zero_row), InputError);

  // A (1,1) = (1,-1): the default e is not interior, and no e can be.
  Matrix line(2, 2);
  line << 1, 0, -1, 0;
  EXPECT_NO_THROW(ConeGeometry::halfspace(line));
  EXPECT_THROW(Cone::halfspace(line), InputError);
  EXPECT_THROW(Cone::halfspace(line, vec({1, 0})), InputError);

  Matrix non_finite(1, 2);
  non_finite << 1, std::nan("");
  EXPECT_THROW(ConeGeometry::halfspace(non_finite), InputError);
}

TEST(ConeTest, InteriorRadiusMatchesBallContainment)
{
  std::mt19937_64 rng(11);
  for (auto const &[name, K] : testing::all_cones())
  {
    double const rho = K.interior_radius();
    ASSERT_GT(rho, 0.0) << name;
    bool exits = false;
    for (int t = 0; t < 2000; ++t)
    {
      Vector u = testing::gaussian(K.dim(), rng);
      u /= u.norm();
      EXPECT_GE(K.slack(K.interior_point() + 0.999999 * rho * u), -1e-12) << name;
      exits = exits || K.slack(K.interior_point() + 1.01 * rho * u) < 0.0;
    }
    EXPECT_TRUE(exits) << name;
  }
}

TEST(ConeTest, ValidateOrthant)
{
  auto const report = validate_cone(Cone::orthant(2), 1000, 1);
  EXPECT_TRUE(report.passed()) << to_json(report).dump(2);
  EXPECT_EQ(report.item("closure").trials, 1000u);
  EXPECT_GT(report.item("pointed").trials, 1000u);
}

TEST(ConeTest, ValidateIdentityHalfspace)
{
  auto const report = validate_cone(Cone::halfspace(Matrix::Identity(2, 2)), 1000, 1);
  EXPECT_TRUE(report.passed()) << to_json(report).dump(2);
}

TEST(ConeTest, ValidateEveryFixture)
{
  for (auto const &[name, K] : testing::all_cones())
  {
    auto const report = validate_cone(K, 500, 3);
    EXPECT_TRUE(report.passed()) << name << "\n" << to_json(report).dump(2);
  }
}

TEST(ConeTest, LineConeFailsPointedness)
{
  // Brute force: (0,1) and (0,-1) both satisfy A y >= 0.
  Matrix A(2, 2);
  A << 1, 0, -1, 0;
  auto const geometry = ConeGeometry::halfspace(A);
  EXPECT_GE((A * vec({0, 1})).minCoeff(), 0.0);
  EXPECT_GE((A * vec({0, -1})).minCoeff(), 0.0);

  for (std::uint64_t seed : {1u, 2u, 99u})
  {
    auto const report = validate_cone(geometry, std::nullopt, 200, seed);
    EXPECT_FALSE(report.passed());
    auto const &pointed = report.item("pointed");
    EXPECT_GT(pointed.failures, 0u);
    ASSERT_TRUE(pointed.witness.contains("y"));
    Vector const y = vec({pointed.witness["y"][0].get<double>(), pointed.witness["y"][1].get<double>()});
    EXPECT_TRUE(geometry.contains(y));
    EXPECT_TRUE(geometry.contains(-y));
    EXPECT_GT(y.norm(), 0.5);
    EXPECT_FALSE(report.item("interior_point").passed());
  }
}

TEST(ConeTest, OrderIsReflexiveAndTransitive)
{
  std::mt19937_64 rng(5);
  for (auto const &[name, K] : testing::all_cones())
  {
    Vector const &e = K.interior_point();
    for (int t = 0; t < 2000; ++t)
    {
      Vector const x = testing::gaussian(K.dim(), rng, 3.0);
      Vector const y = x + sample_member(K.geometry(), &e, rng);
      Vector const z = y + sample_member(K.geometry(), &e, rng);
      ASSERT_TRUE(K.leq(x, x)) << name;
      ASSERT_TRUE(K.leq(x, y) && K.leq(y, z)) << name;
      ASSERT_TRUE(K.leq(x, z)) << name;

      Vector const a = testing::gaussian(K.dim(), rng, 3.0);
      Vector const b = testing::gaussian(K.dim(), rng, 3.0);
      if (K.ll(a, b))
      {
        ASSERT_TRUE(K.leq(a, b)) << name;
      }
    }
  }
}

TEST(ConeTest, OrthantAgreesWithIdentityHalfspace)
{
  std::mt19937_64 rng(17);
  for (Index n : {2, 3, 5})
  {
    auto const orthant   = Cone::orthant(n);
    auto const halfspace = Cone::halfspace(Matrix::Identity(n, n));
    for (int t = 0; t < 10000; ++t)
    {
      Vector y = testing::gaussian(n, rng);
      if (t % 4 == 0)
      {
        y = y.cwiseAbs();
      }
      ASSERT_EQ(orthant.contains(y), halfspace.contains(y));
      ASSERT_EQ(orthant.in_interior(y), halfspace.in_interior(y));
      ASSERT_EQ(orthant.contains(y), y.minCoeff() >= -kMembershipTolerance * (1.0 + y.norm()));
    }
  }
}

TEST(ConeTest, OriginIsMemberButNotInterior)
{
  for (auto const &[name, K] : testing::all_cones())
  {
    Vector const zero = Vector::Zero(K.dim());
    EXPECT_TRUE(K.contains(zero)) << name;
    EXPECT_FALSE(K.in_interior(zero)) << name;
  }
}

TEST(ConeTest, SampledMembersAreMembers)
{
  std::mt19937_64 rng(23);
  for (auto const &[name, K] : testing::all_cones())
  {
    int interior = 0;
    for (int t = 0; t < 1000; ++t)
    {
      Vector const y = sample_member(K.geometry(), &K.interior_point(), rng, 10.0);
      ASSERT_TRUE(K.contains(y)) << name;
      interior += K.in_interior(y) ? 1 : 0;
    }
    EXPECT_GT(interior, 100) << name;
    if (K.kind() == ConeKind::orthant)
    {
      // Shifting along e lands orthant samples exactly on the boundary.
      EXPECT_LT(interior, 900) << name;
    }
  }
}

}  // namespace
}  // namespace conekit
