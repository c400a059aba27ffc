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

#include "conekit/json_io.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

namespace conekit::io {
namespace {

using nlohmann::json;
using testing::vec;

TEST(JsonIoTest, ParsesEachConeKind)
{
  auto const orthant = parse_cone(json::parse(R"({"kind": "orthant", "dim": 3})"));
  EXPECT_EQ(orthant.geometry().kind(), ConeKind::orthant);
  EXPECT_EQ(orthant.interior_point(), vec({1, 1, 1}));

  auto const shifted = parse_cone(json::parse(R"({"kind": "orthant", "dim": 2, "e": [2, 1]})"));
  EXPECT_EQ(shifted.interior_point(), vec({2, 1}));

  auto const half = parse_cone(json::parse(R"({"kind": "halfspace", "A": [[1, 0], [1, 1]]})"));
  EXPECT_EQ(half.geometry().kind(), ConeKind::halfspace);
  EXPECT_EQ(half.dim(), 2);

  auto const ice = parse_cone(json::parse(R"({"kind": "lorentz", "dim": 3})"));
  EXPECT_EQ(ice.geometry().kind(), ConeKind::lorentz);
  EXPECT_TRUE(ice.in_interior(ice.interior_point()));
}

TEST(JsonIoTest, LineConeHasNoInteriorPoint)
{
  auto const spec = parse_cone_spec(json::parse(R"({"kind": "halfspace", "A": [[1, 0], [-1, 0]]})"));
  EXPECT_FALSE(spec.e.has_value());
  EXPECT_THROW(parse_cone(json::parse(R"({"kind": "halfspace", "A": [[1, 0], [-1, 0]]})")), InputError);
}

TEST(JsonIoTest, RejectsMalformedCones)
{
  for (char const *text : {R"({"dim": 2})", R"({"kind": "orthant"})", R"({"kind": "orthant", "dim": 0})",
                           R"({"kind": "orthant", "dim": 2.5})", R"({"kind": "simplex", "dim": 2})",
                           R"({"kind": "halfspace", "A": []})", R"({"kind": "halfspace", "A": [[1, 0], [1]]})",
                           R"({"kind": "halfspace", "A": [[1, 0]], "dim": 3})",
                           R"({"kind": "orthant", "dim": 2, "e": [1, -1]})",
                           R"({"kind": "orthant", "dim": 2, "e": [1, 1, 1]})", R"({"kind": "lorentz", "dim": 1})"})
  {
    EXPECT_THROW(parse_cone(json::parse(text)), InputError) << text;
  }
}

TEST(JsonIoTest, ConeRoundTrip)
{
  for (auto const &[name, K] : testing::all_cones())
  {
    EXPECT_EQ(parse_cone(cone_json(K)), K) << name;
  }
}

TEST(JsonIoTest, ParsesSpaces)
{
  auto const line = parse_space(json::parse(
      R"({"cone": {"kind": "orthant", "dim": 2}, "space": {"type": "weighted_line", "w": [1, 2]}})"));
  EXPECT_FALSE(line.is_finite());
  EXPECT_EQ(line.weight(), vec({1, 2}));

  auto const table = parse_space(json::parse(R"({
    "cone": {"kind": "orthant", "dim": 2},
    "space": {"type": "table", "points": ["a", "b"],
              "p": [[[0, 0], [1, 1]], [[1, 1], [0, 0]]]}})"));
  ASSERT_TRUE(table.is_finite());
  EXPECT_EQ(table.labels(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(table.distance(Point{std::size_t{0}}, Point{std::size_t{1}}), vec({1, 1}));
}

TEST(JsonIoTest, RejectsMalformedSpaces)
{
  for (char const *text : {
           R"({"space": {"type": "weighted_line", "w": [1, 2]}})",
           R"({"cone": {"kind": "orthant", "dim": 2}, "space": {"type": "sphere"}})",
           R"({"cone": {"kind": "orthant", "dim": 2}, "space": {"type": "weighted_line", "w": [-1, 2]}})",
           R"({"cone": {"kind": "orthant", "dim": 2}, "space": {"type": "weighted_line", "w": [0, 0]}})",
           R"({"cone": {"kind": "orthant", "dim": 2}, "space": {"type": "table", "points": ["a", "b"], "p": [[[0, 0], [1, 1]]]}})",
           R"({"cone": {"kind": "orthant", "dim": 2}, "space": {"type": "table", "points": ["a", "a"], "p": [[[0, 0], [1, 1]], [[1, 1], [0, 0]]]}})",
           R"({"cone": {"kind": "orthant", "dim": 2}, "space": {"type": "table", "points": [1, 2], "p": []}})",
       })
  {
    EXPECT_THROW(parse_space(json::parse(text)), InputError) << text;
  }
}

TEST(JsonIoTest, ParsesComparisons)
{
  auto const K      = Cone::orthant(2);
  auto const linear = parse_comparison(json::parse(R"({"kind": "linear", "lambda": 0.5})"), K);
  EXPECT_EQ(linear.apply(vec({2, 4})), vec({1, 2}));

  auto const comp = parse_comparison(json::parse(R"({"kind": "componentwise", "components":
      [{"type": "scale", "c": 0.5}, {"type": "rational_decay"}]})"),
                                     K);
  EXPECT_EQ(comp.apply(vec({2, 1})), vec({1, 0.5}));

  auto const powers = parse_comparison(json::parse(R"({"kind": "componentwise", "components":
      [{"type": "pow", "p": 2}, {"type": "identity"}]})"),
                                       K);
  EXPECT_EQ(powers.apply(vec({3, 3})), vec({9, 3}));

  EXPECT_THROW(parse_comparison(json::parse(R"({"kind": "linear", "lambda": 1.5})"), K), InputError);
  EXPECT_THROW(parse_comparison(json::parse(R"({"kind": "linear"})"), K), InputError);
  EXPECT_THROW(parse_comparison(json::parse(R"({"kind": "exotic"})"), K), InputError);
  EXPECT_THROW(parse_comparison(json::parse(R"({"kind": "componentwise", "components": [{"type": "sin"}, {"type": "identity"}]})"), K),
               InputError);
  EXPECT_THROW(parse_comparison(json::parse(R"({"kind": "componentwise", "components": {}})"), K), InputError);
}

TEST(JsonIoTest, ParsesMapsAndPoints)
{
  auto const line   = testing::weighted_line_12();
  auto const affine = parse_map(json::parse(R"({"type": "affine", "a": 0.5, "b": 1})"), line);
  EXPECT_EQ(std::get<double>(affine(Point{2.0})), 2.0);
  EXPECT_EQ(std::get<double>(parse_point(json::parse("3.5"), line)), 3.5);
  EXPECT_EQ(std::get<double>(parse_point(json::parse(R"("-1e2")"), line)), -100.0);
  EXPECT_THROW(parse_point(json::parse(R"("abc")"), line), InputError);
  auto const constant = parse_map(json::parse(R"({"type": "constant", "value": 7})"), line);
  EXPECT_EQ(std::get<double>(constant(Point{0.0})), 7.0);

  auto const table = testing::three_points(vec({2, 2}));
  EXPECT_EQ(std::get<std::size_t>(parse_point(json::parse(R"("c")"), table)), 2u);
  EXPECT_THROW(parse_point(json::parse(R"("z")"), table), InputError);

  auto const by_label = parse_map(json::parse(R"({"type": "table", "map": {"a": "b", "b": "b", "c": "a"}})"), table);
  EXPECT_EQ(std::get<std::size_t>(by_label(Point{std::size_t{2}})), 0u);
  auto const by_order = parse_map(json::parse(R"({"type": "table", "map": ["c", "c", "c"]})"), table);
  EXPECT_EQ(std::get<std::size_t>(by_order(Point{std::size_t{0}})), 2u);
  auto const id = parse_map(json::parse(R"({"type": "identity"})"), table);
  EXPECT_EQ(std::get<std::size_t>(id(Point{std::size_t{1}})), 1u);

  EXPECT_THROW(parse_map(json::parse(R"({"type": "table", "map": {"a": "b"}})"), table), InputError);
  EXPECT_THROW(parse_map(json::parse(R"({"type": "table", "map": ["a"]})"), table), InputError);
  EXPECT_THROW(parse_map(json::parse(R"({"type": "affine", "a": 0.5, "b": 1})"), table), InputError);
  EXPECT_THROW(parse_map(json::parse(R"({"type": "table", "map": ["a"]})"), line), InputError);
  EXPECT_THROW(parse_map(json::parse(R"({"type": "rotate"})"), line), InputError);
}

TEST(JsonIoTest, FileRoundTripAndErrors)
{
  auto const dir  = std::filesystem::temp_directory_path() / "conekit_json_io_test";
  std::filesystem::create_directories(dir);
  auto const path = dir / "doc.json";
  json const doc  = {{"kind", "orthant"}, {"dim", 2}};
  write_json(path, doc);
  EXPECT_EQ(read_json(path), doc);

  EXPECT_THROW(read_json(dir / "missing.json"), InputError);
  {
    std::ofstream bad(dir / "bad.json");
    bad << "{ not json";
  }
  EXPECT_THROW(read_json(dir / "bad.json"), InputError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace conekit::io
