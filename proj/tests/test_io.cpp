#include <gtest/gtest.h>

#include <random>

#include "golden.hpp"
#include "oracles.hpp"
#include "settle/io.hpp"
#include "settle/patterns.hpp"

using namespace settle;

TEST(ParseGrid, Basics) {
  EXPECT_EQ(parse_grid("##\n##"), Configuration::full(Dims{2, 2}));
  const auto c = parse_grid("#.\n.#");
  EXPECT_EQ(occupancy(c), 2);
  EXPECT_TRUE(c.house(1, 1));
  EXPECT_TRUE(c.house(2, 2));
}

TEST(ParseGrid, HeaderWhitespaceAndBlankLines) {
  const auto c = parse_grid("\n2 3 bricked\n # . #\n\n###\n");
  EXPECT_EQ(c.dims(), (Dims{2, 3, BoundaryMode::bricked}));
  EXPECT_EQ(c.to_strings(), (std::vector<std::string>{"#.#", "###"}));
  EXPECT_EQ(parse_grid("2 2\r\n#.\r\n.#\r\n").boundary(), BoundaryMode::free);
}

TEST(ParseGrid, ErrorsCarryPosition) {
  try {
    parse_grid("##\n#x\n");
    FAIL() << "expected a parse error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 2);
  }
  try {
    parse_grid("###\n##\n");
    FAIL() << "expected a parse error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_grid("3 3\n###\n###\n"), parse_error);
  EXPECT_THROW(parse_grid("2 2 open\n##\n##\n"), parse_error);
  EXPECT_THROW(parse_grid(""), parse_error);
  EXPECT_THROW(parse_grid("\n  \n"), parse_error);
}

TEST(ParseGrid, Json) {
  const auto c = parse_grid(R"({"rows":2,"cols":3,"boundary":"bricked","cells":[[1,0,1],[0,1,0]]})");
  EXPECT_EQ(c.dims(), (Dims{2, 3, BoundaryMode::bricked}));
  EXPECT_EQ(c.to_strings(), (std::vector<std::string>{"#.#", ".#."}));
  EXPECT_EQ(parse_grid(R"({"cells":["#.", "##"]})").to_strings(), (std::vector<std::string>{"#.", "##"}));
  EXPECT_THROW(parse_grid(R"({"rows":3,"cols":3,"cells":[[1,0,1]]})"), parse_error);
  EXPECT_THROW(parse_grid(R"({"cells":[[1,2]]})"), parse_error);
  try {
    parse_grid("{\n  \"cells\": [[1,0],\n  oops]\n}");
    FAIL() << "expected a parse error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Render, Plain) {
  EXPECT_EQ(render(Configuration::full(Dims{2, 2})), "##\n##\n");
  EXPECT_EQ(render(Configuration(Dims{1, 3})), "...\n");
  EXPECT_EQ(render(generate_pattern(PatternKind::check, 4, 11)), golden::text("check_4x11.grid").substr(10));
}

TEST(Render, UnicodeAndSvg) {
  const auto c = parse_grid("#.\n.#");
  EXPECT_EQ(render(c, RenderStyle::ascii_unicode), "■·\n·■\n");
  const auto svg = render(c, RenderStyle::svg);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  std::size_t rects = 0;
  for (auto p = svg.find("<rect"); p != std::string::npos; p = svg.find("<rect", p + 1)) ++rects;
  EXPECT_EQ(rects, 4u);
  EXPECT_NE(svg.find(">N</text>"), std::string::npos);
  EXPECT_EQ(svg, render(c, RenderStyle::svg));
}

TEST(RoundTrip, RandomConfigurations) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const Dims d{1 + static_cast<int>(rng() % 9), 1 + static_cast<int>(rng() % 12),
                 trial % 3 == 0 ? BoundaryMode::bricked : BoundaryMode::free};
    const auto c = oracle::random_config(d, rng, 0.5);
    ASSERT_EQ(parse_grid(render(c)), c.with_boundary(BoundaryMode::free));
    ASSERT_EQ(parse_grid(to_grid_file(c)), c);
    ASSERT_EQ(parse_grid(to_json(c).dump()), c);
  }
}

TEST(Json, SchemaFields) {
  const auto j = to_json(Configuration::full(Dims{2, 2}));
  EXPECT_EQ(j.at("schema"), "1");
  EXPECT_EQ(j.at("occupancy"), 4);
  const auto b = to_json(bounds_report(4, 4));
  EXPECT_EQ(b.at("crude_upper").at("value"), "29/2");
  EXPECT_FALSE(b.at("i_lower").at("source").get<std::string>().empty());
}

TEST(Json, TableRoundTrip) {
  const auto t = table(Objective::max_permissible, {2, 4}, {3, 5}, BoundaryMode::free);
  const auto back = table_from_json(to_json(t));
  EXPECT_EQ(back.values, t.values);
  EXPECT_EQ(back.rows.first, 2);
  EXPECT_EQ(back.cols.last, 5);
}
