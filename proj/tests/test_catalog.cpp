#include <doctest.h>

#include <set>
#include <stdexcept>

#include "eostrata/catalog.hpp"
#include "eostrata/dieudonne.hpp"
#include "eostrata/strata.hpp"

using namespace eo;

TEST_CASE("name parsing and canonical rendering") {
  CHECK(render_name(parse_name("L^2+I[2,1]")) == "L^2+I[2,1]");
  CHECK(render_name(parse_name("I[1,1]+L")) == "L+I[1,1]");
  CHECK(render_name(parse_name("I[1,1]+I[1,1]")) == "I[1,1]^2");
  CHECK(render_name(parse_name("I[2,1] + L ^ 2 + I[1,1]")) == "L^2+I[1,1]+I[2,1]");
  CHECK(render_name(parse_name("L")) == "L");
  CHECK(render_name(parse_name("I[4,3]")) == "I[4,3]");
  CHECK(parse_name("L^3").genus() == 3);
  CHECK(parse_name("L^2+I[2,1]").genus() == 4);
  CHECK(parse_name("I[3,2]").genus() == 3);
}

TEST_CASE("name syntax errors carry the position") {
  for (const char* bad : {"", "L+", "I[2", "Q", "I[2,1]]", "L^", "I[,1]", "L^-1", "+L"}) {
    CHECK_THROWS_AS(parse_name(bad), std::invalid_argument);
  }
  try {
    parse_name("L+Q");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("name semantic errors name the factor") {
  CHECK_THROWS_AS(parse_name("I[2,2]"), std::invalid_argument);  // r >= 3 for a = 2
  CHECK_THROWS_AS(parse_name("I[3,3]"), std::invalid_argument);  // a = 3 only at r = 4
  CHECK_THROWS_AS(parse_name("I[5,3]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_name("I[0,1]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_name("I[1,4]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_name("L^0"), std::invalid_argument);
  try {
    parse_name("I[2,2]");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("I[2,2]") != std::string::npos);
  }
}

TEST_CASE("unicode rendering") {
  CHECK(render_name_unicode(parse_name("L^2+I[2,1]")) == "L² ⊕ I_{2,1}");
  CHECK(render_name_unicode(parse_name("I[1,1]^12")) == "I_{1,1}¹²");
  CHECK(render_name_unicode(parse_name("L")) == "L");
}

TEST_CASE("modules built from names") {
  CHECK(build_module(parse_name("L^2")).dim() == 4);
  CHECK(final_type(build_module(parse_name("L^2"))).nu == std::vector<int>{1, 2});
  CHECK(final_type(build_module(parse_name("I[3,2]"))).nu == std::vector<int>{0, 1, 1});
  CHECK(final_type(build_module(parse_name("I[4,3]"))).nu == std::vector<int>{0, 0, 1, 1});
  CHECK(final_type(build_module(parse_name("L+I[1,1]+I[2,1]"))).nu ==
        std::vector<int>{1, 1, 1, 2});
}

TEST_CASE("golden tables are complete and internally consistent") {
  CHECK(golden_data_version() >= 1);
  std::size_t expected[] = {0, 2, 4, 8, 16};
  for (int g = 1; g <= 4; ++g) {
    const std::vector<GoldenRow>& rows = golden_table(g);
    CHECK(rows.size() == expected[g]);
    std::set<std::vector<int>> nus;
    int last_codim = -1;
    for (const GoldenRow& row : rows) {
      nus.insert(row.nu.nu);
      CHECK(row.codim >= last_codim);  // presentation order: codim ascending
      last_codim = row.codim;
      CHECK(render_name(parse_name(row.name)) == row.name);
      CHECK(parse_name(row.name).genus() == g);
      if (g <= 3) {
        CHECK(row.cycle_class.has_value());
        CHECK(row.cycle_class_text.has_value());
      } else {
        CHECK_FALSE(row.cycle_class.has_value());
      }
    }
    CHECK(nus.size() == rows.size());  // one row per type
  }
  CHECK_THROWS_AS(golden_table(0), std::invalid_argument);
  CHECK_THROWS_AS(golden_table(5), std::invalid_argument);
  CHECK(golden_hasse_g4_edges().size() == 20);
}

TEST_CASE("classification lookup") {
  for (int g = 1; g <= 4; ++g)
    for (const GoldenRow& row : golden_table(g))
      CHECK(classify(row.nu) == parse_name(row.name));
  CHECK(render_name(classify(make_final_type(4, {0, 0, 1, 1}))) == "I[4,3]");
  CHECK(render_name(classify(make_final_type(2, {1, 2}))) == "L^2");
  CHECK_THROWS_AS(classify(make_final_type(5, {0, 1, 2, 3, 4})), std::invalid_argument);
}

TEST_CASE("decomposable types with p-rank 0 and a-number 2") {
  for (int g = 2; g <= 8; ++g) {
    std::vector<GroupSchemeName> names = decomposable_a2_list(g);
    CHECK(static_cast<int>(names.size()) == g / 2);
    std::set<std::vector<int>> types;
    for (const GroupSchemeName& n : names) {
      CHECK(n.genus() == g);
      MonomialModule m = build_module(n);
      CHECK(p_rank(m) == 0);
      CHECK(a_number(m) == 2);
      types.insert(final_type(m).nu);
    }
    CHECK(types.size() == names.size());
  }
  CHECK(render_name(decomposable_a2_list(2).front()) == "I[1,1]^2");
  CHECK(render_name(decomposable_a2_list(4).back()) == "I[2,1]^2");
  CHECK_THROWS_AS(decomposable_a2_list(1), std::invalid_argument);
}
