#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "eostrata/poset.hpp"
#include "eostrata/strata.hpp"

using namespace eo;

namespace {

std::vector<YoungType> all_young(int g) {
  std::vector<YoungType> out;
  for (const FinalType& t : enumerate_final_types(g)) out.push_back(final_to_young(t));
  return out;
}

// Brute-force cover relation: x < y with nothing strictly between.
std::set<std::pair<std::vector<int>, std::vector<int>>> covers_by_force(int g) {
  std::vector<YoungType> nodes = all_young(g);
  std::set<std::pair<std::vector<int>, std::vector<int>>> covers;
  for (const YoungType& x : nodes)
    for (const YoungType& y : nodes) {
      if (x.mu == y.mu || !young_leq(x, y)) continue;
      bool has_between = false;
      for (const YoungType& z : nodes) {
        if (z.mu == x.mu || z.mu == y.mu) continue;
        if (young_leq(x, z) && young_leq(z, y)) {
          has_between = true;
          break;
        }
      }
      if (!has_between) covers.emplace(x.mu, y.mu);
    }
  return covers;
}

}  // namespace

TEST_CASE("containment order on Young types") {
  CHECK(young_leq(make_young_type(3, {}), make_young_type(3, {3, 1})));
  CHECK(young_leq(make_young_type(2, {1}), make_young_type(2, {2})));
  CHECK(young_leq(make_young_type(3, {2}), make_young_type(3, {2, 1})));
  CHECK_FALSE(young_leq(make_young_type(3, {2, 1}), make_young_type(3, {3})));
  CHECK_FALSE(young_leq(make_young_type(3, {3}), make_young_type(3, {2, 1})));
  CHECK_THROWS_AS(young_leq(make_young_type(2, {1}), make_young_type(3, {1})),
                  std::invalid_argument);
}

TEST_CASE("the containment order is a partial order") {
  for (int g = 1; g <= 5; ++g) {
    std::vector<YoungType> nodes = all_young(g);
    for (const YoungType& a : nodes) {
      CHECK(young_leq(a, a));
      for (const YoungType& b : nodes) {
        if (young_leq(a, b) && young_leq(b, a)) CHECK(a.mu == b.mu);
        for (const YoungType& c : nodes)
          if (young_leq(a, b) && young_leq(b, c)) CHECK(young_leq(a, c));
      }
    }
  }
}

TEST_CASE("hasse matches the brute-force covers") {
  for (int g = 1; g <= 5; ++g) {
    HasseDiagram d = hasse(g);
    CHECK(d.g == g);
    CHECK(d.nodes.size() == (1u << g));
    std::set<std::pair<std::vector<int>, std::vector<int>>> edges;
    for (const auto& [from, to] : d.edges) {
      // generic -> special: one box is added
      CHECK(stratum_codim(to) == stratum_codim(from) + 1);
      CHECK(young_leq(from, to));
      edges.emplace(from.mu, to.mu);
    }
    CHECK(edges.size() == d.edges.size());
    CHECK(edges == covers_by_force(g));
  }
  CHECK(hasse(4).edges.size() == 20);
}

TEST_CASE("hasse nodes appear in the canonical enumeration order") {
  for (int g = 1; g <= 5; ++g) {
    std::vector<YoungType> expected = all_young(g);
    HasseDiagram d = hasse(g);
    REQUIRE(d.nodes.size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) CHECK(d.nodes[k] == expected[k]);
  }
}

TEST_CASE("reachability along covers recovers the full order") {
  for (int g = 1; g <= 5; ++g) {
    std::vector<YoungType> nodes = all_young(g);
    HasseDiagram d = hasse(g);
    // transitive closure over the edge set
    std::set<std::pair<std::vector<int>, std::vector<int>>> reach;
    for (const YoungType& n : nodes) reach.emplace(n.mu, n.mu);
    for (const auto& [from, to] : d.edges) reach.emplace(from.mu, to.mu);
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [a, b] : std::set(reach))
        for (const auto& [c, e] : std::set(reach))
          if (b == c && reach.emplace(a, e).second) changed = true;
    }
    for (const YoungType& x : nodes)
      for (const YoungType& y : nodes)
        CHECK(young_leq(x, y) == (reach.count({x.mu, y.mu}) > 0));
  }
}

TEST_CASE("unique minimum and maximum") {
  for (int g = 1; g <= 6; ++g) {
    std::vector<YoungType> nodes = all_young(g);
    YoungType bottom = make_young_type(g, {});
    std::vector<int> staircase(g);
    for (int j = 0; j < g; ++j) staircase[j] = g - j;
    YoungType top = make_young_type(g, staircase);
    for (const YoungType& n : nodes) {
      CHECK(young_leq(bottom, n));
      CHECK(young_leq(n, top));
    }
  }
}

TEST_CASE("the containment order mirrors Bruhat order") {
  for (int g = 1; g <= 5; ++g) CHECK(orders_match(g));
  CHECK_THROWS_AS(orders_match(7), std::invalid_argument);
}
