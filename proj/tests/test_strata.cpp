#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "eostrata/strata.hpp"

using namespace eo;

namespace {

// Independent of final_to_young: count the defining sets directly.
std::vector<int> mu_by_definition(const FinalType& t) {
  std::vector<int> mu;
  for (int j = 1; j <= t.g; ++j) {
    int count = 0;
    for (int i = 1; i <= t.g; ++i)
      if (j <= i - t.nu[i - 1]) ++count;
    if (count > 0) mu.push_back(count);
  }
  return mu;
}

int f_by_definition(const FinalType& t) {
  int f = 0;
  for (int i = 1; i <= t.g; ++i)
    if (t.nu[i - 1] == i) f = i;
  return f;
}

}  // namespace

TEST_CASE("final type validation") {
  CHECK(validate_final_type(2, {0, 1}));
  CHECK(validate_final_type(2, {1, 2}));
  CHECK(validate_final_type(3, {0, 0, 0}));
  CHECK_FALSE(validate_final_type(2, {0, 2}));   // jump of 2
  CHECK_FALSE(validate_final_type(2, {1, 0}));   // decrease
  CHECK_FALSE(validate_final_type(1, {2}));      // nu_1 > 1
  CHECK_FALSE(validate_final_type(2, {-1, 0}));  // negative
  CHECK_THROWS_AS(validate_final_type(2, {0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_final_type(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_final_type(2, {0, 2}), std::invalid_argument);
}

TEST_CASE("young type validation") {
  CHECK_NOTHROW(make_young_type(3, {}));
  CHECK_NOTHROW(make_young_type(3, {3, 1}));
  CHECK_THROWS_AS(make_young_type(3, {1, 3}), std::invalid_argument);  // not decreasing
  CHECK_THROWS_AS(make_young_type(3, {3, 3}), std::invalid_argument);  // not strict
  CHECK_THROWS_AS(make_young_type(3, {4}), std::invalid_argument);     // part > g
  CHECK_THROWS_AS(make_young_type(3, {2, 0}), std::invalid_argument);  // part < 1
}

TEST_CASE("enumeration yields 2^g valid, distinct, ordered types") {
  for (int g = 1; g <= 12; ++g) {
    std::vector<FinalType> all = enumerate_final_types(g);
    CHECK(all.size() == (1u << g));
    CHECK(all.front().nu == std::vector<int>(g, 0));  // superspecial first
    std::vector<int> ordinary(g);
    for (int i = 0; i < g; ++i) ordinary[i] = i + 1;
    CHECK(all.back().nu == ordinary);
    std::set<std::vector<int>> seen;
    for (size_t k = 0; k < all.size(); ++k) {
      CHECK(validate_final_type(g, all[k].nu));
      seen.insert(all[k].nu);
      if (k > 0) CHECK(all[k - 1].nu < all[k].nu);  // strictly lex increasing
    }
    CHECK(seen.size() == all.size());
  }
}

TEST_CASE("final <-> young is a bijection and matches the counting definition") {
  for (int g = 1; g <= 8; ++g) {
    std::set<std::vector<int>> young_seen;
    for (const FinalType& t : enumerate_final_types(g)) {
      YoungType y = final_to_young(t);
      CHECK(y.mu == mu_by_definition(t));
      CHECK(young_to_final(y) == t);
      young_seen.insert(y.mu);
      // strictly decreasing with parts in 1..g
      for (size_t j = 0; j < y.mu.size(); ++j) {
        CHECK(y.mu[j] >= 1);
        CHECK(y.mu[j] <= g);
        if (j > 0) CHECK(y.mu[j - 1] > y.mu[j]);
      }
    }
    CHECK(young_seen.size() == (1u << g));
  }
}

TEST_CASE("frozen conversions between the encodings") {
  // g = 3 rows
  CHECK(final_to_young(make_final_type(3, {0, 1, 1})).mu == std::vector<int>{3, 1});
  CHECK(final_to_young(make_final_type(3, {1, 1, 2})).mu == std::vector<int>{2});
  CHECK(final_to_young(make_final_type(3, {0, 0, 1})).mu == std::vector<int>{3, 2});
  // g = 4 rows
  CHECK(final_to_young(make_final_type(4, {0, 0, 1, 1})).mu == std::vector<int>{4, 3, 1});
  CHECK(final_to_young(make_final_type(4, {1, 1, 2, 2})).mu == std::vector<int>{3, 1});
  CHECK(final_to_young(make_final_type(4, {0, 1, 2, 2})).mu == std::vector<int>{4, 1});
  CHECK(final_to_young(make_final_type(4, {1, 2, 3, 4})).mu == std::vector<int>{});
  CHECK(young_to_final(make_young_type(4, {4, 3, 1})).nu == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("p-rank and a-number match their definitions") {
  for (int g = 1; g <= 8; ++g) {
    for (const FinalType& t : enumerate_final_types(g)) {
      int f = p_rank_of_final(t);
      int a = a_number_of_final(t);
      CHECK(f == f_by_definition(t));
      CHECK(a == g - t.nu[g - 1]);
      CHECK(invariants_of_young(final_to_young(t)) == std::pair{f, a});
      CHECK(0 <= f);
      CHECK(f <= g);
      CHECK(0 <= a);
      CHECK(a <= g - f);
    }
  }
}

TEST_CASE("dimension and codimension are complementary") {
  for (int g = 1; g <= 10; ++g) {
    for (const FinalType& t : enumerate_final_types(g)) {
      int d = stratum_dim(t);
      int c = stratum_codim(final_to_young(t));
      CHECK(d + c == g * (g + 1) / 2);
      CHECK(d >= 0);
      CHECK(c >= 0);
    }
  }
}

TEST_CASE("stratum records collect the invariants") {
  StratumRecord r = stratum_record(make_final_type(3, {0, 1, 1}));
  CHECK(r.final_type.nu == std::vector<int>{0, 1, 1});
  CHECK(r.young_type.mu == std::vector<int>{3, 1});
  CHECK(r.f == 0);
  CHECK(r.a == 2);
  CHECK(r.dim == 2);
  CHECK(r.codim == 4);
}

TEST_CASE("text renderings") {
  CHECK(render_nu(make_final_type(3, {0, 1, 1})) == "[0,1,1]");
  CHECK(render_nu(make_final_type(1, {0})) == "[0]");
  CHECK(render_mu(make_young_type(3, {3, 1})) == "{3,1}");
  CHECK(render_mu(make_young_type(3, {})) == "{}");
}
