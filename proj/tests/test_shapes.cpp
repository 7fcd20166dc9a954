#include <doctest.h>

#include "helpers.hpp"
#include "macfill/partition.hpp"

using namespace macfill;

TEST_SUITE("shapes") {
  TEST_CASE("partition counts and reverse lexicographic order") {
    const std::vector<std::size_t> counts{1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 1; n <= 10; ++n) CHECK(partitions_of(n).size() == counts[static_cast<std::size_t>(n - 1)]);
    const std::vector<Partition> four{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(partitions_of(4) == four);
  }

  TEST_CASE("parsing and validation") {
    CHECK(parse_partition("4,3,2") == Partition{4, 3, 2});
    CHECK(parse_partition(" 2, 1 ") == Partition{2, 1});
    CHECK(parse_partition("").empty());
    CHECK(Partition(std::vector<int>{3, 1, 0, 0}) == Partition{3, 1});
    CHECK_THROWS_AS(parse_partition("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("2,x"), std::invalid_argument);
    CHECK(Partition{4, 3, 2}.to_string() == "4,3,2");
  }

  TEST_CASE("arm and leg of the example cell") {
    const Partition mu{4, 3, 2};
    CHECK(arm(mu, {1, 2}) == 2);
    CHECK(leg(mu, {1, 2}) == 2);
    CHECK(arm(mu, {3, 2}) == 0);
    CHECK(leg(mu, {2, 3}) == 0);
    CHECK_THROWS(arm(mu, {3, 3}));
  }

  TEST_CASE("conjugation, arms, legs and n(mu)") {
    for (const Partition& mu : testing::partitions_upto(9)) {
      const Partition mc = conjugate(mu);
      CHECK(conjugate(mc) == mu);
      CHECK(mc.size() == mu.size());
      int legs = 0, arms = 0;
      for (const Cell& u : mu.cells()) {
        legs += leg(mu, u);
        arms += arm(mu, u);
        CHECK(arm(mu, u) == leg(mc, {u.col, u.row}));
      }
      CHECK(legs == n_stat(mu));
      CHECK(arms == n_stat(mc));
    }
  }

  TEST_CASE("reading order and attacks") {
    const std::vector<Cell> order{{2, 1}, {1, 1}, {1, 2}};
    CHECK(reading_order(Partition{2, 1}) == order);
    CHECK(attacks({1, 1}, {1, 3}));
    CHECK(attacks({2, 3}, {1, 1}));
    CHECK(attacks({1, 1}, {2, 3}));
    CHECK_FALSE(attacks({2, 1}, {1, 1}));
    CHECK_FALSE(attacks({2, 1}, {1, 2}));
    CHECK_FALSE(attacks({3, 2}, {1, 1}));
    for (const Partition& mu : testing::partitions_upto(6))
      for (const Cell& u : mu.cells())
        for (const Cell& v : mu.cells()) {
          CHECK(attacks(u, v) == attacks(v, u));
          CHECK(attacks(u, v) == oracle::attack(u, v));
        }
  }

  TEST_CASE("B_mu lists q^(j-1) t^(i-1)") {
    const std::vector<QTExponent> b{{0, 0}, {0, 1}, {1, 0}};
    CHECK(b_mu(Partition{2, 1}) == b);
  }

  TEST_CASE("dominance is a partial order reversed by conjugation") {
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
    CHECK_FALSE(dominance_leq(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
    CHECK_FALSE(dominance_leq(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));
    CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{1}), std::invalid_argument);
    for (int n = 1; n <= 7; ++n)
      for (const Partition& a : partitions_of(n))
        for (const Partition& b : partitions_of(n)) {
          CHECK(dominance_leq(a, b) == dominance_leq(conjugate(b), conjugate(a)));
          if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
        }
  }

  TEST_CASE("triples sit on a vertical pair with a cell to the right") {
    for (const Partition& mu : testing::partitions_upto(6))
      for (const Triple& tr : triples(mu)) {
        CHECK(tr.below == Cell{tr.upper.row - 1, tr.upper.col});
        CHECK(tr.right.row == tr.upper.row);
        CHECK(tr.right.col > tr.upper.col);
      }
  }

  TEST_CASE("skew shapes") {
    const SkewShape s{Partition{3, 2}, Partition{1}};
    CHECK(s.size() == 4);
    CHECK(s.contains({1, 2}));
    CHECK_FALSE(s.contains({1, 1}));
    CHECK(s.transpose().transpose() == s);
    CHECK(s.transpose().size() == 4);
    CHECK(SkewShape::from_cells(s.cells()) == s);
    CHECK_THROWS_AS(SkewShape::from_cells({{1, 1}, {2, 2}, {1, 3}}), std::invalid_argument);
  }

  TEST_CASE("ribbons round-trip through descent sets") {
    for (int m = 1; m <= 7; ++m)
      for (int bits = 0; bits < (1 << (m - 1)); ++bits) {
        std::set<int> d;
        for (int k = 0; k < m - 1; ++k)
          if (bits >> k & 1) d.insert(k + 2);
        const SkewShape r = ribbon_from_descents(m, d);
        CHECK(r.size() == m);
        CHECK(r.is_ribbon());
        CHECK(r.is_connected());
        CHECK(ribbon_descents(r) == d);
      }
    CHECK_THROWS_AS(ribbon_from_descents(3, {1}), std::invalid_argument);
  }

  TEST_CASE("ribbon tuples of mu") {
    const Partition mu{2, 1};
    const SkewTuple nu = nu_of_mu(mu, {});
    REQUIRE(nu.k() == 2);
    CHECK(nu.shapes[0].size() == 2);
    CHECK(nu.shapes[1].size() == 1);
    CHECK(nu.total_size() == 3);
    CHECK(transpose_tuple(transpose_tuple(nu)) == nu);
    CHECK_THROWS_AS(nu_of_mu(mu, {{1, 1}}), std::invalid_argument);
  }
}
