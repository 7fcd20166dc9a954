#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "macfill/filling.hpp"

using namespace macfill;

namespace {

SuperFilling random_filling(const Partition& mu, int nx, int ny, std::mt19937& rng) {
  SuperFilling s = SuperFilling::constant(mu, 1);
  for (const Cell& u : mu.cells()) {
    const int k = static_cast<int>(rng() % static_cast<unsigned>(nx + ny));
    s.set(u, k < nx ? k + 1 : -(k - nx + 1));
  }
  return s;
}

}  // namespace

TEST_SUITE("fillings") {
  TEST_CASE("descents and inversions of the worked example") {
    const SuperFilling s = parse_filling("6 2 / 2 4 8 / 4 4 1 3");
    CHECK(s.shape() == Partition{4, 3, 2});
    const std::set<Cell> des{{3, 1}, {2, 3}};
    CHECK(des_set(s) == des);
    CHECK(inv_set(s).size() == 7);
    CHECK(maj(s) == 2);
    CHECK(inv(s) == 6);
    CHECK(row1_inversions(s) == 4);
    CHECK(inversion_triples(s) == 2);
    CHECK(inv(s) == row1_inversions(s) + inversion_triples(s));
  }

  TEST_CASE("super standardization of the worked example") {
    const SuperFilling s = parse_filling("6 2~ / 2~ 4 8~ / 4~ 4 1 3");
    const SuperFilling xi = standardize(s);
    CHECK(format_filling(xi) == "8 3 / 2 5 9 / 7 6 1 4");
    const std::set<int> d{1, 2, 4, 6, 7};
    CHECK(inverse_descent_set(xi) == d);
    CHECK(is_standard(xi));
    CHECK_FALSE(is_standard(s));
  }

  TEST_CASE("statistics agree with a direct reading of the definitions") {
    for (const Partition& mu : testing::partitions_upto(5))
      oracle::for_each_fill(mu, 3, [&](const oracle::Fill& f) {
        SuperFilling s = SuperFilling::constant(mu, 1);
        for (const auto& [u, x] : f) s.set(u, x);
        const auto [m, i] = oracle::maj_inv(mu, f);
        CHECK(maj(s) == m);
        CHECK(inv(s) == i);
      });
  }

  TEST_CASE("standardization preserves descents and inversions") {
    std::mt19937 rng(3);
    for (const AlphabetOrder ord : {AlphabetOrder::First, AlphabetOrder::Second})
      for (const Partition& mu : testing::partitions_upto(6))
        for (int trial = 0; trial < 20; ++trial) {
          const SuperFilling s = random_filling(mu, 3, 3, rng);
          const SuperFilling xi = standardize(s, ord);
          CHECK(is_standard(xi));
          CHECK(des_set(xi) == des_set(s, ord));
          CHECK(inv_set(xi) == inv_set(s, ord));
          CHECK(maj(xi) == maj(s, ord));
          CHECK(inv(xi) == inv(s, ord));
          CHECK(inv(s, ord) == row1_inversions(s, ord) + inversion_triples(s, ord));
          CHECK(inv(s, ord) >= 0);
        }
  }

  TEST_CASE("text format round-trips") {
    std::mt19937 rng(9);
    for (const Partition& mu : testing::partitions_upto(6)) {
      const SuperFilling s = random_filling(mu, 4, 2, rng);
      CHECK(parse_filling(format_filling(s)) == s);
    }
    CHECK(parse_filling("3\n1 2") == parse_filling("3 / 1 2"));
    CHECK_THROWS_AS(parse_filling("1 / 2 0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_filling("1 2 / 3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_filling("1 x"), std::invalid_argument);
  }

  TEST_CASE("non-attacking fillings and reading words") {
    CHECK(is_non_attacking(parse_filling("2 / 1 3")));
    CHECK_FALSE(is_non_attacking(parse_filling("2 3 / 3 1")));
    CHECK_FALSE(is_non_attacking(parse_filling("1 1~")));
    CHECK(is_non_attacking(parse_filling("1 / 1")));
    const std::vector<Letter> w{2, 1, -3};
    CHECK(reading_word(parse_filling("2 / 1 3~")) == w);
  }

  TEST_CASE("letter orders") {
    CHECK(letter_less(1, -1, AlphabetOrder::First));
    CHECK(letter_less(-1, 2, AlphabetOrder::First));
    CHECK(letter_less(5, -5, AlphabetOrder::Second));
    CHECK(letter_less(-6, -5, AlphabetOrder::Second));
    CHECK(indicator_I(-2, -2, AlphabetOrder::First) == 1);
    CHECK(indicator_I(2, 2, AlphabetOrder::First) == 0);
    CHECK(indicator_I(3, 2, AlphabetOrder::Second) == 1);
  }

  TEST_CASE("enumeration visits every filling once") {
    long count = 0;
    for_each_super_filling(Partition{2, 1}, 2, 1, [&](const SuperFilling&) { ++count; });
    CHECK(count == 27);
  }
}
