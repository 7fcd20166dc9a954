#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "macfill/crystal.hpp"
#include "macfill/macdonald.hpp"
#include "macfill/special.hpp"

using namespace macfill;

namespace {

LaurentQT t(int e = 1) { return LaurentQT::t(e); }

// All words with content mu, by next_permutation.
std::vector<Word> words_with_content(const Partition& mu) {
  Word w;
  for (int i = 1; i <= mu.length(); ++i) w.insert(w.end(), static_cast<std::size_t>(mu.row_length(i)), i);
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace

TEST_SUITE("special") {
  TEST_CASE("word parsing") {
    CHECK(parse_word("2113") == Word{2, 1, 1, 3});
    CHECK(parse_word("10,2,1") == Word{10, 2, 1});
    CHECK(format_word({2, 1, 1, 3}) == "2113");
    CHECK(format_word({10, 2, 1}) == "10,2,1");
    CHECK_THROWS_AS(parse_word("1a"), std::invalid_argument);
    CHECK(is_partition_content({2, 1, 1}));
    CHECK_FALSE(is_partition_content({2, 2, 1}));
    CHECK_FALSE(is_partition_content({1, 3}));
  }

  TEST_CASE("cocharge of small words") {
    CHECK(cocharge({1, 2}) == 0);
    CHECK(cocharge({2, 1}) == 1);
    CHECK(cocharge({1}) == 0);
    CHECK(cocharge({1, 1, 2}) == 0);
    CHECK(cocharge({2, 1, 1}) == 1);
    CHECK_THROWS_AS(cocharge({2, 2, 1}), std::invalid_argument);
  }

  TEST_CASE("cocharge matches n(mu) minus charge") {
    for (const Partition& mu : testing::partitions_upto(6))
      for (const Word& w : words_with_content(mu)) {
        const int c = cocharge(w);
        CHECK(c == oracle::cocharge_via_charge(w));
        CHECK(c >= 0);
        CHECK(c <= n_stat(mu));
      }
  }

  TEST_CASE("cocharge is constant on plactic classes") {
    for (const Partition& mu : testing::partitions_upto(6))
      for (const Word& w : words_with_content(mu)) CHECK(cocharge(w) == cocharge(rectification(w)));
  }

  TEST_CASE("the inv = 0 filling with prescribed rows") {
    const SuperFilling s = unique_inv_zero_filling(
        Partition{5, 5, 3, 1}, {{1, 1, 3, 6, 7}, {1, 2, 4, 4, 5}, {1, 2, 3}, {2}});
    CHECK(format_filling(s) == "2 / 3 1 2 / 2 4 4 1 5 / 1 1 3 6 7");
    CHECK(inv(s) == 0);
    const Word cw = cocharge_word(s);
    CHECK(format_word(cw) == "11222132341123");
    CHECK(maj(s) == cocharge(cw));
    CHECK(maj(s) == 9);
  }

  TEST_CASE("random inv = 0 fillings satisfy maj = cocharge(cword)") {
    std::mt19937 rng(23);
    for (const Partition& mu : testing::partitions_upto(6))
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::vector<int>> rows;
        for (int i = 1; i <= mu.length(); ++i) {
          std::vector<int> r;
          for (int j = 0; j < mu.row_length(i); ++j) r.push_back(1 + static_cast<int>(rng() % 4));
          rows.push_back(r);
        }
        const SuperFilling s = unique_inv_zero_filling(mu, rows);
        CHECK(inv(s) == 0);
        for (int i = 1; i <= mu.length(); ++i) {
          auto got = s.rows()[static_cast<std::size_t>(i - 1)];
          auto want = rows[static_cast<std::size_t>(i - 1)];
          std::sort(got.begin(), got.end());
          std::sort(want.begin(), want.end());
          CHECK(got == want);
        }
        CHECK(maj(s) == cocharge(cocharge_word(s)));
      }
  }

  TEST_CASE("semistandard tableaux with given content") {
    for (int n = 1; n <= 5; ++n)
      for (const Partition& lambda : partitions_of(n))
        for (const Partition& rho : partitions_of(n)) {
          const auto tabs = ssyt_with_content(lambda, rho.parts());
          CHECK(static_cast<long long>(tabs.size()) == oracle::kostka(lambda, rho.parts()));
          auto words = oracle::ssyt_words(lambda, rho.parts());
          std::vector<Word> mine;
          for (const Tableau& T : tabs) mine.push_back(tableau_reading_word(T));
          std::sort(words.begin(), words.end());
          std::sort(mine.begin(), mine.end());
          CHECK(mine == words);
        }
  }

  TEST_CASE("Hall-Littlewood rows") {
    SchurVector h11, h31, h22;
    h11.add(Partition{2}, 1);
    h11.add(Partition{1, 1}, t());
    h31.add(Partition{4}, 1);
    h31.add(Partition{3, 1}, t());
    h22.add(Partition{4}, 1);
    h22.add(Partition{3, 1}, t());
    h22.add(Partition{2, 2}, t(2));
    CHECK(hall_littlewood_schur(Partition{1, 1}) == h11);
    CHECK(hall_littlewood_schur(Partition{3, 1}) == h31);
    CHECK(hall_littlewood_schur(Partition{2, 2}) == h22);
    for (const Partition& mu : testing::partitions_upto(5))
      CHECK(hall_littlewood_schur(mu) == hall_littlewood_from_kostka(mu, 8));
  }

  TEST_CASE("integral form") {
    XPolynomial j1(2);
    j1.add({1, 0}, LaurentQT(1) - t());
    j1.add({0, 1}, LaurentQT(1) - t());
    CHECK(j_integral(Partition{1}, 2) == j1);
    for (const Partition& mu : testing::partitions_upto(4))
      CHECK(j_integral(mu, mu.size()) == j_from_h(mu, mu.size()));
    CHECK(j_integral(Partition{3, 2}, 3) == j_from_h(Partition{3, 2}, 3));
  }

  TEST_CASE("Jack polynomials") {
    const AlphaPoly a = AlphaPoly::alpha();
    JackPolynomial j3;
    j3.add(Partition{3}, AlphaPoly(1) + AlphaPoly(3) * a + AlphaPoly(2) * a * a);
    j3.add(Partition{2, 1}, AlphaPoly(3) + AlphaPoly(3) * a);
    j3.add(Partition{1, 1, 1}, 6);
    CHECK(knop_sahi(Partition{3}, 3) == j3);
    JackPolynomial j21;
    j21.add(Partition{2, 1}, AlphaPoly(2) + a);
    j21.add(Partition{1, 1, 1}, 6);
    CHECK(knop_sahi(Partition{2, 1}, 3) == j21);
    CHECK(render_jack(j21) == "(2 + a)*m[2,1] + 6*m[1,1,1]");
    CHECK_THROWS(knop_sahi(Partition{2, 1}, 2));
  }

  TEST_CASE("Jack at alpha = 1 is the hook product times a Schur polynomial") {
    for (const Partition& mu : testing::partitions_upto(5)) {
      const int n = mu.size();
      const AlphaXPolynomial j = knop_sahi_at(mu, n, 1);
      const XPolynomial s = schur_in_x(mu, n);
      CHECK(j.terms().size() == s.terms().size());
      for (const auto& [e, c] : s.terms()) CHECK(j.coeff(e).evaluate(0) == c.evaluate(1, 1) * static_cast<long>(oracle::hook_product(mu)));
    }
  }

  TEST_CASE("Jack formula agrees with the t -> 1 limit") {
    for (const Partition& mu : testing::partitions_upto(4))
      for (int alpha = 1; alpha <= 3; ++alpha)
        CHECK(knop_sahi_at(mu, mu.size(), alpha) == jack_limit_oracle(mu, mu.size(), alpha));
  }

  TEST_CASE("absolute statistics") {
    const SuperFilling s = parse_filling("1 / 2~ 1");
    CHECK(amaj(s) >= 0);
    CHECK(ainv(parse_filling("2 1")) == 1);
    CHECK(ainv(parse_filling("1 2")) == 0);
    for (const Partition& mu : testing::partitions_upto(4)) CHECK(check_tau_terms(mu, 3));
  }
}
