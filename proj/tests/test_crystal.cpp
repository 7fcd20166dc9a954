#include <doctest.h>

#include "helpers.hpp"
#include "macfill/crystal.hpp"
#include "macfill/macdonald.hpp"

using namespace macfill;

namespace {

void for_each_word(int len, int alphabet, const std::function<void(const Word&)>& f) {
  Word w(static_cast<std::size_t>(len), 1);
  while (true) {
    f(w);
    std::size_t k = 0;
    while (k < w.size() && w[k] == alphabet) w[k++] = 1;
    if (k == w.size()) return;
    ++w[k];
  }
}

}  // namespace

TEST_SUITE("crystal") {
  TEST_CASE("raising operator on the worked example") {
    CHECK(word_E(parse_word("342233132124"), 2) == parse_word("342223132124"));
    CHECK_FALSE(word_E({1}, 1));
    CHECK(word_F({1}, 1) == Word{2});
    CHECK_FALSE(word_F({2, 1}, 1));
  }

  TEST_CASE("crystal axioms on short words") {
    for (int len = 1; len <= 5; ++len)
      for_each_word(len, 3, [](const Word& w) {
        for (int i = 1; i <= 2; ++i) {
          if (const auto e = word_E(w, i)) {
            CHECK(word_F(*e, i) == w);
            CHECK(std::count(e->begin(), e->end(), i) == std::count(w.begin(), w.end(), i) + 1);
            CHECK(rsk(*e).Q == rsk(w).Q);
          }
          if (const auto f = word_F(w, i)) CHECK(word_E(*f, i) == w);
        }
      });
  }

  TEST_CASE("Yamanouchi words are the highest weight words") {
    CHECK(is_yamanouchi({2, 1}));
    CHECK_FALSE(is_yamanouchi({1, 2}));
    CHECK(is_yamanouchi({}));
    for (int len = 1; len <= 6; ++len)
      for_each_word(len, 3, [](const Word& w) {
        const bool top = !word_E(w, 1) && !word_E(w, 2);
        CHECK(is_yamanouchi(w) == top);
      });
    const Word w = parse_word("11222132341123");
    bool top = true;
    for (int i = 1; i <= 4; ++i) top = top && !word_E(w, i);
    CHECK(is_yamanouchi(w) == top);
  }

  TEST_CASE("insertion") {
    const RSKPair r = rsk({2, 1, 1});
    CHECK(r.P == Tableau{{1, 1}, {2}});
    CHECK(r.Q == Tableau{{1, 3}, {2}});
    CHECK(rsk({1, 2, 1}).P == r.P);
    CHECK(rsk({1, 2, 3}).P == Tableau{{1, 2, 3}});
    CHECK(rectification({2, 1, 1}) == Word{2, 1, 1});
    CHECK(rectification({1, 2, 1}) == Word{2, 1, 1});
    CHECK(tableau_shape(r.P) == Partition{2, 1});
  }

  TEST_CASE("first row length is the longest weakly increasing subsequence") {
    for (int len = 1; len <= 6; ++len)
      for_each_word(len, 3, [](const Word& w) {
        const RSKPair r = rsk(w);
        CHECK(static_cast<int>(r.P.front().size()) == oracle::longest_weakly_increasing(w));
        CHECK(tableau_shape(r.P) == tableau_shape(r.Q));
        CHECK(rectification(rectification(w)) == rectification(w));
      });
  }

  TEST_CASE("filling operators on two-column shapes") {
    for (const Partition& mu : testing::partitions_upto(5)) {
      if (mu.row_length(1) > 2) continue;
      for_each_super_filling(mu, 3, 0, [&](const SuperFilling& s) {
        for (int i = 1; i <= 2; ++i) {
          const auto e = filling_E(s, i);
          CHECK(e.has_value() == word_E(reading_word(s), i).has_value());
          if (e) {
            CHECK(filling_F(*e, i) == s);
            CHECK(des_set(*e) == des_set(s));
            CHECK(inv_set(*e).size() == inv_set(s).size());
            CHECK(maj(*e) == maj(s));
            CHECK(inv(*e) == inv(s));
            CHECK(rectification(reading_word(*e)) == rectification(*word_E(reading_word(s), i)));
          }
          const auto f = filling_F(s, i);
          CHECK(f.has_value() == word_F(reading_word(s), i).has_value());
          if (f) CHECK(filling_E(*f, i) == s);
        }
      });
    }
    CHECK_THROWS(filling_E(parse_filling("1 2 3"), 1));
    CHECK_THROWS(filling_E(parse_filling("1 2~"), 1));
  }

  TEST_CASE("attack zone") {
    CHECK(attack_zone_start(Partition{2, 2}) == 0);
    CHECK(attack_zone_start(Partition{2, 1}) == 1);
    CHECK(attack_zone_start(Partition{1, 1}) == 1);
  }

  TEST_CASE("two-column Kostka coefficients") {
    CHECK(two_column_kostka(Partition{2}, Partition{1, 1}) == LaurentQT(1));
    CHECK(two_column_kostka(Partition{1, 1}, Partition{1, 1}) == LaurentQT::t());
    for (const Partition& mu : testing::partitions_upto(5)) {
      if (mu.row_length(1) > 2) continue;
      const SchurVector row = H_tilde(mu).schur_vec;
      for (const Partition& lambda : partitions_of(mu.size()))
        CHECK(two_column_kostka(lambda, mu) == row.coeff(lambda));
    }
    CHECK_THROWS(two_column_kostka(Partition{3}, Partition{3}));
  }

  TEST_CASE("Yamanouchi words of a shape") {
    for (int n = 1; n <= 6; ++n)
      for (const Partition& lambda : partitions_of(n)) {
        const auto ws = yamanouchi_words(lambda);
        CHECK(static_cast<long long>(ws.size()) == syt_count(lambda));
        for (const Word& w : ws) CHECK(is_yamanouchi(w));
      }
  }

  TEST_CASE("reports") {
    const CrystalReport r = verify_word_crystal(5, 3, 5);
    CHECK(r.axioms);
    CHECK(r.q_preserved);
    CHECK(r.yamanouchi);
    CHECK(r.unique_yamanouchi);
    CHECK(r.connected);
    CHECK(crystal_covering_check(Partition{2, 2}, 3));
    CHECK(check_descent_refinement(Partition{2, 2}));
  }
}
