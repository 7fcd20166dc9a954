#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "macfill/llt.hpp"
#include "macfill/macdonald.hpp"

using namespace macfill;

namespace {

SkewTuple cells_tuple(int k) {
  SkewTuple nu;
  for (int j = 0; j < k; ++j) nu.shapes.emplace_back(Partition{1}, Partition{});
  return nu;
}

std::vector<SkewTuple> small_tuples() {
  std::vector<SkewTuple> out;
  for (const Partition& mu : testing::partitions_upto(4))
    for (const auto& D : descent_subsets(mu)) out.push_back(nu_of_mu(mu, D));
  out.push_back(SkewTuple{{SkewShape{Partition{2, 1}, Partition{}}, SkewShape{Partition{2}, Partition{1}}}});
  out.push_back(SkewTuple{{SkewShape{Partition{3, 1}, Partition{1}}}});
  return out;
}

}  // namespace

TEST_SUITE("llt") {
  TEST_CASE("two single cells give s2 + q s11") {
    const XPolynomial g = G_nu(cells_tuple(2), 2);
    SchurVector expect;
    expect.add(Partition{2}, 1);
    expect.add(Partition{1, 1}, LaurentQT::q());
    CHECK(to_schur(g) == expect);
    CHECK(beta_pair_count(cells_tuple(2)) == 1);
    CHECK(beta_pair_count(cells_tuple(3)) == 3);
  }

  TEST_CASE("beta inversions agree with the content rules") {
    for (const SkewTuple& nu : small_tuples())
      for_each_tuple_tableau(nu, 3, 0, AlphabetOrder::First, [&](const TupleTableau& T) {
        CHECK(is_super_semistandard(T));
        CHECK(llt_inv(T) == llt_inv_classic(T));
      });
  }

  TEST_CASE("content reading order is by beta") {
    const SkewTuple nu = small_tuples().back();
    const auto order = content_reading_order(nu);
    CHECK(order.size() == static_cast<std::size_t>(nu.total_size()));
    for (std::size_t a = 1; a < order.size(); ++a) {
      const int b0 = nu.scaled_beta(static_cast<int>(order[a - 1].component) + 1, order[a - 1].cell);
      const int b1 = nu.scaled_beta(static_cast<int>(order[a].component) + 1, order[a].cell);
      CHECK(b0 <= b1);
    }
  }

  TEST_CASE("theta carries filling inversions to tableau inversions") {
    for (const Partition& mu : testing::partitions_upto(4))
      for_each_super_filling(mu, 3, 0, [&](const SuperFilling& s) {
        const TupleTableau T = theta(s);
        CHECK(is_super_semistandard(T));
        CHECK(llt_inv(T) == static_cast<int>(inv_set(s).size()));
      });
  }

  TEST_CASE("ribbon correspondence F_{mu,D} = G_nu") {
    for (const Partition& mu : testing::partitions_upto(4))
      for (const auto& D : descent_subsets(mu)) CHECK(check_ribbon_correspondence(mu, D, 3));
  }

  TEST_CASE("transpose identities") {
    for (const SkewTuple& nu : small_tuples()) {
      CHECK(transpose_tuple(transpose_tuple(nu)) == nu);
      CHECK(check_transpose_identity(nu, 3));
      if (nu.total_size() <= 4) CHECK(check_transpose_omega(nu));
    }
  }

  TEST_CASE("super tableaux expand in the fundamental basis") {
    for (const SkewTuple& nu : small_tuples()) {
      if (nu.total_size() > 3) continue;
      for (const AlphabetOrder ord : {AlphabetOrder::First, AlphabetOrder::Second})
        CHECK(G_super(nu, ord, 2, 2) == G_super_by_Q(nu, ord, 2, 2));
    }
  }

  TEST_CASE("standardized tableaux keep their inversions") {
    for (const SkewTuple& nu : small_tuples())
      for_each_tuple_tableau(nu, 2, 2, AlphabetOrder::First, [&](const TupleTableau& T) {
        CHECK(llt_inv(standardize_tableau(T)) == llt_inv(T));
      });
  }

  TEST_CASE("two-variable beta sequences") {
    using R = Rational;
    const XPolynomial one = g_beta({R(0)});
    XPolynomial x(2);
    x.add({1, 0}, 1);
    x.add({0, 1}, 1);
    CHECK(one == x);
    CHECK_THROWS_AS(g_beta({R(1), R(1)}), std::invalid_argument);
    CHECK(check_beta_recursion({R(0), R(1, 2), R(1)}));
    CHECK(check_beta_recursion({R(0), R(1), R(2)}));
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
      std::set<R> pool;
      const int len = 1 + static_cast<int>(rng() % 6);
      while (static_cast<int>(pool.size()) < len) pool.insert(R(static_cast<long long>(rng() % 13), 3));
      CHECK(check_beta_recursion(std::vector<R>(pool.begin(), pool.end())));
    }
  }

  TEST_CASE("two-cell columns factor out") {
    for (const Partition& mu : testing::partitions_upto(4)) {
      if (mu.length() > 2) continue;
      for (const auto& D : descent_subsets(mu)) CHECK(check_two_cell_column_reduction(nu_of_mu(mu, D)));
    }
    CHECK_THROWS_AS(check_two_cell_column_reduction(nu_of_mu(Partition{1, 1, 1}, {{2, 1}, {3, 1}})), std::invalid_argument);
  }

  TEST_CASE("malformed tableaux are rejected") {
    TupleTableau T{cells_tuple(1), {{1}}};
    CHECK(llt_inv(T) == 0);
    TupleTableau bad{SkewTuple{{SkewShape{Partition{2}, Partition{}}}}, {{2, 1}}};
    CHECK_FALSE(is_super_semistandard(bad));
    CHECK_THROWS_AS(llt_inv(bad), std::invalid_argument);
  }
}
