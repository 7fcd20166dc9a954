#include <doctest.h>

#include "helpers.hpp"
#include "macfill/involutions.hpp"

using namespace macfill;

namespace {

int positives(const SuperFilling& s) {
  int p = 0;
  for (const auto& r : s.rows())
    for (Letter x : r) p += x > 0;
  return p;
}

}  // namespace

TEST_SUITE("involutions") {
  TEST_CASE("Psi on a row of two equal letters") {
    const SuperFilling s = parse_filling("1 1");
    const InvolutionStep step = psi(s);
    REQUIRE(step.flipped_cell);
    CHECK(*step.flipped_cell == Cell{1, 1});
    CHECK(step.pivot_value == 1);
    CHECK(format_filling(step.output) == "1~ 1");
    CHECK(psi(step.output).output == s);
  }

  TEST_CASE("Phi on a column of two ones") {
    const SuperFilling s = parse_filling("1 / 1");
    const InvolutionStep step = phi(s);
    REQUIRE(step.flipped_cell);
    CHECK(*step.flipped_cell == Cell{2, 1});
    CHECK(format_filling(step.output) == "1~ / 1");
    CHECK(maj(s, AlphabetOrder::Second) == 0);
    CHECK(maj(step.output, AlphabetOrder::Second) == 1);
    CHECK(positives(s) == 2);
    CHECK(positives(step.output) == 1);
  }

  TEST_CASE("fixed points") {
    const InvolutionStep a = psi(parse_filling("2 / 1 3"));
    CHECK_FALSE(a.flipped_cell);
    CHECK(a.output == a.input);
    const InvolutionStep b = phi(parse_filling("2 / 1 3"));
    CHECK_FALSE(b.flipped_cell);
    CHECK(phi(parse_filling("1 / 3")).flipped_cell == Cell{2, 1});
    CHECK(is_fixed_point_class(parse_filling("2~ / 1 3"), Involution::Phi));
    CHECK_FALSE(is_fixed_point_class(parse_filling("1 / 1 3"), Involution::Phi));
    CHECK(is_fixed_point_class(parse_filling("2~ / 1 3"), Involution::Psi));
    CHECK_FALSE(is_fixed_point_class(parse_filling("2 3 / 3 1"), Involution::Psi));
  }

  TEST_CASE("both maps are sign-reversing involutions preserving the weight") {
    for (const Partition& mu : testing::partitions_upto(4))
      for_each_super_filling(mu, 2, 2, [&](const SuperFilling& s) {
        for (const Involution which : {Involution::Psi, Involution::Phi}) {
          const InvolutionStep step = which == Involution::Psi ? psi(s) : phi(s);
          const InvolutionStep back = which == Involution::Psi ? psi(step.output) : phi(step.output);
          CHECK(back.output == s);
          CHECK(step.flipped_cell.has_value() != is_fixed_point_class(s, which));
          if (step.flipped_cell) {
            CHECK(signed_weight(step.output, which) == -signed_weight(s, which));
            CHECK(std::abs(step.output.negatives() - s.negatives()) == 1);
          }
        }
        CHECK(is_fixed_point_class(s, Involution::Psi) == is_non_attacking(s));
      });
  }

  TEST_CASE("Psi keeps descents") {
    for (const Partition& mu : testing::partitions_upto(4))
      for_each_super_filling(mu, 2, 2, [&](const SuperFilling& s) {
        const SuperFilling o = psi(s).output;
        CHECK(des_set(o) == des_set(s));
        CHECK(maj(o) == maj(s));
      });
  }

  TEST_CASE("cancellation") {
    CHECK(verify_cancellation(Partition{2}, 2, 2, Involution::Psi));
    CHECK(verify_cancellation(Partition{1, 1}, 2, 2, Involution::Phi));
    for (const Partition& mu : testing::partitions_upto(3))
      for (const Involution which : {Involution::Psi, Involution::Phi})
        CHECK(verify_cancellation(mu, 3, 3, which));
  }

  TEST_CASE("exhaustive reports") {
    for (const Partition& mu : testing::partitions_upto(3))
      for (const Involution which : {Involution::Psi, Involution::Phi}) {
        const InvolutionReport r = verify_involution(mu, 3, which);
        CHECK(r.ok());
        long expect = 1;
        for (int k = 0; k < mu.size(); ++k) expect *= 6;
        CHECK(r.fillings == expect);
        CHECK(r.fixed_points > 0);
        CHECK(r.fixed_points <= r.fillings);
      }
  }
}
