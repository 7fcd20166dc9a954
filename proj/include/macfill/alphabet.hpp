#pragma once

#include <stdexcept>

namespace macfill {

/// Signed letter: +i is the positive letter i, -i the negative letter i-bar.
using Letter = int;

/// ORDER1: 1 < 1~ < 2 < 2~ < ...   ORDER2: 1 < 2 < ... < 2~ < 1~.
enum class AlphabetOrder { First, Second };

/// Position of a letter in the chosen total order.
constexpr long letter_rank(Letter x, AlphabetOrder ord) {
  if (x == 0) throw std::invalid_argument("zero is not a letter");
  if (ord == AlphabetOrder::First) return x > 0 ? 2L * x : 2L * -x + 1;
  return x > 0 ? static_cast<long>(x) : (1L << 30) + x;
}

constexpr bool letter_less(Letter x, Letter y, AlphabetOrder ord) { return letter_rank(x, ord) < letter_rank(y, ord); }

/// I(x,y) = 1 iff x > y, or x = y is negative.
constexpr int indicator_I(Letter x, Letter y, AlphabetOrder ord) {
  if (x == y) return x < 0 ? 1 : 0;
  return letter_rank(x, ord) > letter_rank(y, ord) ? 1 : 0;
}

}  // namespace macfill
