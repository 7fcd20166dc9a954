#pragma once

#include <optional>

#include "macfill/filling.hpp"
#include "macfill/xpoly.hpp"

namespace macfill {

struct InvolutionStep {
  SuperFilling input;
  SuperFilling output;
  std::optional<Cell> flipped_cell;  // none at a fixed point
  std::optional<int> pivot_value;    // the value a
};

/// Flips the sign at u, where a is the least absolute value shared by an
/// attacking pair, v the last cell in such a pair and u the last cell
/// attacking v with |sigma(u)| = a.
InvolutionStep psi(const SuperFilling& s);
/// Flips the sign at the first cell u in reading order with |sigma(u)| = a,
/// a the least value occurring as |sigma(i,j)| < i.
InvolutionStep phi(const SuperFilling& s);

enum class Involution { Psi, Phi };

/// The signed weight summed on both sides: (-1)^m q^(p+inv) t^maj under
/// ORDER1 for Psi, (-1)^m q^inv t^(p+maj) under ORDER2 for Phi.
LaurentQT signed_weight(const SuperFilling& s, Involution which);
bool is_fixed_point_class(const SuperFilling& s, Involution which);

/// Sum of signed weights over all super fillings (entries bounded by nx, ny)
/// equals the sum over fixed points only.
bool verify_cancellation(const Partition& mu, int nx, int ny, Involution which);

struct InvolutionReport {
  long fillings = 0;
  long fixed_points = 0;
  bool involutive = true;      // applying twice returns the input
  bool fixed_set = true;       // fixed points are exactly the stated class
  bool weight = true;          // Psi keeps p+inv and maj; Phi keeps inv and p+maj
  bool sign_reversing = true;  // m changes by one on moved fillings
  bool support = true;         // partition-shaped fixed monomials obey the dominance bound
  bool cancellation = true;

  bool ok() const { return involutive && fixed_set && weight && sign_reversing && support && cancellation; }
};

/// Exhaustive sweep over super fillings of mu with letters bounded by bound
/// in both signs.
InvolutionReport verify_involution(const Partition& mu, int bound, Involution which);

}  // namespace macfill
