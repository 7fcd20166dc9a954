#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "macfill/alphabet.hpp"
#include "macfill/partition.hpp"
#include "macfill/xpoly.hpp"

namespace macfill {

/// Statistics of a complete super filling, collected incrementally.
struct LeafStats {
  int inv_pairs = 0;         // |Inv|
  int des_arm = 0;           // sum of arm over Des
  int maj = 0;               // sum of leg+1 over Des
  int negatives = 0;         // m
  int positives = 0;         // p
  std::uint64_t des_mask = 0;  // bit k set iff the k-th cell in reading order is a descent

  int inv() const { return inv_pairs - des_arm; }
};

/// What a filling contributes: sign * q^qexp * t^texp, or nothing.
struct LeafWeight {
  bool keep = true;
  int qexp = 0;
  int texp = 0;
  int sign = 1;
};

enum class MonomialMode {
  Signed,    // +i -> x_i, -i -> y_i (polynomial with nx + ny variables)
  Absolute,  // +i, -i -> x_i (polynomial with max(nx, ny) variables)
};

struct EnumerationSpec {
  Partition mu;
  int nx = 0;
  int ny = 0;
  AlphabetOrder order = AlphabetOrder::First;
  MonomialMode mode = MonomialMode::Signed;
  int workers = 0;  // 0: use default_workers()
};

using LeafWeigher = std::function<LeafWeight(const LeafStats&)>;

/// Sums the weights of all super fillings described by spec. Cells are filled
/// in reading order; descents and attacking inversions are settled as soon as
/// both cells are placed.
XPolynomial enumerate_fillings(const EnumerationSpec& spec, const LeafWeigher& weigh);

/// Worker count used when a spec asks for 0 (defaults to 1).
int default_workers();
void set_default_workers(int n);

}  // namespace macfill
