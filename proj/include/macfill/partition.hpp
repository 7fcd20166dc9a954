#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace macfill {

/// A cell (row, column) of a diagram, 1-based, French convention: row 1 is
/// the bottom row.
struct Cell {
  int row = 1;
  int col = 1;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;

  constexpr int content() const { return row - col; }
};

/// Strict reading order: rows top to bottom, left to right within a row.
constexpr bool reading_less(const Cell& a, const Cell& b) {
  return a.row != b.row ? a.row > b.row : a.col < b.col;
}

/// Integer partition with weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; anything else that is not weakly decreasing
  /// and positive throws std::invalid_argument.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Length of row i (1-based); 0 beyond the last part.
  int row_length(int i) const {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  bool contains(const Cell& u) const {
    return u.row >= 1 && u.col >= 1 && u.col <= row_length(u.row);
  }
  /// Cells row by row, bottom row first, left to right.
  std::vector<Cell> cells() const;

  std::string to_string() const;  // "4,3,2"

  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Parses "4,3,2" (empty string or "0" gives the empty partition).
Partition parse_partition(std::string_view text);

Partition conjugate(const Partition& mu);

/// Throws std::out_of_range if u is not a cell of mu.
int arm(const Partition& mu, const Cell& u);
int leg(const Partition& mu, const Cell& u);

std::vector<Cell> reading_order(const Partition& mu);

/// Same row, or consecutive rows with the upper cell strictly to the right.
bool attacks(const Cell& u, const Cell& v);

struct Triple {
  Cell upper;  // u
  Cell below;  // v, directly below u
  Cell right;  // w, in u's row to its right
  friend bool operator==(const Triple&, const Triple&) = default;
};
std::vector<Triple> triples(const Partition& mu);

/// Dominance order; throws std::invalid_argument on unequal sizes.
bool dominance_leq(const Partition& mu, const Partition& nu);

/// n(mu) = sum (i-1) mu_i.
int n_stat(const Partition& mu);

/// Exponent pair (q-exponent, t-exponent) of a term t^(i-1) q^(j-1).
struct QTExponent {
  int q = 0;
  int t = 0;
  friend constexpr auto operator<=>(const QTExponent&, const QTExponent&) = default;
};
/// The multiset B_mu, one entry per cell, sorted.
std::vector<QTExponent> b_mu(const Partition& mu);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

/// Cells eligible for a descent: those not in row 1.
std::vector<Cell> descent_candidates(const Partition& mu);

// ---------------------------------------------------------------------------
// Skew shapes

/// outer / inner, anchored in the plane (translates are distinct shapes).
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);

  /// Builds the anchored skew shape with exactly these cells. Throws
  /// std::invalid_argument if the set is not of the form outer / inner.
  static SkewShape from_cells(std::vector<Cell> cells);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  /// Cells sorted by (row, col).
  const std::vector<Cell>& cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }
  bool contains(const Cell& u) const;

  /// Reflects every cell (i,j) to (j,i).
  SkewShape transpose() const;

  bool is_connected() const;
  bool is_ribbon() const;

  friend bool operator==(const SkewShape& a, const SkewShape& b) { return a.cells_ == b.cells_; }

 private:
  Partition outer_;
  Partition inner_;
  std::vector<Cell> cells_;
};

/// The ribbon of size m whose lower-right cell has content 1 and whose
/// descent set (contents of cells with a cell directly below) is `descents`.
/// Throws std::invalid_argument unless descents is a subset of {2..m}.
SkewShape ribbon_from_descents(int m, const std::set<int>& descents);
std::set<int> ribbon_descents(const SkewShape& ribbon);

/// A tuple of anchored skew shapes (nu^(1), ..., nu^(k)).
struct SkewTuple {
  std::vector<SkewShape> shapes;

  int k() const { return static_cast<int>(shapes.size()); }
  int total_size() const;

  /// k * beta(u) for u in component j (1-based): j - k*c(u). Integer valued, so
  /// 0 < beta(v) - beta(u) < 1 becomes 0 < diff < k.
  int scaled_beta(int component, const Cell& u) const { return component - k() * u.content(); }

  friend bool operator==(const SkewTuple&, const SkewTuple&) = default;
};

/// The ribbon tuple nu(mu, D): one ribbon per column j of mu, of size mu'_j
/// with descent set {i : (i,j) in D}. Throws std::invalid_argument if D has a
/// row-1 cell or a cell outside mu.
SkewTuple nu_of_mu(const Partition& mu, const std::set<Cell>& descents);

/// Transposes each shape and reverses the tuple.
SkewTuple transpose_tuple(const SkewTuple& nu);

}  // namespace macfill
