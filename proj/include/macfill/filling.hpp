#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "macfill/alphabet.hpp"
#include "macfill/partition.hpp"

namespace macfill {

/// Assignment of a signed letter to every cell of a diagram. A plain filling
/// is the all-positive case.
class SuperFilling {
 public:
  SuperFilling() = default;
  /// rows[i-1] holds row i (bottom row first). Throws std::invalid_argument if
  /// the row lengths disagree with shape or a letter is zero.
  SuperFilling(Partition shape, std::vector<std::vector<Letter>> rows);
  static SuperFilling constant(const Partition& shape, Letter x);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<Letter>>& rows() const { return rows_; }
  Letter at(const Cell& u) const {
    return rows_[static_cast<std::size_t>(u.row - 1)][static_cast<std::size_t>(u.col - 1)];
  }
  void set(const Cell& u, Letter x);

  int negatives() const;  // m(sigma)
  int positives() const { return shape_.size() - negatives(); }  // p(sigma)

  friend bool operator==(const SuperFilling&, const SuperFilling&) = default;
  friend auto operator<=>(const SuperFilling& a, const SuperFilling& b) { return a.rows_ <=> b.rows_; }

 private:
  Partition shape_;
  std::vector<std::vector<Letter>> rows_;
};

std::set<Cell> des_set(const SuperFilling& s, AlphabetOrder ord = AlphabetOrder::First);
/// Attacking pairs (u, v), u first in reading order, with I(s(u), s(v)) = 1.
std::vector<std::pair<Cell, Cell>> inv_set(const SuperFilling& s, AlphabetOrder ord = AlphabetOrder::First);
int maj(const SuperFilling& s, AlphabetOrder ord = AlphabetOrder::First);
int inv(const SuperFilling& s, AlphabetOrder ord = AlphabetOrder::First);
/// Inversions among row-1 cells.
int row1_inversions(const SuperFilling& s, AlphabetOrder ord = AlphabetOrder::First);
int inversion_triples(const SuperFilling& s, AlphabetOrder ord = AlphabetOrder::First);

/// The standard filling with the same Des and Inv: cells sorted by letter,
/// positive ties in reading order, negative ties in reverse reading order.
SuperFilling standardize(const SuperFilling& s, AlphabetOrder ord = AlphabetOrder::First);
bool is_standard(const SuperFilling& s);
/// {i : xi^-1(i+1) precedes xi^-1(i) in reading order}. Throws
/// std::invalid_argument if xi is not standard.
std::set<int> inverse_descent_set(const SuperFilling& xi);

bool is_non_attacking(const SuperFilling& s);

/// Entries in reading order.
std::vector<Letter> reading_word(const SuperFilling& s);
/// Row indices of the cells taken by decreasing entry, ties by decreasing
/// reading order. Throws std::invalid_argument on negative letters.
std::vector<int> cocharge_word(const SuperFilling& s);

/// Rows top to bottom separated by '/' or newlines, entries by spaces,
/// negative letters written with a trailing '~' ("2~").
SuperFilling parse_filling(std::string_view text);
std::string format_filling(const SuperFilling& s);

/// Calls f on every super filling of mu with positive letters <= nx and
/// negative letters <= ny (in lexicographic order of the reading word).
template <class F>
void for_each_super_filling(const Partition& mu, int nx, int ny, F&& f) {
  std::vector<Letter> letters;
  for (int i = 1; i <= nx; ++i) letters.push_back(i);
  for (int i = 1; i <= ny; ++i) letters.push_back(-i);
  std::vector<std::vector<Letter>> rows;
  for (int i = 1; i <= mu.length(); ++i) rows.emplace_back(static_cast<std::size_t>(mu.row_length(i)), 1);
  SuperFilling s(mu, rows);
  const auto cells = reading_order(mu);
  if (letters.empty() && !cells.empty()) return;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      f(static_cast<const SuperFilling&>(s));
      return;
    }
    for (Letter x : letters) {
      s.set(cells[idx], x);
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace macfill
