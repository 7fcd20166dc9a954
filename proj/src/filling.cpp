#include "macfill/filling.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace macfill {

SuperFilling::SuperFilling(Partition shape, std::vector<std::vector<Letter>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length()) throw std::invalid_argument("row count differs from shape");
  for (int i = 1; i <= shape_.length(); ++i) {
    const auto& r = rows_[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(r.size()) != shape_.row_length(i)) throw std::invalid_argument("row length differs from shape");
    if (std::find(r.begin(), r.end(), 0) != r.end()) throw std::invalid_argument("zero is not a letter");
  }
}

SuperFilling SuperFilling::constant(const Partition& shape, Letter x) {
  std::vector<std::vector<Letter>> rows;
  for (int len : shape.parts()) rows.emplace_back(static_cast<std::size_t>(len), x);
  return SuperFilling(shape, std::move(rows));
}

void SuperFilling::set(const Cell& u, Letter x) {
  if (x == 0) throw std::invalid_argument("zero is not a letter");
  rows_.at(static_cast<std::size_t>(u.row - 1)).at(static_cast<std::size_t>(u.col - 1)) = x;
}

int SuperFilling::negatives() const {
  int m = 0;
  for (const auto& r : rows_)
    for (Letter x : r) m += x < 0;
  return m;
}

std::set<Cell> des_set(const SuperFilling& s, AlphabetOrder ord) {
  std::set<Cell> out;
  for (const Cell& u : s.shape().cells())
    if (u.row > 1 && indicator_I(s.at(u), s.at({u.row - 1, u.col}), ord)) out.insert(u);
  return out;
}

std::vector<std::pair<Cell, Cell>> inv_set(const SuperFilling& s, AlphabetOrder ord) {
  std::vector<std::pair<Cell, Cell>> out;
  const auto cells = reading_order(s.shape());
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = a + 1; b < cells.size(); ++b)
      if (attacks(cells[a], cells[b]) && indicator_I(s.at(cells[a]), s.at(cells[b]), ord))
        out.emplace_back(cells[a], cells[b]);
  return out;
}

int maj(const SuperFilling& s, AlphabetOrder ord) {
  int m = 0;
  for (const Cell& u : des_set(s, ord)) m += leg(s.shape(), u) + 1;
  return m;
}

int inv(const SuperFilling& s, AlphabetOrder ord) {
  int r = static_cast<int>(inv_set(s, ord).size());
  for (const Cell& u : des_set(s, ord)) r -= arm(s.shape(), u);
  return r;
}

int row1_inversions(const SuperFilling& s, AlphabetOrder ord) {
  int r = 0;
  const int len = s.shape().row_length(1);
  for (int a = 1; a <= len; ++a)
    for (int b = a + 1; b <= len; ++b) r += indicator_I(s.at({1, a}), s.at({1, b}), ord);
  return r;
}

int inversion_triples(const SuperFilling& s, AlphabetOrder ord) {
  int r = 0;
  for (const Triple& tr : triples(s.shape())) {
    const Letter x = s.at(tr.upper), y = s.at(tr.below), z = s.at(tr.right);
    if (indicator_I(x, z, ord) + indicator_I(z, y, ord) - indicator_I(x, y, ord) == 1) ++r;
  }
  return r;
}

SuperFilling standardize(const SuperFilling& s, AlphabetOrder ord) {
  const auto cells = reading_order(s.shape());
  std::vector<std::size_t> idx(cells.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const Letter x = s.at(cells[a]), y = s.at(cells[b]);
    if (x != y) return letter_less(x, y, ord);
    return x > 0 ? a < b : a > b;
  });
  SuperFilling xi = s;
  for (std::size_t k = 0; k < idx.size(); ++k) xi.set(cells[idx[k]], static_cast<Letter>(k + 1));
  return xi;
}

bool is_standard(const SuperFilling& s) {
  std::vector<Letter> w = reading_word(s);
  std::sort(w.begin(), w.end());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != static_cast<Letter>(i + 1)) return false;
  return true;
}

std::set<int> inverse_descent_set(const SuperFilling& xi) {
  if (!is_standard(xi)) throw std::invalid_argument("filling is not standard");
  const auto w = reading_word(xi);
  std::vector<std::size_t> pos(w.size() + 1);
  for (std::size_t k = 0; k < w.size(); ++k) pos[static_cast<std::size_t>(w[k])] = k;
  std::set<int> d;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (pos[i + 1] < pos[i]) d.insert(static_cast<int>(i));
  return d;
}

bool is_non_attacking(const SuperFilling& s) {
  const auto cells = reading_order(s.shape());
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = a + 1; b < cells.size(); ++b)
      if (attacks(cells[a], cells[b]) && std::abs(s.at(cells[a])) == std::abs(s.at(cells[b]))) return false;
  return true;
}

std::vector<Letter> reading_word(const SuperFilling& s) {
  std::vector<Letter> w;
  for (const Cell& u : reading_order(s.shape())) w.push_back(s.at(u));
  return w;
}

std::vector<int> cocharge_word(const SuperFilling& s) {
  const auto cells = reading_order(s.shape());
  std::vector<std::size_t> idx(cells.size());
  std::iota(idx.begin(), idx.end(), 0);
  for (const Cell& u : cells)
    if (s.at(u) < 0) throw std::invalid_argument("cocharge word needs a positive filling");
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const Letter x = s.at(cells[a]), y = s.at(cells[b]);
    return x != y ? x > y : a > b;
  });
  std::vector<int> out;
  for (std::size_t k : idx) out.push_back(cells[k].row);
  return out;
}

SuperFilling parse_filling(std::string_view text) {
  std::vector<std::vector<Letter>> top_down;
  std::string row;
  auto flush = [&] {
    std::istringstream in(row);
    std::vector<Letter> r;
    std::string tok;
    while (in >> tok) {
      const bool neg = tok.back() == '~';
      if (neg) tok.pop_back();
      int v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size() || v <= 0)
        throw std::invalid_argument("bad filling entry: " + tok);
      r.push_back(neg ? -v : v);
    }
    if (!r.empty()) top_down.push_back(std::move(r));
    row.clear();
  };
  for (char c : text) {
    if (c == '/' || c == '\n') flush();
    else row += c;
  }
  flush();
  std::vector<std::vector<Letter>> rows(top_down.rbegin(), top_down.rend());
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return SuperFilling(Partition(parts), std::move(rows));
}

std::string format_filling(const SuperFilling& s) {
  std::string out;
  for (auto it = s.rows().rbegin(); it != s.rows().rend(); ++it) {
    if (!out.empty()) out += " / ";
    for (std::size_t j = 0; j < it->size(); ++j) {
      const Letter x = (*it)[j];
      out += (j ? " " : "") + std::to_string(std::abs(x)) + (x < 0 ? "~" : "");
    }
  }
  return out;
}

}  // namespace macfill
