#include "macfill/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <stdexcept>

namespace macfill {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= row_length(i); ++j) out.push_back({i, j});
  return out;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return {};
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    auto tok = trim(text.substr(pos, next - pos));
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad partition text: " + std::string(text));
    parts.push_back(v);
    pos = next + 1;
  }
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& mu) {
  std::vector<int> out;
  if (mu.empty()) return {};
  for (int j = 1; j <= mu.row_length(1); ++j) {
    int c = 0;
    while (mu.row_length(c + 1) >= j) ++c;
    out.push_back(c);
  }
  return Partition(std::move(out));
}

int arm(const Partition& mu, const Cell& u) {
  if (!mu.contains(u)) throw std::out_of_range("cell outside diagram");
  return mu.row_length(u.row) - u.col;
}

int leg(const Partition& mu, const Cell& u) {
  if (!mu.contains(u)) throw std::out_of_range("cell outside diagram");
  int i = u.row;
  while (mu.row_length(i + 1) >= u.col) ++i;
  return i - u.row;
}

std::vector<Cell> reading_order(const Partition& mu) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(mu.size()));
  for (int i = mu.length(); i >= 1; --i)
    for (int j = 1; j <= mu.row_length(i); ++j) out.push_back({i, j});
  return out;
}

bool attacks(const Cell& u, const Cell& v) {
  if (u == v) return false;
  if (u.row == v.row) return true;
  const Cell& upper = u.row > v.row ? u : v;
  const Cell& lower = u.row > v.row ? v : u;
  return upper.row == lower.row + 1 && lower.col < upper.col;
}

std::vector<Triple> triples(const Partition& mu) {
  std::vector<Triple> out;
  for (int i = 2; i <= mu.length(); ++i)
    for (int j = 1; j <= mu.row_length(i); ++j)
      for (int k = j + 1; k <= mu.row_length(i); ++k) out.push_back({{i, j}, {i - 1, j}, {i, k}});
  return out;
}

bool dominance_leq(const Partition& mu, const Partition& nu) {
  if (mu.size() != nu.size()) throw std::invalid_argument("dominance needs equal sizes");
  int a = 0, b = 0;
  const int len = std::max(mu.length(), nu.length());
  for (int k = 1; k <= len; ++k) {
    a += mu.row_length(k);
    b += nu.row_length(k);
    if (a > b) return false;
  }
  return true;
}

int n_stat(const Partition& mu) {
  int s = 0;
  for (int i = 1; i <= mu.length(); ++i) s += (i - 1) * mu.row_length(i);
  return s;
}

std::vector<QTExponent> b_mu(const Partition& mu) {
  std::vector<QTExponent> out;
  for (const Cell& u : mu.cells()) out.push_back({u.col - 1, u.row - 1});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Cell> descent_candidates(const Partition& mu) {
  std::vector<Cell> out;
  for (const Cell& u : mu.cells())
    if (u.row > 1) out.push_back(u);
  return out;
}

// ---------------------------------------------------------------------------

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  for (int i = 1; i <= inner_.length(); ++i)
    if (inner_.row_length(i) > outer_.row_length(i))
      throw std::invalid_argument("inner partition not contained in outer");
  for (int i = 1; i <= outer_.length(); ++i)
    for (int j = inner_.row_length(i) + 1; j <= outer_.row_length(i); ++j) cells_.push_back({i, j});
}

SkewShape SkewShape::from_cells(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  if (cells.empty()) return {};
  std::map<int, std::pair<int, int>> rows;  // row -> [first, last] column
  for (const Cell& u : cells) {
    if (u.row < 1 || u.col < 1) throw std::invalid_argument("cells must have positive coordinates");
    auto [it, fresh] = rows.try_emplace(u.row, u.col, u.col);
    if (!fresh) {
      if (u.col != it->second.second + 1) throw std::invalid_argument("skew shape rows must be contiguous");
      it->second.second = u.col;
    }
  }
  const int top = rows.rbegin()->first;
  std::vector<int> outer(static_cast<std::size_t>(top)), inner(static_cast<std::size_t>(top));
  int above = 0;  // widest outer among rows above, filled top-down
  for (int r = top; r >= 1; --r) {
    auto it = rows.find(r);
    auto idx = static_cast<std::size_t>(r - 1);
    if (it != rows.end()) {
      outer[idx] = it->second.second;
      inner[idx] = it->second.first - 1;
    } else {
      outer[idx] = inner[idx] = above;
    }
    above = std::max(above, outer[idx]);
  }
  for (std::size_t i = 1; i < outer.size(); ++i)
    if (outer[i] > outer[i - 1] || inner[i] > inner[i - 1])
      throw std::invalid_argument("cell set is not a skew shape");
  SkewShape s{Partition(outer), Partition(inner)};
  if (s.cells_ != cells) throw std::invalid_argument("cell set is not a skew shape");
  return s;
}

bool SkewShape::contains(const Cell& u) const { return std::binary_search(cells_.begin(), cells_.end(), u); }

SkewShape SkewShape::transpose() const {
  if (cells_.empty()) return {};
  return SkewShape(conjugate(outer_), conjugate(inner_));
}

bool SkewShape::is_connected() const {
  if (cells_.empty()) return true;
  std::set<Cell> seen{cells_.front()};
  std::vector<Cell> stack{cells_.front()};
  while (!stack.empty()) {
    Cell u = stack.back();
    stack.pop_back();
    for (Cell v : {Cell{u.row + 1, u.col}, Cell{u.row - 1, u.col}, Cell{u.row, u.col + 1}, Cell{u.row, u.col - 1}})
      if (contains(v) && seen.insert(v).second) stack.push_back(v);
  }
  return seen.size() == cells_.size();
}

bool SkewShape::is_ribbon() const {
  if (!is_connected()) return false;
  for (const Cell& u : cells_)
    if (contains({u.row + 1, u.col}) && contains({u.row, u.col + 1}) && contains({u.row + 1, u.col + 1}))
      return false;
  return true;
}

SkewShape ribbon_from_descents(int m, const std::set<int>& descents) {
  if (m < 0) throw std::invalid_argument("ribbon size must be nonnegative");
  for (int d : descents)
    if (d < 2 || d > m) throw std::invalid_argument("ribbon descents must lie in {2..m}");
  if (m == 0) return {};
  const int ups = static_cast<int>(descents.size());
  const int lefts = m - 1 - ups;
  Cell u{lefts + 2, lefts + 1};  // content 1, leftmost column ends at 1
  std::vector<Cell> cells{u};
  for (int c = 2; c <= m; ++c) {
    u = descents.count(c) ? Cell{u.row + 1, u.col} : Cell{u.row, u.col - 1};
    cells.push_back(u);
  }
  return SkewShape::from_cells(std::move(cells));
}

std::set<int> ribbon_descents(const SkewShape& ribbon) {
  std::set<int> out;
  for (const Cell& u : ribbon.cells())
    if (ribbon.contains({u.row - 1, u.col})) out.insert(u.content());
  return out;
}

int SkewTuple::total_size() const {
  int s = 0;
  for (const auto& sh : shapes) s += sh.size();
  return s;
}

SkewTuple nu_of_mu(const Partition& mu, const std::set<Cell>& descents) {
  for (const Cell& u : descents)
    if (!mu.contains(u) || u.row == 1) throw std::invalid_argument("descent cells must lie in mu above row 1");
  const Partition cols = conjugate(mu);
  SkewTuple out;
  for (int j = 1; j <= mu.row_length(1); ++j) {
    std::set<int> des;
    for (const Cell& u : descents)
      if (u.col == j) des.insert(u.row);
    out.shapes.push_back(ribbon_from_descents(cols.row_length(j), des));
  }
  return out;
}

SkewTuple transpose_tuple(const SkewTuple& nu) {
  SkewTuple out;
  for (auto it = nu.shapes.rbegin(); it != nu.shapes.rend(); ++it) out.shapes.push_back(it->transpose());
  return out;
}

}  // namespace macfill
