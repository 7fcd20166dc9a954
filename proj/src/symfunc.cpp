#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "macfill/xpoly.hpp"

namespace macfill {

namespace {

std::mutex kostka_mutex;
std::map<std::pair<Partition, std::vector<int>>, long long> kostka_memo;

// Fillings of lambda with letters 1..k of content rho[0..k): peel the
// horizontal strip of k's off the outside and recurse.
long long kostka_rec(const Partition& lambda, const std::vector<int>& rho, std::size_t k) {
  if (k == 0) return lambda.empty() ? 1 : 0;
  std::vector<int> key_rho(rho.begin(), rho.begin() + static_cast<long>(k));
  {
    std::lock_guard lock(kostka_mutex);
    auto it = kostka_memo.find({lambda, key_rho});
    if (it != kostka_memo.end()) return it->second;
  }
  const int strip = rho[k - 1];
  const int len = lambda.length();
  std::vector<int> mu(static_cast<std::size_t>(len));
  long long total = 0;
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i > len) {
      if (left == 0) total += kostka_rec(Partition(mu), rho, k - 1);
      return;
    }
    const int hi = lambda.row_length(i);
    const int lo = lambda.row_length(i + 1);
    for (int m = hi; m >= lo; --m) {
      if (hi - m > left) break;
      mu[static_cast<std::size_t>(i - 1)] = m;
      self(self, i + 1, left - (hi - m));
    }
  };
  rec(rec, 1, strip);
  std::lock_guard lock(kostka_mutex);
  kostka_memo.emplace(std::make_pair(lambda, std::move(key_rho)), total);
  return total;
}

std::string parenthesize(const LaurentQT& c, bool& negative) {
  negative = false;
  if (c.term_count() == 1) {
    const auto& [k, v] = *c.terms().begin();
    if (v < 0) {
      negative = true;
      return (-c).to_string();
    }
    return c.to_string();
  }
  return "(" + c.to_string() + ")";
}

template <class Map, class KeyFmt>
std::string render_sum(const Map& entries, KeyFmt&& fmt) {
  std::string s;
  bool first = true;
  for (const auto& [key, c] : entries) {
    bool neg = false;
    std::string coeff = parenthesize(c, neg);
    std::string base = fmt(key);
    std::string term;
    if (coeff == "1") term = base.empty() ? "1" : base;
    else term = base.empty() ? coeff : coeff + "*" + base;
    if (first) s = (neg ? "-" : "") + term;
    else s += (neg ? " - " : " + ") + term;
    first = false;
  }
  return first ? "0" : s;
}

std::string bracket(const char* name, const Partition& p) { return std::string(name) + "[" + p.to_string() + "]"; }

}  // namespace

long long kostka(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) throw std::invalid_argument("kostka needs equal sizes");
  return kostka_rec(lambda, rho.parts(), rho.parts().size());
}

XPolynomial schur_in_x(const Partition& lambda, int nvars) {
  if (nvars < 1) throw std::invalid_argument("need at least one variable");
  XPolynomial f(nvars);
  // Fill row by row (bottom first) with weakly increasing rows and strictly
  // increasing columns going up.
  const auto cells = lambda.cells();
  std::map<Cell, int> t;
  Exponents e(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      f.add(e, LaurentQT(1));
      return;
    }
    const Cell u = cells[idx];
    int lo = 1;
    if (u.col > 1) lo = std::max(lo, t[{u.row, u.col - 1}]);
    if (u.row > 1) lo = std::max(lo, t[{u.row - 1, u.col}] + 1);
    for (int a = lo; a <= nvars; ++a) {
      t[u] = a;
      ++e[static_cast<std::size_t>(a - 1)];
      self(self, idx + 1);
      --e[static_cast<std::size_t>(a - 1)];
    }
  };
  rec(rec, 0);
  return f;
}

XPolynomial monomial_symmetric(const Partition& rho, int nvars) {
  XPolynomial f(nvars);
  if (rho.length() > nvars) return f;
  Exponents e = partition_exponents(rho, nvars);
  std::sort(e.begin(), e.end());
  do f.add(e, LaurentQT(1));
  while (std::next_permutation(e.begin(), e.end()));
  return f;
}

XPolynomial qsym_Q(const QSymLabel& label, int nvars) {
  for (int d : label.descents)
    if (d < 1 || d >= label.n) throw std::invalid_argument("descent out of range");
  XPolynomial f(nvars);
  Exponents e(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int i, int prev) -> void {
    if (i > label.n) {
      f.add(e, LaurentQT(1));
      return;
    }
    // a_{i-1} = a_i is allowed only when i-1 is not a descent.
    const int lo = i == 1 ? 1 : (label.descents.count(i - 1) ? prev + 1 : prev);
    for (int a = lo; a <= nvars; ++a) {
      ++e[static_cast<std::size_t>(a - 1)];
      self(self, i + 1, a);
      --e[static_cast<std::size_t>(a - 1)];
    }
  };
  rec(rec, 1, 1);
  return f;
}

XPolynomial qsym_Qtilde(const QSymLabel& label, AlphabetOrder order, int nx, int ny) {
  for (int d : label.descents)
    if (d < 1 || d >= label.n) throw std::invalid_argument("descent out of range");
  std::vector<Letter> letters;
  for (int i = 1; i <= nx; ++i) letters.push_back(i);
  for (int i = 1; i <= ny; ++i) letters.push_back(-i);
  std::sort(letters.begin(), letters.end(), [&](Letter a, Letter b) { return letter_less(a, b, order); });
  auto var = [&](Letter a) { return static_cast<std::size_t>(a > 0 ? a - 1 : nx - a - 1); };
  XPolynomial f(nx, ny);
  Exponents e(static_cast<std::size_t>(nx + ny), 0);
  auto rec = [&](auto&& self, int i, std::size_t prev) -> void {
    if (i > label.n) {
      f.add(e, LaurentQT(1));
      return;
    }
    for (std::size_t k = i == 1 ? 0 : prev; k < letters.size(); ++k) {
      const Letter a = letters[k];
      if (i > 1 && k == prev) {
        const bool des = label.descents.count(i - 1) > 0;
        if (a > 0 && des) continue;
        if (a < 0 && !des) continue;
      }
      ++e[var(a)];
      self(self, i + 1, k);
      --e[var(a)];
    }
  };
  rec(rec, 1, 0);
  return f;
}

std::string render_x(const XPolynomial& f) {
  std::vector<std::pair<Exponents, LaurentQT>> rev(f.terms().rbegin(), f.terms().rend());
  return render_sum(rev, [&](const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const bool is_x = static_cast<int>(i) < f.nx();
      std::string v = (is_x ? "x" : "y") + std::to_string(is_x ? i + 1 : i + 1 - static_cast<std::size_t>(f.nx()));
      if (e[i] > 1) v += "^" + std::to_string(e[i]);
      s += (s.empty() ? "" : "*") + v;
    }
    return s;
  });
}

std::string render_m(const MBasisVector& v) {
  return render_sum(v.entries(), [](const Partition& p) { return bracket("m", p); });
}

std::string render_schur(const SchurVector& v) {
  return render_sum(v.entries(), [](const Partition& p) { return bracket("s", p); });
}

}  // namespace macfill
