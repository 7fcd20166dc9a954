#include "macfill/special.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

#include "macfill/enumerate.hpp"
#include "macfill/macdonald.hpp"

namespace macfill {

Word parse_word(std::string_view text) {
  Word w;
  auto bad = [&] { return std::invalid_argument("bad word: " + std::string(text)); };
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c == ' ') continue;
      if (c < '1' || c > '9') throw bad();
      w.push_back(c - '0');
    }
    return w;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    std::string_view tok = text.substr(start, end - start);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || v <= 0) throw bad();
    w.push_back(v);
    start = end + 1;
  }
  return w;
}

std::string format_word(const Word& w) {
  const bool digits = std::all_of(w.begin(), w.end(), [](int x) { return x >= 1 && x <= 9; });
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!digits && k) s += ',';
    s += std::to_string(w[k]);
  }
  return s;
}

bool is_partition_content(const Word& w) {
  std::vector<int> count;
  for (int x : w) {
    if (x < 1) return false;
    if (static_cast<std::size_t>(x) > count.size()) count.resize(static_cast<std::size_t>(x), 0);
    ++count[static_cast<std::size_t>(x - 1)];
  }
  for (std::size_t i = 0; i < count.size(); ++i)
    if (count[i] == 0 || (i > 0 && count[i] > count[i - 1])) return false;
  return true;
}

int cocharge(const Word& w) {
  if (!is_partition_content(w)) throw std::invalid_argument("word lacks partition content: " + format_word(w));
  const int n = static_cast<int>(w.size());
  if (n == 0) return 0;
  const int l = *std::max_element(w.begin(), w.end());
  if (l == n) {
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(w[static_cast<std::size_t>(k)])] = k;
    int c = 0;
    for (int i = 1; i < n; ++i)
      if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(i) + 1]) c += n - i;
    return c;
  }
  std::vector<bool> chosen(w.size(), false);
  long prev = static_cast<long>(w.size());
  for (int i = 1; i <= l; ++i) {
    long k = -1;
    for (long j = prev - 1; j >= 0; --j)
      if (w[static_cast<std::size_t>(j)] == i) {
        k = j;
        break;
      }
    if (k < 0)
      for (long j = n - 1; j >= 0; --j)
        if (w[static_cast<std::size_t>(j)] == i) {
          k = j;
          break;
        }
    chosen[static_cast<std::size_t>(k)] = true;
    prev = k;
  }
  Word y, z;
  for (std::size_t k = 0; k < w.size(); ++k) (chosen[k] ? y : z).push_back(w[k]);
  return cocharge(y) + cocharge(z);
}

SuperFilling unique_inv_zero_filling(const Partition& mu, const std::vector<std::vector<int>>& rows) {
  if (static_cast<int>(rows.size()) != mu.length()) throw std::invalid_argument("one multiset per row required");
  SuperFilling s = SuperFilling::constant(mu, 1);
  for (int i = 1; i <= mu.length(); ++i) {
    const auto& m = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(m.size()) != mu.row_length(i)) throw std::invalid_argument("multiset size differs from row length");
    std::multiset<int> unused(m.begin(), m.end());
    for (int j = 1; j <= mu.row_length(i); ++j) {
      auto it = unused.begin();
      if (i > 1) {
        auto above = unused.upper_bound(s.at({i - 1, j}));
        if (above != unused.end()) it = above;
      }
      if (*it <= 0) throw std::invalid_argument("entries must be positive");
      s.set({i, j}, *it);
      unused.erase(it);
    }
  }
  return s;
}

std::vector<Tableau> ssyt_with_content(const Partition& lambda, const std::vector<int>& content) {
  std::vector<Tableau> out;
  int total = 0;
  for (int c : content) total += c;
  if (total != lambda.size()) return out;
  const int len = lambda.length();
  Tableau T(static_cast<std::size_t>(len));
  // Letter by letter, each letter filling a horizontal strip.
  auto place = [&](auto&& self, std::size_t letter) -> void {
    if (letter == content.size()) {
      out.push_back(T);
      return;
    }
    const int x = static_cast<int>(letter) + 1;
    auto strip = [&](auto&& srow, int row, int left) -> void {
      if (row > len) {
        if (left == 0) self(self, letter + 1);
        return;
      }
      auto& r = T[static_cast<std::size_t>(row - 1)];
      const int cur = static_cast<int>(r.size());
      int cap = lambda.row_length(row);
      if (row > 1) {
        // Cells added to this row must sit above cells holding smaller letters.
        const auto& below = T[static_cast<std::size_t>(row - 2)];
        int ok = 0;
        while (ok < static_cast<int>(below.size()) && below[static_cast<std::size_t>(ok)] < x) ++ok;
        cap = std::min(cap, ok);
      }
      for (int add = std::min(left, std::max(0, cap - cur)); add >= 0; --add) {
        r.insert(r.end(), static_cast<std::size_t>(add), x);
        srow(srow, row + 1, left - add);
        r.resize(static_cast<std::size_t>(cur));
      }
    };
    strip(strip, 1, content[letter]);
  };
  place(place, 0);
  return out;
}

Word tableau_reading_word(const Tableau& T) {
  Word w;
  for (auto it = T.rbegin(); it != T.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

SchurVector hall_littlewood_from_kostka(const Partition& mu, int guard) {
  return H_tilde(mu, guard).schur_vec.map_coeffs([](const LaurentQT& c) {
    LaurentQT r;
    for (const auto& [k, v] : c.terms())
      if (k.first == 0) r.add_term(0, k.second, v);
    return r;
  });
}

SchurVector hall_littlewood_schur(const Partition& mu) {
  SchurVector v;
  for (const Partition& lambda : partitions_of(mu.size())) {
    LaurentQT c;
    for (const Tableau& T : ssyt_with_content(lambda, mu.parts())) c += LaurentQT::t(cocharge(tableau_reading_word(T)));
    v.add(lambda, c);
  }
  return v;
}

namespace {

Exponents letter_exponents(const SuperFilling& s, int N) {
  Exponents e(static_cast<std::size_t>(N), 0);
  for (Letter x : reading_word(s)) ++e[static_cast<std::size_t>(std::abs(x) - 1)];
  return e;
}

bool equal_south(const SuperFilling& s, const Cell& u) {
  return u.row > 1 && std::abs(s.at(u)) == std::abs(s.at({u.row - 1, u.col}));
}

}  // namespace

XPolynomial j_integral(const Partition& mu, int N) {
  const Partition mc = conjugate(mu);
  const int nm = n_stat(mu);
  XPolynomial f(N);
  for_each_super_filling(mc, N, 0, [&](const SuperFilling& tau) {
    if (!is_non_attacking(tau)) return;
    LaurentQT w = LaurentQT::monomial(maj(tau), nm - inv(tau));
    for (const Cell& u : mc.cells()) {
      if (equal_south(tau, u)) w *= LaurentQT(1) - LaurentQT::monomial(leg(mc, u) + 1, arm(mc, u) + 1);
      else w *= LaurentQT(1) - LaurentQT::t();
    }
    f.add(letter_exponents(tau, N), w);
  });
  return f;
}

XPolynomial j_from_h(const Partition& mu, int N, int workers) {
  const int nm = n_stat(mu);
  // Negative letters carry -t x_|a|; the maj weight uses 1/t.
  EnumerationSpec spec{mu, N, N, AlphabetOrder::First, MonomialMode::Absolute, workers};
  XPolynomial f = enumerate_fillings(spec, [nm](const LeafStats& s) {
    return LeafWeight{true, s.inv(), nm - s.maj + s.negatives, s.negatives % 2 ? -1 : 1};
  });
  for (const auto& [e, c] : f.terms())
    if (c.has_negative_exponent()) throw std::logic_error("negative exponent left in J_mu for mu = " + mu.to_string());
  return f;
}

AlphaXPolynomial knop_sahi_x(const Partition& mu, int N) {
  const Partition mc = conjugate(mu);
  AlphaXPolynomial f(N);
  for_each_super_filling(mc, N, 0, [&](const SuperFilling& tau) {
    if (!is_non_attacking(tau)) return;
    AlphaPoly w(1);
    for (const Cell& u : mc.cells())
      if (equal_south(tau, u)) w *= AlphaPoly::alpha() * AlphaPoly(leg(mc, u) + 1) + AlphaPoly(arm(mc, u) + 1);
    f.add(letter_exponents(tau, N), w);
  });
  return f;
}

JackPolynomial knop_sahi(const Partition& mu, int N) { return to_m_basis(knop_sahi_x(mu, N)); }

namespace {

AlphaPoly constant_of(const BigInt& v) {
  AlphaPoly r;
  r.add_term(0, v);
  return r;
}

}  // namespace

AlphaXPolynomial jack_limit_oracle(const Partition& mu, int N, int alpha) {
  if (alpha < 1) throw std::invalid_argument("alpha must be a positive integer");
  AlphaXPolynomial out(N);
  const XPolynomial j = j_integral(mu, N);
  for (const auto& [e, c] : j.terms()) {
    const LaurentQT sub = qt_substitute_q_power_of_t(c, alpha);
    out.add(e, constant_of(eval_t1(divide_by_power_of_one_minus_t(sub, mu.size()))));
  }
  return out;
}

AlphaXPolynomial knop_sahi_at(const Partition& mu, int N, int alpha) {
  AlphaXPolynomial out(N);
  const AlphaXPolynomial k = knop_sahi_x(mu, N);
  for (const auto& [e, c] : k.terms()) out.add(e, constant_of(c.evaluate(alpha)));
  return out;
}

std::string render_jack(const JackPolynomial& v) {
  std::string s;
  for (const auto& [p, c] : v.entries()) {
    std::string coeff = c.to_string();
    if (c.terms().size() > 1) coeff = "(" + coeff + ")";
    const std::string base = "m[" + p.to_string() + "]";
    if (!s.empty()) s += " + ";
    s += coeff == "1" ? base : coeff + "*" + base;
  }
  return s.empty() ? "0" : s;
}

int ainv(const SuperFilling& s) {
  const auto ord = AlphabetOrder::First;
  int r = row1_inversions(s, ord);
  for (const Triple& tr : triples(s.shape())) {
    const int a = std::abs(s.at(tr.upper)), b = std::abs(s.at(tr.below)), c = std::abs(s.at(tr.right));
    if (a == b || b == c || a == c) continue;
    const Letter x = s.at(tr.upper), y = s.at(tr.below), z = s.at(tr.right);
    if (indicator_I(x, z, ord) + indicator_I(z, y, ord) - indicator_I(x, y, ord) == 1) ++r;
  }
  return r;
}

int amaj(const SuperFilling& s) {
  int r = 0;
  for (const Cell& u : des_set(s, AlphabetOrder::First))
    if (std::abs(s.at(u)) > std::abs(s.at({u.row - 1, u.col}))) r += leg(s.shape(), u) + 1;
  return r;
}

bool check_tau_terms(const Partition& mu, int bound) {
  const Partition mc = conjugate(mu);
  const auto cells = reading_order(mc);
  const auto ord = AlphabetOrder::First;
  bool ok = true;
  for_each_super_filling(mc, bound, 0, [&](const SuperFilling& tau) {
    if (!ok || !is_non_attacking(tau)) return;
    int arms = 0;
    LaurentQT expected = LaurentQT::monomial(maj(tau, ord), -ainv(tau));
    for (const Cell& u : mc.cells()) {
      if (equal_south(tau, u)) {
        arms += arm(mc, u);
        expected *= LaurentQT::t(-arm(mc, u) - 1) - LaurentQT::q(leg(mc, u) + 1);
      } else {
        expected *= LaurentQT::t(-1) - LaurentQT(1);
      }
    }
    if (inv(tau, ord) != ainv(tau) + arms) ok = false;
    LaurentQT sum;
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << cells.size()); ++signs) {
      SuperFilling s = tau;
      for (std::size_t k = 0; k < cells.size(); ++k)
        if (signs >> k & 1) s.set(cells[k], -tau.at(cells[k]));
      if (ainv(s) != ainv(tau)) ok = false;
      const int m = s.negatives();
      sum += LaurentQT::monomial(maj(s, ord), -s.positives() - inv(s, ord), m % 2 ? -1 : 1);
    }
    if (!(sum == expected)) ok = false;
  });
  return ok;
}

}  // namespace macfill
