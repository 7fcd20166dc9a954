#include "macfill/llt.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "macfill/macdonald.hpp"

namespace macfill {

Letter TupleTableau::at(std::size_t component, const Cell& u) const {
  const auto& cells = shape.shapes.at(component).cells();
  auto it = std::lower_bound(cells.begin(), cells.end(), u);
  if (it == cells.end() || *it != u) throw std::out_of_range("cell not in tuple component");
  return entries.at(component).at(static_cast<std::size_t>(it - cells.begin()));
}

std::vector<TupleCell> content_reading_order(const SkewTuple& nu) {
  std::vector<TupleCell> out;
  for (std::size_t j = 0; j < nu.shapes.size(); ++j)
    for (const Cell& u : nu.shapes[j].cells()) out.push_back({j, u});
  std::sort(out.begin(), out.end(), [&](const TupleCell& a, const TupleCell& b) {
    const int ba = nu.scaled_beta(static_cast<int>(a.component) + 1, a.cell);
    const int bb = nu.scaled_beta(static_cast<int>(b.component) + 1, b.cell);
    return ba != bb ? ba < bb : a.cell.row < b.cell.row;
  });
  return out;
}

namespace {

enum class Relation { Row, Column };

struct Constraint {
  std::size_t lower;  // position of the left (Row) or bottom (Column) cell
  std::size_t upper;  // position of the right or top cell
  Relation rel;
};

// Content-order layout of a tuple with every check attached to the later of
// the two positions involved.
struct Layout {
  std::vector<TupleCell> order;
  std::vector<std::vector<std::size_t>> beta_earlier;  // a < p with 0 < beta(p) - beta(a) < 1
  std::vector<std::vector<Constraint>> checks;

  explicit Layout(const SkewTuple& nu) : order(content_reading_order(nu)) {
    const std::size_t n = order.size();
    beta_earlier.resize(n);
    checks.resize(n);
    std::map<TupleCell, std::size_t> pos;
    for (std::size_t p = 0; p < n; ++p) pos[order[p]] = p;
    const int k = nu.k();
    for (std::size_t p = 0; p < n; ++p) {
      const int bp = nu.scaled_beta(static_cast<int>(order[p].component) + 1, order[p].cell);
      for (std::size_t a = 0; a < p; ++a) {
        const int d = bp - nu.scaled_beta(static_cast<int>(order[a].component) + 1, order[a].cell);
        if (d > 0 && d < k) beta_earlier[p].push_back(a);
      }
      const auto& [j, u] = order[p];
      auto link = [&](Cell lo, Cell hi, Relation rel) {
        auto a = pos.find({j, lo});
        auto b = pos.find({j, hi});
        if (a == pos.end() || b == pos.end()) return;
        checks[std::max(a->second, b->second)].push_back({a->second, b->second, rel});
      };
      link({u.row, u.col - 1}, u, Relation::Row);
      link({u.row - 1, u.col}, u, Relation::Column);
    }
  }
};

bool constraint_ok(Letter lo, Letter hi, Relation rel, AlphabetOrder ord) {
  if (lo == hi) return rel == Relation::Row ? lo > 0 : lo < 0;
  return letter_less(lo, hi, ord);
}

// Depth-first walk over all super tableaux; f receives the letters in
// content reading order and the inversion count.
template <class F>
void walk(const Layout& L, const std::vector<Letter>& letters, AlphabetOrder ord, F&& f) {
  const std::size_t n = L.order.size();
  std::vector<Letter> placed(n);
  auto rec = [&](auto&& self, std::size_t p, int inv) -> void {
    if (p == n) {
      f(placed, inv);
      return;
    }
    for (Letter x : letters) {
      placed[p] = x;
      bool ok = true;
      for (const Constraint& c : L.checks[p])
        if (!constraint_ok(placed[c.lower], placed[c.upper], c.rel, ord)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      int add = 0;
      for (std::size_t a : L.beta_earlier[p]) add += indicator_I(placed[a], x, ord);
      self(self, p + 1, inv + add);
    }
  };
  rec(rec, 0, 0);
}

std::vector<Letter> alphabet(int nx, int ny) {
  std::vector<Letter> out;
  for (int i = 1; i <= nx; ++i) out.push_back(i);
  for (int i = 1; i <= ny; ++i) out.push_back(-i);
  return out;
}

TupleTableau assemble(const SkewTuple& nu, const Layout& L, const std::vector<Letter>& placed) {
  TupleTableau T{nu, {}};
  for (const auto& sh : nu.shapes) T.entries.emplace_back(sh.cells().size(), 1);
  for (std::size_t p = 0; p < placed.size(); ++p) {
    const auto& [j, u] = L.order[p];
    const auto& cells = nu.shapes[j].cells();
    const auto idx = static_cast<std::size_t>(std::lower_bound(cells.begin(), cells.end(), u) - cells.begin());
    T.entries[j][idx] = placed[p];
  }
  return T;
}

std::vector<Letter> in_content_order(const TupleTableau& T, const Layout& L) {
  std::vector<Letter> out;
  for (const auto& [j, u] : L.order) out.push_back(T.at(j, u));
  return out;
}

XPolynomial negate(const XPolynomial& f) {
  return f.map_coeffs([](const LaurentQT& c) { return -c; });
}

}  // namespace

bool is_super_semistandard(const TupleTableau& T, AlphabetOrder ord) {
  if (T.entries.size() != T.shape.shapes.size()) return false;
  for (std::size_t j = 0; j < T.entries.size(); ++j)
    if (T.entries[j].size() != T.shape.shapes[j].cells().size()) return false;
  const Layout L(T.shape);
  const auto w = in_content_order(T, L);
  for (const auto& cs : L.checks)
    for (const Constraint& c : cs)
      if (w[c.lower] == 0 || !constraint_ok(w[c.lower], w[c.upper], c.rel, ord)) return false;
  return true;
}

int llt_inv(const TupleTableau& T, AlphabetOrder ord) {
  if (!is_super_semistandard(T, ord)) throw std::invalid_argument("tableau is not semistandard");
  const Layout L(T.shape);
  const auto w = in_content_order(T, L);
  int inv = 0;
  for (std::size_t p = 0; p < w.size(); ++p)
    for (std::size_t a : L.beta_earlier[p]) inv += indicator_I(w[a], w[p], ord);
  return inv;
}

int llt_inv_classic(const TupleTableau& T) {
  if (!is_super_semistandard(T)) throw std::invalid_argument("tableau is not semistandard");
  int inv = 0;
  const auto& sh = T.shape.shapes;
  for (std::size_t i = 0; i < sh.size(); ++i)
    for (const Cell& u : sh[i].cells())
      for (std::size_t j = 0; j < sh.size(); ++j)
        for (const Cell& v : sh[j].cells()) {
          const Letter a = T.at(i, u), b = T.at(j, v);
          if (a < 0 || b < 0) throw std::invalid_argument("classic inversions need positive entries");
          if (a <= b) continue;
          if ((i < j && u.content() == v.content()) || (i > j && u.content() == v.content() + 1)) ++inv;
        }
  return inv;
}

void for_each_tuple_tableau(const SkewTuple& nu, int nx, int ny, AlphabetOrder ord,
                            const std::function<void(const TupleTableau&)>& f) {
  const Layout L(nu);
  walk(L, alphabet(nx, ny), ord, [&](const std::vector<Letter>& placed, int) { f(assemble(nu, L, placed)); });
}

XPolynomial G_super(const SkewTuple& nu, AlphabetOrder ord, int nx, int ny) {
  const Layout L(nu);
  std::map<std::pair<Exponents, int>, long> acc;
  Exponents e(static_cast<std::size_t>(nx + ny));
  walk(L, alphabet(nx, ny), ord, [&](const std::vector<Letter>& placed, int inv) {
    std::fill(e.begin(), e.end(), 0);
    for (Letter x : placed) ++e[static_cast<std::size_t>(x > 0 ? x - 1 : nx - x - 1)];
    ++acc[{e, inv}];
  });
  XPolynomial f(nx, ny);
  for (const auto& [key, count] : acc) f.add(key.first, LaurentQT::monomial(key.second, 0, BigInt(count)));
  return f;
}

XPolynomial G_nu(const SkewTuple& nu, int N) { return G_super(nu, AlphabetOrder::First, N, 0); }

TupleTableau standardize_tableau(const TupleTableau& T, AlphabetOrder ord) {
  const Layout L(T.shape);
  const auto w = in_content_order(T, L);
  std::vector<std::size_t> idx(w.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (w[a] != w[b]) return letter_less(w[a], w[b], ord);
    return w[a] > 0 ? a < b : a > b;
  });
  std::vector<Letter> s(w.size());
  for (std::size_t k = 0; k < idx.size(); ++k) s[idx[k]] = static_cast<Letter>(k + 1);
  return assemble(T.shape, L, s);
}

std::set<int> standard_descent_set(const TupleTableau& S) {
  const Layout L(S.shape);
  const auto w = in_content_order(S, L);
  std::vector<std::size_t> pos(w.size() + 1, 0);
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p] < 1 || static_cast<std::size_t>(w[p]) > w.size()) throw std::invalid_argument("tableau is not standard");
    pos[static_cast<std::size_t>(w[p])] = p;
  }
  std::set<int> d;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (pos[i + 1] < pos[i]) d.insert(static_cast<int>(i));
  return d;
}

XPolynomial G_super_by_Q(const SkewTuple& nu, AlphabetOrder ord, int nx, int ny) {
  const int n = nu.total_size();
  std::map<std::pair<std::set<int>, int>, long> census;
  for_each_tuple_tableau(nu, n, 0, AlphabetOrder::First, [&](const TupleTableau& S) {
    std::vector<Letter> all;
    for (const auto& e : S.entries) all.insert(all.end(), e.begin(), e.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i] != static_cast<Letter>(i + 1)) return;
    ++census[{standard_descent_set(S), llt_inv(S)}];
  });
  XPolynomial f(nx, ny);
  for (const auto& [key, count] : census) {
    const LaurentQT w = LaurentQT::monomial(key.second, 0, BigInt(count));
    f += qsym_Qtilde({n, key.first}, ord, nx, ny).map_coeffs([&](const LaurentQT& c) { return c * w; });
  }
  return f;
}

TupleTableau theta(const SuperFilling& sigma) {
  const Partition& mu = sigma.shape();
  const SkewTuple nu = nu_of_mu(mu, des_set(sigma));
  TupleTableau T{nu, {}};
  for (std::size_t j = 0; j < nu.shapes.size(); ++j) {
    std::vector<Letter> col;
    for (const Cell& u : nu.shapes[j].cells()) col.push_back(sigma.at({u.content(), static_cast<int>(j) + 1}));
    T.entries.push_back(std::move(col));
  }
  return T;
}

bool check_ribbon_correspondence(const Partition& mu, const std::set<Cell>& D, int N) {
  return F_mu_D(mu, D, N) == G_nu(nu_of_mu(mu, D), N);
}

int beta_pair_count(const SkewTuple& nu) {
  const Layout L(nu);
  int m = 0;
  for (const auto& v : L.beta_earlier) m += static_cast<int>(v.size());
  return m;
}

bool check_transpose_identity(const SkewTuple& nu, int N) {
  const XPolynomial lhs = G_nu(transpose_tuple(nu), N);
  const int m = beta_pair_count(nu);
  const XPolynomial rhs = G_super(nu, AlphabetOrder::First, 0, N);
  XPolynomial moved(N);
  for (const auto& [e, c] : rhs.terms()) moved.add(e, invert_q(c).shifted(m, 0));
  return lhs == moved;
}

bool check_transpose_omega(const SkewTuple& nu) {
  const int n = nu.total_size();
  const int m = beta_pair_count(nu);
  const SchurVector lhs = to_schur(G_nu(transpose_tuple(nu), n));
  const SchurVector rhs =
      omega_schur(to_schur(G_nu(nu, n))).map_coeffs([m](const LaurentQT& c) { return invert_q(c).shifted(m, 0); });
  return lhs == rhs;
}

XPolynomial g_beta(const std::vector<Rational>& betas) {
  const std::size_t n = betas.size();
  for (std::size_t i = 1; i < n; ++i)
    if (!(betas[i - 1] < betas[i])) throw std::invalid_argument("beta sequence must be strictly increasing");
  if (n > 30) throw std::invalid_argument("beta sequence too long");
  XPolynomial f(2);
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    // bit i set means w_{i+1} = 2
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if ((w >> j & 1) && !(w >> i & 1) && betas[j] - betas[i] < 1) ++inv;
    const int twos = __builtin_popcountll(w);
    f.add({static_cast<int>(n) - twos, twos}, LaurentQT::q(inv));
  }
  return f;
}

BetaStep beta_step(const std::vector<Rational>& betas) {
  const std::size_t n = betas.size();
  if (n == 0) throw std::invalid_argument("empty beta sequence");
  BetaStep s;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (betas[n - 1] - betas[i] < 1) ++s.r;
  if (s.r == 0) return s;
  const std::size_t r = static_cast<std::size_t>(s.r);
  // 1-based beta_{n-r} and beta_{n-r+1} are 0-based n-r-1 and n-r.
  s.alpha = betas;
  s.alpha[n - 1] = (betas[n - r - 1] + betas[n - r]) / 2 + 1;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (i != n - r - 1) s.gamma.push_back(betas[i]);
  return s;
}

bool check_beta_recursion(const std::vector<Rational>& betas) {
  const BetaStep s = beta_step(betas);
  const XPolynomial gb = g_beta(betas);
  XPolynomial x1x2(2);
  x1x2.add({1, 1}, LaurentQT(1));
  if (s.r == 0) {
    XPolynomial x1px2(2);
    x1px2.add({1, 0}, LaurentQT(1));
    x1px2.add({0, 1}, LaurentQT(1));
    return gb == x1px2 * g_beta(std::vector<Rational>(betas.begin(), betas.end() - 1));
  }
  for (std::size_t i = 1; i < s.alpha.size(); ++i)
    if (!(s.alpha[i - 1] < s.alpha[i])) return false;
  if (beta_step(s.alpha).r != s.r - 1) return false;
  const XPolynomial lhs = gb + negate(g_beta(s.alpha));
  const LaurentQT coeff = LaurentQT::q(s.r) - LaurentQT::q(s.r - 1);
  const XPolynomial rhs = (x1x2 * g_beta(s.gamma)).map_coeffs([&](const LaurentQT& c) { return c * coeff; });
  return lhs == rhs;
}

bool check_two_cell_column_reduction(const SkewTuple& nu) {
  SkewTuple rho;
  int m = 0;
  for (const auto& sh : nu.shapes) {
    std::map<int, std::vector<Cell>> cols;
    for (const Cell& u : sh.cells()) cols[u.col].push_back(u);
    std::vector<Cell> keep;
    for (const auto& [c, cells] : cols) {
      if (cells.size() > 2) throw std::invalid_argument("column with more than two cells");
      if (cells.size() == 2) ++m;
      else keep.push_back(cells.front());
    }
    rho.shapes.push_back(keep.empty() ? SkewShape{} : SkewShape::from_cells(keep));
  }
  const XPolynomial gn = G_nu(nu, 2);
  XPolynomial mono(2);
  mono.add({m, m}, LaurentQT(1));
  const XPolynomial p = mono * G_nu(rho, 2);
  if (p.is_zero() || gn.is_zero()) return p.is_zero() && gn.is_zero();
  const auto& [e0, c0] = *p.terms().begin();
  const int h = gn.coeff(e0).min_q_exponent() - c0.min_q_exponent();
  return gn == p.map_coeffs([h](const LaurentQT& c) { return c.shifted(h, 0); });
}

}  // namespace macfill
