#include "macfill/macdonald.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace macfill {

void check_guard(int n, int guard, const std::string& what) {
  if (n > guard)
    throw GuardError(what + ": size " + std::to_string(n) + " exceeds guard " + std::to_string(guard) +
                     " (pass --force-guard to override)");
}

XPolynomial C_mu(const Partition& mu, int N, int workers) {
  EnumerationSpec spec{mu, N, 0, AlphabetOrder::First, MonomialMode::Signed, workers};
  return enumerate_fillings(spec, [](const LeafStats& s) { return LeafWeight{true, s.inv(), s.maj, 1}; });
}

XPolynomial C_mu_naive(const Partition& mu, int N) {
  XPolynomial f(N);
  for_each_super_filling(mu, N, 0, [&](const SuperFilling& s) {
    Exponents e(static_cast<std::size_t>(N), 0);
    for (Letter x : reading_word(s)) ++e[static_cast<std::size_t>(x - 1)];
    f.add(e, LaurentQT::monomial(inv(s), maj(s)));
  });
  return f;
}

MacdonaldResult H_tilde(const Partition& mu, int guard, int workers) {
  check_guard(mu.size(), guard, "H~_mu");
  MacdonaldResult r;
  r.mu = mu;
  r.x_poly = C_mu(mu, mu.size(), workers);
  if (!is_symmetric(r.x_poly)) throw std::logic_error("C_mu is not symmetric for mu = " + mu.to_string());
  for (const auto& [e, c] : r.x_poly.terms())
    if (c.has_negative_exponent()) throw std::logic_error("negative exponent in C_mu for mu = " + mu.to_string());
  r.m_vec = to_m_basis(r.x_poly);
  r.schur_vec = m_to_schur(r.m_vec);
  return r;
}

XPolynomial C_super(const Partition& mu, int nx, int ny, AlphabetOrder ord, int workers) {
  EnumerationSpec spec{mu, nx, ny, ord, MonomialMode::Signed, workers};
  return enumerate_fillings(spec, [](const LeafStats& s) { return LeafWeight{true, s.inv(), s.maj, 1}; });
}

namespace {

std::uint64_t descent_mask(const Partition& mu, const std::set<Cell>& D) {
  const auto cells = reading_order(mu);
  std::uint64_t mask = 0;
  for (const Cell& u : D) {
    if (!mu.contains(u) || u.row == 1) throw std::invalid_argument("descent cells must lie in mu above row 1");
    mask |= std::uint64_t{1} << (std::find(cells.begin(), cells.end(), u) - cells.begin());
  }
  return mask;
}

}  // namespace

XPolynomial F_mu_D(const Partition& mu, const std::set<Cell>& D, int N) {
  const std::uint64_t mask = descent_mask(mu, D);
  EnumerationSpec spec{mu, N, 0, AlphabetOrder::First, MonomialMode::Signed, 1};
  return enumerate_fillings(spec, [mask](const LeafStats& s) {
    return LeafWeight{s.des_mask == mask, s.inv_pairs, 0, 1};
  });
}

std::vector<std::set<Cell>> descent_subsets(const Partition& mu) {
  const auto cand = descent_candidates(mu);
  std::vector<std::set<Cell>> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cand.size()); ++bits) {
    std::set<Cell> d;
    for (std::size_t k = 0; k < cand.size(); ++k)
      if (bits >> k & 1) d.insert(cand[k]);
    out.push_back(std::move(d));
  }
  return out;
}

XPolynomial C_from_F(const Partition& mu, int N) {
  XPolynomial f(N);
  for (const auto& D : descent_subsets(mu)) {
    int a = 0, m = 0;
    for (const Cell& u : D) {
      a += arm(mu, u);
      m += leg(mu, u) + 1;
    }
    const LaurentQT w = LaurentQT::monomial(-a, m);
    f += F_mu_D(mu, D, N).map_coeffs([&](const LaurentQT& c) { return c * w; });
  }
  return f;
}

namespace {

// (D(xi), inv, maj) -> number of standard fillings, for the given order.
std::map<std::tuple<std::set<int>, int, int>, long> standard_census(const Partition& mu) {
  std::map<std::tuple<std::set<int>, int, int>, long> census;
  const auto cells = reading_order(mu);
  std::vector<Letter> perm(cells.size());
  std::iota(perm.begin(), perm.end(), 1);
  SuperFilling xi = SuperFilling::constant(mu, 1);
  do {
    for (std::size_t k = 0; k < cells.size(); ++k) xi.set(cells[k], perm[k]);
    ++census[{inverse_descent_set(xi), inv(xi), maj(xi)}];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return census;
}

}  // namespace

XPolynomial C_by_Q(const Partition& mu, int N) {
  XPolynomial f(N);
  for (const auto& [key, count] : standard_census(mu)) {
    const auto& [D, i, m] = key;
    const LaurentQT w = LaurentQT::monomial(i, m, BigInt(count));
    f += qsym_Q({mu.size(), D}, N).map_coeffs([&](const LaurentQT& c) { return c * w; });
  }
  return f;
}

XPolynomial C_super_by_Qtilde(const Partition& mu, int nx, int ny, AlphabetOrder ord) {
  XPolynomial f(nx, ny);
  for (const auto& [key, count] : standard_census(mu)) {
    const auto& [D, i, m] = key;
    const LaurentQT w = LaurentQT::monomial(i, m, BigInt(count));
    f += qsym_Qtilde({mu.size(), D}, ord, nx, ny).map_coeffs([&](const LaurentQT& c) { return c * w; });
  }
  return f;
}

XPolynomial specialize_q_minus_1(const Partition& mu, int N, int workers) {
  EnumerationSpec spec{mu, N, N, AlphabetOrder::First, MonomialMode::Absolute, workers};
  return enumerate_fillings(spec, [](const LeafStats& s) {
    return LeafWeight{true, s.positives + s.inv(), s.maj, s.negatives % 2 ? -1 : 1};
  });
}

XPolynomial specialize_t_minus_1(const Partition& mu, int N, int workers) {
  EnumerationSpec spec{mu, N, N, AlphabetOrder::Second, MonomialMode::Absolute, workers};
  return enumerate_fillings(spec, [](const LeafStats& s) {
    return LeafWeight{true, s.inv(), s.positives + s.maj, s.negatives % 2 ? -1 : 1};
  });
}

bool m_support_within(const MBasisVector& v, const Partition& bound) {
  return std::all_of(v.entries().begin(), v.entries().end(),
                     [&](const auto& kv) { return dominance_leq(kv.first, bound); });
}

std::vector<LaurentQT> one_minus_u_expansion(const Partition& mu) {
  const int n = mu.size();
  const XPolynomial f = C_super(mu, 1, 1, AlphabetOrder::First, 1);
  std::vector<LaurentQT> out;
  for (int d = 0; d <= n; ++d) out.push_back(f.coeff({n - d, d}));
  return out;
}

LaurentQT hook_kostka(const Partition& mu, int d) {
  const int n = mu.size();
  if (d < 0 || d > n - 1) throw std::invalid_argument("hook index out of range");
  auto b = b_mu(mu);
  b.erase(std::find(b.begin(), b.end(), QTExponent{0, 0}));
  return elementary_symmetric(b)[static_cast<std::size_t>(d)];
}

Partition hook(int n, int d) {
  std::vector<int> parts{n - d};
  parts.insert(parts.end(), static_cast<std::size_t>(d), 1);
  return Partition(parts);
}

bool duality_check(const Partition& mu, int guard) {
  const SchurVector a = H_tilde(mu, guard).schur_vec;
  const SchurVector b = H_tilde(conjugate(mu), guard).schur_vec;
  return a == b.map_coeffs(qt_swap);
}

long long syt_count(const Partition& lambda) {
  return kostka(lambda, Partition(std::vector<int>(static_cast<std::size_t>(lambda.size()), 1)));
}

}  // namespace macfill
