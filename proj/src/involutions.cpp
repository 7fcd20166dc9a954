#include "macfill/involutions.hpp"

#include <cstdlib>

#include "macfill/enumerate.hpp"

namespace macfill {

InvolutionStep psi(const SuperFilling& s) {
  InvolutionStep step{s, s, std::nullopt, std::nullopt};
  const auto cells = reading_order(s.shape());
  const long n = static_cast<long>(cells.size());
  auto same_abs = [&](long a, long b) { return std::abs(s.at(cells[static_cast<std::size_t>(a)])) == std::abs(s.at(cells[static_cast<std::size_t>(b)])); };
  auto attack = [&](long a, long b) { return attacks(cells[static_cast<std::size_t>(a)], cells[static_cast<std::size_t>(b)]); };
  int a = 0;
  for (long x = 0; x < n; ++x)
    for (long y = x + 1; y < n; ++y)
      if (attack(x, y) && same_abs(x, y)) {
        const int val = std::abs(s.at(cells[static_cast<std::size_t>(x)]));
        if (a == 0 || val < a) a = val;
      }
  if (a == 0) return step;
  auto has_a = [&](long x) { return std::abs(s.at(cells[static_cast<std::size_t>(x)])) == a; };
  long v = -1;
  for (long y = n - 1; y >= 0 && v < 0; --y) {
    if (!has_a(y)) continue;
    for (long x = 0; x < n; ++x)
      if (x != y && has_a(x) && attack(x, y)) {
        v = y;
        break;
      }
  }
  long u = -1;
  for (long x = n - 1; x >= 0; --x)
    if (x != v && has_a(x) && attack(x, v)) {
      u = x;
      break;
    }
  const Cell cu = cells[static_cast<std::size_t>(u)];
  step.output.set(cu, -s.at(cu));
  step.flipped_cell = cu;
  step.pivot_value = a;
  return step;
}

InvolutionStep phi(const SuperFilling& s) {
  InvolutionStep step{s, s, std::nullopt, std::nullopt};
  int a = 0;
  for (const Cell& u : s.shape().cells()) {
    const int val = std::abs(s.at(u));
    if (val < u.row && (a == 0 || val < a)) a = val;
  }
  if (a == 0) return step;
  for (const Cell& u : reading_order(s.shape()))
    if (std::abs(s.at(u)) == a) {
      step.output.set(u, -s.at(u));
      step.flipped_cell = u;
      step.pivot_value = a;
      break;
    }
  return step;
}

LaurentQT signed_weight(const SuperFilling& s, Involution which) {
  const int sign = s.negatives() % 2 ? -1 : 1;
  if (which == Involution::Psi) {
    const auto ord = AlphabetOrder::First;
    return LaurentQT::monomial(s.positives() + inv(s, ord), maj(s, ord), sign);
  }
  const auto ord = AlphabetOrder::Second;
  return LaurentQT::monomial(inv(s, ord), s.positives() + maj(s, ord), sign);
}

bool is_fixed_point_class(const SuperFilling& s, Involution which) {
  if (which == Involution::Psi) return is_non_attacking(s);
  for (const Cell& u : s.shape().cells())
    if (std::abs(s.at(u)) < u.row) return false;
  return true;
}

namespace {

Exponents abs_exponents(const SuperFilling& s, int nvars) {
  Exponents e(static_cast<std::size_t>(nvars), 0);
  for (Letter x : reading_word(s)) ++e[static_cast<std::size_t>(std::abs(x) - 1)];
  return e;
}

XPolynomial fixed_point_sum(const Partition& mu, int nx, int ny, Involution which) {
  const int nvars = std::max(nx, ny);
  XPolynomial f(nvars);
  for_each_super_filling(mu, nx, ny, [&](const SuperFilling& s) {
    const InvolutionStep st = which == Involution::Psi ? psi(s) : phi(s);
    if (!st.flipped_cell) f.add(abs_exponents(s, nvars), signed_weight(s, which));
  });
  return f;
}

}  // namespace

bool verify_cancellation(const Partition& mu, int nx, int ny, Involution which) {
  EnumerationSpec spec{mu, nx, ny, which == Involution::Psi ? AlphabetOrder::First : AlphabetOrder::Second,
                       MonomialMode::Absolute, 0};
  const XPolynomial all = enumerate_fillings(spec, [which](const LeafStats& s) {
    const int sign = s.negatives % 2 ? -1 : 1;
    if (which == Involution::Psi) return LeafWeight{true, s.positives + s.inv(), s.maj, sign};
    return LeafWeight{true, s.inv(), s.positives + s.maj, sign};
  });
  return all == fixed_point_sum(mu, nx, ny, which);
}

InvolutionReport verify_involution(const Partition& mu, int bound, Involution which) {
  InvolutionReport r;
  const AlphabetOrder ord = which == Involution::Psi ? AlphabetOrder::First : AlphabetOrder::Second;
  const Partition limit = which == Involution::Psi ? conjugate(mu) : mu;
  for_each_super_filling(mu, bound, bound, [&](const SuperFilling& s) {
    ++r.fillings;
    const InvolutionStep st = which == Involution::Psi ? psi(s) : phi(s);
    const InvolutionStep back = which == Involution::Psi ? psi(st.output) : phi(st.output);
    if (back.output != s) r.involutive = false;
    const bool fixed = !st.flipped_cell;
    if (fixed != is_fixed_point_class(s, which) || fixed != (st.output == s)) r.fixed_set = false;
    if (fixed) {
      ++r.fixed_points;
      // Monomials x^rho with rho a partition are bounded in dominance.
      Exponents e = abs_exponents(s, bound);
      if (std::is_sorted(e.rbegin(), e.rend())) {
        if (!dominance_leq(Partition(e), limit)) r.support = false;
      }
      return;
    }
    const SuperFilling& t = st.output;
    if (std::abs(t.negatives() - s.negatives()) != 1) r.sign_reversing = false;
    if (which == Involution::Psi) {
      if (des_set(t, ord) != des_set(s, ord) || maj(t, ord) != maj(s, ord) ||
          t.positives() + inv(t, ord) != s.positives() + inv(s, ord))
        r.weight = false;
    } else {
      if (inv(t, ord) != inv(s, ord) || t.positives() + maj(t, ord) != s.positives() + maj(s, ord)) r.weight = false;
    }
    if (!(signed_weight(t, which) == -signed_weight(s, which))) r.weight = false;
  });
  r.cancellation = verify_cancellation(mu, bound, bound, which);
  return r;
}

}  // namespace macfill
