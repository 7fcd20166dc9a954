#include "macfill/laurent.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <vector>

namespace macfill {

void LaurentQT::add_term(int qexp, int texp, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace({qexp, texp}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentQT::coeff(int qexp, int texp) const {
  auto it = terms_.find({qexp, texp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentQT& LaurentQT::operator+=(const LaurentQT& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

LaurentQT& LaurentQT::operator-=(const LaurentQT& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

LaurentQT operator*(const LaurentQT& a, const LaurentQT& b) {
  LaurentQT r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

LaurentQT LaurentQT::operator-() const {
  LaurentQT r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

LaurentQT LaurentQT::shifted(int qexp, int texp) const {
  LaurentQT r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first + qexp, k.second + texp}, c);
  return r;
}

int LaurentQT::min_q_exponent() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->first.first;
}

int LaurentQT::min_t_exponent() const {
  int m = INT_MAX;
  for (const auto& [k, c] : terms_) m = std::min(m, k.second);
  return terms_.empty() ? 0 : m;
}

bool LaurentQT::is_polynomial_in_t() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.first == 0 && kv.first.second >= 0; });
}

bool LaurentQT::nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

namespace {
BigInt ipow(long base, int e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), BigInt(base).get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}
}  // namespace

BigInt LaurentQT::evaluate(long qv, long tv) const {
  // Scale by the most negative powers so everything stays integral, then divide exactly.
  const int qs = std::max(0, -min_q_exponent());
  const int ts = std::max(0, -min_t_exponent());
  if ((qs && qv == 0) || (ts && tv == 0)) throw std::domain_error("negative power of zero");
  BigInt num = 0;
  for (const auto& [k, c] : terms_) num += c * ipow(qv, k.first + qs) * ipow(tv, k.second + ts);
  const BigInt den = ipow(qv, qs) * ipow(tv, ts);
  if (num % den != 0) throw std::domain_error("evaluation is not an integer");
  return num / den;
}

namespace {
std::string power(const char* var, int e) {
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}
}  // namespace

std::string LaurentQT::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::vector<std::string> factors;
    if (k.first != 0) factors.push_back(power("q", k.first));
    if (k.second != 0) factors.push_back(power("t", k.second));
    BigInt mag = abs(c);
    std::string term;
    if (factors.empty() || mag != 1) term = mag.get_str();
    for (const auto& f : factors) term += (term.empty() ? "" : "*") + f;
    if (first) {
      s = (c < 0 ? "-" : "") + term;
      first = false;
    } else {
      s += (c < 0 ? " - " : " + ") + term;
    }
  }
  return s;
}

LaurentQT qt_swap(const LaurentQT& a) {
  LaurentQT r;
  for (const auto& [k, c] : a.terms()) r.add_term(k.second, k.first, c);
  return r;
}

LaurentQT invert_q(const LaurentQT& a) {
  LaurentQT r;
  for (const auto& [k, c] : a.terms()) r.add_term(-k.first, k.second, c);
  return r;
}

LaurentQT invert_t(const LaurentQT& a) {
  LaurentQT r;
  for (const auto& [k, c] : a.terms()) r.add_term(k.first, -k.second, c);
  return r;
}

LaurentQT qt_substitute_q_power_of_t(const LaurentQT& a, int alpha) {
  if (alpha < 1) throw std::invalid_argument("alpha must be a positive integer");
  LaurentQT r;
  for (const auto& [k, c] : a.terms()) r.add_term(0, alpha * k.first + k.second, c);
  return r;
}

LaurentQT divide_by_power_of_one_minus_t(const LaurentQT& a, int n) {
  if (!a.is_polynomial_in_t()) throw std::domain_error("expected a polynomial in t with nonnegative exponents");
  if (n < 0) throw std::invalid_argument("negative power");
  int deg = 0;
  for (const auto& [k, c] : a.terms()) deg = std::max(deg, k.second);
  std::vector<BigInt> p(static_cast<std::size_t>(deg) + 1);
  for (const auto& [k, c] : a.terms()) p[static_cast<std::size_t>(k.second)] = c;
  for (int step = 0; step < n; ++step) {
    // Synthetic division by (1 - t): quotient coefficients are prefix sums.
    std::vector<BigInt> quot(p.size());
    BigInt acc = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      acc += p[i];
      quot[i] = acc;
    }
    if (acc != 0) throw std::domain_error("not divisible by (1 - t)");
    quot.pop_back();
    if (quot.empty()) quot.push_back(0);
    p = std::move(quot);
  }
  LaurentQT r;
  for (std::size_t i = 0; i < p.size(); ++i) r.add_term(0, static_cast<int>(i), p[i]);
  return r;
}

BigInt eval_t1(const LaurentQT& a) {
  if (!a.is_polynomial_in_t()) throw std::domain_error("expected a polynomial in t with nonnegative exponents");
  BigInt s = 0;
  for (const auto& [k, c] : a.terms()) s += c;
  return s;
}

// ---------------------------------------------------------------------------

void AlphaPoly::add_term(int exp, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
  AlphaPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

BigInt AlphaPoly::evaluate(long alpha) const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c * ipow(alpha, e);
  return s;
}

std::string AlphaPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = abs(c);
    std::string term;
    if (e == 0 || mag != 1) term = mag.get_str();
    if (e != 0) term += (term.empty() ? "" : "*") + power("a", e);
    if (first) {
      s = (c < 0 ? "-" : "") + term;
      first = false;
    } else {
      s += (c < 0 ? " - " : " + ") + term;
    }
  }
  return s;
}

}  // namespace macfill
