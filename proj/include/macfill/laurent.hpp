#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace macfill {

using BigInt = mpz_class;

/// Exact Laurent polynomial in q and t with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so equality is
/// structural.
class LaurentQT {
 public:
  using Key = std::pair<int, int>;  // (q-exponent, t-exponent)
  using Terms = std::map<Key, BigInt>;

  LaurentQT() = default;
  LaurentQT(long c) { add_term(0, 0, BigInt(c)); }  // NOLINT: implicit integer embedding
  LaurentQT(const BigInt& c) { add_term(0, 0, c); }  // NOLINT

  static LaurentQT monomial(int qexp, int texp, const BigInt& c = 1) {
    LaurentQT r;
    r.add_term(qexp, texp, c);
    return r;
  }
  static LaurentQT q(int e = 1) { return monomial(e, 0); }
  static LaurentQT t(int e = 1) { return monomial(0, e); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Adds c * q^a t^b in place, dropping the term if it cancels.
  void add_term(int qexp, int texp, const BigInt& c);
  void add_term(int qexp, int texp, long c) { add_term(qexp, texp, BigInt(c)); }
  BigInt coeff(int qexp, int texp) const;

  LaurentQT& operator+=(const LaurentQT& o);
  LaurentQT& operator-=(const LaurentQT& o);
  LaurentQT& operator*=(const LaurentQT& o) { return *this = *this * o; }
  friend LaurentQT operator+(LaurentQT a, const LaurentQT& b) { return a += b; }
  friend LaurentQT operator-(LaurentQT a, const LaurentQT& b) { return a -= b; }
  friend LaurentQT operator*(const LaurentQT& a, const LaurentQT& b);
  LaurentQT operator-() const;
  friend bool operator==(const LaurentQT& a, const LaurentQT& b) { return a.terms_ == b.terms_; }

  /// Multiplies by q^a t^b.
  LaurentQT shifted(int qexp, int texp) const;

  /// Smallest exponents present (0 for the zero polynomial).
  int min_q_exponent() const;
  int min_t_exponent() const;
  bool has_negative_exponent() const { return min_q_exponent() < 0 || min_t_exponent() < 0; }
  bool is_polynomial_in_t() const;
  /// True when every coefficient is >= 0.
  bool nonnegative_coefficients() const;

  /// Evaluates at integers q, t (both must be nonzero if negative exponents are present).
  BigInt evaluate(long qv, long tv) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Exchanges the q- and t-exponent of every term.
LaurentQT qt_swap(const LaurentQT& a);

/// q -> 1/q.
LaurentQT invert_q(const LaurentQT& a);
/// t -> 1/t.
LaurentQT invert_t(const LaurentQT& a);

/// q^e t^f -> t^(alpha*e + f). Requires alpha >= 1.
LaurentQT qt_substitute_q_power_of_t(const LaurentQT& a, int alpha);

/// Exact quotient a / (1-t)^n for a polynomial in t alone with nonnegative
/// exponents. Throws std::domain_error if q occurs, an exponent is negative,
/// or the division leaves a remainder.
LaurentQT divide_by_power_of_one_minus_t(const LaurentQT& a, int n);

/// Sum of the coefficients of a polynomial in t alone. Throws
/// std::domain_error if q occurs or an exponent is negative.
BigInt eval_t1(const LaurentQT& a);

/// Elementary symmetric polynomials e_0..e_m of a multiset of monomials
/// q^a t^b (each given with coefficient 1).
template <class Range>
std::vector<LaurentQT> elementary_symmetric(const Range& monomials) {
  std::vector<LaurentQT> e{LaurentQT(1)};
  for (const auto& m : monomials) {
    const LaurentQT x = LaurentQT::monomial(m.q, m.t);
    e.emplace_back();
    for (std::size_t d = e.size() - 1; d >= 1; --d) e[d] += e[d - 1] * x;
  }
  return e;
}

/// Integer polynomial in the Jack parameter alpha.
class AlphaPoly {
 public:
  AlphaPoly() = default;
  AlphaPoly(long c) { add_term(0, BigInt(c)); }  // NOLINT
  static AlphaPoly alpha(int e = 1) {
    AlphaPoly r;
    r.add_term(e, 1);
    return r;
  }

  const std::map<int, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(int exp, const BigInt& c);

  AlphaPoly& operator+=(const AlphaPoly& o);
  AlphaPoly& operator*=(const AlphaPoly& o) { return *this = *this * o; }
  friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
  friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
  friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) { return a.terms_ == b.terms_; }

  BigInt evaluate(long alpha) const;
  std::string to_string() const;

 private:
  std::map<int, BigInt> terms_;
};

}  // namespace macfill
