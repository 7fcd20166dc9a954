#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "macfill/alphabet.hpp"
#include "macfill/laurent.hpp"
#include "macfill/partition.hpp"

namespace macfill {

using Exponents = std::vector<int>;

/// Sparse polynomial in an x block (x_1..x_nx) followed by an optional y
/// block (y_1..y_ny). Exponent vectors have length nx + ny.
template <class Coeff>
class BasicXPolynomial {
 public:
  using Terms = std::map<Exponents, Coeff>;

  BasicXPolynomial() = default;
  explicit BasicXPolynomial(int nx, int ny = 0) : nx_(nx), ny_(ny) {
    if (nx < 0 || ny < 0) throw std::invalid_argument("negative variable count");
  }

  static BasicXPolynomial constant(int nx, int ny, const Coeff& c) {
    BasicXPolynomial p(nx, ny);
    p.add(Exponents(static_cast<std::size_t>(nx + ny), 0), c);
    return p;
  }

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int num_vars() const { return nx_ + ny_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Exponents& e, const Coeff& c) {
    if (static_cast<int>(e.size()) != num_vars()) throw std::invalid_argument("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Coeff coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff() : it->second;
  }

  BasicXPolynomial& operator+=(const BasicXPolynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  friend BasicXPolynomial operator+(BasicXPolynomial a, const BasicXPolynomial& b) { return a += b; }

  BasicXPolynomial operator*(const BasicXPolynomial& o) const {
    check_compatible(o);
    BasicXPolynomial r(nx_, ny_);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) {
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add(e, ca * cb);
      }
    return r;
  }

  /// Applies f to every coefficient.
  template <class F>
  BasicXPolynomial map_coeffs(F&& f) const {
    BasicXPolynomial r(nx_, ny_);
    for (const auto& [e, c] : terms_) r.add(e, f(c));
    return r;
  }

  /// Total degree if all terms share it; -1 for an inhomogeneous polynomial,
  /// 0 for the zero polynomial.
  int homogeneous_degree() const {
    int deg = -2;
    for (const auto& [e, c] : terms_) {
      const int d = std::accumulate(e.begin(), e.end(), 0);
      if (deg == -2) deg = d;
      else if (deg != d) return -1;
    }
    return deg == -2 ? 0 : deg;
  }

  friend bool operator==(const BasicXPolynomial& a, const BasicXPolynomial& b) {
    return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const BasicXPolynomial& o) const {
    if (o.nx_ != nx_ || o.ny_ != ny_) throw std::invalid_argument("polynomials in different variable sets");
  }

  int nx_ = 0;
  int ny_ = 0;
  Terms terms_;
};

using XPolynomial = BasicXPolynomial<LaurentQT>;

struct MonomialBasisTag {};
struct SchurBasisTag {};

/// Coefficient vector indexed by partitions, iterated in reverse
/// lexicographic order ((n) first).
template <class Coeff, class Tag>
class BasisVector {
 public:
  using Map = std::map<Partition, Coeff, std::greater<>>;

  const Map& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  void add(const Partition& lambda, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = entries_.try_emplace(lambda, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }
  Coeff coeff(const Partition& lambda) const {
    auto it = entries_.find(lambda);
    return it == entries_.end() ? Coeff() : it->second;
  }
  /// Common degree; -1 when the keys disagree, 0 when empty.
  int degree() const {
    int d = -2;
    for (const auto& [p, c] : entries_) {
      if (d == -2) d = p.size();
      else if (d != p.size()) return -1;
    }
    return d == -2 ? 0 : d;
  }

  template <class F>
  BasisVector map_coeffs(F&& f) const {
    BasisVector r;
    for (const auto& [p, c] : entries_) r.add(p, f(c));
    return r;
  }

  friend bool operator==(const BasisVector& a, const BasisVector& b) { return a.entries_ == b.entries_; }

 private:
  Map entries_;
};

using MBasisVector = BasisVector<LaurentQT, MonomialBasisTag>;
using SchurVector = BasisVector<LaurentQT, SchurBasisTag>;

/// Label (n, D) of a fundamental quasisymmetric function, D within {1..n-1}.
struct QSymLabel {
  int n = 0;
  std::set<int> descents;
};

// ---------------------------------------------------------------------------
// Generic symmetric-function operations

/// Exponent vector of x^rho padded to n variables.
inline Exponents partition_exponents(const Partition& rho, int nvars) {
  Exponents e(static_cast<std::size_t>(nvars), 0);
  for (int i = 1; i <= rho.length(); ++i) e.at(static_cast<std::size_t>(i - 1)) = rho.row_length(i);
  return e;
}

/// Invariance under every adjacent transposition inside [first, first+count).
template <class Coeff>
bool is_symmetric_in_block(const BasicXPolynomial<Coeff>& f, int first, int count) {
  for (int i = first; i + 1 < first + count; ++i) {
    for (const auto& [e, c] : f.terms()) {
      Exponents s = e;
      std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i + 1)]);
      if (!(f.coeff(s) == c)) return false;
    }
  }
  return true;
}

/// Symmetric in the x block and (separately) in the y block.
template <class Coeff>
bool is_symmetric(const BasicXPolynomial<Coeff>& f) {
  return is_symmetric_in_block(f, 0, f.nx()) && is_symmetric_in_block(f, f.nx(), f.ny());
}

/// Monomial-basis coefficients of a symmetric homogeneous polynomial in x
/// alone. Throws std::invalid_argument if f is not symmetric, not
/// homogeneous, has a y block, or has fewer variables than its degree.
template <class Coeff>
BasisVector<Coeff, MonomialBasisTag> to_m_basis(const BasicXPolynomial<Coeff>& f) {
  if (f.ny() != 0) throw std::invalid_argument("m-basis conversion needs an x-only polynomial");
  const int n = f.homogeneous_degree();
  if (n < 0) throw std::invalid_argument("polynomial is not homogeneous");
  if (f.nx() < n) throw std::invalid_argument("insufficient variables for degree");
  if (!is_symmetric(f)) throw std::invalid_argument("polynomial is not symmetric");
  BasisVector<Coeff, MonomialBasisTag> v;
  for (const Partition& rho : partitions_of(n)) v.add(rho, f.coeff(partition_exponents(rho, f.nx())));
  return v;
}

/// Number of semistandard tableaux of shape lambda and content rho.
long long kostka(const Partition& lambda, const Partition& rho);

/// Solves the unitriangular system s_lambda = sum_rho K(lambda,rho) m_rho.
template <class Coeff>
BasisVector<Coeff, SchurBasisTag> m_to_schur(const BasisVector<Coeff, MonomialBasisTag>& v) {
  const int n = v.degree();
  if (n < 0) throw std::invalid_argument("basis vector mixes degrees");
  BasisVector<Coeff, SchurBasisTag> out;
  if (v.is_zero()) return out;
  // partitions_of is reverse lexicographic, a linear extension of dominance
  // from the top, so every lambda > rho is solved before rho.
  const auto parts = partitions_of(n);
  std::vector<Coeff> solved;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    Coeff c = v.coeff(parts[r]);
    for (std::size_t l = 0; l < r; ++l) {
      if (solved[l].is_zero()) continue;
      const long long k = kostka(parts[l], parts[r]);
      if (k != 0) c += solved[l] * Coeff(-k);
    }
    solved.push_back(c);
    out.add(parts[r], c);
  }
  return out;
}

/// Expands a Schur vector back into monomials.
template <class Coeff>
BasisVector<Coeff, MonomialBasisTag> schur_to_m(const BasisVector<Coeff, SchurBasisTag>& v) {
  BasisVector<Coeff, MonomialBasisTag> out;
  const int n = v.degree();
  if (n < 0) throw std::invalid_argument("basis vector mixes degrees");
  for (const auto& [lambda, c] : v.entries())
    for (const Partition& rho : partitions_of(n)) {
      const long long k = kostka(lambda, rho);
      if (k != 0) out.add(rho, c * Coeff(k));
    }
  return out;
}

/// omega(s_lambda) = s_lambda'.
template <class Coeff>
BasisVector<Coeff, SchurBasisTag> omega_schur(const BasisVector<Coeff, SchurBasisTag>& v) {
  BasisVector<Coeff, SchurBasisTag> out;
  for (const auto& [lambda, c] : v.entries()) out.add(conjugate(lambda), c);
  return out;
}

/// Schur vector of a symmetric polynomial (via the monomial basis).
template <class Coeff>
BasisVector<Coeff, SchurBasisTag> to_schur(const BasicXPolynomial<Coeff>& f) {
  return m_to_schur(to_m_basis(f));
}

/// sum over SSYT of shape lambda with entries <= nvars of x^T.
XPolynomial schur_in_x(const Partition& lambda, int nvars);

/// Monomial symmetric polynomial m_rho in nvars variables.
XPolynomial monomial_symmetric(const Partition& rho, int nvars);

/// Gessel's fundamental quasisymmetric function in nvars variables.
XPolynomial qsym_Q(const QSymLabel& label, int nvars);

/// Super analog over the alphabet ordered by `order` (letters +i -> x_i,
/// -i -> y_i).
XPolynomial qsym_Qtilde(const QSymLabel& label, AlphabetOrder order, int nx, int ny);

std::string render_x(const XPolynomial& f);
std::string render_m(const MBasisVector& v);
std::string render_schur(const SchurVector& v);

}  // namespace macfill
