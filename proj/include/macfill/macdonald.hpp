#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "macfill/enumerate.hpp"
#include "macfill/filling.hpp"
#include "macfill/xpoly.hpp"

namespace macfill {

inline constexpr int kDefaultSizeGuard = 8;

/// Raised when a request exceeds a size guard; the message names the flag
/// that lifts it.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_guard(int n, int guard, const std::string& what);

struct MacdonaldResult {
  Partition mu;
  XPolynomial x_poly;
  MBasisVector m_vec;
  SchurVector schur_vec;  // the row K~_{lambda mu}(q,t)

  friend bool operator==(const MacdonaldResult&, const MacdonaldResult&) = default;
};

/// Sum over fillings sigma: mu -> {1..N} of q^inv t^maj x^sigma.
XPolynomial C_mu(const Partition& mu, int N, int workers = 0);
/// Same sum with every statistic recomputed from scratch per filling.
XPolynomial C_mu_naive(const Partition& mu, int N);

/// C_mu in N = |mu| variables, checked for symmetry and integrality and
/// expanded in the m and Schur bases. Throws GuardError above the guard and
/// std::logic_error if a structural check fails.
MacdonaldResult H_tilde(const Partition& mu, int guard = kDefaultSizeGuard, int workers = 0);

/// Super filling generating function, x block for positive letters and y
/// block for negative ones.
XPolynomial C_super(const Partition& mu, int nx, int ny, AlphabetOrder ord, int workers = 0);

/// Fillings with Des(sigma) = D weighted by q^|Inv(sigma)|. Throws
/// std::invalid_argument for an inadmissible D.
XPolynomial F_mu_D(const Partition& mu, const std::set<Cell>& D, int N);
/// All admissible descent sets of mu.
std::vector<std::set<Cell>> descent_subsets(const Partition& mu);
/// sum_D q^(-a(D)) t^(maj(D)) F_{mu,D}.
XPolynomial C_from_F(const Partition& mu, int N);
/// sum over standard fillings xi of q^inv t^maj Q_{n,D(xi)}.
XPolynomial C_by_Q(const Partition& mu, int N);
/// sum over standard fillings xi of q^inv t^maj Q~_{n,D(xi)}.
XPolynomial C_super_by_Qtilde(const Partition& mu, int nx, int ny, AlphabetOrder ord);

/// C_mu[X(q-1)] and C_mu[X(t-1)] from signed super fillings (x_|a| for a).
XPolynomial specialize_q_minus_1(const Partition& mu, int N, int workers = 0);
XPolynomial specialize_t_minus_1(const Partition& mu, int N, int workers = 0);

/// True when every partition in the support of v is dominated by bound.
bool m_support_within(const MBasisVector& v, const Partition& bound);

/// Coefficients of (-u)^d, d = 0..n, in H~_mu[1-u], from super fillings over {1, 1~}.
std::vector<LaurentQT> one_minus_u_expansion(const Partition& mu);
/// e_d[B_mu - 1]. Throws std::invalid_argument unless 0 <= d <= n-1.
LaurentQT hook_kostka(const Partition& mu, int d);
/// The hook (n-d, 1^d).
Partition hook(int n, int d);

/// H~_mu(x;q,t) = H~_mu'(x;t,q) on Schur rows.
bool duality_check(const Partition& mu, int guard = kDefaultSizeGuard);

/// Number of standard Young tableaux of shape lambda.
long long syt_count(const Partition& lambda);

}  // namespace macfill
