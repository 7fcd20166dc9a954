#pragma once

#include <boost/rational.hpp>

#include <set>
#include <vector>

#include "macfill/filling.hpp"
#include "macfill/xpoly.hpp"

namespace macfill {

/// Entries of a tuple of skew shapes; entries[j][k] belongs to
/// shape.shapes[j].cells()[k].
struct TupleTableau {
  SkewTuple shape;
  std::vector<std::vector<Letter>> entries;

  Letter at(std::size_t component, const Cell& u) const;
  friend bool operator==(const TupleTableau&, const TupleTableau&) = default;
};

/// A cell of a tuple: component index (0-based) and position.
struct TupleCell {
  std::size_t component = 0;
  Cell cell;
  friend constexpr auto operator<=>(const TupleCell&, const TupleCell&) = default;
};

/// Cells of the tuple in content reading order: increasing beta, ties
/// upward along the diagonal.
std::vector<TupleCell> content_reading_order(const SkewTuple& nu);

/// Rows weakly increase and columns weakly increase upward, positive letters
/// in horizontal strips, negative letters in vertical strips.
bool is_super_semistandard(const TupleTableau& T, AlphabetOrder ord = AlphabetOrder::First);

/// Inversions via 0 < beta(v) - beta(u) < 1. Throws std::invalid_argument
/// for a tableau that is not (super) semistandard.
int llt_inv(const TupleTableau& T, AlphabetOrder ord = AlphabetOrder::First);
/// Inversions via the content rules (i) and (ii); positive tableaux only.
int llt_inv_classic(const TupleTableau& T);

/// Calls f on every super tableau of nu with positive letters <= nx and
/// negative letters <= ny.
void for_each_tuple_tableau(const SkewTuple& nu, int nx, int ny, AlphabetOrder ord,
                            const std::function<void(const TupleTableau&)>& f);

/// sum over SSYT(nu) with entries <= N of q^inv x^T.
XPolynomial G_nu(const SkewTuple& nu, int N);
/// Super tableau generating function (x block positive, y block negative).
XPolynomial G_super(const SkewTuple& nu, AlphabetOrder ord, int nx, int ny);

/// Unique standard tableau with T o S^-1 weakly increasing; positive ties
/// increase and negative ties decrease in content reading order.
TupleTableau standardize_tableau(const TupleTableau& T, AlphabetOrder ord = AlphabetOrder::First);
/// {i : S^-1(i+1) precedes S^-1(i) in content reading order}.
std::set<int> standard_descent_set(const TupleTableau& S);
/// sum over SYT(nu) of q^inv(S) Q~_{n,D(S)}.
XPolynomial G_super_by_Q(const SkewTuple& nu, AlphabetOrder ord, int nx, int ny);

/// The tableau on nu(mu, Des sigma) whose component-j cell of content i holds sigma(i,j).
TupleTableau theta(const SuperFilling& sigma);

/// F_{mu,D} = G_{nu(mu,D)} in N variables.
bool check_ribbon_correspondence(const Partition& mu, const std::set<Cell>& D, int N);

/// Number of cell pairs (u,v) with 0 < beta(v) - beta(u) < 1.
int beta_pair_count(const SkewTuple& nu);
/// G_nu'(y;q) = q^m G~_nu(0,y;1/q) in N variables.
bool check_transpose_identity(const SkewTuple& nu, int N);
/// G_nu'(x;q) = q^m omega G_nu(x;1/q) on Schur expansions (N = |nu|).
bool check_transpose_omega(const SkewTuple& nu);

using Rational = boost::rational<long long>;

/// G_beta(x1,x2;q) of a strictly increasing sequence. Throws
/// std::invalid_argument otherwise.
XPolynomial g_beta(const std::vector<Rational>& betas);

/// The data of one induction step: r, alpha and gamma built from beta.
struct BetaStep {
  int r = 0;
  std::vector<Rational> alpha;
  std::vector<Rational> gamma;
};
BetaStep beta_step(const std::vector<Rational>& betas);
/// G_beta - G_alpha = (q^r - q^(r-1)) x1 x2 G_gamma when r > 0, and
/// G_beta = (x1 + x2) G_(beta_1..beta_{n-1}) when r = 0.
bool check_beta_recursion(const std::vector<Rational>& betas);

/// For a tuple with at most two cells per column: G_nu = q^h (x1 x2)^m G_rho
/// in two variables, rho the tuple without its two-cell columns. Returns
/// false if no such h exists; throws std::invalid_argument if a column has
/// more than two cells.
bool check_two_cell_column_reduction(const SkewTuple& nu);

}  // namespace macfill
