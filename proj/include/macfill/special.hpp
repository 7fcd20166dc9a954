#pragma once

#include <vector>

#include "macfill/filling.hpp"
#include "macfill/xpoly.hpp"

namespace macfill {

using Word = std::vector<int>;

/// Parses "2113" (one digit per letter) or "10,2,3" (comma separated).
Word parse_word(std::string_view text);
/// Digits run together when every letter is below 10, commas otherwise.
std::string format_word(const Word& w);

/// The letters are 1^mu_1 2^mu_2 ... l^mu_l for a partition mu.
bool is_partition_content(const Word& w);

/// Throws std::invalid_argument unless w has partition content.
int cocharge(const Word& w);

/// The filling with inv = 0 whose row i holds the multiset rows[i-1].
SuperFilling unique_inv_zero_filling(const Partition& mu, const std::vector<std::vector<int>>& rows);

/// Semistandard tableaux of shape lambda and the given content, rows listed
/// bottom first.
using Tableau = std::vector<std::vector<int>>;
std::vector<Tableau> ssyt_with_content(const Partition& lambda, const std::vector<int>& content);
/// Rows top to bottom, left to right.
Word tableau_reading_word(const Tableau& T);

/// Hall-Littlewood rows: H~_mu(x;0,t) read off the q,t-Kostka row, and the
/// cocharge sum over SSYT(lambda, mu).
SchurVector hall_littlewood_from_kostka(const Partition& mu, int guard);
SchurVector hall_littlewood_schur(const Partition& mu);

/// Sum over non-attacking fillings of mu' of the integral-form weights.
XPolynomial j_integral(const Partition& mu, int N);
/// t^n(mu) H~_mu[X(1-t); q, 1/t] via signed super fillings.
XPolynomial j_from_h(const Partition& mu, int N, int workers = 0);

using JackPolynomial = BasisVector<AlphaPoly, MonomialBasisTag>;
using AlphaXPolynomial = BasicXPolynomial<AlphaPoly>;

AlphaXPolynomial knop_sahi_x(const Partition& mu, int N);
/// Monomial expansion of the Knop-Sahi sum in N variables (N >= |mu| for the
/// full expansion).
JackPolynomial knop_sahi(const Partition& mu, int N);
/// lim_{t->1} J_mu(x; t^alpha, t) / (1-t)^n by exact division; the
/// coefficients are constants.
AlphaXPolynomial jack_limit_oracle(const Partition& mu, int N, int alpha);
/// The Knop-Sahi polynomial evaluated at an integer alpha.
AlphaXPolynomial knop_sahi_at(const Partition& mu, int N, int alpha);

std::string render_jack(const JackPolynomial& v);

/// Absolute inversion number: inversion triples with distinct absolute
/// values plus row-1 inversions (order <_1).
int ainv(const SuperFilling& s);
int amaj(const SuperFilling& s);

/// For every non-attacking positive tau on mu' with entries <= bound:
/// the signed sum over sign patterns matches the product formula, and
/// inv(tau) = ainv(tau) + sum of arms over equal vertical pairs.
bool check_tau_terms(const Partition& mu, int bound);

}  // namespace macfill
