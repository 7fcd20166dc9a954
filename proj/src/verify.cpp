#include "macfill/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "macfill/crystal.hpp"
#include "macfill/involutions.hpp"
#include "macfill/llt.hpp"
#include "macfill/macdonald.hpp"
#include "macfill/special.hpp"

namespace macfill {

namespace {

std::vector<Partition> partitions_upto(int n_max) {
  std::vector<Partition> out;
  for (int n = 1; n <= n_max; ++n)
    for (const Partition& p : partitions_of(n)) out.push_back(p);
  return out;
}

bool two_columns(const Partition& mu) { return mu.length() == 0 || mu.row_length(1) <= 2; }

std::string set_to_string(const std::set<Cell>& D) {
  std::string s = "{";
  for (const Cell& u : D) s += (s.size() > 1 ? "," : "") + std::string("(") + std::to_string(u.row) + "," + std::to_string(u.col) + ")";
  return s + "}";
}

CheckResult named(std::string name) {
  CheckResult r;
  r.name = std::move(name);
  return r;
}

CheckResult fail(CheckResult r, const std::string& detail) {
  r.passed = false;
  r.detail = detail;
  return r;
}

CheckResult pass(CheckResult r, const std::string& detail) {
  r.detail = detail;
  return r;
}

}  // namespace

CheckResult check_normalization(int n_max, int workers) {
  CheckResult r = named("coefficient of x1^n in C_mu is 1");
  for (const Partition& mu : partitions_upto(n_max)) {
    const int n = mu.size();
    Exponents e(static_cast<std::size_t>(n), 0);
    e[0] = n;
    if (!(C_mu(mu, n, workers).coeff(e) == LaurentQT(1))) return fail(r, "mu = " + mu.to_string());
  }
  return pass(r, "all mu of size <= " + std::to_string(n_max));
}

CheckResult check_symmetry(int n_max, int workers) {
  CheckResult r = named("C_mu is symmetric in n variables");
  for (const Partition& mu : partitions_upto(n_max))
    if (!is_symmetric(C_mu(mu, mu.size(), workers))) return fail(r, "mu = " + mu.to_string());
  return pass(r, "all mu of size <= " + std::to_string(n_max));
}

CheckResult check_specialization_support(int n_max, int workers) {
  CheckResult r = named("C_mu[X(q-1)] supported on rho <= mu', C_mu[X(t-1)] on rho <= mu");
  for (const Partition& mu : partitions_upto(n_max)) {
    const int n = mu.size();
    if (!m_support_within(to_m_basis(specialize_q_minus_1(mu, n, workers)), conjugate(mu)))
      return fail(r, "q-1 specialization, mu = " + mu.to_string());
    if (!m_support_within(to_m_basis(specialize_t_minus_1(mu, n, workers)), mu))
      return fail(r, "t-1 specialization, mu = " + mu.to_string());
  }
  return pass(r, "all mu of size <= " + std::to_string(n_max));
}

CheckResult check_naive_enumeration(int n_max) {
  CheckResult r = named("engine enumeration equals direct filling enumeration");
  for (const Partition& mu : partitions_upto(n_max))
    if (!(C_mu(mu, mu.size(), 1) == C_mu_naive(mu, mu.size()))) return fail(r, "mu = " + mu.to_string());
  return pass(r, "all mu of size <= " + std::to_string(n_max));
}

CheckResult check_inversion_triples(int n_max, int bound) {
  CheckResult r = named("inv = row-1 inversions + inversion triples, both orders");
  for (const Partition& mu : partitions_upto(n_max))
    for (AlphabetOrder ord : {AlphabetOrder::First, AlphabetOrder::Second}) {
      bool ok = true;
      std::string bad;
      for_each_super_filling(mu, bound, bound, [&](const SuperFilling& s) {
        if (ok && inv(s, ord) != row1_inversions(s, ord) + inversion_triples(s, ord)) {
          ok = false;
          bad = format_filling(s);
        }
      });
      if (!ok) return fail(r, "filling " + bad);
    }
  return pass(r, "super fillings with letters <= " + std::to_string(bound));
}

CheckResult check_quasisymmetric_expansions(int n_max) {
  CheckResult r = named("C_mu = sum q^inv t^maj Q_D(xi) = sum_D q^-a t^maj F_mu,D; super version via Q~");
  for (const Partition& mu : partitions_upto(n_max)) {
    const int n = mu.size();
    const XPolynomial c = C_mu(mu, n, 1);
    if (!(c == C_by_Q(mu, n))) return fail(r, "Q expansion, mu = " + mu.to_string());
    if (!(c == C_from_F(mu, n))) return fail(r, "F_mu,D decomposition, mu = " + mu.to_string());
    for (AlphabetOrder ord : {AlphabetOrder::First, AlphabetOrder::Second})
      if (!(C_super(mu, 2, 2, ord, 1) == C_super_by_Qtilde(mu, 2, 2, ord)))
        return fail(r, "super expansion, mu = " + mu.to_string());
  }
  return pass(r, "all mu of size <= " + std::to_string(n_max));
}

CheckResult check_one_minus_u(int n_max) {
  CheckResult r = named("H~_mu[1-u] coefficients are e_d[B_mu]");
  for (const Partition& mu : partitions_upto(n_max)) {
    const auto got = one_minus_u_expansion(mu);
    const auto want = elementary_symmetric(b_mu(mu));
    for (std::size_t d = 0; d < got.size(); ++d)
      if (!(got[d] == want[d])) return fail(r, "mu = " + mu.to_string() + ", d = " + std::to_string(d));
  }
  return pass(r, "all mu of size <= " + std::to_string(n_max));
}

CheckResult check_hook_rows(int n_max, int workers) {
  CheckResult r = named("K~ at hook (n-d,1^d) is e_d[B_mu - 1]");
  for (const Partition& mu : partitions_upto(n_max)) {
    const int n = mu.size();
    const SchurVector row = H_tilde(mu, n, workers).schur_vec;
    for (int d = 0; d < n; ++d)
      if (!(row.coeff(hook(n, d)) == hook_kostka(mu, d)))
        return fail(r, "mu = " + mu.to_string() + ", d = " + std::to_string(d));
  }
  return pass(r, "all mu of size <= " + std::to_string(n_max));
}

CheckResult check_duality(int n_max, int workers) {
  CheckResult r = named("H~_mu(q,t) = H~_mu'(t,q)");
  for (const Partition& mu : partitions_upto(n_max)) {
    const SchurVector a = H_tilde(mu, n_max, workers).schur_vec;
    const SchurVector b = H_tilde(conjugate(mu), n_max, workers).schur_vec;
    if (!(a == b.map_coeffs(qt_swap))) return fail(r, "mu = " + mu.to_string());
  }
  return pass(r, "all mu of size <= " + std::to_string(n_max));
}

CheckResult check_kostka_positivity(int n_max, int workers) {
  CheckResult r = named("K~ entries lie in N[q,t] and K~(1,1) = #SYT(lambda)");
  for (const Partition& mu : partitions_upto(n_max)) {
    const SchurVector row = H_tilde(mu, n_max, workers).schur_vec;
    for (const Partition& lambda : partitions_of(mu.size())) {
      const LaurentQT c = row.coeff(lambda);
      if (c.has_negative_exponent() || !c.nonnegative_coefficients())
        return fail(r, "negative entry at lambda = " + lambda.to_string() + ", mu = " + mu.to_string());
      if (c.evaluate(1, 1) != static_cast<long>(syt_count(lambda)))
        return fail(r, "K~(1,1) at lambda = " + lambda.to_string() + ", mu = " + mu.to_string());
    }
  }
  return pass(r, "all mu of size <= " + std::to_string(n_max));
}

CheckResult check_involutions(int max_size, int bound) {
  CheckResult r = named("Psi and Phi: involutive, fixed sets, weights, cancellation, support");
  long total = 0;
  for (const Partition& mu : partitions_upto(max_size))
    for (Involution which : {Involution::Psi, Involution::Phi}) {
      const InvolutionReport rep = verify_involution(mu, bound, which);
      total += rep.fillings;
      if (!rep.ok()) {
        const char* what = !rep.involutive      ? "involutive"
                           : !rep.fixed_set     ? "fixed set"
                           : !rep.weight        ? "weight"
                           : !rep.sign_reversing ? "sign reversal"
                           : !rep.support       ? "support"
                                                : "cancellation";
        return fail(r, std::string(which == Involution::Psi ? "Psi" : "Phi") + " " + what + ", mu = " + mu.to_string());
      }
    }
  return pass(r, std::to_string(total) + " super fillings, letters <= " + std::to_string(bound));
}

CheckResult check_ribbon_llt(int n_max) {
  CheckResult r = named("F_mu,D = G_nu(mu,D)");
  long cases = 0;
  for (const Partition& mu : partitions_upto(n_max))
    for (const auto& D : descent_subsets(mu)) {
      ++cases;
      if (!check_ribbon_correspondence(mu, D, mu.size()))
        return fail(r, "mu = " + mu.to_string() + ", D = " + set_to_string(D));
    }
  return pass(r, std::to_string(cases) + " pairs (mu, D)");
}

CheckResult check_llt_transpose(int n_max) {
  CheckResult r = named("G_nu'(y;q) = q^m G~_nu(0,y;1/q) and its omega form");
  long cases = 0;
  for (const Partition& mu : partitions_upto(n_max))
    for (const auto& D : descent_subsets(mu)) {
      const SkewTuple nu = nu_of_mu(mu, D);
      ++cases;
      if (!check_transpose_identity(nu, mu.size()) || !check_transpose_omega(nu))
        return fail(r, "mu = " + mu.to_string() + ", D = " + set_to_string(D));
    }
  return pass(r, std::to_string(cases) + " tuples");
}

CheckResult check_beta_sequences(int count, int max_len, unsigned seed) {
  CheckResult r = named("G_beta symmetric and G_beta - G_alpha recursion");
  std::mt19937 rng(seed);
  for (int k = 0; k < count; ++k) {
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len));
    std::vector<Rational> betas;
    Rational cur(static_cast<long long>(rng() % 5) - 2, 1 + static_cast<long long>(rng() % 3));
    for (int i = 0; i < n; ++i) {
      betas.push_back(cur);
      cur += Rational(1 + static_cast<long long>(rng() % 7), 1 + static_cast<long long>(rng() % 4));
    }
    const XPolynomial g = g_beta(betas);
    if (!is_symmetric(g) || !check_beta_recursion(betas)) {
      std::string s;
      for (const Rational& b : betas) s += (s.empty() ? "" : " ") + std::to_string(b.numerator()) + "/" + std::to_string(b.denominator());
      return fail(r, "beta = " + s);
    }
  }
  return pass(r, std::to_string(count) + " random sequences, length <= " + std::to_string(max_len));
}

CheckResult check_two_cell_columns(int n_max) {
  CheckResult r = named("two-variable LLT: two-cell columns factor out as q^h x1 x2");
  long cases = 0;
  for (const Partition& mu : partitions_upto(n_max))
    for (const auto& D : descent_subsets(mu)) {
      const SkewTuple nu = nu_of_mu(mu, D);
      bool tall = false;
      for (const SkewShape& s : nu.shapes)
        for (const Cell& u : s.cells())
          if (s.contains({u.row + 2, u.col})) tall = true;
      if (tall) continue;
      ++cases;
      if (!check_two_cell_column_reduction(nu)) return fail(r, "mu = " + mu.to_string() + ", D = " + set_to_string(D));
    }
  return pass(r, std::to_string(cases) + " tuples");
}

CheckResult check_hall_littlewood(int n_max, int workers) {
  CheckResult r = named("K~(0,t) equals the cocharge sum over SSYT(lambda, mu)");
  for (const Partition& mu : partitions_upto(n_max)) {
    (void)workers;
    if (!(hall_littlewood_from_kostka(mu, n_max) == hall_littlewood_schur(mu))) return fail(r, "mu = " + mu.to_string());
  }
  return pass(r, "all mu of size <= " + std::to_string(n_max));
}

CheckResult check_cocharge_of_cword(int samples, int max_size, unsigned seed) {
  CheckResult r = named("maj = cocharge(cword) on inv = 0 fillings");
  std::mt19937 rng(seed);
  const auto shapes = partitions_upto(max_size);
  for (int k = 0; k < samples; ++k) {
    const Partition& mu = shapes[rng() % shapes.size()];
    std::vector<std::vector<int>> rows;
    const int top = 1 + static_cast<int>(rng() % static_cast<unsigned>(mu.size() + 1));
    for (int i = 1; i <= mu.length(); ++i) {
      std::vector<int> m;
      for (int j = 0; j < mu.row_length(i); ++j) m.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(top)));
      rows.push_back(std::move(m));
    }
    const SuperFilling s = unique_inv_zero_filling(mu, rows);
    if (inv(s) != 0) return fail(r, "inv != 0 for " + format_filling(s));
    if (maj(s) != cocharge(cocharge_word(s))) return fail(r, "filling " + format_filling(s));
  }
  return pass(r, std::to_string(samples) + " random fillings, size <= " + std::to_string(max_size));
}

CheckResult check_cocharge_plactic(int max_len) {
  CheckResult r = named("cocharge(w) = cocharge(R(w))");
  long words = 0;
  for (const Partition& mu : partitions_upto(max_len)) {
    Word w;
    for (int i = 1; i <= mu.length(); ++i) w.insert(w.end(), static_cast<std::size_t>(mu.row_length(i)), i);
    do {
      ++words;
      if (cocharge(w) != cocharge(rectification(w))) return fail(r, "w = " + format_word(w));
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return pass(r, std::to_string(words) + " words with partition content");
}

CheckResult check_integral_form(int n_max) {
  CheckResult r = named("J_mu from non-attacking fillings of mu' = t^n(mu) H~_mu[X(1-t); q, 1/t]");
  for (const Partition& mu : partitions_upto(n_max))
    if (!(j_integral(mu, mu.size()) == j_from_h(mu, mu.size()))) return fail(r, "mu = " + mu.to_string());
  return pass(r, "all mu of size <= " + std::to_string(n_max));
}

CheckResult check_jack_limit(int n_max, int max_alpha) {
  CheckResult r = named("Knop-Sahi formula = lim J_mu(t^a, t) / (1-t)^n");
  for (const Partition& mu : partitions_upto(n_max))
    for (int a = 1; a <= max_alpha; ++a)
      if (!(knop_sahi_at(mu, mu.size(), a) == jack_limit_oracle(mu, mu.size(), a)))
        return fail(r, "mu = " + mu.to_string() + ", alpha = " + std::to_string(a));
  return pass(r, "alpha = 1.." + std::to_string(max_alpha));
}

CheckResult check_absolute_inversions(int n_max) {
  CheckResult r = named("sign-pattern sums over |sigma| = tau factor through ainv");
  for (const Partition& mu : partitions_upto(n_max))
    if (!check_tau_terms(mu, mu.size())) return fail(r, "mu = " + mu.to_string());
  return pass(r, "all mu of size <= " + std::to_string(n_max));
}

CheckResult check_word_crystal(int axiom_len, int alphabet, int fiber_len) {
  CheckResult r = named("word crystal: axioms, Q preserved, one Yamanouchi word per connected Q-fiber");
  const CrystalReport rep = verify_word_crystal(axiom_len, alphabet, fiber_len);
  if (!rep.axioms) return fail(r, "axioms");
  if (!rep.q_preserved) return fail(r, "recording tableau changed");
  if (!rep.yamanouchi) return fail(r, "Yamanouchi words differ from maximal words");
  if (!rep.unique_yamanouchi) return fail(r, "Q-fiber without exactly one Yamanouchi word");
  if (!rep.connected) return fail(r, "disconnected Q-fiber");
  return pass(r, "length <= " + std::to_string(axiom_len) + " over " + std::to_string(alphabet) +
                     " letters; fibers to length " + std::to_string(fiber_len));
}

CheckResult check_two_column_rule(int n_max, int workers) {
  CheckResult r = named("two-column K~ from Yamanouchi reading words");
  for (const Partition& mu : partitions_upto(n_max)) {
    if (!two_columns(mu)) continue;
    const SchurVector row = H_tilde(mu, n_max, workers).schur_vec;
    for (const Partition& lambda : partitions_of(mu.size()))
      if (!(row.coeff(lambda) == two_column_kostka(lambda, mu)))
        return fail(r, "lambda = " + lambda.to_string() + ", mu = " + mu.to_string());
  }
  return pass(r, "two-column mu of size <= " + std::to_string(n_max));
}

CheckResult check_filling_crystal(int n_max, int bound) {
  CheckResult r = named("filling operators: pairing, Des and |Inv| kept, R o w a homomorphism");
  long total = 0;
  for (const Partition& mu : partitions_upto(n_max)) {
    if (!two_columns(mu)) continue;
    const FillingCrystalReport rep = crystal_homomorphism_check(mu, bound);
    total += rep.fillings;
    if (!rep.pairing) return fail(r, "E/F pairing, mu = " + mu.to_string());
    if (!rep.null_agreement) return fail(r, "null mismatch, mu = " + mu.to_string());
    if (!rep.statistics) return fail(r, "statistics changed, mu = " + mu.to_string());
    if (!rep.homomorphism) return fail(r, "rectification, mu = " + mu.to_string());
  }
  return pass(r, std::to_string(total) + " fillings, entries <= " + std::to_string(bound));
}

CheckResult check_crystal_covering(int bound) {
  CheckResult r = named("fibers of R o w over each V_lambda have equal size (mu = 2,2)");
  if (!crystal_covering_check(Partition{2, 2}, bound)) return fail(r, "entries <= " + std::to_string(bound));
  return pass(r, "entries <= " + std::to_string(bound));
}

CheckResult check_two_column_refinement(int n_max) {
  CheckResult r = named("Yamanouchi rule refines to each F_mu,D");
  for (const Partition& mu : partitions_upto(n_max))
    if (two_columns(mu) && !check_descent_refinement(mu)) return fail(r, "mu = " + mu.to_string());
  return pass(r, "two-column mu of size <= " + std::to_string(n_max));
}

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms", "llt", "involutions", "cocharge", "jack", "crystal"};
  return names;
}

namespace {

std::vector<CheckResult> suite_checks(const std::string& s, int n, int w) {
  if (s == "axioms")
    return {check_normalization(n, w),        check_symmetry(n, w),          check_specialization_support(n, w),
            check_naive_enumeration(std::min(n, 4)), check_inversion_triples(std::min(n, 4), 2),
            check_quasisymmetric_expansions(std::min(n, 4)), check_one_minus_u(n), check_hook_rows(n, w),
            check_duality(n, w),              check_kostka_positivity(n, w)};
  if (s == "llt")
    return {check_ribbon_llt(n), check_llt_transpose(n), check_beta_sequences(50, std::max(n, 2) + 2, 1u),
            check_two_cell_columns(n)};
  if (s == "involutions") return {check_involutions(std::min(n, 4), 3)};
  if (s == "cocharge")
    return {check_hall_littlewood(n, w), check_cocharge_of_cword(200, std::min(std::max(n, 1), 6), 1u),
            check_cocharge_plactic(std::min(n, 7))};
  if (s == "jack") return {check_integral_form(n), check_jack_limit(n, 3), check_absolute_inversions(std::min(n, 3))};
  if (s == "crystal")
    return {check_word_crystal(std::min(n + 1, 7), 4, std::min(n, 6)), check_two_column_rule(n, w),
            check_filling_crystal(n, 3), check_crystal_covering(3), check_two_column_refinement(std::min(n, 4))};
  throw std::invalid_argument("unknown suite: " + s);
}

}  // namespace

std::vector<SuiteReport> run_suite(const std::string& suite, int n_max, int workers) {
  if (n_max < 1) throw std::invalid_argument("n-max must be positive");
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end()) names = {suite};
  else throw std::invalid_argument("unknown suite: " + suite);
  std::vector<SuiteReport> out;
  for (const auto& name : names) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.suite = name;
    rep.checks = suite_checks(name, n_max, workers);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(rep));
  }
  return out;
}

std::string render_report(const SuiteReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) out << (c.passed ? "PASS " : "FAIL ") << r.suite << ": " << c.name << " [" << c.detail << "]\n";
  out << r.suite << ": " << (r.ok() ? "pass" : "FAIL") << "\n";
  return out.str();
}

}  // namespace macfill
