#pragma once

#include <string>
#include <vector>

namespace macfill {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample, or a short summary
};

// Each check covers every partition of size <= n_max unless noted.

CheckResult check_normalization(int n_max, int workers = 0);
CheckResult check_symmetry(int n_max, int workers = 0);
CheckResult check_specialization_support(int n_max, int workers = 0);
CheckResult check_naive_enumeration(int n_max);
CheckResult check_inversion_triples(int n_max, int bound);
CheckResult check_quasisymmetric_expansions(int n_max);
CheckResult check_one_minus_u(int n_max);
CheckResult check_hook_rows(int n_max, int workers = 0);
CheckResult check_duality(int n_max, int workers = 0);
CheckResult check_kostka_positivity(int n_max, int workers = 0);

CheckResult check_involutions(int max_size, int bound);

CheckResult check_ribbon_llt(int n_max);
CheckResult check_llt_transpose(int n_max);
CheckResult check_beta_sequences(int count, int max_len, unsigned seed);
CheckResult check_two_cell_columns(int n_max);

CheckResult check_hall_littlewood(int n_max, int workers = 0);
CheckResult check_cocharge_of_cword(int samples, int max_size, unsigned seed);
CheckResult check_cocharge_plactic(int max_len);

CheckResult check_integral_form(int n_max);
CheckResult check_jack_limit(int n_max, int max_alpha);
CheckResult check_absolute_inversions(int n_max);

CheckResult check_word_crystal(int axiom_len, int alphabet, int fiber_len);
CheckResult check_two_column_rule(int n_max, int workers = 0);
CheckResult check_filling_crystal(int n_max, int bound);
CheckResult check_crystal_covering(int bound);
CheckResult check_two_column_refinement(int n_max);

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0;
  bool ok() const;
};

/// axioms, llt, involutions, cocharge, jack, crystal.
const std::vector<std::string>& suite_names();
/// Runs one suite, or every suite for "all". Throws std::invalid_argument for
/// an unknown name.
std::vector<SuiteReport> run_suite(const std::string& suite, int n_max, int workers = 0);
std::string render_report(const SuiteReport& r);

}  // namespace macfill
