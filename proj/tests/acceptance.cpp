// One line per acceptance criterion. Bounds and time limits are fixed here.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "macfill/enumerate.hpp"
#include "macfill/verify.hpp"

using namespace macfill;

namespace {

struct Criterion {
  int id;
  std::string description;
  double limit_seconds;  // 0: no limit
  std::function<std::vector<CheckResult>()> run;
};

}  // namespace

int main() {
  set_default_workers(static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));
  const std::vector<Criterion> criteria{
      {1, "normalization, x1^n coefficient of C_mu is 1, n <= 6", 60, [] { return std::vector{check_normalization(6)}; }},
      {2, "C_mu symmetric in n variables, n <= 5", 120, [] { return std::vector{check_symmetry(5)}; }},
      {3, "q-1 / t-1 specializations have m-support below mu' / mu, n <= 5", 600,
       [] { return std::vector{check_specialization_support(5)}; }},
      {4, "Psi and Phi: involutive, fixed sets, weights, cancellation, |mu| <= 4, bound 3", 0,
       [] { return std::vector{check_involutions(4, 3)}; }},
      {5, "ribbon LLT correspondence and transpose, n <= 5; 200 beta sequences, length <= 10", 0,
       [] {
         return std::vector{check_ribbon_llt(5), check_llt_transpose(5), check_beta_sequences(200, 10, 2024u)};
       }},
      {6, "(1-u) expansion is e_d[B_mu] and hook rows are e_d[B_mu - 1], n <= 6", 0,
       [] { return std::vector{check_one_minus_u(6), check_hook_rows(6)}; }},
      {7, "K~(0,t) is the cocharge sum, n <= 5; maj = cocharge(cword) on 1000 fillings, |mu| <= 6", 0,
       [] { return std::vector{check_hall_littlewood(5), check_cocharge_of_cword(1000, 6, 7u)}; }},
      {8, "integral form two ways, n <= 4; Knop-Sahi equals the t -> 1 limit, alpha 1..3", 0,
       [] { return std::vector{check_integral_form(4), check_jack_limit(4, 3)}; }},
      {9, "two-column rule n <= 6; word crystal (length 7, alphabet 4, fibers 6); filling operators n <= 6", 0,
       [] {
         return std::vector{check_two_column_rule(6), check_word_crystal(7, 4, 6), check_filling_crystal(6, 4)};
       }},
      {10, "duality, N[q,t] entries and K~(1,1) = #SYT, n <= 5", 0,
       [] { return std::vector{check_duality(5), check_kostka_positivity(5)}; }},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    std::string error;
    try {
      results = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = error.empty();
    for (const CheckResult& r : results)
      if (!r.passed) {
        ok = false;
        error += (error.empty() ? "" : "; ") + r.name + ": " + r.detail;
      }
    if (c.limit_seconds > 0 && sec >= c.limit_seconds) {
      ok = false;
      error += (error.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
    all = all && ok;
    std::string limit = c.limit_seconds > 0 ? ", limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s" : "";
    std::printf("AC%d %s %s (%.2f s%s)%s%s\n", c.id, ok ? "PASS" : "FAIL", c.description.c_str(), sec, limit.c_str(),
                error.empty() ? "" : " -- ", error.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
