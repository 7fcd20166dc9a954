#include <CLI11.hpp>

#include <chrono>
#include <climits>
#include <iostream>
#include <optional>
#include <sstream>

#include "macfill/crystal.hpp"
#include "macfill/enumerate.hpp"
#include "macfill/io.hpp"
#include "macfill/llt.hpp"
#include "macfill/macdonald.hpp"
#include "macfill/special.hpp"
#include "macfill/verify.hpp"

using namespace macfill;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kTableGuard = 6;

struct Options {
  std::string format = "text";
  std::string basis;
  std::string mu;
  std::string lambda;
  std::string cache_dir;
  std::string suite;
  int workers = 1;
  int vars = 0;
  int n = 0;
  int n_max = 4;
  std::optional<int> alpha;
  bool force_guard = false;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int guard_for(const Options& o, int fallback) { return o.force_guard ? INT_MAX : fallback; }

int vars_for(const Options& o, const Partition& mu) {
  const int N = o.vars > 0 ? o.vars : mu.size();
  if (N < mu.size()) throw UsageError("--vars must be at least |mu| for a symmetric expansion");
  return N;
}

std::optional<TableCache> open_cache(const Options& o) {
  const auto dir = TableCache::resolve_dir(o.cache_dir.empty() ? std::nullopt : std::optional<std::string>(o.cache_dir));
  if (!dir) return std::nullopt;
  return TableCache(*dir);
}

void emit(const Options& o, const std::string& text, const json& doc) {
  if (o.format == "json") std::cout << doc.dump(1) << "\n";
  else std::cout << text << "\n";
}

std::string tuple_to_string(const SkewTuple& nu) {
  std::string s = "(";
  for (std::size_t j = 0; j < nu.shapes.size(); ++j) {
    if (j) s += ", ";
    s += "[" + nu.shapes[j].outer().to_string() + "]/[" + nu.shapes[j].inner().to_string() + "]";
  }
  return s + ")";
}

std::string descents_to_string(const std::set<Cell>& D) {
  std::string s = "{";
  for (const Cell& u : D) s += (s.size() > 1 ? "," : "") + std::string("(") + std::to_string(u.row) + "," + std::to_string(u.col) + ")";
  return s + "}";
}

int cmd_hmu(const Options& o) {
  const Partition mu = parse_partition(o.mu);
  check_guard(mu.size(), guard_for(o, kDefaultSizeGuard), "hmu");
  const std::string key = "hmu_mu=" + mu.to_string();
  auto cache = open_cache(o);
  std::optional<MacdonaldResult> r;
  if (cache)
    if (auto doc = cache->load(key)) r = macdonald_from_json(*doc);
  if (!r) {
    r = H_tilde(mu, INT_MAX, o.workers);
    if (cache) cache->store(key, to_json(*r));
  }
  const std::string basis = o.basis.empty() ? "schur" : o.basis;
  json doc{{"schema_version", kSchemaVersion}, {"mu", to_json(mu)}, {"basis", basis}};
  std::string text;
  if (basis == "schur") {
    text = render_schur(r->schur_vec);
    doc["value"] = to_json(r->schur_vec);
  } else if (basis == "m") {
    text = render_m(r->m_vec);
    doc["value"] = to_json(r->m_vec);
  } else {
    text = render_x(r->x_poly);
    doc["value"] = to_json(r->x_poly);
  }
  emit(o, text, doc);
  return kExitOk;
}

int cmd_kostka_table(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be positive");
  check_guard(o.n, guard_for(o, kTableGuard), "kostka-table");
  const std::string key = "kostka-table_n=" + std::to_string(o.n);
  auto cache = open_cache(o);
  std::optional<KostkaTable> t;
  if (cache)
    if (auto doc = cache->load(key)) t = kostka_table_from_json(*doc);
  if (!t) {
    t = kostka_table(o.n, INT_MAX, o.workers);
    if (cache) cache->store(key, to_json(*t));
  }
  emit(o, render_kostka_table(*t), to_json(*t));
  return kExitOk;
}

int cmd_llt(const Options& o) {
  const Partition mu = parse_partition(o.mu);
  check_guard(mu.size(), guard_for(o, kDefaultSizeGuard), "llt");
  const int N = vars_for(o, mu);
  const std::string basis = o.basis.empty() ? "schur" : o.basis;
  if (basis != "schur" && basis != "x") throw UsageError("llt supports --basis schur or x");
  std::ostringstream text;
  json items = json::array();
  for (const auto& D : descent_subsets(mu)) {
    const SkewTuple nu = nu_of_mu(mu, D);
    const XPolynomial g = G_nu(nu, N);
    json item{{"descents", json::array()}, {"tuple", to_json(nu)}};
    for (const Cell& u : D) item["descents"].push_back({u.row, u.col});
    std::string value;
    if (basis == "schur") {
      const SchurVector s = to_schur(g);
      value = render_schur(s);
      item["value"] = to_json(s);
    } else {
      value = render_x(g);
      item["value"] = to_json(g);
    }
    text << "D = " << descents_to_string(D) << "  nu = " << tuple_to_string(nu) << "\n  " << value << "\n";
    items.push_back(std::move(item));
  }
  std::string out = text.str();
  if (!out.empty()) out.pop_back();
  emit(o, out, {{"schema_version", kSchemaVersion}, {"mu", to_json(mu)}, {"basis", basis}, {"llt", items}});
  return kExitOk;
}

int cmd_jack(const Options& o) {
  const Partition mu = parse_partition(o.mu);
  check_guard(mu.size(), guard_for(o, kDefaultSizeGuard), "jack");
  const int N = vars_for(o, mu);
  JackPolynomial v = knop_sahi(mu, N);
  json doc{{"schema_version", kSchemaVersion}, {"mu", to_json(mu)}};
  if (o.alpha) {
    if (*o.alpha < 1) throw UsageError("--alpha must be a positive integer");
    const long a = *o.alpha;
    v = v.map_coeffs([a](const AlphaPoly& c) {
      AlphaPoly r;
      r.add_term(0, c.evaluate(a));
      return r;
    });
    doc["alpha"] = a;
  }
  doc["value"] = to_json(v);
  emit(o, render_jack(v), doc);
  return kExitOk;
}

int cmd_jmu(const Options& o) {
  const Partition mu = parse_partition(o.mu);
  check_guard(mu.size(), guard_for(o, kDefaultSizeGuard), "jmu");
  const int N = vars_for(o, mu);
  const std::string basis = o.basis.empty() ? "m" : o.basis;
  const XPolynomial j = j_integral(mu, N);
  json doc{{"schema_version", kSchemaVersion}, {"mu", to_json(mu)}, {"basis", basis}};
  if (basis == "m") {
    const MBasisVector m = to_m_basis(j);
    doc["value"] = to_json(m);
    emit(o, render_m(m), doc);
  } else if (basis == "schur") {
    const SchurVector s = to_schur(j);
    doc["value"] = to_json(s);
    emit(o, render_schur(s), doc);
  } else {
    doc["value"] = to_json(j);
    emit(o, render_x(j), doc);
  }
  return kExitOk;
}

int cmd_hall_littlewood(const Options& o) {
  const Partition mu = parse_partition(o.mu);
  check_guard(mu.size(), guard_for(o, kDefaultSizeGuard), "hall-littlewood");
  const SchurVector v = hall_littlewood_schur(mu);
  emit(o, render_schur(v), {{"schema_version", kSchemaVersion}, {"mu", to_json(mu)}, {"value", to_json(v)}});
  return kExitOk;
}

int cmd_two_column(const Options& o) {
  const Partition mu = parse_partition(o.mu), lambda = parse_partition(o.lambda);
  check_guard(mu.size(), guard_for(o, kDefaultSizeGuard), "two-column");
  if (mu.length() > 0 && mu.row_length(1) > 2) throw UsageError("--mu must have at most two columns");
  if (lambda.size() != mu.size()) throw UsageError("--lambda and --mu must have the same size");
  const LaurentQT c = two_column_kostka(lambda, mu);
  emit(o, c.to_string(),
       {{"schema_version", kSchemaVersion}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"value", to_json(c)}});
  return kExitOk;
}

int report(const std::vector<SuiteReport>& reports) {
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << render_report(r);
    std::cerr << r.suite << ": " << r.seconds << " s\n";
    ok = ok && r.ok();
  }
  return ok ? kExitOk : kExitVerify;
}

int cmd_verify(const Options& o) { return report(run_suite(o.suite, o.n_max, o.workers)); }

int cmd_crystal_verify(const Options& o) { return report(run_suite("crystal", o.n > 0 ? o.n : 4, o.workers)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics of modified Macdonald polynomials via fillings"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--workers", o.workers, "Worker threads for enumeration")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", o.cache_dir, "Cache directory (overrides MACFILL_CACHE_DIR)");
  app.add_flag("--force-guard", o.force_guard, "Allow sizes beyond the default guard");

  auto* hmu = app.add_subcommand("hmu", "H~_mu in the Schur, monomial or x basis");
  hmu->add_option("--mu", o.mu, "Partition, e.g. 3,1")->required();
  hmu->add_option("--basis", o.basis, "schur (default), m or x")->check(CLI::IsMember({"schur", "m", "x"}));

  auto* table = app.add_subcommand("kostka-table", "All K~_{lambda mu}(q,t) for partitions of n");
  table->add_option("--n", o.n, "Size")->required();

  auto* llt = app.add_subcommand("llt", "G_nu for the tuples nu(mu, D)");
  llt->add_option("--mu", o.mu, "Partition")->required();
  llt->add_option("--vars", o.vars, "Number of variables (default |mu|)");
  llt->add_option("--basis", o.basis, "schur (default) or x");

  auto* jack = app.add_subcommand("jack", "Integral form Jack polynomial by the Knop-Sahi formula");
  jack->add_option("--mu", o.mu, "Partition")->required();
  jack->add_option("--alpha", o.alpha, "Evaluate at this positive integer");
  jack->add_option("--vars", o.vars, "Number of variables (default |mu|)");

  auto* jmu = app.add_subcommand("jmu", "Integral form J_mu(x;q,t)");
  jmu->add_option("--mu", o.mu, "Partition")->required();
  jmu->add_option("--vars", o.vars, "Number of variables (default |mu|)");
  jmu->add_option("--basis", o.basis, "m (default), schur or x")->check(CLI::IsMember({"m", "schur", "x"}));

  auto* hl = app.add_subcommand("hall-littlewood", "H~_mu(x;0,t) from cocharge");
  hl->add_option("--mu", o.mu, "Partition")->required();

  auto* two = app.add_subcommand("two-column", "K~_{lambda mu} for two-column mu from Yamanouchi fillings");
  two->add_option("--lambda", o.lambda, "Partition")->required();
  two->add_option("--mu", o.mu, "Partition with at most two columns")->required();

  auto* verify = app.add_subcommand("verify", "Run identity checks");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", o.suite, "axioms, llt, involutions, cocharge, jack, crystal or all")
      ->required()
      ->check(CLI::IsMember(suites));
  verify->add_option("--n-max", o.n_max, "Largest partition size")->check(CLI::PositiveNumber);

  auto* crystal = app.add_subcommand("crystal", "Crystal structures");
  crystal->require_subcommand(1);
  auto* cverify = crystal->add_subcommand("verify", "Check word and two-column filling crystals");
  cverify->add_option("--n", o.n, "Largest size")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    set_default_workers(o.workers);
    if (*hmu) return cmd_hmu(o);
    if (*table) return cmd_kostka_table(o);
    if (*llt) return cmd_llt(o);
    if (*jack) return cmd_jack(o);
    if (*jmu) return cmd_jmu(o);
    if (*hl) return cmd_hall_littlewood(o);
    if (*two) return cmd_two_column(o);
    if (*verify) return cmd_verify(o);
    if (*cverify) return cmd_crystal_verify(o);
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
  return kExitUsage;
}
