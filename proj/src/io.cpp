#include "macfill/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace macfill {

json to_json(const LaurentQT& c) {
  json out = json::array();
  for (const auto& [k, v] : c.terms()) out.push_back({k.first, k.second, v.get_str()});
  return out;
}

LaurentQT laurent_from_json(const json& j) {
  LaurentQT c;
  for (const auto& term : j) c.add_term(term.at(0).get<int>(), term.at(1).get<int>(), BigInt(term.at(2).get<std::string>()));
  return c;
}

json to_json(const AlphaPoly& c) {
  json out = json::array();
  for (const auto& [e, v] : c.terms()) out.push_back({e, v.get_str()});
  return out;
}

AlphaPoly alpha_from_json(const json& j) {
  AlphaPoly c;
  for (const auto& term : j) c.add_term(term.at(0).get<int>(), BigInt(term.at(1).get<std::string>()));
  return c;
}

json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

namespace {

template <class Vec>
json basis_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& [p, c] : v.entries()) out.push_back({{"partition", to_json(p)}, {"coeff", to_json(c)}});
  return out;
}

template <class Vec, class F>
Vec basis_from_json(const json& j, F&& coeff) {
  Vec v;
  for (const auto& e : j) v.add(partition_from_json(e.at("partition")), coeff(e.at("coeff")));
  return v;
}

}  // namespace

json to_json(const MBasisVector& v) { return basis_to_json(v); }
json to_json(const SchurVector& v) { return basis_to_json(v); }
json to_json(const JackPolynomial& v) { return basis_to_json(v); }
MBasisVector m_vector_from_json(const json& j) { return basis_from_json<MBasisVector>(j, laurent_from_json); }
SchurVector schur_vector_from_json(const json& j) { return basis_from_json<SchurVector>(j, laurent_from_json); }
JackPolynomial jack_from_json(const json& j) { return basis_from_json<JackPolynomial>(j, alpha_from_json); }

json to_json(const XPolynomial& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coeff", to_json(c)}});
  return {{"nx", f.nx()}, {"ny", f.ny()}, {"terms", terms}};
}

XPolynomial xpoly_from_json(const json& j) {
  XPolynomial f(j.at("nx").get<int>(), j.at("ny").get<int>());
  for (const auto& t : j.at("terms")) f.add(t.at("exp").get<Exponents>(), laurent_from_json(t.at("coeff")));
  return f;
}

json to_json(const SuperFilling& s) { return {{"shape", to_json(s.shape())}, {"rows", s.rows()}}; }

SuperFilling filling_from_json(const json& j) {
  return SuperFilling(partition_from_json(j.at("shape")), j.at("rows").get<std::vector<std::vector<Letter>>>());
}

json to_json(const SkewTuple& nu) {
  json out = json::array();
  for (const SkewShape& s : nu.shapes) out.push_back({{"outer", to_json(s.outer())}, {"inner", to_json(s.inner())}});
  return out;
}

SkewTuple tuple_from_json(const json& j) {
  SkewTuple nu;
  for (const auto& s : j) nu.shapes.emplace_back(partition_from_json(s.at("outer")), partition_from_json(s.at("inner")));
  return nu;
}

json to_json(const MacdonaldResult& r) {
  return {{"schema_version", kSchemaVersion},
          {"mu", to_json(r.mu)},
          {"x", to_json(r.x_poly)},
          {"m", to_json(r.m_vec)},
          {"schur", to_json(r.schur_vec)}};
}

MacdonaldResult macdonald_from_json(const json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion) throw std::invalid_argument("unsupported schema version");
  MacdonaldResult r;
  r.mu = partition_from_json(j.at("mu"));
  r.x_poly = xpoly_from_json(j.at("x"));
  r.m_vec = m_vector_from_json(j.at("m"));
  r.schur_vec = schur_vector_from_json(j.at("schur"));
  return r;
}

KostkaTable kostka_table(int n, int guard, int workers) {
  check_guard(n, guard, "kostka table");
  KostkaTable t;
  t.n = n;
  t.partitions = partitions_of(n);
  const std::size_t m = t.partitions.size();
  t.entries.assign(m, std::vector<LaurentQT>(m));
  for (std::size_t b = 0; b < m; ++b) {
    const SchurVector row = H_tilde(t.partitions[b], n, workers).schur_vec;
    for (std::size_t a = 0; a < m; ++a) t.entries[a][b] = row.coeff(t.partitions[a]);
  }
  return t;
}

json to_json(const KostkaTable& t) {
  json parts = json::array(), rows = json::array();
  for (const auto& p : t.partitions) parts.push_back(to_json(p));
  for (const auto& r : t.entries) {
    json row = json::array();
    for (const auto& c : r) row.push_back(to_json(c));
    rows.push_back(row);
  }
  return {{"schema_version", kSchemaVersion}, {"n", t.n}, {"partitions", parts}, {"entries", rows}};
}

KostkaTable kostka_table_from_json(const json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion) throw std::invalid_argument("unsupported schema version");
  KostkaTable t;
  t.n = j.at("n").get<int>();
  for (const auto& p : j.at("partitions")) t.partitions.push_back(partition_from_json(p));
  for (const auto& r : j.at("entries")) {
    std::vector<LaurentQT> row;
    for (const auto& c : r) row.push_back(laurent_from_json(c));
    t.entries.push_back(std::move(row));
  }
  return t;
}

std::string render_kostka_table(const KostkaTable& t) {
  std::ostringstream out;
  out << "lambda \\ mu";
  for (const auto& mu : t.partitions) out << "\t" << mu.to_string();
  out << "\n";
  for (std::size_t a = 0; a < t.partitions.size(); ++a) {
    out << t.partitions[a].to_string();
    for (const auto& c : t.entries[a]) out << "\t" << c.to_string();
    out << "\n";
  }
  return out.str();
}

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

std::optional<std::filesystem::path> TableCache::resolve_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv("MACFILL_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

std::filesystem::path TableCache::path_for(const std::string& key) const {
  std::string name;
  for (char c : key) name += std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ',' ? c : '_';
  return dir_ / (name + ".json");
}

std::optional<json> TableCache::load(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || doc.value("schema_version", -1) != kSchemaVersion) return std::nullopt;
  return doc;
}

void TableCache::store(const std::string& key, const json& doc) const {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(key);
  auto tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << doc.dump(1) << "\n";
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace macfill
