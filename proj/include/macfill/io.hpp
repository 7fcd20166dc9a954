#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>

#include "macfill/filling.hpp"
#include "macfill/macdonald.hpp"
#include "macfill/special.hpp"

namespace macfill {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Coefficients are decimal strings so no integer width is assumed.
json to_json(const LaurentQT& c);
LaurentQT laurent_from_json(const json& j);
json to_json(const AlphaPoly& c);
AlphaPoly alpha_from_json(const json& j);

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const MBasisVector& v);
json to_json(const SchurVector& v);
MBasisVector m_vector_from_json(const json& j);
SchurVector schur_vector_from_json(const json& j);
json to_json(const JackPolynomial& v);
JackPolynomial jack_from_json(const json& j);

json to_json(const XPolynomial& f);
XPolynomial xpoly_from_json(const json& j);

json to_json(const SuperFilling& s);
SuperFilling filling_from_json(const json& j);

json to_json(const SkewTuple& nu);
SkewTuple tuple_from_json(const json& j);

json to_json(const MacdonaldResult& r);
MacdonaldResult macdonald_from_json(const json& j);

/// K~_{lambda mu}(q,t) for all lambda, mu of n in reverse lexicographic order;
/// entries[a][b] is the coefficient for lambda = partitions[a], mu = partitions[b].
struct KostkaTable {
  int n = 0;
  std::vector<Partition> partitions;
  std::vector<std::vector<LaurentQT>> entries;
  friend bool operator==(const KostkaTable&, const KostkaTable&) = default;
};

KostkaTable kostka_table(int n, int guard, int workers = 0);
json to_json(const KostkaTable& t);
KostkaTable kostka_table_from_json(const json& j);
std::string render_kostka_table(const KostkaTable& t);

/// Directory of cached results, one JSON file per key. Writes go through a
/// temporary file and a rename, so readers never see a partial file.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir);

  /// The flag wins over MACFILL_CACHE_DIR; none when neither is set.
  static std::optional<std::filesystem::path> resolve_dir(const std::optional<std::string>& flag);

  /// Cached document for key, or none if absent, unreadable or written under
  /// another schema version.
  std::optional<json> load(const std::string& key) const;
  void store(const std::string& key, const json& doc) const;
  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace macfill
