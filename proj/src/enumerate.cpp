#include "macfill/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace macfill {

namespace {

std::atomic<int> g_workers{1};

struct CellInfo {
  std::vector<std::size_t> earlier_attackers;  // reading-order indices
  long above = -1;                             // index of the cell directly above, if any
  int above_leg_plus_1 = 0;
  int above_arm = 0;
};

struct Key {
  std::uint64_t mono;
  std::int32_t qe;
  std::int32_t te;
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = k.mono * 0x9E3779B97F4A7C15ULL;
    h ^= (static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.qe)) << 32 | static_cast<std::uint32_t>(k.te)) +
         0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

using Accumulator = std::unordered_map<Key, long long, KeyHash>;

struct Letters {
  std::vector<long> rank;
  std::vector<bool> negative;
  std::vector<int> var;
};

class Engine {
 public:
  Engine(const EnumerationSpec& spec, const LeafWeigher& weigh) : spec_(spec), weigh_(weigh) {
    cells_ = reading_order(spec.mu);
    if (cells_.size() > 64) throw std::invalid_argument("diagram too large for enumeration");
    std::vector<Letter> letters;
    for (int i = 1; i <= spec.nx; ++i) letters.push_back(i);
    for (int i = 1; i <= spec.ny; ++i) letters.push_back(-i);
    for (Letter x : letters) {
      letters_.rank.push_back(letter_rank(x, spec.order));
      letters_.negative.push_back(x < 0);
      if (spec.mode == MonomialMode::Signed) letters_.var.push_back(x > 0 ? x - 1 : spec.nx - x - 1);
      else letters_.var.push_back(std::abs(x) - 1);
    }
    nvars_ = spec.mode == MonomialMode::Signed ? spec.nx + spec.ny : std::max(spec.nx, spec.ny);
    if (nvars_ > 16 || spec.mu.size() > 15) throw std::invalid_argument("enumeration exceeds packed monomial range");

    info_.resize(cells_.size());
    for (std::size_t k = 0; k < cells_.size(); ++k) {
      for (std::size_t a = 0; a < k; ++a)
        if (attacks(cells_[a], cells_[k])) info_[k].earlier_attackers.push_back(a);
      const Cell up{cells_[k].row + 1, cells_[k].col};
      if (spec.mu.contains(up)) {
        auto it = std::find(cells_.begin(), cells_.end(), up);
        info_[k].above = it - cells_.begin();
        info_[k].above_leg_plus_1 = leg(spec.mu, up) + 1;
        info_[k].above_arm = arm(spec.mu, up);
      }
    }
  }

  XPolynomial run(int workers) {
    XPolynomial out = spec_.mode == MonomialMode::Signed ? XPolynomial(spec_.nx, spec_.ny) : XPolynomial(nvars_);
    const std::size_t nl = letters_.rank.size();
    if (cells_.empty()) {
      Accumulator acc;
      leaf(LeafStats{}, 0, acc);
      merge(acc, out);
      return out;
    }
    if (nl == 0) return out;
    workers = std::max(1, std::min<int>(workers, static_cast<int>(nl)));
    std::vector<Accumulator> accs(static_cast<std::size_t>(workers));
    std::atomic<std::size_t> next{0};
    auto work = [&](std::size_t w) {
      std::vector<std::size_t> placed(cells_.size());
      for (std::size_t first; (first = next.fetch_add(1)) < nl;) {
        placed[0] = first;
        LeafStats st;
        (letters_.negative[first] ? st.negatives : st.positives) += 1;
        dfs(1, placed, st, std::uint64_t{1} << (4 * letters_.var[first]), accs[w]);
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, static_cast<std::size_t>(w));
      for (auto& th : pool) th.join();
    }
    // Integer addition commutes, so the merged result does not depend on scheduling.
    for (auto& acc : accs) merge(acc, out);
    return out;
  }

 private:
  int I(std::size_t x, std::size_t y) const {
    if (x == y) return letters_.negative[x] ? 1 : 0;
    return letters_.rank[x] > letters_.rank[y] ? 1 : 0;
  }

  void dfs(std::size_t k, std::vector<std::size_t>& placed, const LeafStats& st, std::uint64_t mono, Accumulator& acc) {
    if (k == cells_.size()) {
      leaf(st, mono, acc);
      return;
    }
    const CellInfo& ci = info_[k];
    for (std::size_t x = 0; x < letters_.rank.size(); ++x) {
      LeafStats next = st;
      for (std::size_t a : ci.earlier_attackers) next.inv_pairs += I(placed[a], x);
      if (ci.above >= 0 && I(placed[static_cast<std::size_t>(ci.above)], x)) {
        next.maj += ci.above_leg_plus_1;
        next.des_arm += ci.above_arm;
        next.des_mask |= std::uint64_t{1} << ci.above;
      }
      (letters_.negative[x] ? next.negatives : next.positives) += 1;
      placed[k] = x;
      dfs(k + 1, placed, next, mono + (std::uint64_t{1} << (4 * letters_.var[x])), acc);
    }
  }

  void leaf(const LeafStats& st, std::uint64_t mono, Accumulator& acc) const {
    const LeafWeight w = weigh_(st);
    if (!w.keep || w.sign == 0) return;
    acc[Key{mono, w.qexp, w.texp}] += w.sign;
  }

  void merge(const Accumulator& acc, XPolynomial& out) const {
    for (const auto& [key, count] : acc) {
      if (count == 0) continue;
      Exponents e(static_cast<std::size_t>(nvars_));
      for (int v = 0; v < nvars_; ++v) e[static_cast<std::size_t>(v)] = static_cast<int>((key.mono >> (4 * v)) & 0xF);
      out.add(e, LaurentQT::monomial(key.qe, key.te, BigInt(static_cast<long>(count))));
    }
  }

  const EnumerationSpec& spec_;
  const LeafWeigher& weigh_;
  std::vector<Cell> cells_;
  std::vector<CellInfo> info_;
  Letters letters_;
  int nvars_ = 0;
};

}  // namespace

XPolynomial enumerate_fillings(const EnumerationSpec& spec, const LeafWeigher& weigh) {
  Engine engine(spec, weigh);
  return engine.run(spec.workers > 0 ? spec.workers : default_workers());
}

int default_workers() { return g_workers.load(); }

void set_default_workers(int n) {
  if (n < 1) throw std::invalid_argument("worker count must be positive");
  g_workers.store(n);
}

}  // namespace macfill
