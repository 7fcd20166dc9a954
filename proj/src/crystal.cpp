#include "macfill/crystal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "macfill/macdonald.hpp"

namespace macfill {

namespace {

struct Bracketing {
  std::vector<std::size_t> open;   // unmatched i+1, left to right
  std::vector<std::size_t> close;  // unmatched i, left to right
};

Bracketing bracket(const Word& w, int i) {
  if (i < 1) throw std::invalid_argument("crystal index must be positive");
  Bracketing b;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == i + 1) {
      b.open.push_back(k);
    } else if (w[k] == i) {
      if (b.open.empty()) b.close.push_back(k);
      else b.open.pop_back();
    }
  }
  return b;
}

}  // namespace

std::optional<std::size_t> word_E_position(const Word& w, int i) {
  const Bracketing b = bracket(w, i);
  if (b.open.empty()) return std::nullopt;
  return b.open.front();
}

std::optional<std::size_t> word_F_position(const Word& w, int i) {
  const Bracketing b = bracket(w, i);
  if (b.close.empty()) return std::nullopt;
  return b.close.back();
}

std::optional<Word> word_E(const Word& w, int i) {
  const auto k = word_E_position(w, i);
  if (!k) return std::nullopt;
  Word r = w;
  r[*k] = i;
  return r;
}

std::optional<Word> word_F(const Word& w, int i) {
  const auto k = word_F_position(w, i);
  if (!k) return std::nullopt;
  Word r = w;
  r[*k] = i + 1;
  return r;
}

bool is_yamanouchi(const Word& w) {
  std::vector<int> count;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const int x = *it;
    if (x < 1) return false;
    if (static_cast<std::size_t>(x) > count.size()) count.resize(static_cast<std::size_t>(x), 0);
    ++count[static_cast<std::size_t>(x - 1)];
    if (x > 1 && count[static_cast<std::size_t>(x - 1)] > count[static_cast<std::size_t>(x - 2)]) return false;
  }
  return true;
}

RSKPair rsk(const Word& w) {
  RSKPair r;
  for (std::size_t step = 0; step < w.size(); ++step) {
    int x = w[step];
    std::size_t row = 0;
    for (;; ++row) {
      if (row == r.P.size()) {
        r.P.emplace_back();
        r.Q.emplace_back();
      }
      auto& pr = r.P[row];
      auto it = std::upper_bound(pr.begin(), pr.end(), x);
      if (it == pr.end()) {
        pr.push_back(x);
        r.Q[row].push_back(static_cast<int>(step) + 1);
        break;
      }
      std::swap(x, *it);
    }
  }
  return r;
}

Word rectification(const Word& w) { return tableau_reading_word(rsk(w).P); }

Partition tableau_shape(const Tableau& T) {
  std::vector<int> parts;
  for (const auto& r : T) parts.push_back(static_cast<int>(r.size()));
  return Partition(parts);
}

std::size_t attack_zone_start(const Partition& mu) {
  const auto cells = reading_order(mu);
  if (cells.empty()) return 0;
  std::size_t k0 = cells.size() - 1;
  while (k0 > 0 && attacks(cells[k0 - 1], cells[k0])) --k0;
  return k0;
}

namespace {

void require_two_columns(const SuperFilling& s) {
  if (s.shape().length() > 0 && s.shape().row_length(1) > 2) throw std::invalid_argument("shape has more than two columns");
  if (s.negatives() > 0) throw std::invalid_argument("crystal operators act on positive fillings");
}

SuperFilling with_word(const SuperFilling& s, const Word& w) {
  SuperFilling r = s;
  const auto cells = reading_order(s.shape());
  for (std::size_t k = 0; k < cells.size(); ++k) r.set(cells[k], w[k]);
  return r;
}

}  // namespace

std::optional<SuperFilling> filling_E(const SuperFilling& s, int i) {
  require_two_columns(s);
  Word w = reading_word(s);
  const auto pos = word_E_position(w, i);
  if (!pos) return std::nullopt;
  const std::size_t k = *pos, n = w.size(), k0 = attack_zone_start(s.shape());
  const int a = i + 1, b = i;
  if (k + 2 < n && k >= k0 && w[k + 1] == a && w[k + 2] == b) {
    w[k + 1] = b;
    return with_word(s, w);
  }
  std::size_t j = k;
  while (j >= 2 && j - 2 >= k0 && w[j - 2] == a && w[j - 1] == b) j -= 2;
  for (std::size_t x = j; x <= k; ++x) w[x] = w[x] == a ? b : a;
  return with_word(s, w);
}

std::optional<SuperFilling> filling_F(const SuperFilling& s, int i) {
  require_two_columns(s);
  Word w = reading_word(s);
  const auto pos = word_F_position(w, i);
  if (!pos) return std::nullopt;
  const std::size_t k = *pos, n = w.size(), k0 = attack_zone_start(s.shape());
  const int a = i + 1, b = i;
  if (k >= 2 && k - 2 >= k0 && w[k - 2] == a && w[k - 1] == b) {
    w[k - 1] = a;
    return with_word(s, w);
  }
  std::size_t l = k;
  if (k >= k0)
    while (l + 2 < n && w[l + 1] == a && w[l + 2] == b) l += 2;
  for (std::size_t x = k; x <= l; ++x) w[x] = w[x] == a ? b : a;
  return with_word(s, w);
}

std::vector<Word> yamanouchi_words(const Partition& lambda) {
  std::vector<Word> out;
  const int n = lambda.size(), len = lambda.length();
  std::vector<int> count(static_cast<std::size_t>(len), 0);
  Word rev;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(rev.size()) == n) {
      out.emplace_back(rev.rbegin(), rev.rend());
      return;
    }
    for (int x = 1; x <= len; ++x) {
      auto& c = count[static_cast<std::size_t>(x - 1)];
      if (c == lambda.row_length(x)) continue;
      if (x > 1 && count[static_cast<std::size_t>(x - 2)] <= c) continue;
      ++c;
      rev.push_back(x);
      self(self);
      rev.pop_back();
      --c;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_two_column_args(const Partition& lambda, const Partition& mu) {
  if (mu.length() > 0 && mu.row_length(1) > 2) throw std::invalid_argument("mu has more than two columns");
  if (lambda.size() != mu.size()) throw std::invalid_argument("lambda and mu differ in size");
}

}  // namespace

LaurentQT two_column_kostka(const Partition& lambda, const Partition& mu) {
  check_two_column_args(lambda, mu);
  const SuperFilling base = SuperFilling::constant(mu, 1);
  LaurentQT r;
  for (const Word& w : yamanouchi_words(lambda)) {
    const SuperFilling s = with_word(base, w);
    r += LaurentQT::monomial(inv(s), maj(s));
  }
  return r;
}

LaurentQT two_column_kostka_D(const Partition& lambda, const Partition& mu, const std::set<Cell>& D) {
  check_two_column_args(lambda, mu);
  const SuperFilling base = SuperFilling::constant(mu, 1);
  LaurentQT r;
  for (const Word& w : yamanouchi_words(lambda)) {
    const SuperFilling s = with_word(base, w);
    if (des_set(s) == D) r += LaurentQT::q(static_cast<int>(inv_set(s).size()));
  }
  return r;
}

namespace {

template <class F>
void for_each_word(int len, int alphabet, F&& f) {
  Word w(static_cast<std::size_t>(len), 1);
  while (true) {
    f(static_cast<const Word&>(w));
    int k = len - 1;
    while (k >= 0 && w[static_cast<std::size_t>(k)] == alphabet) w[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) return;
    ++w[static_cast<std::size_t>(k)];
  }
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
  return x;
}

}  // namespace

CrystalReport verify_word_crystal(int axiom_len, int alphabet, int fiber_len) {
  CrystalReport r;
  for (int len = 1; len <= axiom_len; ++len) {
    for_each_word(len, alphabet, [&](const Word& w) {
      const Tableau Q = rsk(w).Q;
      bool maximal = true;
      for (int i = 1; i < alphabet; ++i) {
        if (const auto e = word_E(w, i)) {
          maximal = false;
          if (word_F(*e, i) != w) r.axioms = false;
          if (std::count(e->begin(), e->end(), i) != std::count(w.begin(), w.end(), i) + 1 ||
              std::count(e->begin(), e->end(), i + 1) != std::count(w.begin(), w.end(), i + 1) - 1)
            r.axioms = false;
          if (rsk(*e).Q != Q) r.q_preserved = false;
        }
        if (const auto f = word_F(w, i)) {
          if (word_E(*f, i) != w) r.axioms = false;
          if (rsk(*f).Q != Q) r.q_preserved = false;
        }
      }
      if (maximal != is_yamanouchi(w)) r.yamanouchi = false;
    });
  }
  for (int len = 1; len <= fiber_len; ++len) {
    std::vector<Word> words;
    for_each_word(len, len, [&](const Word& w) { words.push_back(w); });
    std::map<Word, int> index;
    for (std::size_t k = 0; k < words.size(); ++k) index.emplace(words[k], static_cast<int>(k));
    std::vector<int> parent(words.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::map<Tableau, std::vector<int>> fibers;
    for (std::size_t k = 0; k < words.size(); ++k) {
      fibers[rsk(words[k]).Q].push_back(static_cast<int>(k));
      for (int i = 1; i < len; ++i)
        if (const auto e = word_E(words[k], i)) parent[static_cast<std::size_t>(find_root(parent, static_cast<int>(k)))] = find_root(parent, index.at(*e));
    }
    for (const auto& [Q, members] : fibers) {
      int yam = 0;
      const int root = find_root(parent, members.front());
      for (int k : members) {
        yam += is_yamanouchi(words[static_cast<std::size_t>(k)]);
        if (find_root(parent, k) != root) r.connected = false;
      }
      if (yam != 1) r.unique_yamanouchi = false;
    }
  }
  return r;
}

FillingCrystalReport crystal_homomorphism_check(const Partition& mu, int bound) {
  FillingCrystalReport r;
  for_each_super_filling(mu, bound, 0, [&](const SuperFilling& s) {
    ++r.fillings;
    const Word w = reading_word(s);
    const Word rw = rectification(w);
    const auto des = des_set(s);
    const std::size_t inv_size = inv_set(s).size();
    const int i0 = inv(s), m0 = maj(s);
    auto same_stats = [&](const SuperFilling& t) {
      return des_set(t) == des && inv_set(t).size() == inv_size && inv(t) == i0 && maj(t) == m0;
    };
    for (int i = 1; i < bound; ++i) {
      const auto e = filling_E(s, i);
      const auto f = filling_F(s, i);
      if (e.has_value() != word_E(w, i).has_value() || f.has_value() != word_F(w, i).has_value())
        r.null_agreement = false;
      const auto re = word_E(rw, i);
      const auto rf = word_F(rw, i);
      if (e.has_value() != re.has_value() || f.has_value() != rf.has_value()) r.homomorphism = false;
      if (e) {
        if (filling_F(*e, i) != s) r.pairing = false;
        if (!same_stats(*e)) r.statistics = false;
        if (re && rectification(reading_word(*e)) != *re) r.homomorphism = false;
      }
      if (f) {
        if (filling_E(*f, i) != s) r.pairing = false;
        if (!same_stats(*f)) r.statistics = false;
        if (rf && rectification(reading_word(*f)) != *rf) r.homomorphism = false;
      }
    }
  });
  return r;
}

bool crystal_covering_check(const Partition& mu, int bound) {
  std::map<Word, long> fiber;
  for_each_super_filling(mu, bound, 0, [&](const SuperFilling& s) { ++fiber[rectification(reading_word(s))]; });
  const int n = mu.size();
  // Every content vector of length bound summing to n.
  std::vector<std::vector<int>> contents;
  std::vector<int> c(static_cast<std::size_t>(bound), 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == bound - 1) {
      c[static_cast<std::size_t>(k)] = left;
      contents.push_back(c);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      c[static_cast<std::size_t>(k)] = v;
      self(self, k + 1, left - v);
    }
  };
  rec(rec, 0, n);
  for (const Partition& lambda : partitions_of(n)) {
    if (lambda.length() > bound) continue;
    std::optional<long> size;
    for (const auto& content : contents)
      for (const Tableau& T : ssyt_with_content(lambda, content)) {
        auto it = fiber.find(tableau_reading_word(T));
        const long sz = it == fiber.end() ? 0 : it->second;
        if (size && *size != sz) return false;
        size = sz;
      }
  }
  return true;
}

bool check_descent_refinement(const Partition& mu) {
  const int n = mu.size();
  for (const auto& D : descent_subsets(mu)) {
    const SchurVector sv = to_schur(F_mu_D(mu, D, n));
    for (const Partition& lambda : partitions_of(n))
      if (!(sv.coeff(lambda) == two_column_kostka_D(lambda, mu, D))) return false;
  }
  return true;
}

}  // namespace macfill
