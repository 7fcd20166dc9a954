#pragma once

#include <random>
#include <vector>

#include "macfill/xpoly.hpp"
#include "oracles.hpp"

namespace testing {

inline oracle::Poly to_poly(const macfill::XPolynomial& f) {
  oracle::Poly p;
  for (const auto& [e, c] : f.terms()) p[e] = c;
  return p;
}

inline std::vector<macfill::Partition> partitions_upto(int n_max) {
  std::vector<macfill::Partition> out;
  for (int n = 1; n <= n_max; ++n)
    for (const auto& p : macfill::partitions_of(n)) out.push_back(p);
  return out;
}

inline macfill::LaurentQT random_laurent(std::mt19937& rng) {
  macfill::LaurentQT c;
  const int terms = static_cast<int>(rng() % 4);
  for (int k = 0; k < terms; ++k)
    c.add_term(static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 7) - 3, static_cast<long>(rng() % 11) - 5);
  return c;
}

}  // namespace testing
