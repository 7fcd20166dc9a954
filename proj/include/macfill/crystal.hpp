#pragma once

#include <optional>

#include "macfill/filling.hpp"
#include "macfill/special.hpp"

namespace macfill {

/// Bracketing on the {i, i+1} subword: i+1 opens, i closes.
std::optional<Word> word_E(const Word& w, int i);
std::optional<Word> word_F(const Word& w, int i);

/// Position changed by word_E / word_F, if any.
std::optional<std::size_t> word_E_position(const Word& w, int i);
std::optional<std::size_t> word_F_position(const Word& w, int i);

bool is_yamanouchi(const Word& w);

struct RSKPair {
  Tableau P;  // rows bottom first
  Tableau Q;
  friend bool operator==(const RSKPair&, const RSKPair&) = default;
};

RSKPair rsk(const Word& w);
/// Reading word of the insertion tableau.
Word rectification(const Word& w);
Partition tableau_shape(const Tableau& T);

/// Start of the attack zone (0-based): every consecutive reading-order pair
/// from this index on attacks.
std::size_t attack_zone_start(const Partition& mu);

/// Two-column crystal operators on fillings. Throw std::invalid_argument if
/// mu has more than two columns.
std::optional<SuperFilling> filling_E(const SuperFilling& s, int i);
std::optional<SuperFilling> filling_F(const SuperFilling& s, int i);

/// Yamanouchi words with content lambda.
std::vector<Word> yamanouchi_words(const Partition& lambda);

/// sum of q^inv t^maj over fillings of mu whose reading word lies in Yam(lambda).
LaurentQT two_column_kostka(const Partition& lambda, const Partition& mu);
/// The same sum restricted to Des(sigma) = D, weighted by q^|Inv|.
LaurentQT two_column_kostka_D(const Partition& lambda, const Partition& mu, const std::set<Cell>& D);

struct CrystalReport {
  bool axioms = true;         // E_i a = b iff F_i b = a; weight shifts by x_i / x_i+1
  bool q_preserved = true;    // E_i, F_i keep the recording tableau
  bool yamanouchi = true;     // Yamanouchi words are exactly the E-maximal words
  bool unique_yamanouchi = true;
  bool connected = true;      // Q-fibers are connected under E_i
  bool ok() const { return axioms && q_preserved && yamanouchi && unique_yamanouchi && connected; }
};

/// Axioms and Q-preservation over words of length <= axiom_len on letters
/// <= alphabet; fiber checks over words of length <= fiber_len on letters
/// <= fiber_len.
CrystalReport verify_word_crystal(int axiom_len, int alphabet, int fiber_len);

struct FillingCrystalReport {
  long fillings = 0;
  bool pairing = true;         // F(E(s)) = s and E(F(s)) = s
  bool null_agreement = true;  // operator defined iff word operator defined
  bool statistics = true;      // Des, |Inv|, inv and maj preserved
  bool homomorphism = true;    // R(w(E s)) = R(E w(s)), likewise for F
  bool ok() const { return pairing && null_agreement && statistics && homomorphism; }
};

/// Exhaustive over fillings of a two-column mu with entries <= bound.
FillingCrystalReport crystal_homomorphism_check(const Partition& mu, int bound);

/// Fibers of the rectified reading word over each shape have equal size
/// (fillings with entries <= bound).
bool crystal_covering_check(const Partition& mu, int bound);

/// The Yamanouchi rule refines to each F_{mu,D} (checked against the Schur
/// expansion of F_{mu,D} in |mu| variables).
bool check_descent_refinement(const Partition& mu);

}  // namespace macfill
