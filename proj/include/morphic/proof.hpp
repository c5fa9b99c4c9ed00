#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "morphic/words.hpp"

namespace morphic {

/// Words u over the alphabet of f and v over the alphabet of g, |u| = |v|.
struct SafePair {
  Word u;
  Word v;

  friend bool operator==(const SafePair&, const SafePair&) = default;
  friend auto operator<=>(const SafePair&, const SafePair&) = default;
};

/// Pairs (u_i, v_i) with, for each i, a word w_i over pair indices such that
/// f(u_i) = u_{w_i,0} u_{w_i,1} ... and g(v_i) = v_{w_i,0} v_{w_i,1} ...
struct SafePairTable {
  std::vector<SafePair> pairs;
  std::vector<std::vector<std::size_t>> decompositions;

  std::size_t size() const noexcept { return pairs.size(); }

  friend bool operator==(const SafePairTable&, const SafePairTable&) = default;
};

enum class ProofMode { general, basic };

inline const char* to_string(ProofMode mode) { return mode == ProofMode::general ? "general" : "basic"; }

/// Witness that tau(f^inf(0)) = rho(g^inf(0)) by simultaneous induction over
/// the pairs of the table, for the scaled morphisms f^p and g^q.
///
/// `problem` holds the normalized problem (unreachable symbols removed); the
/// pair words are over its alphabets. The scaled morphisms are never stored so
/// that nothing downstream can trust a stale copy.
struct Proof {
  EqualityProblem problem;
  unsigned p = 1;
  unsigned q = 1;
  SafePairTable table;
  ProofMode mode = ProofMode::general;

  Morphism scaled_f() const { return morphism_power(problem.lhs.morphism, p); }
  Morphism scaled_g() const { return morphism_power(problem.rhs.morphism, q); }

  friend bool operator==(const Proof&, const Proof&) = default;
};

}  // namespace morphic
