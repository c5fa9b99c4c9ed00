#pragma once

/**
 * @file prover.hpp
 * Construction of simultaneous-induction witnesses.
 *
 * General mode grows a table of safe pairs by greedy closure: starting from
 * the shortest safe pair of equal-length prefixes, each f(u_i) / g(v_i) is cut
 * left to right into the shortest safe pair available at every position.
 * Basic mode uses the fixed choice v_i = w_i = g(i), with u_i read off
 * f^inf(0) where g(i) first occurs.
 */

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "morphic/proof.hpp"
#include "morphic/scaling.hpp"
#include "morphic/words.hpp"

namespace morphic {

enum class FailureStage {
  eigenvalue_mismatch,
  no_initial_safe_pair,
  decomposition_stuck,
  coding_mismatch,
  pair_budget_exceeded,
};

inline const char* to_string(FailureStage stage) {
  switch (stage) {
    case FailureStage::eigenvalue_mismatch: return "eigenvalue-mismatch";
    case FailureStage::no_initial_safe_pair: return "no-initial-safe-pair";
    case FailureStage::decomposition_stuck: return "decomposition-stuck";
    case FailureStage::coding_mismatch: return "coding-mismatch";
    case FailureStage::pair_budget_exceeded: return "pair-budget-exceeded";
  }
  return "unknown";
}

struct ProveFailure {
  FailureStage stage;
  std::string detail;
  std::optional<std::size_t> pair_index;  // pair being decomposed, when relevant
  std::optional<std::size_t> position;    // cut position or sequence position
};

/// Either a value or the reason the attempt was given up.
template <typename T>
class Outcome {
 public:
  Outcome(T value) : v_(std::move(value)) {}
  Outcome(ProveFailure failure) : v_(std::move(failure)) {}

  bool ok() const noexcept { return std::holds_alternative<T>(v_); }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const { return std::get<T>(v_); }
  T& value() { return std::get<T>(v_); }
  const ProveFailure& failure() const { return std::get<ProveFailure>(v_); }

 private:
  std::variant<T, ProveFailure> v_;
};

struct ProverConfig {
  double tolerance = kDefaultScalingTolerance;
  std::size_t max_pair_len = 10;
  std::size_t max_pairs = 64;
  std::size_t prefix_limit = 1'000'000;  // symbols of a fixed point materialized at most
  std::size_t basic_horizon = 100'000;   // symbols of g^inf(0) scanned for first occurrences
};

inline bool is_safe_pair(const Morphism& f, const Morphism& g, const Word& u, const Word& v) {
  return u.size() == v.size() && image_length(f, u) == image_length(g, v);
}

/// Shortest safe pair (u_0, v_0) of equal-length prefixes of f^inf(0), g^inf(0).
inline Outcome<SafePair> find_initial_safe_pair(const Morphism& f, const Morphism& g, std::size_t max_len = 10) {
  FixedPoint fs(f, 0);
  FixedPoint gs(g, 0);
  std::size_t lf = 0;
  std::size_t lg = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    lf += f.image(fs.at(len - 1)).size();
    lg += g.image(gs.at(len - 1)).size();
    if (lf == lg) return SafePair{fs.prefix(len), gs.prefix(len)};
  }
  return ProveFailure{FailureStage::no_initial_safe_pair,
                      "no safe pair of prefixes with length <= " + std::to_string(max_len), std::nullopt,
                      std::nullopt};
}

namespace detail {

inline std::string pair_text(const SafePair& pr) { return "(" + to_string(pr.u) + ", " + to_string(pr.v) + ")"; }

inline std::optional<ProveFailure> check_pair_coding(const Coding& tau, const Coding& rho, const SafePair& pr,
                                                     std::size_t index) {
  if (apply_coding(tau, pr.u) != apply_coding(rho, pr.v)) {
    return ProveFailure{FailureStage::coding_mismatch, "codings differ on pair " + pair_text(pr), index,
                        std::nullopt};
  }
  return std::nullopt;
}

}  // namespace detail

/// Greedy safe-pair closure for already scaled morphisms f and g.
inline Outcome<SafePairTable> derive_table(const Morphism& f, const Coding& tau, const Morphism& g,
                                           const Coding& rho, const ProverConfig& limits = {}) {
  auto initial = find_initial_safe_pair(f, g, limits.max_pair_len);
  if (!initial) return initial.failure();

  SafePairTable table;
  std::map<SafePair, std::size_t> index_of;
  auto add_pair = [&](SafePair pr) -> std::variant<std::size_t, ProveFailure> {
    if (auto it = index_of.find(pr); it != index_of.end()) return it->second;
    const std::size_t idx = table.pairs.size();
    if (idx >= limits.max_pairs) {
      return ProveFailure{FailureStage::pair_budget_exceeded,
                          "more than " + std::to_string(limits.max_pairs) + " pairs needed", idx, std::nullopt};
    }
    if (auto bad = detail::check_pair_coding(tau, rho, pr, idx)) return *bad;
    index_of.emplace(pr, idx);
    table.pairs.push_back(std::move(pr));
    return idx;
  };

  if (auto r = add_pair(initial.value()); std::holds_alternative<ProveFailure>(r)) {
    return std::get<ProveFailure>(r);
  }

  for (std::size_t i = 0; i < table.pairs.size(); ++i) {
    const Word fu = apply_morphism(f, table.pairs[i].u);
    const Word gv = apply_morphism(g, table.pairs[i].v);
    // |fu| = |gv| because pair i is safe.
    std::vector<std::size_t> w;
    std::size_t pos = 0;
    while (pos < fu.size()) {
      const std::size_t room = std::min(limits.max_pair_len, fu.size() - pos);
      std::size_t lf = 0;
      std::size_t lg = 0;
      std::size_t len = 0;
      for (std::size_t l = 1; l <= room; ++l) {
        lf += f.image(fu[pos + l - 1]).size();
        lg += g.image(gv[pos + l - 1]).size();
        if (lf == lg) {
          len = l;
          break;
        }
      }
      if (len == 0) {
        return ProveFailure{FailureStage::decomposition_stuck,
                            "no safe pair of length <= " + std::to_string(room) + " at position " +
                                std::to_string(pos) + " of f(u_" + std::to_string(i) + ") = " + to_string(fu) +
                                " / g(v_" + std::to_string(i) + ") = " + to_string(gv),
                            i, pos};
      }
      const auto at = static_cast<std::ptrdiff_t>(pos);
      const auto end = static_cast<std::ptrdiff_t>(pos + len);
      SafePair next{Word(fu.begin() + at, fu.begin() + end), Word(gv.begin() + at, gv.begin() + end)};
      auto r = add_pair(std::move(next));
      if (std::holds_alternative<ProveFailure>(r)) return std::get<ProveFailure>(r);
      w.push_back(std::get<std::size_t>(r));
      pos += len;
    }
    table.decompositions.push_back(std::move(w));
  }

  for (const auto& pr : table.pairs) {
    if (!is_safe_pair(f, g, pr.u, pr.v)) {
      throw std::logic_error("derive_table produced an unsafe pair " + detail::pair_text(pr));
    }
  }
  return table;
}

namespace detail {

struct Normalized {
  EqualityProblem problem;
  unsigned p = 1;
  unsigned q = 1;
};

inline Outcome<Normalized> normalize_and_scale(const EqualityProblem& problem, const ProverConfig& config) {
  Normalized out{EqualityProblem{prune_unreachable(problem.lhs), prune_unreachable(problem.rhs)}, 1, 1};
  auto scaling = equalize(out.problem.lhs.morphism, out.problem.rhs.morphism, config.tolerance);
  if (!scaling) {
    const auto ef = estimate_eigenvalue(out.problem.lhs.morphism, 0, kPowerMethodIterations);
    const auto eg = estimate_eigenvalue(out.problem.rhs.morphism, 0, kPowerMethodIterations);
    return ProveFailure{FailureStage::eigenvalue_mismatch,
                        "estimated dominant eigenvalues " + ef.value().str(8) + " and " + eg.value().str(8) +
                            " cannot be matched by powers",
                        std::nullopt, std::nullopt};
  }
  out.p = scaling->p;
  out.q = scaling->q;
  return out;
}

}  // namespace detail

inline Outcome<Proof> prove_general(const EqualityProblem& problem, const ProverConfig& config = {}) {
  auto norm = detail::normalize_and_scale(problem, config);
  if (!norm) return norm.failure();
  const auto& [prob, p, q] = norm.value();
  const Morphism f = morphism_power(prob.lhs.morphism, p);
  const Morphism g = morphism_power(prob.rhs.morphism, q);
  auto table = derive_table(f, prob.lhs.coding, g, prob.rhs.coding, config);
  if (!table) return table.failure();
  return Proof{prob, p, q, std::move(table.value()), ProofMode::general};
}

inline Outcome<Proof> prove_basic(const EqualityProblem& problem, const ProverConfig& config = {}) {
  auto norm = detail::normalize_and_scale(problem, config);
  if (!norm) return norm.failure();
  const auto& [prob, p, q] = norm.value();
  const Morphism f = morphism_power(prob.lhs.morphism, p);
  const Morphism g = morphism_power(prob.rhs.morphism, q);
  const Coding& tau = prob.lhs.coding;
  const Coding& rho = prob.rhs.coding;
  const std::size_t ng = g.size();

  // First occurrence of every symbol i in g^inf(0), and |g(w_i)| for the prefix
  // w_i in front of it.
  FixedPoint gs(g, 0);
  std::vector<std::optional<std::size_t>> offset(ng);
  std::size_t found = 0;
  std::size_t image_pos = 0;
  for (std::size_t pos = 0; pos < config.basic_horizon && found < ng; ++pos) {
    const Symbol s = gs.at(pos);
    if (!offset[s]) {
      offset[s] = image_pos;
      ++found;
    }
    image_pos += g.image(s).size();
  }
  for (std::size_t i = 0; i < ng; ++i) {
    if (!offset[i]) {
      return ProveFailure{FailureStage::coding_mismatch,
                          "symbol " + std::to_string(i) + " does not occur in the first " +
                              std::to_string(config.basic_horizon) + " symbols of g^inf(0)",
                          i, std::nullopt};
    }
  }

  FixedPoint fs(f, 0);
  SafePairTable table;
  for (std::size_t i = 0; i < ng; ++i) {
    const Word& gi = g.image(static_cast<Symbol>(i));
    const std::size_t from = *offset[i];
    const std::size_t to = from + gi.size();
    if (to > config.prefix_limit) {
      return ProveFailure{FailureStage::decomposition_stuck,
                          "u_" + std::to_string(i) + " lies beyond the prefix limit", i, from};
    }
    table.pairs.push_back(SafePair{fs.factor(from, to), gi});
    table.decompositions.emplace_back(gi.begin(), gi.end());
  }

  for (std::size_t i = 0; i < ng; ++i) {
    if (auto bad = detail::check_pair_coding(tau, rho, table.pairs[i], i)) return *bad;
  }
  for (std::size_t i = 0; i < ng; ++i) {
    Word expected;
    for (std::size_t j : table.decompositions[i]) {
      const Word& uj = table.pairs[j].u;
      expected.insert(expected.end(), uj.begin(), uj.end());
    }
    const Word fu = apply_morphism(f, table.pairs[i].u);
    if (fu != expected) {
      return ProveFailure{FailureStage::decomposition_stuck,
                          "f(u_" + std::to_string(i) + ") = " + to_string(fu) + " differs from " +
                              to_string(expected),
                          i, std::nullopt};
    }
  }
  return Proof{prob, p, q, std::move(table), ProofMode::basic};
}

}  // namespace morphic
