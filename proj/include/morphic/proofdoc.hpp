#pragma once

/**
 * @file proofdoc.hpp
 * Independent checking of a Proof and its rendering as an elementary
 * induction proof, in plain text or as a LaTeX body fragment.
 *
 * The checker only uses words.hpp primitives and recomputes the scaled
 * morphisms from the stored base morphisms and exponents.
 */

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "morphic/proof.hpp"
#include "morphic/words.hpp"

namespace morphic {

enum class Condition {
  coding_eq,
  f_decomposition,
  g_decomposition,
  start_symbol,
  nonempty,
  well_formed,  // indices, exponents and table shape
};

inline const char* to_string(Condition c) {
  switch (c) {
    case Condition::coding_eq: return "coding-eq";
    case Condition::f_decomposition: return "f-decomposition";
    case Condition::g_decomposition: return "g-decomposition";
    case Condition::start_symbol: return "start-symbol";
    case Condition::nonempty: return "nonempty";
    case Condition::well_formed: return "well-formed";
  }
  return "unknown";
}

struct Violation {
  Condition condition;
  std::size_t pair_index;
  std::string detail;
};

struct CheckReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }

  std::size_t count(Condition c) const {
    std::size_t n = 0;
    for (const auto& v : violations) n += v.condition == c ? 1 : 0;
    return n;
  }
};

inline CheckReport check_proof(const Proof& proof) {
  CheckReport report;
  auto fail = [&](Condition c, std::size_t i, std::string detail) {
    report.violations.push_back(Violation{c, i, std::move(detail)});
  };

  const auto& table = proof.table;
  const std::size_t n = table.pairs.size();
  const MorphicRep& lhs = proof.problem.lhs;
  const MorphicRep& rhs = proof.problem.rhs;

  if (proof.p == 0 || proof.q == 0) {
    fail(Condition::well_formed, 0, "exponents must be >= 1");
    return report;
  }
  if (n == 0) {
    fail(Condition::well_formed, 0, "empty pair table");
    return report;
  }
  if (table.decompositions.size() != n) {
    fail(Condition::well_formed, 0, "decomposition count differs from pair count");
    return report;
  }
  bool shape_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (Symbol s : table.pairs[i].u)
      if (s >= lhs.morphism.size()) {
        fail(Condition::well_formed, i, "u uses a symbol outside the alphabet of f");
        shape_ok = false;
      }
    for (Symbol s : table.pairs[i].v)
      if (s >= rhs.morphism.size()) {
        fail(Condition::well_formed, i, "v uses a symbol outside the alphabet of g");
        shape_ok = false;
      }
    for (std::size_t j : table.decompositions[i])
      if (j >= n) {
        fail(Condition::well_formed, i, "decomposition refers to pair " + std::to_string(j));
        shape_ok = false;
      }
  }
  if (!shape_ok) return report;

  for (std::size_t i = 0; i < n; ++i) {
    if (table.pairs[i].u.empty() || table.pairs[i].v.empty()) fail(Condition::nonempty, i, "empty word in pair");
  }
  const auto& u0 = table.pairs[0].u;
  const auto& v0 = table.pairs[0].v;
  if (u0.empty() || u0.front() != lhs.start || v0.empty() || v0.front() != rhs.start) {
    fail(Condition::start_symbol, 0, "u_0 and v_0 must start with the start symbol");
  }

  const Morphism f = morphism_power(lhs.morphism, proof.p);
  const Morphism g = morphism_power(rhs.morphism, proof.q);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& pr = table.pairs[i];
    if (apply_coding(lhs.coding, pr.u) != apply_coding(rhs.coding, pr.v)) {
      fail(Condition::coding_eq, i, to_string(apply_coding(lhs.coding, pr.u)) + " vs " +
                                        to_string(apply_coding(rhs.coding, pr.v)));
    }
    Word us;
    Word vs;
    for (std::size_t j : table.decompositions[i]) {
      us.insert(us.end(), table.pairs[j].u.begin(), table.pairs[j].u.end());
      vs.insert(vs.end(), table.pairs[j].v.begin(), table.pairs[j].v.end());
    }
    const Word fu = apply_morphism(f, pr.u);
    const Word gv = apply_morphism(g, pr.v);
    if (fu != us) fail(Condition::f_decomposition, i, to_string(fu) + " vs " + to_string(us));
    if (gv != vs) fail(Condition::g_decomposition, i, to_string(gv) + " vs " + to_string(vs));
  }
  return report;
}

namespace detail {

struct Notation {
  const char* tau;
  const char* rho;
  const char* open;   // math-mode delimiters
  const char* close;
  const char* indent;  // paragraph prefix for prose lines
  std::string (*apply)(char fn, const char* exponent, const std::string& arg);
  std::string (*power)(char fn, unsigned k);
  const char* infinity;
  const char* by_hypothesis;
};

inline std::string superscript(std::string_view s) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (char c : s) {
    if (c >= '0' && c <= '9') out += digits[c - '0'];
    else if (c == 'n') out += "ⁿ";
    else if (c == '+') out += "⁺";
    else out.push_back(c);
  }
  return out;
}

inline std::string latex_apply(char fn, const char* e, const std::string& arg) {
  std::string ex(e);
  std::string sup = ex.size() > 1 ? "^{" + ex + "}" : "^" + ex;
  return std::string(1, fn) + sup + "(" + arg + ")";
}

inline std::string text_apply(char fn, const char* e, const std::string& arg) {
  return std::string(1, fn) + superscript(e) + "(" + arg + ")";
}

inline std::string latex_power(char fn, unsigned k) {
  std::string ex = std::to_string(k);
  return std::string(1, fn) + (ex.size() > 1 ? "^{" + ex + "}" : "^" + ex);
}

inline std::string text_power(char fn, unsigned k) { return std::string(1, fn) + superscript(std::to_string(k)); }

inline const Notation& latex_notation() {
  static const Notation n{"\\tau", "\\rho", "$", "$", "\\noindent ", latex_apply, latex_power, "^\\infty",
                          "(by induction hypothesis)"};
  return n;
}

inline const Notation& text_notation() {
  static const Notation n{"τ", "ρ", "", "", "", text_apply, text_power, "^∞", "(by induction hypothesis)"};
  return n;
}

inline std::string render(const Proof& proof, const Notation& nt) {
  const CheckReport report = check_proof(proof);
  if (!report.ok()) {
    throw Error(ErrorKind::unchecked_proof, "refusing to render a proof that fails checking (" +
                                                std::string(to_string(report.violations.front().condition)) +
                                                ")");
  }
  const Morphism f = proof.scaled_f();
  const Morphism g = proof.scaled_g();
  const auto& pairs = proof.table.pairs;
  const auto& decs = proof.table.decompositions;
  const std::string open = nt.open;
  const std::string close = nt.close;
  const std::string tau = nt.tau;
  const std::string rho = nt.rho;

  auto T = [&](const char* e, const Word& w) { return tau + "(" + nt.apply('f', e, to_string(w)) + ")"; };
  auto R = [&](const char* e, const Word& w) { return rho + "(" + nt.apply('g', e, to_string(w)) + ")"; };
  auto inner = [&](char fn, const Word& w) { return std::string(1, fn) + "(" + to_string(w) + ")"; };

  std::ostringstream out;
  auto replace_line = [&](char fn, unsigned k, const Morphism& m) {
    out << nt.indent << "Replace " << open << fn << close << " by " << open << nt.power(fn, k) << close << ":\n" << open;
    for (std::size_t a = 0; a < m.size(); ++a) {
      if (a > 0) out << ", ";
      out << fn << "(" << a << ") = " << to_string(m.image(static_cast<Symbol>(a)));
    }
    out << close << ".\n\n";
  };
  if (proof.p > 1) replace_line('f', proof.p, f);
  if (proof.q > 1) replace_line('g', proof.q, g);

  const std::string start_l = std::to_string(proof.problem.lhs.start);
  const std::string start_r = std::to_string(proof.problem.rhs.start);
  out << nt.indent << "Claim to be proved: " << open << tau << "(" << "f" << nt.infinity << "(" << start_l << ")) = "
      << rho << "(" << "g" << nt.infinity << "(" << start_r << "))" << close << ".\n\n";

  if (pairs.size() == 1) {
    out << nt.indent << "We will prove the following property by induction on " << open << "n" << close << ".\n\n";
  } else {
    out << nt.indent << "We will prove the following " << pairs.size()
        << " properties simultaneously by induction on " << open << "n" << close << ".\n\n";
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out << "(" << i << ") " << open << T("n", pairs[i].u) << " = " << R("n", pairs[i].v) << close << ".\n\n";
  }
  out << nt.indent << "Then our claim follows from (0).\n\n";

  out << nt.indent << "Basis " << open << "n=0" << close << " of induction:\n\n";
  for (const auto& pr : pairs) {
    out << open << T("0", pr.u) << " = " << to_string(apply_coding(proof.problem.lhs.coding, pr.u)) << " = "
        << R("0", pr.v) << close << ".\n\n";
  }
  out << nt.indent << "Basis of induction proved.\n\n";

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& pr = pairs[i];
    out << nt.indent << "Induction step part (" << i << "):\n\n";
    out << open << T("n+1", pr.u) << " = " << tau << "(" << nt.apply('f', "n", inner('f', pr.u)) << ") = "
        << T("n", apply_morphism(f, pr.u)) << " = " << close << "\n\n";
    out << open;
    for (std::size_t k = 0; k < decs[i].size(); ++k) {
      if (k > 0) out << " ";
      out << T("n", pairs[decs[i][k]].u);
    }
    out << " =" << close << "   " << nt.by_hypothesis << "\n\n";
    out << open;
    for (std::size_t k = 0; k < decs[i].size(); ++k) {
      if (k > 0) out << " ";
      out << R("n", pairs[decs[i][k]].v);
    }
    out << " = " << close << "\n\n";
    out << open << R("n", apply_morphism(g, pr.v)) << " = " << rho << "(" << nt.apply('g', "n", inner('g', pr.v))
        << ") = " << R("n+1", pr.v) << "." << close << "\n\n";
  }
  out << nt.indent << "Induction step proved, hence claim proved.\n";
  return out.str();
}

}  // namespace detail

/// Plain UTF-8 rendering. Throws unchecked_proof if the proof does not check.
inline std::string render_text(const Proof& proof) { return detail::render(proof, detail::text_notation()); }

/// LaTeX body fragment (no preamble). Throws unchecked_proof if the proof does
/// not check.
inline std::string render_latex(const Proof& proof) { return detail::render(proof, detail::latex_notation()); }

}  // namespace morphic
