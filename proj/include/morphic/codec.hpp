#pragma once

/**
 * @file codec.hpp
 * Text formats used by the command line tool.
 *
 * Problem file: n_f, then n_f image lines, then a coding line of n_f digits;
 * the same again for g. Symbols are single digits, so alphabets have at most
 * 10 symbols. Trailing whitespace on a line and a trailing newline are
 * accepted; anything else out of place is an error naming the line.
 *
 * Proof file: a header line, the problem block, then
 *   exponents <p> <q>
 *   mode <general|basic>
 *   pairs <n>
 * followed by n triples of lines: u_i, v_i, and w_i as space separated pair
 * indices.
 */

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "morphic/proof.hpp"
#include "morphic/subseq.hpp"
#include "morphic/words.hpp"

namespace morphic {

inline constexpr std::size_t kMaxFileAlphabet = 10;
inline constexpr std::string_view kProofHeader = "morphic-proof 1";

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string line(text.substr(start, end - start));
      while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
      lines_.push_back(std::move(line));
      start = end + 1;
    }
    // A trailing newline leaves one empty final line; drop trailing blanks.
    while (!lines_.empty() && lines_.back().empty()) lines_.pop_back();
  }

  bool done() const noexcept { return next_ >= lines_.size(); }
  std::size_t line_number() const noexcept { return next_ + 1; }

  const std::string& next(const char* what) {
    if (done()) fail("unexpected end of input, expected " + std::string(what));
    return lines_[next_++];
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t line) const {
    throw Error(ErrorKind::parse_error, "line " + std::to_string(line) + ": " + msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, line_number()); }

  std::size_t read_count(const char* what) {
    const std::size_t ln = line_number();
    const std::string& s = next(what);
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 3) {
      fail("expected " + std::string(what) + ", got '" + s + "'", ln);
    }
    return static_cast<std::size_t>(std::stoul(s));
  }

  Word read_digits(const char* what) {
    const std::size_t ln = line_number();
    const std::string& s = next(what);
    if (s.empty()) fail(std::string(what) + " is empty", ln);
    for (char c : s)
      if (c < '0' || c > '9') fail("non-digit character '" + std::string(1, c) + "' in " + what, ln);
    return word_from_digits(s);
  }

 private:
  std::vector<std::string> lines_;
  std::size_t next_ = 0;
};

struct RawHalf {
  Morphism morphism;
  Word coding;
};

inline RawHalf read_half(LineReader& in, const char* name) {
  const std::size_t count_line = in.line_number();
  const std::size_t n = in.read_count("alphabet size");
  if (n == 0 || n > kMaxFileAlphabet) {
    in.fail("alphabet size of " + std::string(name) + " must be between 1 and 10", count_line);
  }
  std::vector<Word> images;
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t ln = in.line_number();
    Word img = in.read_digits("image");
    for (Symbol s : img)
      if (s >= n) in.fail("symbol " + std::to_string(s) + " outside the alphabet of " + name, ln);
    images.push_back(std::move(img));
  }
  const std::size_t ln = in.line_number();
  Word coding = in.read_digits("coding");
  if (coding.size() != n) {
    in.fail("coding of " + std::string(name) + " has " + std::to_string(coding.size()) + " symbols, expected " +
                std::to_string(n),
            ln);
  }
  if (images[0].size() < 2 || images[0][0] != 0) {
    throw Error(ErrorKind::not_prolongable, std::string(name) + "(0) must start with 0 and have length >= 2");
  }
  return RawHalf{Morphism(std::move(images)), std::move(coding)};
}

inline EqualityProblem read_problem(LineReader& in) {
  RawHalf f = read_half(in, "f");
  RawHalf g = read_half(in, "g");
  Symbol top = 0;
  for (Symbol s : f.coding) top = std::max(top, s);
  for (Symbol s : g.coding) top = std::max(top, s);
  const std::size_t out = top + 1;
  return EqualityProblem{MorphicRep(std::move(f.morphism), Coding(out, std::move(f.coding)), 0),
                         MorphicRep(std::move(g.morphism), Coding(out, std::move(g.coding)), 0)};
}

inline void write_half(std::ostream& os, const Morphism& f, const Coding& tau) {
  os << f.size() << "\n";
  for (const auto& img : f.images()) os << to_string(img) << "\n";
  os << to_string(Word(tau.map().begin(), tau.map().end())) << "\n";
}

}  // namespace detail

inline EqualityProblem parse_problem(std::string_view text) {
  detail::LineReader in(text);
  EqualityProblem p = detail::read_problem(in);
  if (!in.done()) in.fail("unexpected extra input");
  return p;
}

/// One (morphism, coding) half of a problem file.
inline std::string format_half(const Morphism& f, const Coding& tau) {
  std::ostringstream os;
  detail::write_half(os, f, tau);
  return os.str();
}

inline std::string format_problem(const EqualityProblem& p) {
  return format_half(p.lhs.morphism, p.lhs.coding) + format_half(p.rhs.morphism, p.rhs.coding);
}

inline std::string serialize_proof(const Proof& proof) {
  std::ostringstream os;
  os << kProofHeader << "\n" << format_problem(proof.problem);
  os << "exponents " << proof.p << " " << proof.q << "\n";
  os << "mode " << to_string(proof.mode) << "\n";
  os << "pairs " << proof.table.size() << "\n";
  for (std::size_t i = 0; i < proof.table.size(); ++i) {
    os << to_string(proof.table.pairs[i].u) << "\n" << to_string(proof.table.pairs[i].v) << "\n";
    const auto& w = proof.table.decompositions[i];
    for (std::size_t k = 0; k < w.size(); ++k) os << (k ? " " : "") << w[k];
    os << "\n";
  }
  return os.str();
}

inline Proof parse_proof(std::string_view text) {
  detail::LineReader in(text);
  if (in.next("proof header") != kProofHeader) in.fail("missing proof header", 1);
  Proof proof;
  proof.problem = detail::read_problem(in);

  auto keyword_line = [&](std::string_view key) {
    const std::size_t ln = in.line_number();
    std::istringstream is(in.next(key.data()));
    std::string word;
    is >> word;
    if (word != key) in.fail("expected '" + std::string(key) + "'", ln);
    return std::make_pair(std::move(is), ln);
  };

  {
    auto [is, ln] = keyword_line("exponents");
    long p = 0;
    long q = 0;
    if (!(is >> p >> q) || p < 1 || q < 1 || !(is >> std::ws).eof()) in.fail("bad exponents", ln);
    proof.p = static_cast<unsigned>(p);
    proof.q = static_cast<unsigned>(q);
  }
  {
    auto [is, ln] = keyword_line("mode");
    std::string mode;
    is >> mode;
    if (mode == "general") proof.mode = ProofMode::general;
    else if (mode == "basic") proof.mode = ProofMode::basic;
    else in.fail("unknown mode '" + mode + "'", ln);
  }
  std::size_t n = 0;
  {
    auto [is, ln] = keyword_line("pairs");
    long count = 0;
    if (!(is >> count) || count < 1 || !(is >> std::ws).eof()) in.fail("bad pair count", ln);
    n = static_cast<std::size_t>(count);
  }
  for (std::size_t i = 0; i < n; ++i) {
    SafePair pr;
    pr.u = in.read_digits("u word");
    pr.v = in.read_digits("v word");
    const std::size_t ln = in.line_number();
    std::istringstream is(in.next("decomposition"));
    std::vector<std::size_t> w;
    long idx = 0;
    while (is >> idx) {
      if (idx < 0) in.fail("negative pair index", ln);
      w.push_back(static_cast<std::size_t>(idx));
    }
    if (!is.eof()) in.fail("bad decomposition", ln);
    proof.table.pairs.push_back(std::move(pr));
    proof.table.decompositions.push_back(std::move(w));
  }
  if (!in.done()) in.fail("unexpected extra input");
  return proof;
}

/// Digits of a target file; whitespace is ignored.
inline Word parse_digit_sequence(std::string_view text) {
  Word w;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c < '0' || c > '9') throw Error(ErrorKind::parse_error, "non-digit character in sequence file");
    w.push_back(static_cast<Symbol>(c - '0'));
  }
  return w;
}

inline MorphicRep fib_rep() { return MorphicRep(Morphism::from_digits({"01", "0"}), Coding::identity(2), 0); }

inline MorphicRep spir_rep() {
  return MorphicRep(Morphism::from_digits({"0", "01", "21"}), Coding(2, {0, 1, 1}), 2);
}

/// Prefix of a named sequence: fib, even-fib, odd-fib or spir.
inline Word builtin_sequence(std::string_view name, std::size_t n) {
  if (name == "fib") return coded_prefix(fib_rep(), n);
  if (name == "even-fib") return even_prefix(fib_rep(), n);
  if (name == "odd-fib") return odd_prefix(fib_rep(), n);
  if (name == "spir") return coded_prefix(spir_rep(), n);
  throw Error(ErrorKind::parse_error, "unknown builtin sequence '" + std::string(name) + "'");
}

inline bool is_builtin_sequence(std::string_view name) {
  return name == "fib" || name == "even-fib" || name == "odd-fib" || name == "spir";
}

}  // namespace morphic
