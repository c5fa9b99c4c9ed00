#pragma once

/**
 * @file words.hpp
 * Symbols, finite words, morphisms, codings and lazily extended fixed points.
 *
 * An alphabet of size n is always {0, ..., n-1}. Words are plain vectors of
 * symbol indices; the digit spelling ('0' + index) is only used at the I/O
 * boundary.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morphic/error.hpp"

namespace morphic {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Spell a word as its digit string. Symbols >= 10 are written as {index}.
inline std::string to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) {
    if (s < 10) {
      out.push_back(static_cast<char>('0' + s));
    } else {
      out += "{" + std::to_string(s) + "}";
    }
  }
  return out;
}

/// Read a digit string into a word. Throws parse_error on a non-digit.
inline Word word_from_digits(std::string_view digits) {
  Word w;
  w.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::parse_error, "non-digit character in word '" + std::string(digits) + "'");
    }
    w.push_back(static_cast<Symbol>(c - '0'));
  }
  return w;
}

inline Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline bool starts_with(const Word& w, const Word& prefix) {
  return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

/// A map from {0..n-1} to non-empty words over the same alphabet.
class Morphism {
 public:
  Morphism() = default;

  explicit Morphism(std::vector<Word> images) : images_(std::move(images)) {
    if (images_.empty()) {
      throw Error(ErrorKind::alphabet_mismatch, "morphism needs a non-empty alphabet");
    }
    for (std::size_t a = 0; a < images_.size(); ++a) {
      if (images_[a].empty()) {
        throw Error(ErrorKind::alphabet_mismatch, "image of symbol " + std::to_string(a) + " is empty");
      }
      for (Symbol s : images_[a]) {
        if (s >= images_.size()) {
          throw Error(ErrorKind::alphabet_mismatch,
                      "image of symbol " + std::to_string(a) + " uses symbol " + std::to_string(s) +
                          " outside an alphabet of size " + std::to_string(images_.size()));
        }
      }
    }
  }

  /// Convenience constructor from digit strings, e.g. {"01", "0"}.
  static Morphism from_digits(std::initializer_list<std::string_view> images) {
    std::vector<Word> words;
    for (auto d : images) words.push_back(word_from_digits(d));
    return Morphism(std::move(words));
  }

  std::size_t size() const noexcept { return images_.size(); }
  const Word& image(Symbol a) const { return images_.at(a); }
  const std::vector<Word>& images() const noexcept { return images_; }

  /// f(a) = a u with u non-empty.
  bool prolongable_at(Symbol a) const {
    return a < size() && images_[a].size() >= 2 && images_[a].front() == a;
  }

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  std::vector<Word> images_;
};

/// Symbol-by-symbol relabeling from a source alphabet into a target alphabet.
class Coding {
 public:
  Coding() = default;

  Coding(std::size_t target_size, std::vector<Symbol> map) : target_size_(target_size), map_(std::move(map)) {
    for (std::size_t a = 0; a < map_.size(); ++a) {
      if (map_[a] >= target_size_) {
        throw Error(ErrorKind::alphabet_mismatch, "coding sends symbol " + std::to_string(a) +
                                                      " outside a target alphabet of size " +
                                                      std::to_string(target_size_));
      }
    }
  }

  static Coding identity(std::size_t n) {
    std::vector<Symbol> map(n);
    for (std::size_t i = 0; i < n; ++i) map[i] = static_cast<Symbol>(i);
    return Coding(n, std::move(map));
  }

  /// Target size is taken as 1 + the largest mapped digit.
  static Coding from_digits(std::string_view digits) {
    Word map = word_from_digits(digits);
    Symbol top = map.empty() ? 0 : *std::max_element(map.begin(), map.end());
    return Coding(top + 1, std::move(map));
  }

  std::size_t source_size() const noexcept { return map_.size(); }
  std::size_t target_size() const noexcept { return target_size_; }
  Symbol operator()(Symbol a) const { return map_.at(a); }
  const std::vector<Symbol>& map() const noexcept { return map_; }

  /// Same map over a (possibly larger) target alphabet.
  Coding with_target_size(std::size_t target_size) const { return Coding(target_size, map_); }

  friend bool operator==(const Coding&, const Coding&) = default;

 private:
  std::size_t target_size_ = 0;
  std::vector<Symbol> map_;
};

inline Word apply_morphism(const Morphism& f, const Word& w) {
  std::size_t total = 0;
  for (Symbol s : w) {
    if (s >= f.size()) {
      throw Error(ErrorKind::alphabet_mismatch, "symbol " + std::to_string(s) + " not in the morphism's alphabet");
    }
    total += f.image(s).size();
  }
  Word out;
  out.reserve(total);
  for (Symbol s : w) {
    const Word& img = f.image(s);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

/// Total length |f(w)| without building the word.
inline std::size_t image_length(const Morphism& f, const Word& w) {
  std::size_t total = 0;
  for (Symbol s : w) total += f.image(s).size();
  return total;
}

/// The morphism a -> f^k(a).
inline Morphism morphism_power(const Morphism& f, unsigned k) {
  if (k == 0) throw Error(ErrorKind::invalid_exponent, "morphism power needs k >= 1");
  std::vector<Word> images = f.images();
  for (unsigned i = 1; i < k; ++i) {
    for (auto& img : images) img = apply_morphism(f, img);
  }
  return Morphism(std::move(images));
}

inline Word apply_coding(const Coding& tau, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Symbol s : w) {
    if (s >= tau.source_size()) {
      throw Error(ErrorKind::alphabet_mismatch, "symbol " + std::to_string(s) + " not in the coding's alphabet");
    }
    out.push_back(tau(s));
  }
  return out;
}

/// A coded fixed point tau(f^inf(start)).
struct MorphicRep {
  Morphism morphism;
  Coding coding;
  Symbol start = 0;

  MorphicRep() = default;
  MorphicRep(Morphism f, Coding tau, Symbol a = 0) : morphism(std::move(f)), coding(std::move(tau)), start(a) {
    if (coding.source_size() != morphism.size()) {
      throw Error(ErrorKind::alphabet_mismatch, "coding covers " + std::to_string(coding.source_size()) +
                                                    " symbols but the morphism has " +
                                                    std::to_string(morphism.size()));
    }
    if (!morphism.prolongable_at(start)) {
      throw Error(ErrorKind::not_prolongable,
                  "image of symbol " + std::to_string(start) + " must start with it and have length >= 2");
    }
  }

  friend bool operator==(const MorphicRep&, const MorphicRep&) = default;
};

/// The pair of representations whose coded fixed points should coincide.
struct EqualityProblem {
  MorphicRep lhs;
  MorphicRep rhs;

  friend bool operator==(const EqualityProblem&, const EqualityProblem&) = default;
};

/// Prefix of f^inf(a), grown on demand by applying f to already known symbols.
///
/// The buffer always equals f(s_0) f(s_1) ... f(s_{e-1}) where e symbols have
/// been expanded; since f(s_0) starts with s_0 this is a prefix of the fixed
/// point longer than e, so the next symbol to expand is always known.
class FixedPoint {
 public:
  FixedPoint(Morphism f, Symbol start) : f_(std::move(f)) {
    if (!f_.prolongable_at(start)) {
      throw Error(ErrorKind::not_prolongable,
                  "image of symbol " + std::to_string(start) + " must start with it and have length >= 2");
    }
    buffer_ = f_.image(start);
    expanded_ = 1;
  }

  const Morphism& morphism() const noexcept { return f_; }
  std::size_t known() const noexcept { return buffer_.size(); }

  void extend_to(std::size_t n) {
    while (buffer_.size() < n) {
      const Word& img = f_.image(buffer_[expanded_++]);
      buffer_.insert(buffer_.end(), img.begin(), img.end());
    }
  }

  Symbol at(std::size_t i) {
    extend_to(i + 1);
    return buffer_[i];
  }

  Word prefix(std::size_t n) {
    extend_to(n);
    return Word(buffer_.begin(), buffer_.begin() + static_cast<std::ptrdiff_t>(n));
  }

  /// s_{k,m} = s(k) ... s(m-1).
  Word factor(std::size_t k, std::size_t m) {
    if (k > m) throw Error(ErrorKind::invalid_range, "factor needs k <= m");
    extend_to(m);
    return Word(buffer_.begin() + static_cast<std::ptrdiff_t>(k), buffer_.begin() + static_cast<std::ptrdiff_t>(m));
  }

  /// Read-only view of the materialized part.
  const Word& buffer() const noexcept { return buffer_; }

 private:
  Morphism f_;
  Word buffer_;
  std::size_t expanded_ = 0;
};

inline Word fixed_point_prefix(const Morphism& f, Symbol a, std::size_t n) {
  FixedPoint fp(f, a);
  return fp.prefix(n);
}

/// First n symbols of tau(f^inf(start)).
inline Word coded_prefix(const MorphicRep& rep, std::size_t n) {
  return apply_coding(rep.coding, fixed_point_prefix(rep.morphism, rep.start, n));
}

inline Word factor(FixedPoint& s, std::size_t k, std::size_t m) { return s.factor(k, m); }

/// Drop symbols that never occur in f^inf(start) and renumber the rest in
/// increasing order of their old index.
inline MorphicRep prune_unreachable(const MorphicRep& rep) {
  const Morphism& f = rep.morphism;
  std::vector<bool> reachable(f.size(), false);
  std::vector<Symbol> stack{rep.start};
  reachable[rep.start] = true;
  while (!stack.empty()) {
    Symbol a = stack.back();
    stack.pop_back();
    for (Symbol s : f.image(a)) {
      if (!reachable[s]) {
        reachable[s] = true;
        stack.push_back(s);
      }
    }
  }
  std::vector<Symbol> rename(f.size(), 0);
  Symbol next = 0;
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (reachable[a]) rename[a] = next++;
  }
  if (next == f.size()) return rep;

  std::vector<Word> images;
  std::vector<Symbol> codes;
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (!reachable[a]) continue;
    Word img;
    for (Symbol s : f.image(static_cast<Symbol>(a))) img.push_back(rename[s]);
    images.push_back(std::move(img));
    codes.push_back(rep.coding(static_cast<Symbol>(a)));
  }
  return MorphicRep(Morphism(std::move(images)), Coding(rep.coding.target_size(), std::move(codes)),
                    rename[rep.start]);
}

inline MorphicRep prune_unreachable(const Morphism& f, const Coding& tau, Symbol a) {
  return prune_unreachable(MorphicRep(f, tau, a));
}

}  // namespace morphic
