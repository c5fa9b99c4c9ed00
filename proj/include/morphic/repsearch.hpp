#pragma once

/**
 * @file repsearch.hpp
 * Exhaustive search for representations tau(f^inf(0)) of a target prefix.
 *
 * The fixed point is produced symbol by symbol. The image of a symbol is only
 * chosen when that symbol is first expanded, and the coding of a symbol is
 * fixed by the target at its first occurrence, so a partial assignment dies at
 * the first mismatching position. New symbols must be introduced in order
 * (symbol m + 1 only after 0..m have appeared), which leaves exactly one
 * numbering per representation: symbols are numbered by first appearance in
 * f^inf(0).
 *
 * A result uses its whole alphabet: all n symbols occur in f^inf(0). Symbols
 * first occurring at or beyond position N get every coding.
 */

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <tuple>
#include <vector>

#include "morphic/words.hpp"

namespace morphic {

struct SearchSpec {
  std::size_t alphabet = 1;   // n
  std::size_t max_len = 2;    // k
  std::size_t prefix = 1;     // N
  Word target;                // at least N symbols
};

struct FoundRep {
  MorphicRep rep;
  std::size_t complexity = 0;
};

/// Sum of image lengths.
inline std::size_t complexity(const Morphism& f) {
  std::size_t c = 0;
  for (const auto& img : f.images()) c += img.size();
  return c;
}

inline constexpr std::size_t kSearchMaxAlphabet = 6;
inline constexpr std::size_t kSearchMaxImageLength = 3;

namespace detail {

class RepSearcher {
 public:
  explicit RepSearcher(const SearchSpec& spec)
      : n_(spec.alphabet), k_(spec.max_len), N_(spec.prefix), target_(spec.target.begin(),
                                                                     spec.target.begin() +
                                                                         static_cast<std::ptrdiff_t>(spec.prefix)) {
    target_size_ = 1 + *std::max_element(target_.begin(), target_.end());
    len_.assign(n_, 0);
    img_.assign(n_, std::array<Symbol, kSearchMaxImageLength>{});
    code_.assign(n_, kUnset);
  }

  /// Every admissible image of symbol 0 (starts with 0, length >= 2).
  std::vector<Word> first_images() const {
    std::vector<Word> out;
    Word cur{0};
    std::size_t seen = 1;
    enumerate_images(cur, seen, 2, out);
    return out;
  }

  /// All results whose f(0) equals `f0`.
  std::vector<FoundRep> run_with_first_image(const Word& f0) {
    results_.clear();
    buf_.assign(1, 0);
    seen_ = 1;
    j_ = 0;
    std::fill(len_.begin(), len_.end(), 0);
    std::fill(code_.begin(), code_.end(), kUnset);
    code_[0] = target_[0];
    len_[0] = f0.size();
    std::copy(f0.begin(), f0.end(), img_[0].begin());
    dfs();
    return std::move(results_);
  }

 private:
  static constexpr Symbol kUnset = static_cast<Symbol>(-1);

  // Images of a symbol whose expansion happens when `seen` symbols have
  // appeared: each symbol is < seen, or the next new one.
  void enumerate_images(Word& cur, std::size_t seen, std::size_t min_len, std::vector<Word>& out) const {
    if (cur.size() >= min_len) out.push_back(cur);
    if (cur.size() == k_) return;
    const std::size_t limit = std::min(seen + 1, n_);
    for (std::size_t s = 0; s < limit; ++s) {
      cur.push_back(static_cast<Symbol>(s));
      enumerate_images(cur, s == seen ? seen + 1 : seen, min_len, out);
      cur.pop_back();
    }
  }

  bool all_appeared_assigned() const {
    for (std::size_t s = 0; s < seen_; ++s)
      if (len_[s] == 0) return false;
    return true;
  }

  // Append f(buf_[j_]) to the buffer, checking forced codings.
  bool append(Symbol a, std::vector<Symbol>& trail) {
    const std::size_t skip = j_ == 0 ? 1 : 0;  // f(0) starts with the already placed 0
    for (std::size_t t = skip; t < len_[a]; ++t) {
      const Symbol s = img_[a][t];
      const std::size_t pos = buf_.size();
      buf_.push_back(s);
      if (s == seen_) ++seen_;
      if (pos < N_) {
        if (code_[s] == kUnset) {
          code_[s] = target_[pos];
          trail.push_back(s);
        } else if (code_[s] != target_[pos]) {
          return false;
        }
      }
    }
    return true;
  }

  void dfs() {
    const std::size_t save_buf = buf_.size();
    const std::size_t save_j = j_;
    const std::size_t save_seen = seen_;
    std::vector<Symbol> trail;

    while (true) {
      if (buf_.size() >= N_ && all_appeared_assigned()) {
        if (seen_ == n_) emit();
        break;
      }
      const Symbol a = buf_[j_];
      if (len_[a] == 0) {
        branch(a);
        break;
      }
      if (!append(a, trail)) break;
      ++j_;
    }

    for (Symbol s : trail) code_[s] = kUnset;
    buf_.resize(save_buf);
    j_ = save_j;
    seen_ = save_seen;
  }

  void branch(Symbol a) {
    std::vector<Word> choices;
    Word cur;
    enumerate_images(cur, seen_, 1, choices);
    for (const auto& w : choices) {
      len_[a] = w.size();
      std::copy(w.begin(), w.end(), img_[a].begin());
      dfs();
    }
    len_[a] = 0;
  }

  void emit() {
    std::vector<Symbol> free;
    for (std::size_t s = 0; s < n_; ++s)
      if (code_[s] == kUnset) free.push_back(static_cast<Symbol>(s));
    std::vector<Symbol> codes(code_.begin(), code_.end());
    std::vector<Word> images;
    for (std::size_t s = 0; s < n_; ++s) images.emplace_back(img_[s].begin(), img_[s].begin() + static_cast<std::ptrdiff_t>(len_[s]));
    const Morphism f(std::move(images));
    const std::size_t c = complexity(f);

    // Odometer over the free codings.
    std::vector<Symbol> digit(free.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < free.size(); ++i) codes[free[i]] = digit[i];
      results_.push_back(FoundRep{MorphicRep(f, Coding(target_size_, codes), 0), c});
      std::size_t i = 0;
      while (i < digit.size() && ++digit[i] == target_size_) digit[i++] = 0;
      if (i == digit.size()) break;
    }
  }

  std::size_t n_;
  std::size_t k_;
  std::size_t N_;
  std::vector<Symbol> target_;
  Symbol target_size_ = 1;

  std::vector<std::size_t> len_;  // 0 = image not chosen yet
  std::vector<std::array<Symbol, kSearchMaxImageLength>> img_;
  std::vector<Symbol> code_;
  Word buf_;
  std::size_t j_ = 0;
  std::size_t seen_ = 1;
  std::vector<FoundRep> results_;
};

inline bool found_rep_less(const FoundRep& a, const FoundRep& b) {
  return std::tie(a.complexity, a.rep.morphism.images(), a.rep.coding.map()) <
         std::tie(b.complexity, b.rep.morphism.images(), b.rep.coding.map());
}

}  // namespace detail

/// All representations over exactly `alphabet` symbols with images of length
/// 1..max_len matching the first `prefix` target symbols, sorted by
/// complexity, then image list, then coding. `jobs` threads split the work by
/// the choice of f(0); the output does not depend on it.
inline std::vector<FoundRep> search(const SearchSpec& spec, unsigned jobs = 1) {
  if (spec.alphabet < 1 || spec.max_len < 1 || spec.prefix < 1) {
    throw Error(ErrorKind::invalid_range, "search needs n, k, N >= 1");
  }
  if (spec.alphabet > kSearchMaxAlphabet || spec.max_len > kSearchMaxImageLength) {
    throw Error(ErrorKind::search_too_large, "search is limited to n <= 6 and k <= 3");
  }
  if (spec.target.size() < spec.prefix) {
    throw Error(ErrorKind::invalid_range, "target is shorter than the prefix length");
  }

  const std::vector<Word> firsts = detail::RepSearcher(spec).first_images();
  std::vector<std::vector<FoundRep>> parts(firsts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    detail::RepSearcher searcher(spec);
    for (std::size_t i = next++; i < firsts.size(); i = next++) parts[i] = searcher.run_with_first_image(firsts[i]);
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(firsts.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<FoundRep> all;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(all));
  std::sort(all.begin(), all.end(), detail::found_rep_less);
  return all;
}

}  // namespace morphic
