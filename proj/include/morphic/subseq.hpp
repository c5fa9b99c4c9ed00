#pragma once

/**
 * @file subseq.hpp
 * Arithmetic subsequences of coded fixed points, and the length-2 block
 * encoding that turns even/odd subsequences into codings of a new fixed point.
 */

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "morphic/words.hpp"

namespace morphic {

/// output(i) = tau(f^inf(start))(first + stride * i) for i < n.
inline Word arith_prefix(const MorphicRep& rep, std::size_t first, std::size_t stride, std::size_t n) {
  if (stride == 0) throw Error(ErrorKind::invalid_range, "stride must be >= 1");
  Word out;
  if (n == 0) return out;
  FixedPoint fp(rep.morphism, rep.start);
  fp.extend_to(first + stride * (n - 1) + 1);
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(rep.coding(fp.buffer()[first + stride * i]));
  return out;
}

inline Word even_prefix(const MorphicRep& rep, std::size_t n) { return arith_prefix(rep, 0, 2, n); }
inline Word odd_prefix(const MorphicRep& rep, std::size_t n) { return arith_prefix(rep, 1, 2, n); }

/// Smallest k <= max_k with every image of f^k of odd length. Image lengths
/// mod 2 are the column sums of F^k over GF(2).
inline std::optional<unsigned> odd_length_power(const Morphism& f, unsigned max_k = 12) {
  const std::size_t n = f.size();
  std::vector<std::vector<bool>> base(n, std::vector<bool>(n, false));  // base[i][j]: parity of #i in f(j)
  for (std::size_t j = 0; j < n; ++j)
    for (Symbol i : f.image(static_cast<Symbol>(j))) base[i][j] = !base[i][j];

  auto cur = base;
  for (unsigned k = 1; k <= max_k; ++k) {
    bool all_odd = true;
    for (std::size_t j = 0; j < n && all_odd; ++j) {
      bool parity = false;
      for (std::size_t i = 0; i < n; ++i) parity ^= cur[i][j];
      all_odd = parity;
    }
    if (all_odd) return k;
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (!base[i][l]) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (cur[l][j]) next[i][j] = !next[i][j];
      }
    cur = std::move(next);
  }
  return std::nullopt;
}

struct BlockEncoding {
  std::vector<Word> blocks;  // length-2 words over the alphabet of f, by first appearance
  Morphism morphism;         // over block indices
  Coding first;              // block -> its first symbol (even positions)
  Coding second;             // block -> its second symbol (odd positions)
};

/// Rewrite f^inf(0) as a sequence of length-2 blocks. Requires every image of
/// f to have odd length, so f maps each block to an even-length word.
inline BlockEncoding block_encode(const Morphism& f) {
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (f.image(static_cast<Symbol>(a)).size() % 2 == 0) {
      throw Error(ErrorKind::odd_length_required,
                  "image of symbol " + std::to_string(a) + " has even length");
    }
  }
  if (!f.prolongable_at(0)) {
    throw Error(ErrorKind::not_prolongable, "block encoding needs f prolongable at 0");
  }

  BlockEncoding enc;
  std::map<Word, Symbol> index_of;
  auto intern = [&](Word b) {
    auto [it, fresh] = index_of.emplace(b, static_cast<Symbol>(enc.blocks.size()));
    if (fresh) enc.blocks.push_back(std::move(b));
    return it->second;
  };
  intern(fixed_point_prefix(f, 0, 2));

  std::vector<Word> images;
  for (std::size_t b = 0; b < enc.blocks.size(); ++b) {
    const Word expanded = apply_morphism(f, enc.blocks[b]);
    Word img;
    for (std::size_t i = 0; i < expanded.size(); i += 2) img.push_back(intern(Word{expanded[i], expanded[i + 1]}));
    images.push_back(std::move(img));
  }

  std::vector<Symbol> first;
  std::vector<Symbol> second;
  for (const auto& b : enc.blocks) {
    first.push_back(b[0]);
    second.push_back(b[1]);
  }
  enc.morphism = Morphism(std::move(images));
  enc.first = Coding(f.size(), std::move(first));
  enc.second = Coding(f.size(), std::move(second));
  return enc;
}

}  // namespace morphic
