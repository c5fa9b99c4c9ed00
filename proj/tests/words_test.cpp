#include <gtest/gtest.h>

#include "morphic/codec.hpp"
#include "morphic/words.hpp"
#include "oracles.hpp"

using namespace morphic;

namespace {

Word W(std::string_view digits) { return word_from_digits(digits); }

const Morphism fib = Morphism::from_digits({"01", "0"});
const Morphism spir = Morphism::from_digits({"0", "01", "21"});

void expect_error(ErrorKind kind, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(Words, ApplyFibToFourthIterate) { EXPECT_EQ(apply_morphism(fib, W("01001")), W("01001010")); }

TEST(Words, ApplyToEmptyWord) {
  EXPECT_TRUE(apply_morphism(fib, Word{}).empty());
  EXPECT_TRUE(apply_morphism(spir, Word{}).empty());
}

TEST(Words, ApplySpir) { EXPECT_EQ(apply_morphism(spir, W("2101")), W("2101001")); }

TEST(Words, ApplyRejectsForeignSymbol) {
  expect_error(ErrorKind::alphabet_mismatch, [] { apply_morphism(fib, W("012")); });
}

TEST(Words, ImageLengthWithoutExpanding) {
  EXPECT_EQ(image_length(fib, W("01001")), 8u);
  EXPECT_EQ(image_length(fib, Word{}), 0u);
}

TEST(Words, MorphismPowers) {
  EXPECT_EQ(morphism_power(fib, 2), Morphism::from_digits({"010", "01"}));
  EXPECT_EQ(morphism_power(fib, 1), fib);
  EXPECT_EQ(morphism_power(fib, 3), Morphism::from_digits({"01001", "010"}));
  expect_error(ErrorKind::invalid_exponent, [] { morphism_power(fib, 0); });
}

TEST(Words, MorphismPowerMatchesNaiveIteration) {
  const oracle::Images f{"012", "2", "10"};
  const Morphism m = Morphism::from_digits({"012", "2", "10"});
  for (unsigned k = 1; k <= 5; ++k) {
    const auto mk = morphism_power(m, k);
    for (std::size_t a = 0; a < 3; ++a) {
      EXPECT_EQ(to_string(mk.image(static_cast<Symbol>(a))), oracle::iterate(f, std::string(1, char('0' + a)), k));
    }
  }
}

TEST(Words, MorphismValidation) {
  expect_error(ErrorKind::alphabet_mismatch, [] { Morphism::from_digits({"01", "2"}); });
  EXPECT_THROW(Morphism::from_digits({"01", ""}), Error);
  EXPECT_THROW(Morphism(std::vector<Word>{}), Error);
}

TEST(Words, Prolongable) {
  EXPECT_TRUE(fib.prolongable_at(0));
  EXPECT_FALSE(fib.prolongable_at(1));
  EXPECT_TRUE(spir.prolongable_at(2));
  EXPECT_FALSE(spir.prolongable_at(0));  // f(0) = 0 has length 1
}

TEST(Words, FixedPointPrefix) {
  EXPECT_EQ(fixed_point_prefix(fib, 0, 8), W("01001010"));
  EXPECT_EQ(fixed_point_prefix(fib, 0, 1), W("0"));
  EXPECT_EQ(fixed_point_prefix(spir, 2, 16), W("2101001000100001"));
  expect_error(ErrorKind::not_prolongable, [] { fixed_point_prefix(fib, 1, 4); });
  expect_error(ErrorKind::not_prolongable, [] { fixed_point_prefix(spir, 0, 4); });
}

TEST(Words, FixedPointAgreesWithOracleOnLongPrefix) {
  EXPECT_EQ(to_string(fixed_point_prefix(fib, 0, 5000)), oracle::fib(5000));
}

TEST(Words, FixedPointBufferIsImageOfExpandedPrefix) {
  FixedPoint fp(fib, 0);
  fp.extend_to(100);
  const Word buf = fp.buffer();
  // The buffer is always f applied to some prefix of itself.
  std::size_t e = 0;
  std::size_t len = 0;
  while (len < buf.size()) len += fib.image(buf[e++]).size();
  EXPECT_EQ(len, buf.size());
  EXPECT_EQ(apply_morphism(fib, Word(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(e))), buf);
}

TEST(Words, Codings) {
  const Coding tau(2, {0, 1, 1});
  EXPECT_EQ(apply_coding(tau, W("2101001")), W("1101001"));
  EXPECT_EQ(apply_coding(Coding::identity(3), W("2101001")), W("2101001"));
  const Coding rho = Coding::from_digits("001");
  // Oracle: symbol-by-symbol relabeling, and the result is a fib prefix.
  EXPECT_EQ(to_string(apply_coding(rho, W("02102"))), oracle::code("001", "02102"));
  EXPECT_EQ(to_string(apply_coding(rho, W("02102"))), oracle::fib(5));
  expect_error(ErrorKind::alphabet_mismatch, [&] { apply_coding(tau, W("3")); });
  expect_error(ErrorKind::alphabet_mismatch, [] { Coding(2, {0, 2}); });
}

TEST(Words, CodedPrefixOfSpir) {
  EXPECT_EQ(coded_prefix(spir_rep(), 7), W("1101001"));
  EXPECT_EQ(to_string(coded_prefix(spir_rep(), 200)),
            oracle::code("011", oracle::fixed_point({"0", "01", "21"}, '2', 200)));
}

TEST(Words, MorphicRepValidation) {
  expect_error(ErrorKind::not_prolongable, [] { MorphicRep(fib, Coding::identity(2), 1); });
  expect_error(ErrorKind::alphabet_mismatch, [] { MorphicRep(fib, Coding::identity(3), 0); });
}

TEST(Words, PruneKeepsFullyReachable) {
  const auto r = prune_unreachable(fib_rep());
  EXPECT_EQ(r.morphism, fib);
  EXPECT_EQ(r.coding.map(), Coding::identity(2).map());
}

TEST(Words, PruneDropsUnreachable) {
  const auto r = prune_unreachable(Morphism::from_digits({"01", "0", "2"}), Coding::from_digits("012"), 0);
  EXPECT_EQ(r.morphism, fib);
  EXPECT_EQ(r.coding.map(), (std::vector<Symbol>{0, 1}));
  EXPECT_EQ(r.start, 0u);
}

TEST(Words, PruneRenumbersInIncreasingOrder) {
  // Symbol 1 unreachable; 2 becomes 1.
  const auto r = prune_unreachable(Morphism::from_digits({"02", "1", "0"}), Coding::from_digits("011"), 0);
  EXPECT_EQ(r.morphism, Morphism::from_digits({"01", "0"}));
  EXPECT_EQ(r.coding.map(), (std::vector<Symbol>{0, 1}));
}

TEST(Words, PruneSpirFromTwoKeepsEverything) {
  const auto r = prune_unreachable(spir_rep());
  EXPECT_EQ(r.morphism, spir);
  EXPECT_EQ(r.start, 2u);
}

TEST(Words, Factors) {
  FixedPoint fp(fib, 0);
  EXPECT_EQ(fp.factor(0, 2), W("01"));
  EXPECT_TRUE(fp.factor(5, 5).empty());
  EXPECT_EQ(fp.factor(3, 8), W("01010"));
  EXPECT_EQ(to_string(fp.factor(100, 130)), oracle::fib(130).substr(100));
  expect_error(ErrorKind::invalid_range, [&] { fp.factor(3, 2); });
}

TEST(Words, ToStringUsesBracesForLargeSymbols) {
  EXPECT_EQ(to_string(Word{0, 12, 3}), "0{12}3");
  EXPECT_EQ(to_string(Word{}), "");
}

TEST(Words, Helpers) {
  EXPECT_EQ(concat(W("01"), W("2")), W("012"));
  EXPECT_TRUE(starts_with(W("0120"), W("01")));
  EXPECT_FALSE(starts_with(W("01"), W("012")));
  EXPECT_THROW(word_from_digits("0a"), Error);
}
