#include <gtest/gtest.h>

#include "arc_oracle.hpp"
#include "braidrelax/coding.hpp"
#include "braidrelax/harness.hpp"
#include "test_util.hpp"

using namespace braidrelax;
using testutil::word;

namespace {

DiagramCoding<> reference_coding() {
  // Order: sup, sub, over, under, up, down.
  return testutil::from_plain(3, {{0, 0, 2, 0, 2, 0}, {0, 0, 2, 0, 0, 2}, {1, 0, 1, 1, 0, 0}, {1, 0, 0, 0, 0, 0}});
}

BraidWord sample(int n, int len, std::uint64_t k) { return random_word({n, len, 1, 99}, k); }

}  // namespace

TEST(TrivialCoding, Complexity) {
  EXPECT_EQ(complexity(trivial_coding(2)), 1);
  EXPECT_EQ(complexity(trivial_coding(3)), 2);
  EXPECT_EQ(complexity(trivial_coding(4)), 3);
  EXPECT_EQ(complexity(trivial_coding(6)), 5);
}

TEST(TrivialCoding, Shape) {
  const auto c = trivial_coding(4);
  EXPECT_EQ(c.band(0).over, 3);
  EXPECT_EQ(c.band(0).under, 3);
  for (int k = 1; k < 4; ++k) {
    EXPECT_EQ(c.band(k).sup, 1);
    EXPECT_EQ(c.band(k).over, 3 - k);
    EXPECT_EQ(c.band(k).under, 3 - k);
    EXPECT_EQ(c.band(k).up + c.band(k).down + c.band(k).sub, 0);
  }
  EXPECT_EQ(c.band(4), Band<BigInt>{});
  EXPECT_THROW(trivial_coding(1), DomainError);
}

TEST(DiagramOfWord, ComplexityExamples) {
  EXPECT_EQ(complexity(diagram_of_word(word(4, {}))), 3);
  EXPECT_EQ(complexity(diagram_of_word(word(4, {1}))), 5);
  EXPECT_EQ(complexity(diagram_of_word(word(4, {1, -2}))), 9);
  EXPECT_TRUE(is_trivial(diagram_of_word(word(6, {}))));
}

TEST(DiagramOfWord, ReferenceVector) {
  const auto c = diagram_of_word(word(3, {-1, 2, 1, 2}));
  EXPECT_EQ(c, reference_coding());
  EXPECT_EQ(complexity(c), 6);
}

TEST(Mirror, ReferenceVector) {
  const auto m = mirror(reference_coding());
  EXPECT_EQ(m, testutil::from_plain(3, {{0, 0, 0, 2, 0, 2}, {0, 0, 0, 2, 2, 0}, {1, 0, 1, 1, 0, 0},
                                         {1, 0, 0, 0, 0, 0}}));
  EXPECT_EQ(mirror(m), reference_coding());
}

TEST(Mirror, TrivialComplexityPreserved) {
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(complexity(mirror(trivial_coding(n))), n - 1);
}

TEST(Complexity, IgnoresNonCrossingTypes) {
  std::vector<Band<BigInt>> bands(4);
  bands[1].over = 7;
  EXPECT_EQ(complexity(DiagramCoding<>::from_bands(3, bands)), 0);
}

TEST(FromBands, Validation) {
  EXPECT_THROW(DiagramCoding<>::from_bands(3, std::vector<Band<BigInt>>(3)), DomainError);
  std::vector<Band<BigInt>> bands(4);
  bands[2].up = -1;
  EXPECT_THROW(DiagramCoding<>::from_bands(3, bands), DomainError);
}

TEST(ApplyGenerator, IndexOutOfRange) {
  EXPECT_THROW(apply_generator(trivial_coding(3), 3, 1), DomainError);
  EXPECT_THROW(apply_generator(trivial_coding(3), 0, 1), DomainError);
  EXPECT_THROW(apply_generator(trivial_coding(3), 1, 2), DomainError);
}

TEST(ApplyGenerator, InverseUndoes) {
  for (std::uint64_t k = 0; k < 50; ++k) {
    const auto c = diagram_of_word(sample(5, 15, k));
    for (int i = 1; i < 5; ++i) {
      EXPECT_EQ(apply_generator(apply_generator(c, i, 1), i, -1), c);
      EXPECT_EQ(apply_generator(apply_generator(c, i, -1), i, 1), c);
    }
  }
}

TEST(ApplyGenerator, BraidRelationB3) {
  for (std::uint64_t k = 0; k < 100; ++k) {
    const auto c = diagram_of_word(sample(3, static_cast<int>(k % 21), k));
    EXPECT_EQ(apply_word(c, word(3, {1, 2, 1})), apply_word(c, word(3, {2, 1, 2})));
  }
}

TEST(ApplyGenerator, OnlyNeighbouringBandsChange) {
  const auto c = diagram_of_word(sample(7, 20, 3));
  const auto d = apply_generator(c, 3, 1);
  for (int b = 0; b <= 7; ++b) {
    if (b < 2 || b > 4) {
      EXPECT_EQ(c.band(b), d.band(b));
    }
  }
}

TEST(ApplyGenerator, MirrorConjugation) {
  for (std::uint64_t k = 0; k < 40; ++k) {
    const auto c = diagram_of_word(sample(4, 12, k));
    for (int i = 1; i < 4; ++i) {
      EXPECT_EQ(apply_generator(c, i, -1), mirror(apply_generator(mirror(c), i, 1)));
      EXPECT_EQ(apply_generator(mirror(apply_generator(mirror(c), i, 1)), i, 1), c);
    }
  }
}

TEST(DiagramOfWord, WellDefinedUnderCancellingPairs) {
  for (std::uint64_t k = 0; k < 60; ++k) {
    const auto w = sample(5, 12, k);
    std::vector<int> letters(w.begin(), w.end());
    const int v = static_cast<int>(k % 4) + 1;
    const auto at = letters.begin() + static_cast<long>(k % (letters.size() + 1));
    letters.insert(at, {v, -v});
    const BraidWord padded(5, letters);
    EXPECT_EQ(diagram_of_word(padded), diagram_of_word(w));
    EXPECT_EQ(free_reduce(padded), w);
  }
}

TEST(DiagramOfWord, MatchesArcOracle) {
  for (int n = 2; n <= 7; ++n) {
    for (std::uint64_t k = 0; k < 120; ++k) {
      const auto w = sample(n, static_cast<int>(k % 16), k);
      EXPECT_EQ(testutil::to_plain(diagram_of_word<long long>(w)), oracle::coding_of_word(w)) << to_string(w);
    }
  }
}

TEST(DiagramOfWord, ArcOracleOnFixedWords) {
  EXPECT_EQ(oracle::coding_of_word(word(3, {-1, 2, 1, 2})), testutil::to_plain(reference_coding()));
  EXPECT_EQ(oracle::coding_of_word(word(4, {})), testutil::to_plain(trivial_coding(4)));
}

TEST(DiagramOfWord, MachineIntegersAgreeWithBigIntegers) {
  for (std::uint64_t k = 0; k < 30; ++k) {
    const auto w = sample(5, 25, k);
    EXPECT_EQ(testutil::to_plain(diagram_of_word<long long>(w)), testutil::to_plain(diagram_of_word(w)));
  }
}

TEST(DiagramOfWord, BigIntegersBeyondSixtyFourBits) {
  std::vector<int> letters;
  for (int k = 0; k < 120; ++k) letters.push_back(k % 2 ? -2 : 1);
  const auto c = diagram_of_word(BraidWord(3, letters));
  EXPECT_GT(complexity(c), BigInt(1) << 64);
  EXPECT_TRUE(is_trivial(apply_word(c, invert_word(BraidWord(3, letters)))));
}

TEST(Complexity, LowerBoundAndParity) {
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t k = 0; k < 80; ++k) {
      const auto w = sample(n, static_cast<int>(k % 12), k);
      const auto c = diagram_of_word(w);
      const auto cx = complexity(c);
      EXPECT_GE(cx, n - 1);
      EXPECT_EQ(cx == n - 1, is_trivial(c));
      EXPECT_EQ(static_cast<int>(cx % 2), (n - 1) % 2);
    }
  }
}

TEST(IsTrivial, Examples) {
  EXPECT_TRUE(is_trivial(trivial_coding(5)));
  EXPECT_FALSE(is_trivial(diagram_of_word(word(3, {1}))));
  EXPECT_TRUE(is_trivial(diagram_of_word(word(3, {1, -1}))));
}

TEST(Sigma1Class, Examples) {
  EXPECT_EQ(sigma1_class(diagram_of_word(word(4, {1}))), Sigma1Class::Positive);
  EXPECT_EQ(sigma1_class(diagram_of_word(word(4, {1, -2}))), Sigma1Class::Positive);
  EXPECT_EQ(sigma1_class(diagram_of_word(word(4, {-1}))), Sigma1Class::Negative);
  EXPECT_EQ(sigma1_class(trivial_coding(4)), Sigma1Class::Neutral);
  EXPECT_EQ(sigma1_class(diagram_of_word(word(4, {2, -3}))), Sigma1Class::Neutral);
}

TEST(Sigma1Class, BothSignsIsIntegrityError) {
  std::vector<Band<BigInt>> bands(3);
  bands[0].up = 1;
  bands[0].down = 1;
  EXPECT_THROW(sigma1_class(DiagramCoding<>::from_bands(2, bands)), IntegrityError);
}

TEST(Sigma1Class, AgreesWithMirror) {
  for (std::uint64_t k = 0; k < 50; ++k) {
    const auto c = diagram_of_word(sample(4, 10, k));
    EXPECT_EQ(sigma1_class(mirror(c)), opposite(sigma1_class(c)));
  }
}

TEST(SigmaKClass, Examples) {
  EXPECT_EQ(sigma_k_class(trivial_coding(4), 2), Sigma1Class::Neutral);
  EXPECT_EQ(sigma_k_class(diagram_of_word(word(3, {2})), 2), Sigma1Class::Positive);
  EXPECT_EQ(sigma_k_class(diagram_of_word(word(3, {-2})), 2), Sigma1Class::Negative);
  EXPECT_EQ(sigma_k_class(diagram_of_word(word(5, {3, -4})), 3), Sigma1Class::Positive);
  EXPECT_EQ(sigma_k_class(diagram_of_word(word(4, {1})), 1), Sigma1Class::Positive);
}

TEST(SigmaKClass, Contract) {
  EXPECT_THROW(sigma_k_class(diagram_of_word(word(4, {1})), 2), ContractError);
  EXPECT_THROW(sigma_k_class(trivial_coding(4), 4), DomainError);
  EXPECT_THROW(sigma_k_class(trivial_coding(4), 0), DomainError);
}

TEST(SigmaKClass, IndexShift) {
  // Shifting every index by s moves the sign into band s.
  for (std::uint64_t k = 0; k < 40; ++k) {
    const auto w = sample(3, 8, k);
    const auto base = sigma1_class(diagram_of_word(w));
    for (int s = 1; s <= 2; ++s) {
      std::vector<int> shifted;
      for (int v : w) shifted.push_back(v > 0 ? v + s : v - s);
      EXPECT_EQ(sigma_k_class(diagram_of_word(BraidWord(3 + s, shifted)), 1 + s), base);
    }
  }
}

TEST(Dump, Format) {
  EXPECT_EQ(dump(trivial_coding(2)),
            "band 0: sup=0 sub=0 over=1 under=1 up=0 down=0\n"
            "band 1: sup=1 sub=0 over=0 under=0 up=0 down=0\n"
            "band 2: sup=0 sub=0 over=0 under=0 up=0 down=0\n");
}
