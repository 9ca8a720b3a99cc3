// Implemented transition table against the published one, under both
// readings and both trivial conventions.

#include <gtest/gtest.h>

#include "arc_oracle.hpp"
#include "braidrelax/coding.hpp"
#include "braidrelax/harness.hpp"
#include "printed_rules.hpp"
#include "test_util.hpp"

using namespace braidrelax;

namespace {

using Apply = std::function<oracle::Coding(const oracle::Coding&, int)>;

oracle::Coding run(oracle::Coding d, const BraidWord& w, const Apply& f) {
  for (int v : w) d = f(d, v);
  return d;
}

struct Score {
  int relation_failures = 0;
  bool reference_coding = false;
  bool complexities = false;
};

Score score(const std::function<oracle::Coding(int)>& trivial, const Apply& f) {
  Score s;
  for (int n = 3; n <= 5; ++n) {
    for (std::uint64_t k = 0; k < 60; ++k) {
      const auto d = run(trivial(n), random_word({n, static_cast<int>(k % 10), 1, 5}, k), f);
      for (int i = 1; i < n; ++i) {
        if (f(f(d, i), -i) != d) ++s.relation_failures;
        if (i + 1 < n && f(f(f(d, i), i + 1), i) != f(f(f(d, i + 1), i), i + 1)) ++s.relation_failures;
        for (int j = i + 2; j < n; ++j) {
          if (f(f(d, i), j) != f(f(d, j), i)) ++s.relation_failures;
        }
      }
    }
  }
  const oracle::Coding expected{{0, 0, 2, 0, 2, 0}, {0, 0, 2, 0, 0, 2}, {1, 0, 1, 1, 0, 0}, {1, 0, 0, 0, 0, 0}};
  s.reference_coding = run(trivial(3), testutil::word(3, {-1, 2, 1, 2}), f) == expected;
  s.complexities = printed::complexity(trivial(4)) == 3 &&
                   printed::complexity(run(trivial(4), testutil::word(4, {1}), f)) == 5 &&
                   printed::complexity(run(trivial(4), testutil::word(4, {1, -2}), f)) == 9;
  return s;
}

oracle::Coding slid_trivial(int n) { return testutil::to_plain(trivial_coding<long long>(n)); }

Apply implemented = [](const oracle::Coding& d, int v) {
  const int n = static_cast<int>(d.size()) - 1;
  auto c = testutil::from_plain(n, d);
  apply_letter_in_place(c, v);
  return testutil::to_plain(c);
};

Apply printed_reading(printed::Reading r) {
  return [r](const oracle::Coding& d, int v) { return printed::apply(d, v, r); };
}

}  // namespace

TEST(TransitionRules, ImplementedTablePassesEveryCheck) {
  const auto s = score(slid_trivial, implemented);
  EXPECT_EQ(s.relation_failures, 0);
  EXPECT_TRUE(s.reference_coding);
  EXPECT_TRUE(s.complexities);
}

TEST(TransitionRules, PrintedTableFailsUnderEveryReading) {
  for (auto r : {printed::Reading::Sum, printed::Reading::Product}) {
    for (bool slid : {false, true}) {
      const auto s = score(slid ? slid_trivial : printed::trivial_up, printed_reading(r));
      EXPECT_TRUE(s.relation_failures > 0 || !s.reference_coding || !s.complexities)
          << "reading " << static_cast<int>(r) << " slid " << slid;
    }
  }
}

TEST(TransitionRules, PrintedTableLeavesBandZeroEmptyUnderUpConvention) {
  // With one up component per interior band and nothing in band 0, sigma_1
  // cannot create the band-0 up component that marks a positive diagram.
  const auto d = printed::apply(printed::trivial_up(4), 1, printed::Reading::Sum);
  EXPECT_EQ(d[0][oracle::kUp], 0);
}

TEST(TransitionRules, ImplementedTableMatchesArcOracleStepByStep) {
  for (int n = 3; n <= 6; ++n) {
    for (std::uint64_t k = 0; k < 40; ++k) {
      const auto w = random_word({n, 12, 1, 17}, k);
      auto c = trivial_coding<long long>(n);
      std::vector<int> prefix;
      for (int v : w) {
        apply_letter_in_place(c, v);
        prefix.push_back(v);
        ASSERT_EQ(testutil::to_plain(c), oracle::coding_of_word(BraidWord(n, prefix))) << to_string(w);
      }
    }
  }
}
