#include <gtest/gtest.h>

#include <map>

#include "braidrelax/harness.hpp"
#include "braidrelax/serialize.hpp"
#include "braidrelax/suites.hpp"
#include "test_util.hpp"

using namespace braidrelax;
using testutil::word;

TEST(RandomWord, LengthAndReduction) {
  EXPECT_TRUE(random_word({4, 0, 1, 1}, 0).empty());
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t k = 0; k < 50; ++k) {
      const auto w = random_word({n, 30, 1, 5}, k);
      EXPECT_EQ(w.size(), 30u);
      EXPECT_EQ(w.strands(), n);
      EXPECT_TRUE(is_freely_reduced(w.letters()));
    }
  }
}

TEST(RandomWord, Deterministic) {
  EXPECT_EQ(random_word({5, 20, 1, 9}, 3), random_word({5, 20, 1, 9}, 3));
  EXPECT_EQ(random_word({5, 20, 10, 9}, 3), random_word({5, 20, 1000, 9}, 3));
  EXPECT_NE(random_word({5, 20, 1, 9}, 3), random_word({5, 20, 1, 9}, 4));
  EXPECT_NE(random_word({5, 20, 1, 9}, 3), random_word({5, 20, 1, 10}, 3));
}

TEST(RandomWord, RoughlyUniformLetters) {
  std::map<int, int> counts;
  for (std::uint64_t k = 0; k < 400; ++k) {
    for (int v : random_word({4, 25, 1, 6}, k)) counts[v]++;
  }
  ASSERT_EQ(counts.size(), 6u);
  for (auto [v, c] : counts) EXPECT_NEAR(c, 10000 / 6.0, 250) << v;
}

TEST(RunCell, AggregatesAndRatio) {
  const auto r = run_cell({4, 10, 60, 3}, Mode::Standard);
  EXPECT_EQ(r.completed, 60);
  EXPECT_EQ(r.failures, 0);
  EXPECT_LE(r.mean_output_length(), r.max_output_length);
  EXPECT_GE(r.max_ratio(), r.mean_output_length() / 10);
  EXPECT_EQ(r.exact_checks + r.fingerprint_checks, 60);
}

TEST(RunCell, IndependentOfThreadCount) {
  TableOptions one, four;
  one.threads = 1;
  four.threads = 4;
  const auto a = run_cell({5, 20, 40, 7}, Mode::Sigma1Consistent, one);
  const auto b = run_cell({5, 20, 40, 7}, Mode::Sigma1Consistent, four);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(RunCell, RankOneOutputsEqualInputLength) {
  const auto r = run_cell({2, 17, 20, 1}, Mode::Standard);
  EXPECT_EQ(r.max_output_length, 17);
  EXPECT_EQ(r.total_output_length, 17u * 20u);
}

TEST(RunTable, ShapeAndCsv) {
  const auto recs = run_table({4}, {10, 20, 30, 40, 50}, Mode::Standard, 5, 1);
  ASSERT_EQ(recs.size(), 5u);
  const auto csv = to_csv(recs);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,length,mode,samples,mean,max,max_ratio,failures");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
  EXPECT_EQ(to_csv_row(recs[0]).substr(0, 14), "4,10,standard,");
}

TEST(CheckRun, FlagsBrokenTraces) {
  auto t = relax_standard(word(3, {-1, 2, 1}));
  EXPECT_TRUE(check_run(t).ok());
  auto wrong = t;
  wrong.output = parse_dotted("-1 -2 . -1", 3);
  EXPECT_FALSE(check_run(wrong).ok());
  auto flat = t;
  flat.steps[1].complexity = 4;
  EXPECT_FALSE(check_run(flat).descent);
  auto mixed = relax_sigma1(word(3, {1}));
  mixed.output = parse_dotted("-1 . 1 . -1", 3);
  EXPECT_FALSE(check_run(mixed).consistent);
}

TEST(RatioTracker, Summaries) {
  EXPECT_TRUE(ratio_tracker({}).empty());
  const auto recs = run_table({3, 4}, {10, 20}, Mode::Standard, 20, 2);
  const auto s = ratio_tracker(recs);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].n, 3);
  EXPECT_EQ(s[1].corpus_size, 40);
  for (const auto& r : recs) {
    const auto& sum = r.spec.n == 3 ? s[0] : s[1];
    EXPECT_GE(sum.max_ratio, r.mean_output_length() / r.spec.length);
  }
}

TEST(Audit, Examples) {
  EXPECT_TRUE(audit_subwords({parse_dotted("2 . -1 -2", 3)}).violations.empty());
  const auto i = audit_subwords({parse_dotted("1 . -1", 3)});
  ASSERT_EQ(i.violations.size(), 1u);
  EXPECT_EQ(i.violations[0].rule, "i");
  const auto iii = audit_subwords({parse_dotted("1 . 2 . 1", 3)});
  ASSERT_FALSE(iii.violations.empty());
  EXPECT_EQ(iii.violations[0].rule, "iii");
  EXPECT_EQ(audit_subwords({parse_dotted("-2 . -1", 3)}).violations.size(), 1u);
  EXPECT_TRUE(audit_subwords({parse_dotted("1 . -2", 3)}).violations.empty());
}

TEST(Audit, RuleTwoPlacement) {
  EXPECT_TRUE(audit_subwords({parse_dotted("-2 . 1 2", 3)}).violations.empty());
  EXPECT_TRUE(audit_subwords({parse_dotted("1 . -2 . 1 2 . 2 . 2", 3)}).violations.empty());
  EXPECT_TRUE(audit_subwords({parse_dotted("2 . -1 -2 . -2", 3)}).violations.empty());
  const auto bad = audit_subwords({parse_dotted("-2 . 1 2 . 1", 3)});
  ASSERT_FALSE(bad.violations.empty());
  EXPECT_EQ(bad.violations[0].rule, "ii");
  EXPECT_EQ(audit_subwords({parse_dotted("2 . -1 -2 . -1 -2", 3)}).violations.size(), 1u);
}

TEST(Audit, ExtendedRules) {
  const AuditRules ext{true};
  EXPECT_EQ(audit_subwords({parse_dotted("2 1 . 2 1 . -2", 3)}, ext).violations[0].rule, "iv");
  EXPECT_EQ(audit_subwords({parse_dotted("1 2 . 1 2 . 2", 3)}, ext).violations[0].rule, "v");
  EXPECT_TRUE(audit_subwords({parse_dotted("1 . 2 1 . 2", 3)}, ext).violations.empty());
  EXPECT_EQ(audit_subwords({parse_dotted("1 . 2 1 . -2", 3)}, ext).violations[0].rule, "vi");
  EXPECT_EQ(audit_subwords({parse_dotted("-2 . 1 . 2 1", 3)}, ext).violations[0].rule, "vi");
  EXPECT_TRUE(audit_subwords({parse_dotted("1 . 2 1 . 2", 3)}).violations.empty());
}

TEST(Audit, OnlyB3) { EXPECT_THROW(audit_subwords({parse_dotted("1", 4)}), DomainError); }

TEST(Audit, TracesMustBeSigma1) {
  std::vector<RelaxationTrace<BigInt>> traces{relax_standard(word(3, {1}))};
  EXPECT_THROW(audit_subwords(traces), ContractError);
  traces = {relax_sigma1(word(3, {-1, 2, 1}))};
  EXPECT_TRUE(audit_subwords(traces).violations.empty());
}

TEST(Serialize, CodingRoundTrip) {
  const auto c = diagram_of_word(random_word({4, 45, 1, 1}, 0));
  const auto j = to_json(c);
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["bands"].size(), 5u);
  EXPECT_EQ(coding_from_json(json::parse(j.dump())), c);
  EXPECT_THROW(coding_from_json(json::parse(R"({"n":2,"bands":[{"sup":"x"}]})")), ParseError);
  EXPECT_THROW(coding_from_json(json::parse(R"({"bands":[]})")), ParseError);
}

TEST(Serialize, TraceRoundTrip) {
  const auto t = relax_sigma1(random_word({5, 30, 1, 1}, 2));
  const auto back = trace_from_json(json::parse(to_json(t).dump()));
  EXPECT_EQ(back.input, t.input);
  EXPECT_EQ(back.mode, t.mode);
  EXPECT_EQ(back.output, t.output);
  EXPECT_EQ(back.initial_complexity, t.initial_complexity);
  ASSERT_EQ(back.steps.size(), t.steps.size());
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    EXPECT_EQ(back.steps[k].move, t.steps[k].move);
    EXPECT_EQ(back.steps[k].complexity, t.steps[k].complexity);
    EXPECT_EQ(back.steps[k].phase, t.steps[k].phase);
  }
  EXPECT_EQ(to_json(back).dump(), to_json(t).dump());
}

TEST(Serialize, StatsRoundTrip) {
  const auto r = run_cell({3, 12, 30, 4}, Mode::Sigma1Consistent);
  const auto j = to_json(r);
  EXPECT_EQ(j["seed"], 4u);
  EXPECT_EQ(j["mode"], "sigma1");
  EXPECT_EQ(to_json(stats_from_json(json::parse(j.dump()))).dump(), j.dump());
  EXPECT_EQ(to_csv_row(stats_from_json(j)), to_csv_row(r));
}

TEST(Serialize, CertificateRoundTrip) {
  const auto c = bfs_min_length(word(3, {1, 2, -1, -2, 1}), 5);
  const auto back = certificate_from_json(json::parse(to_json(c).dump()));
  EXPECT_EQ(back.word, c.word);
  EXPECT_EQ(back.witness, c.witness);
  EXPECT_EQ(back.min_length, c.min_length);
}

TEST(Suites, RelationsPass) {
  for (int n = 2; n <= 6; ++n) EXPECT_TRUE(verify_relations(n, 40, 7).ok());
}

TEST(Suites, CorpusPasses) {
  const auto r = verify_corpus({5, 25, 30, 3}, Mode::Sigma1Consistent);
  EXPECT_TRUE(r.roundtrip.ok());
  EXPECT_TRUE(r.descent.ok());
  EXPECT_EQ(r.roundtrip.checked, 30);
}

TEST(Suites, MinLengthSmall) {
  const B3Ball ball(6);
  const auto r = verify_minlen_b3(6, 20, 1, ball);
  EXPECT_TRUE(r.minlen.ok()) << r.minlen.first_failure.value_or("");
  EXPECT_TRUE(r.audit.ok()) << r.audit.first_failure.value_or("");
  EXPECT_THROW(verify_minlen_b3(7, 1, 1, ball), DomainError);
}

TEST(Suites, ComplexityBoundShortWords) {
  BoundResult r;
  verify_complexity_bound(r, {4, 10, 50, 1});
  EXPECT_EQ(r.cubic.checked, 50);
  EXPECT_TRUE(r.exponential.ok());
}
