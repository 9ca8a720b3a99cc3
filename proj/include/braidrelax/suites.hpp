#pragma once

// Property suites shared by the command-line verifier and the acceptance runs.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "braidrelax/artin.hpp"
#include "braidrelax/b3_ball.hpp"
#include "braidrelax/coding.hpp"
#include "braidrelax/harness.hpp"
#include "braidrelax/relax.hpp"
#include "braidrelax/word.hpp"

namespace braidrelax {

struct SuiteResult {
  explicit SuiteResult(std::string name = {}) : suite(std::move(name)) {}

  std::string suite;
  long checked = 0;
  long failures = 0;
  std::optional<std::string> first_failure;
  std::vector<std::pair<std::string, long>> notes;  // extra counters

  void fail(std::string what) {
    ++failures;
    if (!first_failure) first_failure = std::move(what);
  }
  void merge(const SuiteResult& other) {
    checked += other.checked;
    failures += other.failures;
    if (!first_failure && other.first_failure) first_failure = other.first_failure;
  }
  bool ok() const noexcept { return failures == 0; }
};

/// Group relations on reachable codings: sigma_i sigma_i^-1 = id (both
/// orders), far commutation and the braid relation (both signs). Codings are
/// diagrams of random words whose length cycles through 0..max_len.
inline SuiteResult verify_relations(int n, int samples, std::uint64_t seed, int max_len = 20) {
  SuiteResult r("relations");
  for (int k = 0; k < samples; ++k) {
    const int len = k % (max_len + 1);
    const auto c = diagram_of_word<BigInt>(random_word({n, len, samples, seed}, static_cast<std::uint64_t>(k)));
    auto check = [&](bool ok, const std::string& what) {
      ++r.checked;
      if (!ok) r.fail("coding " + std::to_string(k) + ": " + what);
    };
    auto run = [&](std::initializer_list<Letter> word) { return apply_word(c, std::span<const Letter>(word)); };
    for (int i = 1; i < n; ++i) {
      check(run({i, -i}) == c, "s" + std::to_string(i) + " s" + std::to_string(i) + "^-1 != id");
      check(run({-i, i}) == c, "s" + std::to_string(i) + "^-1 s" + std::to_string(i) + " != id");
      for (int j = i + 2; j < n; ++j) {
        for (int a : {1, -1}) {
          for (int b : {1, -1}) {
            check(run({a * i, b * j}) == run({b * j, a * i}),
                  "far commutation fails for " + std::to_string(a * i) + ", " + std::to_string(b * j));
          }
        }
      }
      if (i + 1 < n) {
        for (int e : {1, -1}) {
          check(run({e * i, e * (i + 1), e * i}) == run({e * (i + 1), e * i, e * (i + 1)}),
                "braid relation fails at " + std::to_string(i) + " sign " + std::to_string(e));
        }
      }
    }
  }
  return r;
}

/// Roundtrip, descent and sigma1-consistency over one random corpus.
struct CorpusResult {
  SuiteResult roundtrip = SuiteResult("roundtrip");
  SuiteResult descent = SuiteResult("descent");
  long exact = 0;
  long fingerprint = 0;
};

inline CorpusResult verify_corpus(const RandomWordSpec& spec, Mode mode, const TableOptions& opt = {}) {
  CorpusResult out;
  const auto count = static_cast<std::size_t>(spec.samples);
  std::vector<RunCheck> checks(count);
  parallel_for(count, opt.threads, [&](std::size_t k) {
    const auto trace = relax<BigInt>(random_word(spec, k), mode);
    checks[k] = check_run(trace, opt.exact_budget);
    if (opt.observer) opt.observer(k, trace);
  });
  const std::string cell = "n=" + std::to_string(spec.n) + " l=" + std::to_string(spec.length) + " " +
                           to_string(mode) + " word ";
  for (std::size_t k = 0; k < count; ++k) {
    const auto& c = checks[k];
    ++out.roundtrip.checked;
    ++out.descent.checked;
    (c.method == Verification::Exact ? out.exact : out.fingerprint)++;
    if (!c.sound) out.roundtrip.fail(cell + std::to_string(k) + ": " + c.diagnostic);
    if (!c.descent || !c.consistent) out.descent.fail(cell + std::to_string(k) + ": " + c.diagnostic);
  }
  return out;
}

/// B_3 minimality: the sigma1-consistent output of every word of length
/// 1..max_len has the BFS geodesic length. Also audits the outputs.
struct B3Result {
  SuiteResult minlen = SuiteResult("minlen-b3");
  SuiteResult shorter = SuiteResult("b3-no-longer");
  SuiteResult audit = SuiteResult("subwords");
  SuiteResult audit_extended = SuiteResult("subwords-extended");
};

inline void audit_into(SuiteResult& r, const DottedWord& out, const AuditRules& rules, const std::string& label) {
  const auto report = audit_subwords(std::vector<DottedWord>{out}, rules);
  ++r.checked;
  if (!report.violations.empty()) {
    const auto& v = report.violations.front();
    r.fail(label + ": rule " + v.rule + " at factor " + std::to_string(v.position) + " in [" + to_string(out) + "]");
  }
}

inline void audit_output(B3Result& r, const DottedWord& out, const std::string& label) {
  audit_into(r.audit, out, {}, label);
  audit_into(r.audit_extended, out, {true}, label);
}

inline B3Result verify_minlen_b3(int max_len, int samples, std::uint64_t seed, const B3Ball& ball) {
  if (max_len > ball.radius()) throw DomainError("max length exceeds the BFS radius");
  B3Result r;
  for (int l = 1; l <= max_len; ++l) {
    for (int k = 0; k < samples; ++k) {
      const BraidWord w = random_word({3, l, samples, seed}, static_cast<std::uint64_t>(k));
      const auto trace = relax_sigma1<BigInt>(w);
      const auto cert = bfs_min_length(w, ball);
      const int got = static_cast<int>(trace.output.letter_count());
      const std::string label = "[" + to_string(w) + "]";
      ++r.minlen.checked;
      if (got != cert.min_length) {
        r.minlen.fail(label + " output [" + to_string(trace.output) + "] has " + std::to_string(got) +
                      " letters, geodesic " + std::to_string(cert.min_length) + " [" + to_string(cert.witness) + "]");
      }
      audit_output(r, trace.output, label);
    }
  }
  return r;
}

/// B_3 output length never exceeds input length, for every length 1..max_len.
inline void verify_b3_no_longer(B3Result& r, int max_len, int samples, std::uint64_t seed) {
  for (int l = 1; l <= max_len; ++l) {
    for (int k = 0; k < samples; ++k) {
      const BraidWord w = random_word({3, l, samples, seed}, static_cast<std::uint64_t>(k));
      const auto trace = relax_sigma1<BigInt>(w);
      const std::string label = "[" + to_string(w) + "]";
      ++r.shorter.checked;
      if (trace.output.letter_count() > w.size()) {
        r.shorter.fail(label + " output [" + to_string(trace.output) + "] is longer than the input");
      }
      audit_output(r, trace.output, label);
    }
  }
}

/// complexity(diagram_of_word(w)) <= (n-1) l^3, with the exponential reading
/// (n-1) 3^l reported alongside.
struct BoundResult {
  SuiteResult cubic = SuiteResult("complexity-bound");
  SuiteResult exponential = SuiteResult("complexity-bound-exp");
  BigInt worst_cubic_excess{0};
};

inline void verify_complexity_bound(BoundResult& r, const RandomWordSpec& spec) {
  const BigInt l = spec.length;
  const BigInt cubic = BigInt(spec.n - 1) * l * l * l;
  BigInt exponential = spec.n - 1;
  for (int k = 0; k < spec.length; ++k) exponential *= 3;
  for (int k = 0; k < spec.samples; ++k) {
    const BraidWord w = random_word(spec, static_cast<std::uint64_t>(k));
    const BigInt c = complexity(diagram_of_word<BigInt>(w));
    const std::string label = "n=" + std::to_string(spec.n) + " l=" + std::to_string(spec.length) + " word " +
                              std::to_string(k) + " complexity " + to_decimal(c);
    ++r.cubic.checked;
    ++r.exponential.checked;
    if (c > cubic) {
      r.cubic.fail(label + " > " + to_decimal(cubic));
      if (c - cubic > r.worst_cubic_excess) r.worst_cubic_excess = c - cubic;
    }
    if (c > exponential) r.exponential.fail(label + " > " + to_decimal(exponential));
  }
}

}  // namespace braidrelax
