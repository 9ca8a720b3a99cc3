#pragma once

// Random corpora, the averages table, ratio tracking and the forbidden-subword
// audit of B_3 outputs.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "braidrelax/artin.hpp"
#include "braidrelax/coding.hpp"
#include "braidrelax/error.hpp"
#include "braidrelax/relax.hpp"
#include "braidrelax/word.hpp"

namespace braidrelax {

struct RandomWordSpec {
  int n = 3;
  int length = 10;
  int samples = 1000;
  std::uint64_t seed = 1;
};

/// Word number `index` of the corpus described by spec.
///
/// The first letter is uniform over all 2(n-1) signed generators, every later
/// letter uniform over the 2(n-1) - 1 letters that do not cancel its
/// predecessor. The stream is seeded from (seed, n, length, index) only, so the
/// same corpus is produced for both modes and under any thread count.
inline BraidWord random_word(const RandomWordSpec& spec, std::uint64_t index) {
  require_strands(spec.n);
  if (spec.length < 0) throw DomainError("negative word length");
  std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                    static_cast<std::uint32_t>(spec.n), static_cast<std::uint32_t>(spec.length),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  const int letters = 2 * (spec.n - 1);
  auto letter_of_rank = [](int r) { return (r / 2 + 1) * (r % 2 ? -1 : 1); };

  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(spec.length));
  for (int k = 0; k < spec.length; ++k) {
    if (out.empty() || letters == 1) {
      out.push_back(letter_of_rank(static_cast<int>(rng() % static_cast<std::uint64_t>(letters))));
      continue;
    }
    const int banned = letter_rank(-out.back());
    int r = static_cast<int>(rng() % static_cast<std::uint64_t>(letters - 1));
    if (r >= banned) ++r;
    out.push_back(letter_of_rank(r));
  }
  return BraidWord(spec.n, std::move(out));
}

/// Runs body(0..count-1) on up to `threads` workers. Indices are handed out
/// dynamically; body must only touch per-index state.
inline void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < count;) {
        try {
          body(k);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

/// Result of auditing one relaxation run.
struct RunCheck {
  bool sound = true;       // input . output is trivial per the Artin oracle
  bool descent = true;     // strict descent, trivial end state, step bound
  bool consistent = true;  // sigma1 mode only: never both sigma_1 and its inverse
  Verification method = Verification::Exact;
  std::string diagnostic;

  bool ok() const noexcept { return sound && descent && consistent; }
};

inline constexpr std::size_t kDefaultExactBudget = std::size_t{1} << 16;

/// Re-derives every trace invariant from the trace data alone.
template <class Int>
RunCheck check_run(const RelaxationTrace<Int>& t, std::size_t exact_budget = kDefaultExactBudget) {
  RunCheck r;
  const int n = t.input.strands();
  const BraidWord flat = t.output.flatten();

  BraidWord moves(n);
  for (const auto& s : t.steps) moves.append(expand_move(s.move, n));
  Int previous = t.initial_complexity;
  for (const auto& s : t.steps) {
    if (!(s.complexity < previous)) r.descent = false;
    previous = s.complexity;
  }
  if (previous != Int(n - 1)) r.descent = false;
  if (Int(2 * t.steps.size()) > t.initial_complexity) r.descent = false;
  if (moves != flat) r.descent = false;

  if (t.mode == Mode::Sigma1Consistent) {
    const bool pos = std::find(flat.begin(), flat.end(), 1) != flat.end();
    const bool neg = std::find(flat.begin(), flat.end(), -1) != flat.end();
    r.consistent = !(pos && neg);
    for (const auto& s : t.steps) {
      if (s.move.min_index() < s.phase) r.consistent = false;
    }
  }

  const auto verdict = check_trivial(concat(t.input, flat), exact_budget);
  r.sound = verdict.trivial;
  r.method = verdict.method;

  if (!r.ok()) {
    r.diagnostic = std::string("input [") + to_string(t.input) + "] output [" + to_string(t.output) + "]";
    if (!r.sound) r.diagnostic += " not inverse";
    if (!r.descent) r.diagnostic += " descent violated";
    if (!r.consistent) r.diagnostic += " not sigma1-consistent";
  }
  return r;
}

struct StatsRecord {
  RandomWordSpec spec;
  Mode mode = Mode::Standard;
  int completed = 0;  // words actually run; below spec.samples when the cell aborted
  std::uint64_t total_output_length = 0;
  int max_output_length = 0;
  double stddev = 0;  // sample standard deviation of output lengths
  int failures = 0;
  int exact_checks = 0;
  int fingerprint_checks = 0;
  std::uint64_t total_factors = 0;
  int factor_heavy = 0;  // outputs with more semicircular factors than input letters
  std::optional<std::string> first_failure;

  double mean_output_length() const {
    return completed ? static_cast<double>(total_output_length) / completed : 0.0;
  }
  double std_error() const { return completed > 1 ? stddev / std::sqrt(static_cast<double>(completed)) : 0.0; }
  /// max over the corpus of l_out / l, as a fraction max_output_length / length.
  double max_ratio() const { return spec.length ? static_cast<double>(max_output_length) / spec.length : 0.0; }
};

struct TableOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  std::size_t exact_budget = kDefaultExactBudget;
  /// Called once per finished word with its trace; used by suites that need
  /// more than the aggregate (complexity bound, audits). Must be thread-safe.
  std::function<void(std::size_t, const RelaxationTrace<BigInt>&)> observer;
};

/// One averages-table cell. Any failed check aborts the remaining words of the
/// cell; the first failure's diagnostic is kept.
inline StatsRecord run_cell(const RandomWordSpec& spec, Mode mode, const TableOptions& opt = {}) {
  if (spec.samples < 0) throw DomainError("negative sample count");
  const auto count = static_cast<std::size_t>(spec.samples);
  std::vector<int> out_len(count, -1);
  std::vector<int> factors(count, 0);
  std::vector<RunCheck> checks(count);
  std::atomic<bool> stop{false};

  parallel_for(count, opt.threads, [&](std::size_t k) {
    if (stop.load()) return;
    const BraidWord w = random_word(spec, k);
    const auto trace = relax<BigInt>(w, mode);
    checks[k] = check_run(trace, opt.exact_budget);
    out_len[k] = static_cast<int>(trace.output.letter_count());
    factors[k] = static_cast<int>(trace.output.factor_count());
    if (opt.observer) opt.observer(k, trace);
    if (!checks[k].ok()) stop = true;
  });

  StatsRecord rec;
  rec.spec = spec;
  rec.mode = mode;
  double sum_sq = 0;
  for (std::size_t k = 0; k < count; ++k) {
    if (out_len[k] < 0) continue;
    ++rec.completed;
    rec.total_output_length += static_cast<std::uint64_t>(out_len[k]);
    rec.max_output_length = std::max(rec.max_output_length, out_len[k]);
    sum_sq += static_cast<double>(out_len[k]) * out_len[k];
    rec.total_factors += static_cast<std::uint64_t>(factors[k]);
    if (factors[k] > spec.length) ++rec.factor_heavy;
    (checks[k].method == Verification::Exact ? rec.exact_checks : rec.fingerprint_checks)++;
    if (!checks[k].ok()) {
      ++rec.failures;
      if (!rec.first_failure) rec.first_failure = "word " + std::to_string(k) + ": " + checks[k].diagnostic;
    }
  }
  if (rec.completed > 1) {
    const double m = rec.mean_output_length();
    const double var = (sum_sq - rec.completed * m * m) / (rec.completed - 1);
    rec.stddev = std::sqrt(std::max(0.0, var));
  }
  return rec;
}

/// The averages table: one record per (n, length) cell, n-major.
inline std::vector<StatsRecord> run_table(const std::vector<int>& strands, const std::vector<int>& lengths,
                                          Mode mode, int samples, std::uint64_t seed, const TableOptions& opt = {}) {
  std::vector<StatsRecord> out;
  for (int n : strands) {
    for (int l : lengths) out.push_back(run_cell({n, l, samples, seed}, mode, opt));
  }
  return out;
}

struct RatioSummary {
  int n = 0;
  double max_ratio = 0;
  int at_length = 0;
  int max_output_length = 0;
  long corpus_size = 0;
};

/// Per strand count, the largest l_out / l seen and the number of words run.
inline std::vector<RatioSummary> ratio_tracker(const std::vector<StatsRecord>& records) {
  std::map<int, RatioSummary> by_n;
  for (const auto& r : records) {
    auto& s = by_n[r.spec.n];
    s.n = r.spec.n;
    s.corpus_size += r.completed;
    if (r.completed && r.max_ratio() > s.max_ratio) {
      s.max_ratio = r.max_ratio();
      s.at_length = r.spec.length;
      s.max_output_length = r.max_output_length;
    }
  }
  std::vector<RatioSummary> out;
  for (auto& [n, s] : by_n) out.push_back(s);
  return out;
}

// Forbidden-subword audit for B_3 sigma1-consistent outputs.
//
// Word boundaries count as dots: the first and last factors of an output are
// whole factors just like the inner ones.

struct AuditViolation {
  std::size_t word = 0;
  std::string rule;
  std::size_t position = 0;  // factor index where the pattern starts
};

struct SubwordAuditReport {
  std::size_t corpus_size = 0;
  std::vector<AuditViolation> violations;
};

struct AuditRules {
  bool extended = false;  // also rules iv to vi
};

namespace detail {

using Factor = std::vector<Letter>;

/// Image of a factor under the symmetry generated by inversion (sign flip)
/// and the swap sigma_1 <-> sigma_2.
inline Factor transform(Factor f, bool invert, bool swap) {
  for (auto& v : f) {
    if (swap) v = (v > 0 ? 1 : -1) * (3 - std::abs(v));
    if (invert) v = -v;
  }
  return f;
}

inline bool factor_positive(const Factor& f, bool invert) {
  return std::all_of(f.begin(), f.end(), [&](Letter v) { return invert ? v < 0 : v > 0; });
}

inline void audit_one(const std::vector<Factor>& f, std::size_t word, const AuditRules& rules,
                      std::vector<AuditViolation>& out) {
  const std::size_t m = f.size();
  auto report = [&](const char* rule, std::size_t pos) { out.push_back({word, rule, pos}); };

  // (i) no cancellation across a dot.
  for (std::size_t t = 0; t + 1 < m; ++t) {
    if (f[t].back() == -f[t + 1].front()) report("i", t);
  }

  // (ii) a factor -2 followed by 1 2 only as a terminal run -2 . 1 2 (. 2)^k,
  // and its inverse image 2 . -1 -2 (. -2)^k.
  for (int eps : {1, -1}) {
    for (std::size_t t = 0; t + 1 < m; ++t) {
      if (f[t] == Factor{-2 * eps} && f[t + 1] == Factor{eps, 2 * eps}) {
        for (std::size_t u = t + 2; u < m; ++u) {
          if (f[u] != Factor{2 * eps}) {
            report("ii", t);
            break;
          }
        }
      }
    }
  }

  // (iii) no two adjacent single-letter factors of the same sign on
  // different generators.
  for (std::size_t t = 0; t + 1 < m; ++t) {
    if (f[t].size() == 1 && f[t + 1].size() == 1) {
      const Letter a = f[t][0];
      const Letter b = f[t + 1][0];
      if ((a > 0) == (b > 0) && std::abs(a) != std::abs(b)) report("iii", t);
    }
  }

  if (!rules.extended) return;

  for (bool invert : {false, true}) {
    for (bool swap : {false, true}) {
      const Factor two_one = transform({2, 1}, invert, swap);
      const Factor one = transform({1}, invert, swap);
      const Factor two = transform({2}, invert, swap);
      const Factor minus_two = transform({-2}, invert, swap);
      const Letter minus_two_letter = minus_two[0];
      const Letter one_letter = one[0];

      // (iv) 2 1 . 2 1 . -2 ...   (v) 2 1 . 2 1 . 1 ...
      for (std::size_t t = 0; t + 2 < m; ++t) {
        if (f[t] == two_one && f[t + 1] == two_one) {
          if (f[t + 2].front() == minus_two_letter) report("iv", t);
          if (f[t + 2].front() == one_letter) report("v", t);
        }
      }

      // (vi) 1 . 2 1 and 2 1 . 2 only inside a positive tail, not preceded by -2.
      for (std::size_t t = 0; t + 1 < m; ++t) {
        const bool hit = (f[t] == one && f[t + 1] == two_one) || (f[t] == two_one && f[t + 1] == two);
        if (!hit) continue;
        bool tail_ok = true;
        for (std::size_t u = t; u < m; ++u) tail_ok = tail_ok && factor_positive(f[u], invert);
        if (!tail_ok || (t > 0 && f[t - 1] == minus_two)) report("vi", t);
      }
    }
  }
}

}  // namespace detail

inline SubwordAuditReport audit_subwords(const std::vector<DottedWord>& corpus, const AuditRules& rules = {}) {
  SubwordAuditReport report;
  report.corpus_size = corpus.size();
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    if (corpus[k].strands() != 3) throw DomainError("subword audit only covers B_3 outputs");
    std::vector<detail::Factor> factors;
    for (const auto& m : corpus[k].factors()) factors.push_back(m.letters());
    detail::audit_one(factors, k, rules, report.violations);
  }
  return report;
}

template <class Int>
SubwordAuditReport audit_subwords(const std::vector<RelaxationTrace<Int>>& traces, const AuditRules& rules = {}) {
  std::vector<DottedWord> corpus;
  corpus.reserve(traces.size());
  for (const auto& t : traces) {
    if (t.mode != Mode::Sigma1Consistent) throw ContractError("subword audit expects sigma1-consistent traces");
    corpus.push_back(t.output);
  }
  return audit_subwords(corpus, rules);
}

}  // namespace braidrelax
