// braidrelax: relax braid words, inspect curve diagrams, run verification
// suites and the averages benchmark.
//
// Exit codes: 0 success, 1 verification failures, 2 usage or input error,
// 3 internal error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "braidrelax/braidrelax.hpp"
#include "braidrelax/suites.hpp"

namespace br = braidrelax;

namespace {

enum Exit { kOk = 0, kFailures = 1, kUsage = 2, kInternal = 3 };

struct Config {
  int n = 3;
  std::vector<int> strands;
  std::string word;
  std::string mode = "standard";
  std::uint64_t seed = 1;
  int samples = 100;
  std::vector<int> lengths;
  int len = 20;
  int maxlen = 10;
  int radius = br::kDefaultMinLengthRadius;
  std::string format = "text";
  std::string suite;
  std::string tiebreak = "canonical";
  std::string output;
  unsigned threads = 0;
  bool trace = false;
};

std::ostream* g_out = &std::cout;

std::ostream& out() { return *g_out; }

void print_json(const br::json& j) { out() << j.dump(2) << '\n'; }

int cmd_relax(const Config& cfg) {
  const auto w = br::parse_word(cfg.word, cfg.n);
  const auto t = br::relax<br::BigInt>(w, br::parse_mode(cfg.mode));
  if (cfg.format == "json") {
    br::json j = br::to_json(t);
    if (!cfg.trace) j.erase("steps");
    print_json(j);
    return kOk;
  }
  if (!cfg.trace) {
    out() << br::to_string(t.output) << '\n';
    return kOk;
  }
  out() << "input: " << br::to_string(t.input) << '\n'
        << "n: " << cfg.n << '\n'
        << "mode: " << br::to_string(t.mode) << '\n'
        << "initial complexity: " << t.initial_complexity << '\n';
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const auto& s = t.steps[k];
    out() << "step " << k + 1 << ": " << br::to_string(s.move) << " complexity " << s.complexity << " phase "
          << s.phase << '\n';
  }
  out() << "output: " << br::to_string(t.output) << '\n';
  return kOk;
}

int cmd_diagram(const Config& cfg) {
  const auto c = br::diagram_of_word<br::BigInt>(br::parse_word(cfg.word, cfg.n));
  if (cfg.format == "json") {
    print_json(br::to_json(c));
    return kOk;
  }
  out() << br::dump(c) << "complexity: " << br::complexity(c) << '\n'
        << "class: " << br::to_string(br::sigma1_class(c)) << '\n';
  return kOk;
}

int cmd_bench(const Config& cfg) {
  if (cfg.lengths.empty()) throw br::DomainError("--lengths is required");
  std::vector<br::Mode> modes;
  if (cfg.mode == "both") {
    modes = {br::Mode::Standard, br::Mode::Sigma1Consistent};
  } else {
    modes = {br::parse_mode(cfg.mode)};
  }
  const std::vector<int> strands = cfg.strands.empty() ? std::vector<int>{cfg.n} : cfg.strands;
  br::TableOptions opt;
  opt.threads = cfg.threads;

  std::vector<br::StatsRecord> records;
  for (auto m : modes) {
    auto part = br::run_table(strands, cfg.lengths, m, cfg.samples, cfg.seed, opt);
    records.insert(records.end(), part.begin(), part.end());
  }
  int failures = 0;
  for (const auto& r : records) failures += r.failures;

  if (cfg.format == "csv") {
    out() << br::to_csv(records);
  } else if (cfg.format == "json") {
    br::json cells = br::json::array();
    for (const auto& r : records) cells.push_back(br::to_json(r));
    br::json ratios = br::json::array();
    for (const auto& s : br::ratio_tracker(records)) ratios.push_back(br::to_json(s));
    print_json({{"type", "bench"}, {"seed", cfg.seed}, {"cells", cells}, {"ratios", ratios}});
  } else {
    out() << "seed " << cfg.seed << '\n';
    out() << "n  length  mode      samples  mean      stderr  max  max_ratio  failures\n";
    for (const auto& r : records) {
      char line[160];
      std::snprintf(line, sizeof line, "%-2d %-7d %-9s %-8d %-9s %-7s %-4d %-10s %d\n", r.spec.n, r.spec.length,
                    br::to_string(r.mode), r.spec.samples, br::format_fixed(r.mean_output_length()).c_str(),
                    br::format_fixed(r.std_error()).c_str(), r.max_output_length,
                    br::format_fixed(r.max_ratio()).c_str(), r.failures);
      out() << line;
      if (r.first_failure) out() << "  first failure: " << *r.first_failure << '\n';
    }
    for (const auto& s : br::ratio_tracker(records)) {
      out() << "max ratio n=" << s.n << ": " << br::format_fixed(s.max_ratio) << " at length " << s.at_length
            << " over " << s.corpus_size << " words\n";
    }
  }
  return failures ? kFailures : kOk;
}

void report_suite(const Config& cfg, const std::vector<br::SuiteResult>& results) {
  if (cfg.format == "json") {
    br::json arr = br::json::array();
    for (const auto& r : results) {
      br::json j = {{"suite", r.suite}, {"checked", r.checked}, {"failures", r.failures}};
      j["first_failure"] = r.first_failure ? br::json(*r.first_failure) : br::json(nullptr);
      for (const auto& [k, v] : r.notes) j[k] = v;
      arr.push_back(std::move(j));
    }
    print_json({{"type", "verify"}, {"suite", cfg.suite}, {"n", cfg.n}, {"seed", cfg.seed},
                {"samples", cfg.samples}, {"results", arr}});
    return;
  }
  for (const auto& r : results) {
    out() << r.suite << ": checked " << r.checked << ", failures " << r.failures << '\n';
    for (const auto& [k, v] : r.notes) out() << "  " << k << ": " << v << '\n';
    if (r.first_failure) out() << "  first failure: " << *r.first_failure << '\n';
  }
}

int cmd_verify(const Config& cfg) {
  std::vector<br::SuiteResult> results;
  br::TableOptions opt;
  opt.threads = cfg.threads;
  const std::string& s = cfg.suite;

  if (s == "relations") {
    results.push_back(br::verify_relations(cfg.n, cfg.samples, cfg.seed, cfg.len));
  } else if (s == "roundtrip" || s == "descent") {
    br::SuiteResult total(s);
    long exact = 0, fingerprint = 0;
    const std::vector<br::Mode> modes =
        cfg.mode == "both" ? std::vector<br::Mode>{br::Mode::Standard, br::Mode::Sigma1Consistent}
                           : std::vector<br::Mode>{br::parse_mode(cfg.mode)};
    for (auto m : modes) {
      auto r = br::verify_corpus({cfg.n, cfg.len, cfg.samples, cfg.seed}, m, opt);
      total.merge(s == "roundtrip" ? r.roundtrip : r.descent);
      exact += r.exact;
      fingerprint += r.fingerprint;
    }
    if (s == "roundtrip") {
      total.notes.push_back({"exact_checks", exact});
      total.notes.push_back({"fingerprint_checks", fingerprint});
    }
    results.push_back(std::move(total));
  } else if (s == "minlen-b3") {
    const br::B3Ball ball(std::max(cfg.radius, cfg.maxlen));
    auto r = br::verify_minlen_b3(cfg.maxlen, cfg.samples, cfg.seed, ball);
    results.push_back(r.minlen);
  } else if (s == "subwords") {
    br::B3Result r;
    br::verify_b3_no_longer(r, cfg.maxlen, cfg.samples, cfg.seed);
    results.push_back(r.audit);
    results.push_back(r.audit_extended);
  } else if (s == "complexity-bound") {
    br::BoundResult r;
    br::verify_complexity_bound(r, {cfg.n, cfg.len, cfg.samples, cfg.seed});
    results.push_back(r.cubic);
    results.push_back(r.exponential);
  } else {
    throw br::ParseError("unknown suite '" + s + "'");
  }
  report_suite(cfg, results);
  bool failed = false;
  for (const auto& r : results) {
    if (r.suite != "subwords-extended" && r.suite != "complexity-bound-exp") failed = failed || !r.ok();
  }
  return failed ? kFailures : kOk;
}

int cmd_minlen(const Config& cfg) {
  const auto w = br::parse_word(cfg.word, 3);
  if (static_cast<int>(w.size()) > cfg.radius) {
    throw br::DomainError("word longer than the search radius " + std::to_string(cfg.radius));
  }
  const auto cert = br::bfs_min_length(w, cfg.radius);
  if (cfg.format == "json") {
    print_json(br::to_json(cert));
  } else {
    out() << "min length: " << cert.min_length << '\n' << "witness: " << br::to_string(cert.witness) << '\n';
  }
  return kOk;
}

std::filesystem::path output_path(const std::string& name) {
  std::filesystem::path p(name);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("BRAIDRELAX_OUTPUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy relaxation of braid curve diagrams"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("-o,--output", cfg.output,
                    "write the report to a file; relative paths go under $BRAIDRELAX_OUTPUT_DIR");
  };

  auto* relax = app.add_subcommand("relax", "untangle a braid word");
  relax->add_option("--n", cfg.n, "strand count")->required();
  relax->add_option("--word", cfg.word, "whitespace-separated signed generators")->required();
  relax->add_option("--mode", cfg.mode, "standard or sigma1");
  relax->add_option("--tiebreak", cfg.tiebreak, "tie-break order")->check(CLI::IsMember({"canonical"}));
  relax->add_flag("--trace", cfg.trace, "print every greedy step");
  add_common(relax);

  auto* diagram = app.add_subcommand("diagram", "print the band coding of a word's curve diagram");
  diagram->add_option("--n", cfg.n, "strand count")->required();
  diagram->add_option("--word", cfg.word, "whitespace-separated signed generators")->required();
  add_common(diagram);

  auto* bench = app.add_subcommand("bench", "averages table over random words");
  bench->add_option("--n", cfg.strands, "strand counts")->delimiter(',')->required();
  bench->add_option("--lengths", cfg.lengths, "word lengths")->delimiter(',')->required();
  bench->add_option("--samples", cfg.samples, "words per cell");
  bench->add_option("--mode", cfg.mode, "standard, sigma1 or both");
  bench->add_option("--seed", cfg.seed, "corpus seed");
  bench->add_option("--threads", cfg.threads, "worker threads, 0 for all cores");
  bench->add_option("--tiebreak", cfg.tiebreak, "tie-break order")->check(CLI::IsMember({"canonical"}));
  add_common(bench);

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("--suite", cfg.suite, "relations, roundtrip, descent, minlen-b3, subwords, complexity-bound")
      ->required();
  verify->add_option("--n", cfg.n, "strand count");
  verify->add_option("--samples", cfg.samples, "samples (per length for the B_3 suites)");
  verify->add_option("--seed", cfg.seed, "corpus seed");
  verify->add_option("--len", cfg.len, "word length (maximum length for relations)");
  verify->add_option("--maxlen", cfg.maxlen, "maximum word length for the B_3 suites");
  verify->add_option("--radius", cfg.radius, "BFS radius for minlen-b3");
  verify->add_option("--mode", cfg.mode, "standard, sigma1 or both");
  verify->add_option("--threads", cfg.threads, "worker threads, 0 for all cores");
  add_common(verify);

  auto* minlen = app.add_subcommand("minlen", "shortest equivalent B_3 word by breadth-first search");
  minlen->add_option("--word", cfg.word, "whitespace-separated signed generators")->required();
  minlen->add_option("--radius", cfg.radius, "search radius");
  add_common(minlen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  try {
    if (!cfg.output.empty()) {
      const auto p = output_path(cfg.output);
      file.open(p);
      if (!file) throw br::DomainError("cannot open " + p.string());
      g_out = &file;
    }
    if (cfg.format == "csv" && !bench->parsed()) throw br::DomainError("csv output is only available for bench");
    if (cfg.mode == "both" && (relax->parsed())) throw br::DomainError("relax takes a single mode");
    if (relax->parsed()) return cmd_relax(cfg);
    if (diagram->parsed()) return cmd_diagram(cfg);
    if (bench->parsed()) return cmd_bench(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    return cmd_minlen(cfg);
  } catch (const br::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const br::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const br::ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const br::SearchBoundError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
