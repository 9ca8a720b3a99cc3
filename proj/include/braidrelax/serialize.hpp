#pragma once

// Machine format (JSON) and CSV for codings, traces, table records and
// certificates. Big integers travel as decimal strings. Key names are listed in
// docs/formats.md.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "braidrelax/b3_ball.hpp"
#include "braidrelax/coding.hpp"
#include "braidrelax/error.hpp"
#include "braidrelax/harness.hpp"
#include "braidrelax/relax.hpp"
#include "braidrelax/word.hpp"

namespace braidrelax {

using json = nlohmann::ordered_json;

/// Fixed-point rendering shared by every output format.
inline std::string format_fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

namespace detail {

template <class Int>
Int parse_int(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
  const std::string s = v.get<std::string>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(std::string("field '") + key + "' is not a nonnegative decimal integer");
  }
  return Int(s);
}

}  // namespace detail

template <class Int>
json to_json(const DiagramCoding<Int>& c) {
  json bands = json::array();
  for (const auto& b : c.bands()) {
    bands.push_back({{"sup", to_decimal(b.sup)},
                     {"sub", to_decimal(b.sub)},
                     {"over", to_decimal(b.over)},
                     {"under", to_decimal(b.under)},
                     {"up", to_decimal(b.up)},
                     {"down", to_decimal(b.down)}});
  }
  return {{"type", "coding"},
          {"n", c.strands()},
          {"bands", bands},
          {"complexity", to_decimal(complexity(c))},
          {"class", to_string(sigma1_class(c))}};
}

template <class Int = BigInt>
DiagramCoding<Int> coding_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Band<Int>> bands;
    for (const auto& b : j.at("bands")) {
      bands.push_back({detail::parse_int<Int>(b, "sup"), detail::parse_int<Int>(b, "sub"),
                       detail::parse_int<Int>(b, "over"), detail::parse_int<Int>(b, "under"),
                       detail::parse_int<Int>(b, "up"), detail::parse_int<Int>(b, "down")});
    }
    return DiagramCoding<Int>::from_bands(n, std::move(bands));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad coding record: ") + e.what());
  }
}

inline json to_json(const SemicircularMove& m) {
  return {{"from", m.from}, {"to", m.to}, {"sign", m.sign}, {"letters", to_string(m)}};
}

template <class Int>
json to_json(const RelaxationTrace<Int>& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json step = to_json(s.move);
    step["complexity"] = to_decimal(s.complexity);
    step["phase"] = s.phase;
    steps.push_back(std::move(step));
  }
  return {{"type", "trace"},
          {"n", t.input.strands()},
          {"mode", to_string(t.mode)},
          {"input", to_string(t.input)},
          {"initial_complexity", to_decimal(t.initial_complexity)},
          {"steps", steps},
          {"output", to_string(t.output)},
          {"output_length", t.output.letter_count()}};
}

template <class Int = BigInt>
RelaxationTrace<Int> trace_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    RelaxationTrace<Int> t{parse_word(j.at("input").get<std::string>(), n),
                           parse_mode(j.at("mode").get<std::string>()), detail::parse_int<Int>(j, "initial_complexity"),
                           {}, parse_dotted(j.at("output").get<std::string>(), n)};
    for (const auto& s : j.at("steps")) {
      SemicircularMove m{s.at("from").get<int>(), s.at("to").get<int>(), s.at("sign").get<int>()};
      t.steps.push_back({m, detail::parse_int<Int>(s, "complexity"), s.at("phase").get<int>()});
    }
    return t;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad trace record: ") + e.what());
  }
}

inline json to_json(const StatsRecord& r) {
  json j = {{"type", "cell"},
            {"n", r.spec.n},
            {"length", r.spec.length},
            {"mode", to_string(r.mode)},
            {"samples", r.spec.samples},
            {"seed", r.spec.seed},
            {"completed", r.completed},
            {"mean", format_fixed(r.mean_output_length())},
            {"std_error", format_fixed(r.std_error())},
            {"max", r.max_output_length},
            {"max_ratio", format_fixed(r.max_ratio())},
            {"failures", r.failures},
            {"total_output_length", r.total_output_length},
            {"exact_checks", r.exact_checks},
            {"fingerprint_checks", r.fingerprint_checks},
            {"total_factors", r.total_factors},
            {"factor_heavy", r.factor_heavy}};
  j["first_failure"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
  return j;
}

/// Rebuilds the integer fields of a record; derived quantities are recomputed.
inline StatsRecord stats_from_json(const json& j) {
  try {
    StatsRecord r;
    r.spec = {j.at("n").get<int>(), j.at("length").get<int>(), j.at("samples").get<int>(),
              j.at("seed").get<std::uint64_t>()};
    r.mode = parse_mode(j.at("mode").get<std::string>());
    r.completed = j.at("completed").get<int>();
    r.total_output_length = j.at("total_output_length").get<std::uint64_t>();
    r.max_output_length = j.at("max").get<int>();
    r.failures = j.at("failures").get<int>();
    r.exact_checks = j.at("exact_checks").get<int>();
    r.fingerprint_checks = j.at("fingerprint_checks").get<int>();
    r.total_factors = j.at("total_factors").get<std::uint64_t>();
    r.factor_heavy = j.at("factor_heavy").get<int>();
    r.stddev = std::stod(j.at("std_error").get<std::string>()) * std::sqrt(static_cast<double>(r.completed));
    if (!j.at("first_failure").is_null()) r.first_failure = j.at("first_failure").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad cell record: ") + e.what());
  }
}

inline json to_json(const RatioSummary& s) {
  return {{"n", s.n},
          {"max_ratio", format_fixed(s.max_ratio)},
          {"at_length", s.at_length},
          {"max_output_length", s.max_output_length},
          {"corpus_size", s.corpus_size}};
}

inline json to_json(const MinLengthCertificate& c) {
  return {{"type", "certificate"},
          {"n", 3},
          {"word", to_string(c.word)},
          {"min_length", c.min_length},
          {"witness", to_string(c.witness)}};
}

inline MinLengthCertificate certificate_from_json(const json& j) {
  try {
    return {parse_word(j.at("word").get<std::string>(), 3), j.at("min_length").get<int>(),
            parse_word(j.at("witness").get<std::string>(), 3)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad certificate record: ") + e.what());
  }
}

inline json to_json(const SubwordAuditReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"word", x.word}, {"rule", x.rule}, {"position", x.position}});
  return {{"type", "audit"}, {"corpus_size", r.corpus_size}, {"violations", v}};
}

inline const char* kCsvHeader = "n,length,mode,samples,mean,max,max_ratio,failures";

inline std::string to_csv_row(const StatsRecord& r) {
  std::ostringstream os;
  os << r.spec.n << ',' << r.spec.length << ',' << to_string(r.mode) << ',' << r.spec.samples << ','
     << format_fixed(r.mean_output_length()) << ',' << r.max_output_length << ',' << format_fixed(r.max_ratio())
     << ',' << r.failures;
  return os.str();
}

inline std::string to_csv(const std::vector<StatsRecord>& records) {
  std::string out = std::string(kCsvHeader) + '\n';
  for (const auto& r : records) out += to_csv_row(r) + '\n';
  return out;
}

}  // namespace braidrelax
