#pragma once

// Braid words over the Artin generators, semicircular moves and dotted words.
//
// A letter is a nonzero int v: v > 0 stands for sigma_v, v < 0 for the
// inverse of sigma_{-v}. Words carry their strand count n and every letter
// satisfies 1 <= |v| <= n - 1.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdlib>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "braidrelax/error.hpp"

namespace braidrelax {

using Letter = int;

inline void require_strands(int n) {
  if (n < 2) throw DomainError("strand count must be at least 2, got " + std::to_string(n));
}

class BraidWord {
 public:
  BraidWord() = default;

  explicit BraidWord(int n, std::vector<Letter> letters = {}) : n_(n), letters_(std::move(letters)) {
    require_strands(n_);
    for (Letter v : letters_) check_letter(v);
  }

  int strands() const noexcept { return n_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t k) const { return letters_[k]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  void push_back(Letter v) {
    check_letter(v);
    letters_.push_back(v);
  }

  void append(const BraidWord& other) {
    if (other.n_ != n_) {
      throw DomainError("cannot concatenate words on " + std::to_string(n_) + " and " +
                        std::to_string(other.n_) + " strands");
    }
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  void check_letter(Letter v) const {
    if (v == 0 || std::abs(v) > n_ - 1) {
      throw DomainError("generator index " + std::to_string(v) + " out of range for " +
                        std::to_string(n_) + " strands");
    }
  }

  int n_ = 2;
  std::vector<Letter> letters_;
};

inline BraidWord concat(BraidWord a, const BraidWord& b) {
  a.append(b);
  return a;
}

/// Parses whitespace-separated signed decimal integers.
inline BraidWord parse_word(std::string_view text, int n) {
  require_strands(n);
  std::vector<Letter> letters;
  std::size_t pos = 0;
  auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    std::string_view token = text.substr(pos, end - pos);
    // from_chars rejects a leading '+', which we accept.
    std::string_view digits = token.front() == '+' ? token.substr(1) : token;
    Letter value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw ParseError("malformed generator token '" + std::string(token) + "'");
    }
    letters.push_back(value);
    pos = end;
  }
  return BraidWord(n, std::move(letters));
}

inline std::string to_string(const BraidWord& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(w[k]);
  }
  return out;
}

inline BraidWord invert_word(const BraidWord& w) {
  std::vector<Letter> out(w.begin(), w.end());
  std::reverse(out.begin(), out.end());
  for (auto& v : out) v = -v;
  return BraidWord(w.strands(), std::move(out));
}

/// Cancels adjacent inverse pairs until none remain (single stack pass).
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter v : w) {
    if (!out.empty() && out.back() == -v) {
      out.pop_back();
    } else {
      out.push_back(v);
    }
  }
  return BraidWord(w.strands(), std::move(out));
}

inline bool is_freely_reduced(std::span<const Letter> letters) {
  return std::adjacent_find(letters.begin(), letters.end(),
                            [](Letter a, Letter b) { return a == -b; }) == letters.end();
}

/// Rank of a letter in the total order s1 < s1^-1 < s2 < s2^-1 < ...
constexpr int letter_rank(Letter v) noexcept { return 2 * (std::abs(v) - 1) + (v < 0 ? 1 : 0); }

/// Lexicographic comparison of letter sequences under letter_rank; a proper
/// prefix sorts first.
inline std::strong_ordering compare_canonical(std::span<const Letter> a, std::span<const Letter> b) {
  return std::lexicographical_compare_three_way(
      a.begin(), a.end(), b.begin(), b.end(),
      [](Letter x, Letter y) { return letter_rank(x) <=> letter_rank(y); });
}

/// A semicircular move: the monotone run sigma_i^eps ... sigma_j^eps.
struct SemicircularMove {
  int from = 1;  // i
  int to = 1;    // j
  int sign = 1;  // eps, +1 or -1

  std::size_t length() const noexcept { return static_cast<std::size_t>(std::abs(to - from)) + 1; }
  int min_index() const noexcept { return std::min(from, to); }
  int max_index() const noexcept { return std::max(from, to); }

  /// Letters of the expansion, in order.
  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    out.reserve(length());
    const int step = to >= from ? 1 : -1;
    for (int k = from;; k += step) {
      out.push_back(sign * k);
      if (k == to) break;
    }
    return out;
  }

  bool contains(Letter v) const noexcept {
    return v * sign > 0 && std::abs(v) >= min_index() && std::abs(v) <= max_index();
  }

  friend bool operator==(const SemicircularMove&, const SemicircularMove&) = default;
};

inline BraidWord expand_move(const SemicircularMove& m, int n) { return BraidWord(n, m.letters()); }

inline std::string to_string(const SemicircularMove& m) {
  std::string out;
  auto letters = m.letters();
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(letters[k]);
  }
  return out;
}

inline std::strong_ordering compare_canonical(const SemicircularMove& a, const SemicircularMove& b) {
  return compare_canonical(a.letters(), b.letters());
}

/// All 2(n-1)^2 moves of B_n in canonical order.
inline std::vector<SemicircularMove> enumerate_moves(int n) {
  require_strands(n);
  std::vector<SemicircularMove> moves;
  moves.reserve(static_cast<std::size_t>(2 * (n - 1) * (n - 1)));
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      for (int eps : {1, -1}) moves.push_back({i, j, eps});
    }
  }
  std::sort(moves.begin(), moves.end(),
            [](const auto& a, const auto& b) { return compare_canonical(a, b) < 0; });
  return moves;
}

/// An output word split into its semicircular factors.
class DottedWord {
 public:
  DottedWord() = default;
  explicit DottedWord(int n, std::vector<SemicircularMove> factors = {}) : n_(n), factors_(std::move(factors)) {
    require_strands(n_);
    for (const auto& m : factors_) check(m);
  }

  int strands() const noexcept { return n_; }
  std::span<const SemicircularMove> factors() const noexcept { return factors_; }
  std::size_t factor_count() const noexcept { return factors_.size(); }

  void push_back(const SemicircularMove& m) {
    check(m);
    factors_.push_back(m);
  }

  BraidWord flatten() const {
    std::vector<Letter> out;
    for (const auto& m : factors_) {
      auto l = m.letters();
      out.insert(out.end(), l.begin(), l.end());
    }
    return BraidWord(n_, std::move(out));
  }

  std::size_t letter_count() const noexcept {
    std::size_t total = 0;
    for (const auto& m : factors_) total += m.length();
    return total;
  }

  friend bool operator==(const DottedWord&, const DottedWord&) = default;

 private:
  void check(const SemicircularMove& m) const {
    if (m.min_index() < 1 || m.max_index() > n_ - 1 || (m.sign != 1 && m.sign != -1)) {
      throw DomainError("semicircular move out of range for " + std::to_string(n_) + " strands");
    }
  }

  int n_ = 2;
  std::vector<SemicircularMove> factors_;
};

/// Factors joined by " . ", e.g. "2 . -1 -2".
inline std::string to_string(const DottedWord& w) {
  std::string out;
  for (std::size_t k = 0; k < w.factor_count(); ++k) {
    if (k) out += " . ";
    out += to_string(w.factors()[k]);
  }
  return out;
}

/// Inverse of to_string(DottedWord). Each factor must be a monotone run of
/// consecutive indices with a common sign.
inline DottedWord parse_dotted(std::string_view text, int n) {
  DottedWord out(n);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string_view piece = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    BraidWord w = parse_word(piece, n);
    if (w.empty()) {
      if (dot == std::string_view::npos && out.factor_count() == 0) break;
      throw ParseError("empty factor in dotted word");
    }
    const int sign = w[0] > 0 ? 1 : -1;
    const int from = std::abs(w[0]);
    const int to = std::abs(w[w.size() - 1]);
    SemicircularMove m{from, to, sign};
    if (m.letters() != std::vector<Letter>(w.begin(), w.end())) {
      throw ParseError("factor '" + to_string(w) + "' is not a semicircular move");
    }
    out.push_back(m);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return out;
}

}  // namespace braidrelax
