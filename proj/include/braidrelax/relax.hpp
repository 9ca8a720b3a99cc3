#pragma once

// Greedy relaxation of curve diagrams by semicircular moves.

#include <optional>
#include <string>
#include <vector>

#include "braidrelax/coding.hpp"
#include "braidrelax/error.hpp"
#include "braidrelax/word.hpp"

namespace braidrelax {

enum class Mode { Standard, Sigma1Consistent };

inline const char* to_string(Mode m) { return m == Mode::Standard ? "standard" : "sigma1"; }

inline Mode parse_mode(std::string_view s) {
  if (s == "standard") return Mode::Standard;
  if (s == "sigma1") return Mode::Sigma1Consistent;
  throw ParseError("unknown mode '" + std::string(s) + "' (expected standard or sigma1)");
}

enum class Polarity { Positive, Negative, Unrestricted };

/// Restricts the candidate moves of one greedy step.
///
/// Only moves whose letters all have index >= active_index are candidates.
/// Polarity is the sigma_k sign of the diagram being untangled (k =
/// active_index). A Positive diagram admits no move containing the letter
/// sigma_k and no move whose result is sigma_k-negative; Negative is the
/// mirror image. Unrestricted admits everything.
struct MoveConstraint {
  int active_index = 1;
  Polarity polarity = Polarity::Unrestricted;
};

inline Polarity polarity_of(Sigma1Class s) {
  switch (s) {
    case Sigma1Class::Positive: return Polarity::Positive;
    case Sigma1Class::Negative: return Polarity::Negative;
    case Sigma1Class::Neutral: return Polarity::Unrestricted;
  }
  return Polarity::Unrestricted;
}

template <class Int>
struct TraceStep {
  SemicircularMove move;
  Int complexity;  // after the move
  int phase = 1;   // active generator index when the move was chosen
};

template <class Int = BigInt>
struct RelaxationTrace {
  BraidWord input;
  Mode mode = Mode::Standard;
  Int initial_complexity{0};
  std::vector<TraceStep<Int>> steps;
  DottedWord output;
};

namespace detail {

/// Non-allocating canonical comparison of two moves' expansions.
inline std::strong_ordering compare_moves(const SemicircularMove& a, const SemicircularMove& b) {
  const int la = static_cast<int>(a.length());
  const int lb = static_cast<int>(b.length());
  const int sa = a.to >= a.from ? 1 : -1;
  const int sb = b.to >= b.from ? 1 : -1;
  for (int k = 0; k < std::min(la, lb); ++k) {
    const int ra = letter_rank(a.sign * (a.from + sa * k));
    const int rb = letter_rank(b.sign * (b.from + sb * k));
    if (ra != rb) return ra <=> rb;
  }
  return la <=> lb;
}

inline bool forbidden_letter(const SemicircularMove& m, const MoveConstraint& con) {
  switch (con.polarity) {
    case Polarity::Positive: return m.contains(con.active_index);
    case Polarity::Negative: return m.contains(-con.active_index);
    case Polarity::Unrestricted: return false;
  }
  return false;
}

template <class Int>
bool sign_allowed(const DiagramCoding<Int>& after, const MoveConstraint& con) {
  if (con.polarity == Polarity::Unrestricted) return true;
  const Sigma1Class s = classify_band(after.band(con.active_index - 1));
  return con.polarity == Polarity::Positive ? s != Sigma1Class::Negative : s != Sigma1Class::Positive;
}

template <class Int>
Int local_crossings(const DiagramCoding<Int>& c, int i) {
  return c.band(i - 1).crossings() + c.band(i).crossings() + c.band(i + 1).crossings();
}

}  // namespace detail

/// The move must not flip the diagram to the forbidden sign.
template <class Int>
bool check_condition_b(const DiagramCoding<Int>& c, const SemicircularMove& m, const MoveConstraint& con) {
  return detail::sign_allowed(apply_word(c, m.letters()), con);
}

template <class Int>
bool check_condition_b(const DiagramCoding<Int>& c, const SemicircularMove& m, Polarity polarity) {
  return check_condition_b(c, m, MoveConstraint{1, polarity});
}

template <class Int>
struct GreedyChoice {
  SemicircularMove move;
  DiagramCoding<Int> coding;
  Int complexity;
};

/// One greedy step: the admissible move yielding minimal complexity, ties
/// broken by the canonical move order.
///
/// Moves sharing a start index, sign and direction are prefixes of each other,
/// so each such chain is applied letter by letter and every prefix is scored.
template <class Int>
GreedyChoice<Int> greedy_step(const DiagramCoding<Int>& c, const MoveConstraint& con) {
  const int n = c.strands();
  const int lo = con.active_index;
  if (lo < 1 || lo > n - 1) throw DomainError("active index out of range");
  const Int current = complexity(c);

  std::optional<GreedyChoice<Int>> best;
  auto consider = [&](const SemicircularMove& m, const DiagramCoding<Int>& after, const Int& cx) {
    if (detail::forbidden_letter(m, con) || !detail::sign_allowed(after, con)) return;
    if (!best || cx < best->complexity ||
        (cx == best->complexity && detail::compare_moves(m, best->move) < 0)) {
      best = GreedyChoice<Int>{m, after, cx};
    }
  };
  auto step = [](DiagramCoding<Int>& d, Int& cx, int i, int sign) {
    cx -= detail::local_crossings(d, i);
    apply_generator_in_place(d, i, sign);
    cx += detail::local_crossings(d, i);
  };

  for (int i = lo; i <= n - 1; ++i) {
    for (int sign : {1, -1}) {
      DiagramCoding<Int> first = c;
      Int first_cx = current;
      step(first, first_cx, i, sign);
      consider({i, i, sign}, first, first_cx);

      DiagramCoding<Int> d = first;
      Int cx = first_cx;
      for (int j = i + 1; j <= n - 1; ++j) {
        step(d, cx, j, sign);
        consider({i, j, sign}, d, cx);
      }
      d = std::move(first);
      cx = first_cx;
      for (int j = i - 1; j >= lo; --j) {
        step(d, cx, j, sign);
        consider({i, j, sign}, d, cx);
      }
    }
  }

  if (!best) throw EngineError("no admissible semicircular move");
  if (!(best->complexity < current)) {
    throw EngineError("no admissible move decreases complexity " + to_decimal(current) +
                      "; every nontrivial diagram admits one, so the transition rules are inconsistent");
  }
  return std::move(*best);
}

/// Untangles the diagram of w with unrestricted greedy steps. The output is an
/// expression of the inverse braid as a product of semicircular moves.
template <class Int = BigInt>
RelaxationTrace<Int> relax_standard(const BraidWord& w) {
  RelaxationTrace<Int> trace{w, Mode::Standard, Int(0), {}, DottedWord(w.strands())};
  DiagramCoding<Int> d = diagram_of_word<Int>(w);
  trace.initial_complexity = complexity(d);
  const auto goal = DiagramCoding<Int>::trivial(w.strands());
  while (d != goal) {
    auto choice = greedy_step(d, MoveConstraint{});
    trace.steps.push_back({choice.move, choice.complexity, 1});
    trace.output.push_back(choice.move);
    d = std::move(choice.coding);
  }
  return trace;
}

/// sigma_1-consistent relaxation: while the diagram is sigma_k-signed, only
/// moves on generators >= k that avoid the letter of the diagram's own sign
/// and never flip that sign are allowed; once sigma_k-neutral, continue with
/// k + 1 on the remaining punctures.
template <class Int = BigInt>
RelaxationTrace<Int> relax_sigma1(const BraidWord& w) {
  const int n = w.strands();
  RelaxationTrace<Int> trace{w, Mode::Sigma1Consistent, Int(0), {}, DottedWord(n)};
  DiagramCoding<Int> d = diagram_of_word<Int>(w);
  trace.initial_complexity = complexity(d);
  const auto goal = DiagramCoding<Int>::trivial(n);

  for (int k = 1; k <= n - 1 && d != goal; ++k) {
    const Sigma1Class sign = sigma_k_class(d, k);
    if (sign == Sigma1Class::Neutral) continue;
    const MoveConstraint con{k, polarity_of(sign)};
    while (sigma_k_class(d, k) != Sigma1Class::Neutral) {
      auto choice = greedy_step(d, con);
      trace.steps.push_back({choice.move, choice.complexity, k});
      trace.output.push_back(choice.move);
      d = std::move(choice.coding);
      if (sigma_k_class(d, k) == opposite(sign)) {
        throw IntegrityError("sigma_" + std::to_string(k) + " sign flipped during its phase");
      }
    }
  }
  if (d != goal) throw EngineError("diagram is sigma_k-neutral for every k but not trivial");
  return trace;
}

template <class Int = BigInt>
RelaxationTrace<Int> relax(const BraidWord& w, Mode mode) {
  return mode == Mode::Standard ? relax_standard<Int>(w) : relax_sigma1<Int>(w);
}

}  // namespace braidrelax
