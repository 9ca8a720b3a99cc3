#pragma once

// Band coding of reduced curve diagrams.
//
// Cutting the punctured disk along the vertical lines through the n punctures
// gives bands 0..n. Inside band i every component of a reduced curve diagram
// joins two of the four half-lines on the band's sides (left/right of the band,
// above/below the real axis) and is counted by its shape:
//
//   sup   (⊃)  left-upper  to left-lower,  crosses the axis once
//   sub   (⊂)  right-upper to right-lower, crosses the axis once
//   over  (⌢)  left-upper  to right-upper
//   under (⌣)  left-lower  to right-lower
//   up    (/)  left-lower  to right-upper, crosses the axis once
//   down  (\)  left-upper  to right-lower, crosses the axis once
//
// The endpoints of all arcs lie on the boundary circle and are slid along it
// into band 0, whose left side is the boundary: the lower end of every arc sits
// on the lower-left and the upper end on the upper-left of band 0. With this
// convention the trivial diagram has every arc e_j running right below the
// axis, turning around puncture j (a sup in band j) and returning above it.

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidrelax/error.hpp"
#include "braidrelax/word.hpp"

namespace braidrelax {

using BigInt = boost::multiprecision::cpp_int;

template <class Int>
struct Band {
  Int sup{0};
  Int sub{0};
  Int over{0};
  Int under{0};
  Int up{0};
  Int down{0};

  /// Components crossing the real axis inside this band.
  Int crossings() const { return sup + sub + up + down; }

  void mirror() {
    using std::swap;
    swap(over, under);
    swap(up, down);
  }

  friend bool operator==(const Band&, const Band&) = default;
};

enum class Sigma1Class { Positive, Negative, Neutral };

inline const char* to_string(Sigma1Class s) {
  switch (s) {
    case Sigma1Class::Positive: return "positive";
    case Sigma1Class::Negative: return "negative";
    case Sigma1Class::Neutral: return "neutral";
  }
  return "?";
}

constexpr Sigma1Class opposite(Sigma1Class s) noexcept {
  return s == Sigma1Class::Positive   ? Sigma1Class::Negative
         : s == Sigma1Class::Negative ? Sigma1Class::Positive
                                      : Sigma1Class::Neutral;
}

template <class Int = BigInt>
class DiagramCoding {
 public:
  using int_type = Int;
  using band_type = Band<Int>;

  /// Coding of the trivial diagram E.
  static DiagramCoding trivial(int n) {
    require_strands(n);
    DiagramCoding c;
    c.n_ = n;
    c.bands_.assign(static_cast<std::size_t>(n) + 1, band_type{});
    c.bands_[0].over = n - 1;
    c.bands_[0].under = n - 1;
    for (int k = 1; k < n; ++k) {
      c.bands_[k].sup = 1;
      c.bands_[k].over = n - 1 - k;
      c.bands_[k].under = n - 1 - k;
    }
    return c;
  }

  /// Builds a coding from raw coefficients. Only shape and sign are checked:
  /// arbitrary vectors need not describe a reduced diagram.
  static DiagramCoding from_bands(int n, std::vector<band_type> bands) {
    require_strands(n);
    if (bands.size() != static_cast<std::size_t>(n) + 1) {
      throw DomainError("expected " + std::to_string(n + 1) + " bands, got " + std::to_string(bands.size()));
    }
    for (const auto& b : bands) {
      for (const Int* v : {&b.sup, &b.sub, &b.over, &b.under, &b.up, &b.down}) {
        if (*v < 0) throw DomainError("negative band coefficient");
      }
    }
    DiagramCoding c;
    c.n_ = n;
    c.bands_ = std::move(bands);
    return c;
  }

  int strands() const noexcept { return n_; }
  const band_type& band(int i) const { return bands_.at(static_cast<std::size_t>(i)); }
  const std::vector<band_type>& bands() const noexcept { return bands_; }

  friend bool operator==(const DiagramCoding&, const DiagramCoding&) = default;

  // Mutating primitives used by the free functions below.
  band_type& band_mut(int i) { return bands_[static_cast<std::size_t>(i)]; }

 private:
  int n_ = 2;
  std::vector<band_type> bands_;
};

namespace detail {

template <class Int>
Int pos_diff(const Int& x, const Int& y) {
  return x > y ? Int(x - y) : Int(0);
}

template <class Int>
const Int& min_of(const Int& a, const Int& b) {
  return b < a ? b : a;
}

template <class Int>
const Int& min_of(const Int& a, const Int& b, const Int& c) {
  return min_of(min_of(a, b), c);
}

/// Action of sigma_i on the three bands it touches: left = band i-1,
/// mid = band i, right = band i+1. All right-hand sides read the old values.
template <class Int>
void sigma_plus(Band<Int>& left, Band<Int>& mid, Band<Int>& right) {
  const Band<Int> a = left;
  const Band<Int> b = mid;
  const Band<Int> c = right;

  const Int left_pull = min_of(a.down, pos_diff(b.under, a.under));
  left.sub = b.sub + b.down + pos_diff(b.under, Int(a.under + a.down));
  left.over = a.over + a.down - left_pull;
  left.under = min_of(a.under, b.under);
  left.up = a.up + a.under - left.under;
  left.down = left_pull;

  mid.sup = min_of(b.up, c.sup, pos_diff(Int(a.under + a.down), b.under));
  mid.sub = min_of(a.sub, b.up, pos_diff(Int(c.over + c.down), b.over));
  mid.over = b.sup + b.down + b.over - min_of(a.sub, b.up, b.over);
  mid.under = b.sub + b.down + b.under - min_of(c.sup, b.up, b.under);
  mid.up = pos_diff(Int(min_of(b.up, a.sub) + min_of(b.up, c.sup)), b.up);
  mid.down = b.sup + b.sub + b.down + pos_diff(b.up, Int(a.sub + c.sup));

  const Int right_pull = min_of(c.down, pos_diff(b.over, c.over));
  right.sup = b.sup + b.down + pos_diff(b.over, Int(c.over + c.down));
  right.over = min_of(c.over, b.over);
  right.under = c.under + c.down - right_pull;
  right.up = c.up + c.over - right.over;
  right.down = right_pull;
}

}  // namespace detail

/// Applies sigma_i^sign in place. Inverse generators act by conjugating with
/// the reflection in the real axis, which swaps over/under and up/down.
template <class Int>
void apply_generator_in_place(DiagramCoding<Int>& c, int i, int sign) {
  if (i < 1 || i > c.strands() - 1 || (sign != 1 && sign != -1)) {
    throw DomainError("generator " + std::to_string(sign * i) + " out of range for " +
                      std::to_string(c.strands()) + " strands");
  }
  auto& left = c.band_mut(i - 1);
  auto& mid = c.band_mut(i);
  auto& right = c.band_mut(i + 1);
  if (sign < 0) {
    left.mirror();
    mid.mirror();
    right.mirror();
  }
  detail::sigma_plus(left, mid, right);
  if (sign < 0) {
    left.mirror();
    mid.mirror();
    right.mirror();
  }
}

template <class Int>
DiagramCoding<Int> apply_generator(DiagramCoding<Int> c, int i, int sign) {
  apply_generator_in_place(c, i, sign);
  return c;
}

template <class Int>
void apply_letter_in_place(DiagramCoding<Int>& c, Letter v) {
  apply_generator_in_place(c, v > 0 ? v : -v, v > 0 ? 1 : -1);
}

template <class Int>
DiagramCoding<Int> apply_word(DiagramCoding<Int> c, std::span<const Letter> letters) {
  for (Letter v : letters) apply_letter_in_place(c, v);
  return c;
}

template <class Int>
DiagramCoding<Int> apply_word(DiagramCoding<Int> c, const BraidWord& w) {
  if (w.strands() != c.strands()) throw DomainError("word and coding have different strand counts");
  return apply_word(std::move(c), w.letters());
}

template <class Int>
DiagramCoding<Int> mirror(DiagramCoding<Int> c) {
  for (int i = 0; i <= c.strands(); ++i) c.band_mut(i).mirror();
  return c;
}

template <class Int = BigInt>
DiagramCoding<Int> trivial_coding(int n) {
  return DiagramCoding<Int>::trivial(n);
}

/// Curve diagram of w: the letters act on E from left to right.
template <class Int = BigInt>
DiagramCoding<Int> diagram_of_word(const BraidWord& w) {
  return apply_word(DiagramCoding<Int>::trivial(w.strands()), w.letters());
}

/// Number of intersections with the horizontal arcs e'_0..e'_n.
template <class Int>
Int complexity(const DiagramCoding<Int>& c) {
  Int total = 0;
  for (const auto& b : c.bands()) total += b.crossings();
  return total;
}

template <class Int>
bool is_trivial(const DiagramCoding<Int>& c) {
  return c == DiagramCoding<Int>::trivial(c.strands());
}

namespace detail {

template <class Int>
Sigma1Class classify_band(const Band<Int>& b) {
  const bool up = b.up > 0;
  const bool down = b.down > 0;
  if (up && down) throw IntegrityError("band carries both up and down components");
  return up ? Sigma1Class::Positive : down ? Sigma1Class::Negative : Sigma1Class::Neutral;
}

}  // namespace detail

/// Sign of the first crossing of the image of e_1: positive when it starts
/// by going up (some up component in band 0).
template <class Int>
Sigma1Class sigma1_class(const DiagramCoding<Int>& c) {
  return detail::classify_band(c.band(0));
}

/// sigma_k sign of a diagram that is already sigma_j-neutral for all j < k.
/// Arcs e_1..e_{k-1} are then in trivial position and band k-1 plays the
/// role band 0 plays for k = 1.
template <class Int>
Sigma1Class sigma_k_class(const DiagramCoding<Int>& c, int k) {
  if (k < 1 || k > c.strands() - 1) {
    throw DomainError("sigma_k index " + std::to_string(k) + " out of range");
  }
  for (int j = 1; j < k; ++j) {
    if (detail::classify_band(c.band(j - 1)) != Sigma1Class::Neutral) {
      throw ContractError("diagram is not sigma_" + std::to_string(j) + "-neutral");
    }
  }
  return detail::classify_band(c.band(k - 1));
}

template <class Int>
std::string to_decimal(const Int& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

/// Human-readable dump, one line per band.
template <class Int>
std::string dump(const DiagramCoding<Int>& c) {
  std::ostringstream os;
  for (int i = 0; i <= c.strands(); ++i) {
    const auto& b = c.band(i);
    os << "band " << i << ": sup=" << b.sup << " sub=" << b.sub << " over=" << b.over << " under=" << b.under
       << " up=" << b.up << " down=" << b.down << '\n';
  }
  return os.str();
}

}  // namespace braidrelax
