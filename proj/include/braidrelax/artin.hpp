#pragma once

// Artin's faithful action of B_n on the free group F_n = <x_1, ..., x_n>:
//
//   sigma_i:      x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i
//   sigma_i^-1:   x_i -> x_{i+1},              x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
//
// A braid word acts letter by letter from the left, so
// artin_endo(u v) = artin_endo(v) o artin_endo(u). This module never looks at
// curve diagrams; it is the independent referee for the relaxation engine.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "braidrelax/error.hpp"
#include "braidrelax/word.hpp"

namespace braidrelax {

__extension__ using uint128 = unsigned __int128;

/// Freely reduced word over x_1..x_n; letter k > 0 is x_k, -k its inverse.
using FreeGroupWord = std::vector<int>;

/// Appends v to w, cancelling against the last letter when possible.
inline void push_reduced(FreeGroupWord& w, int v) {
  if (!w.empty() && w.back() == -v) {
    w.pop_back();
  } else {
    w.push_back(v);
  }
}

inline FreeGroupWord free_reduce(FreeGroupWord w) {
  FreeGroupWord out;
  out.reserve(w.size());
  for (int v : w) push_reduced(out, v);
  return out;
}

inline FreeGroupWord inverse(const FreeGroupWord& w) {
  FreeGroupWord out(w.rbegin(), w.rend());
  for (auto& v : out) v = -v;
  return out;
}

class FreeGroupEndo {
 public:
  explicit FreeGroupEndo(int rank) : images_(static_cast<std::size_t>(rank)) {
    for (int k = 1; k <= rank; ++k) images_[static_cast<std::size_t>(k - 1)] = {k};
  }
  FreeGroupEndo(std::vector<FreeGroupWord> images) : images_(std::move(images)) {}

  int rank() const noexcept { return static_cast<int>(images_.size()); }
  const FreeGroupWord& image(int k) const { return images_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<FreeGroupWord>& images() const noexcept { return images_; }

  std::size_t total_length() const noexcept {
    std::size_t total = 0;
    for (const auto& w : images_) total += w.size();
    return total;
  }

  bool is_identity() const {
    for (int k = 1; k <= rank(); ++k) {
      if (image(k) != FreeGroupWord{k}) return false;
    }
    return true;
  }

  /// Image of an arbitrary word, freely reduced.
  FreeGroupWord apply(std::span<const int> w) const {
    FreeGroupWord out;
    for (int v : w) {
      const auto& img = image(v > 0 ? v : -v);
      if (v > 0) {
        for (int u : img) push_reduced(out, u);
      } else {
        for (auto it = img.rbegin(); it != img.rend(); ++it) push_reduced(out, -*it);
      }
    }
    return out;
  }

  friend bool operator==(const FreeGroupEndo&, const FreeGroupEndo&) = default;

 private:
  std::vector<FreeGroupWord> images_;
};

/// (f o g)(x) = f(g(x)).
inline FreeGroupEndo compose(const FreeGroupEndo& f, const FreeGroupEndo& g) {
  if (f.rank() != g.rank()) throw DomainError("rank mismatch in endomorphism composition");
  std::vector<FreeGroupWord> images;
  images.reserve(static_cast<std::size_t>(g.rank()));
  for (int k = 1; k <= g.rank(); ++k) images.push_back(f.apply(g.image(k)));
  return FreeGroupEndo(std::move(images));
}

/// Endomorphism of a single letter sigma_i^{+-1} on F_n.
inline FreeGroupEndo generator_endo(int n, Letter v) {
  FreeGroupEndo e(n);
  const int i = v > 0 ? v : -v;
  std::vector<FreeGroupWord> images = e.images();
  if (v > 0) {
    images[static_cast<std::size_t>(i - 1)] = {i, i + 1, -i};
    images[static_cast<std::size_t>(i)] = {i};
  } else {
    images[static_cast<std::size_t>(i - 1)] = {i + 1};
    images[static_cast<std::size_t>(i)] = {-(i + 1), i, i + 1};
  }
  return FreeGroupEndo(std::move(images));
}

namespace detail {

/// Replaces every image by sigma^{+-1}(image), in place.
inline void left_multiply_letter(std::vector<FreeGroupWord>& images, int n, Letter v) {
  const FreeGroupEndo g = generator_endo(n, v);
  for (auto& img : images) img = g.apply(img);
}

}  // namespace detail

/// Exact Artin endomorphism of w. Image lengths grow roughly like the
/// diagram complexity, which can be exponential in the word length.
inline FreeGroupEndo artin_endo(const BraidWord& w) {
  const int n = w.strands();
  std::vector<FreeGroupWord> images = FreeGroupEndo(n).images();
  for (Letter v : w) detail::left_multiply_letter(images, n, v);
  return FreeGroupEndo(std::move(images));
}

/// As artin_endo, but gives up once the images exceed letter_budget letters.
inline std::optional<FreeGroupEndo> artin_endo_bounded(const BraidWord& w, std::size_t letter_budget) {
  const int n = w.strands();
  std::vector<FreeGroupWord> images = FreeGroupEndo(n).images();
  for (Letter v : w) {
    detail::left_multiply_letter(images, n, v);
    std::size_t total = 0;
    for (const auto& img : images) total += img.size();
    if (total > letter_budget) return std::nullopt;
  }
  return FreeGroupEndo(std::move(images));
}

inline bool is_trivial_braid(const BraidWord& w) { return artin_endo(w).is_identity(); }

/// Image of the boundary word x_1 x_2 ... x_n, fixed by every braid.
inline FreeGroupWord boundary_image(const FreeGroupEndo& e) {
  FreeGroupWord boundary;
  for (int k = 1; k <= e.rank(); ++k) boundary.push_back(k);
  return e.apply(boundary);
}

/// Artin action evaluated in SL(2, Z/p), p = 2^61 - 1, through a random
/// assignment x_k -> M_k. Each image is tracked as a single matrix, so the
/// cost is linear in the word length regardless of how long the exact free
/// group images become. A trivial braid always passes; a nontrivial one
/// passes only on an accidental collision.
class ArtinFingerprint {
 public:
  static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

  struct Mat {
    std::uint64_t a, b, c, d;
    friend bool operator==(const Mat&, const Mat&) = default;
  };

  ArtinFingerprint(int n, std::uint64_t seed) : basis_(static_cast<std::size_t>(n)) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(1, kPrime - 1);
    for (auto& m : basis_) {
      m.a = dist(rng);
      m.b = dist(rng);
      m.c = dist(rng);
      m.d = mul(add(1, mul(m.b, m.c)), inv(m.a));
    }
  }

  /// True iff the fingerprint of w equals that of the identity braid.
  bool looks_trivial(const BraidWord& w) const {
    if (static_cast<std::size_t>(w.strands()) != basis_.size()) throw DomainError("strand count mismatch");
    std::vector<Mat> img = basis_;
    // T <- T o g for the letters from last to first yields artin_endo(w).
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      const Letter v = *it;
      const std::size_t i = static_cast<std::size_t>((v > 0 ? v : -v) - 1);
      const Mat xi = img[i];
      const Mat xj = img[i + 1];
      if (v > 0) {
        img[i] = mul(mul(xi, xj), inverse(xi));
        img[i + 1] = xi;
      } else {
        img[i] = xj;
        img[i + 1] = mul(mul(inverse(xj), xi), xj);
      }
    }
    return img == basis_;
  }

 private:
  static std::uint64_t add(std::uint64_t x, std::uint64_t y) {
    std::uint64_t s = x + y;
    return s >= kPrime ? s - kPrime : s;
  }
  static std::uint64_t sub(std::uint64_t x, std::uint64_t y) { return x >= y ? x - y : x + kPrime - y; }
  static std::uint64_t mul(std::uint64_t x, std::uint64_t y) {
    const uint128 p = static_cast<uint128>(x) * y;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    return add(lo, hi);
  }
  static std::uint64_t inv(std::uint64_t x) {
    std::uint64_t result = 1, base = x, e = kPrime - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  static Mat mul(const Mat& x, const Mat& y) {
    return {add(mul(x.a, y.a), mul(x.b, y.c)), add(mul(x.a, y.b), mul(x.b, y.d)),
            add(mul(x.c, y.a), mul(x.d, y.c)), add(mul(x.c, y.b), mul(x.d, y.d))};
  }
  static Mat inverse(const Mat& m) { return {m.d, sub(0, m.b), sub(0, m.c), m.a}; }

  std::vector<Mat> basis_;
};

/// How a triviality verdict was reached.
enum class Verification { Exact, Fingerprint };

struct TrivialityVerdict {
  bool trivial;
  Verification method;
};

/// Exact check while the free group images stay under letter_budget letters;
/// beyond that, two independent SL(2, Z/p) fingerprints decide.
inline TrivialityVerdict check_trivial(const BraidWord& w, std::size_t letter_budget = std::size_t{1} << 20) {
  if (auto e = artin_endo_bounded(w, letter_budget)) return {e->is_identity(), Verification::Exact};
  const ArtinFingerprint f1(w.strands(), 0x9e3779b97f4a7c15ULL);
  const ArtinFingerprint f2(w.strands(), 0xc2b2ae3d27d4eb4fULL);
  return {f1.looks_trivial(w) && f2.looks_trivial(w), Verification::Fingerprint};
}

}  // namespace braidrelax
