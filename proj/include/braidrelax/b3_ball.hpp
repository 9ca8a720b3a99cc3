#pragma once

// Breadth-first ball in the Cayley graph of B_3 over sigma_1^{+-1},
// sigma_2^{+-1}. Vertices are identified by their Artin endomorphism, which is
// faithful, so the BFS radius of a vertex is the length of its geodesics.

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidrelax/artin.hpp"
#include "braidrelax/error.hpp"
#include "braidrelax/word.hpp"

namespace braidrelax {

struct MinLengthCertificate {
  BraidWord word;
  int min_length = 0;
  BraidWord witness;
};

class B3Ball {
 public:
  explicit B3Ball(int radius) : radius_(radius) {
    if (radius < 0) throw DomainError("negative BFS radius");
    FreeGroupEndo id(3);
    nodes_.push_back({id, -1, 0, 0});
    index_.emplace(key(id), 0);
    layer_sizes_.push_back(1);
    std::size_t begin = 0;
    for (int r = 1; r <= radius_; ++r) {
      const std::size_t end = nodes_.size();
      for (std::size_t k = begin; k < end; ++k) {
        for (Letter v : {1, -1, 2, -2}) {
          if (nodes_[k].last == -v) continue;
          FreeGroupEndo next = compose(generator_endo(3, v), nodes_[k].endo);
          auto [it, inserted] = index_.emplace(key(next), nodes_.size());
          if (inserted) nodes_.push_back({std::move(next), static_cast<long>(k), v, r});
        }
      }
      layer_sizes_.push_back(nodes_.size() - end);
      begin = end;
    }
  }

  int radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<std::size_t>& layer_sizes() const noexcept { return layer_sizes_; }

  /// Geodesic length of the element, if it lies in the ball.
  std::optional<int> distance(const FreeGroupEndo& e) const {
    auto it = index_.find(key(e));
    if (it == index_.end()) return std::nullopt;
    return nodes_[it->second].radius;
  }

  std::optional<int> distance(const BraidWord& w) const { return distance(artin_endo(require_b3(w))); }

  /// A shortest word for the element, if it lies in the ball.
  std::optional<BraidWord> geodesic(const FreeGroupEndo& e) const {
    auto it = index_.find(key(e));
    if (it == index_.end()) return std::nullopt;
    std::vector<Letter> letters;
    for (long k = static_cast<long>(it->second); nodes_[static_cast<std::size_t>(k)].parent >= 0;
         k = nodes_[static_cast<std::size_t>(k)].parent) {
      letters.push_back(nodes_[static_cast<std::size_t>(k)].last);
    }
    std::reverse(letters.begin(), letters.end());
    return BraidWord(3, std::move(letters));
  }

  /// Words spelled along BFS tree paths, one per ball element.
  BraidWord tree_word(std::size_t node) const { return *geodesic(nodes_.at(node).endo); }
  int node_radius(std::size_t node) const { return nodes_.at(node).radius; }

  static std::string key(const FreeGroupEndo& e) {
    std::string out;
    for (const auto& img : e.images()) {
      for (int v : img) out.push_back(static_cast<char>(v));
      out.push_back('\0');
    }
    return out;
  }

 private:
  static const BraidWord& require_b3(const BraidWord& w) {
    if (w.strands() != 3) throw DomainError("minimal-length oracle only covers B_3");
    return w;
  }

  struct Node {
    FreeGroupEndo endo;
    long parent;
    Letter last;
    int radius;
  };

  int radius_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> layer_sizes_;
};

inline constexpr int kDefaultMinLengthRadius = 12;

/// Shortest equivalent word of a B_3 word, by BFS up to max_radius.
inline MinLengthCertificate bfs_min_length(const BraidWord& w, const B3Ball& ball) {
  if (w.strands() != 3) throw DomainError("minimal-length oracle only covers B_3");
  const FreeGroupEndo e = artin_endo(w);
  auto witness = ball.geodesic(e);
  if (!witness) {
    throw SearchBoundError("element not found within radius " + std::to_string(ball.radius()));
  }
  return {w, static_cast<int>(witness->size()), std::move(*witness)};
}

inline MinLengthCertificate bfs_min_length(const BraidWord& w, int max_radius = kDefaultMinLengthRadius) {
  if (w.strands() != 3) throw DomainError("minimal-length oracle only covers B_3");
  return bfs_min_length(w, B3Ball(max_radius));
}

}  // namespace braidrelax
