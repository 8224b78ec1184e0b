#pragma once

#include <span>
#include <string>
#include <vector>

#include "gcn/graph.hpp"

namespace gcn {

/// Bijection between vertices and positions 0..n-1. `u` precedes `v` iff
/// position(u) < position(v).
class LinearOrder {
 public:
  LinearOrder() = default;
  /// `sequence[i]` is the vertex at position i. Throws InputError unless the
  /// sequence is a permutation of 0..n-1.
  explicit LinearOrder(std::vector<Vertex> sequence);

  static LinearOrder identity(int n);

  int size() const { return static_cast<int>(sequence_.size()); }
  Vertex at(int position) const { return sequence_[static_cast<std::size_t>(position)]; }
  int position(Vertex v) const { return position_[static_cast<std::size_t>(v)]; }
  bool less(Vertex u, Vertex v) const { return position(u) < position(v); }
  std::span<const Vertex> sequence() const { return sequence_; }

  LinearOrder reversed() const;
  /// Relabels every vertex through `new_id`, dropping those mapped to -1.
  /// Relative order is preserved.
  LinearOrder restricted(std::span<const Vertex> new_id) const;

  /// Space-separated vertex ids, smallest position first.
  std::string to_string() const;
  static LinearOrder parse(const std::string& line);

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) { return a.sequence_ == b.sequence_; }

 private:
  std::vector<Vertex> sequence_;
  std::vector<int> position_;
};

}  // namespace gcn
