#include "gcn/linear_order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gcn/error.hpp"

namespace gcn {

LinearOrder::LinearOrder(std::vector<Vertex> sequence) : sequence_(std::move(sequence)) {
  position_.assign(sequence_.size(), -1);
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    Vertex v = sequence_[i];
    if (v < 0 || static_cast<std::size_t>(v) >= sequence_.size() || position_[v] != -1) {
      throw InputError("order is not a permutation of 0..n-1");
    }
    position_[v] = static_cast<int>(i);
  }
}

LinearOrder LinearOrder::identity(int n) {
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  return LinearOrder(std::move(seq));
}

LinearOrder LinearOrder::reversed() const {
  std::vector<Vertex> seq(sequence_.rbegin(), sequence_.rend());
  return LinearOrder(std::move(seq));
}

LinearOrder LinearOrder::restricted(std::span<const Vertex> new_id) const {
  std::vector<Vertex> seq;
  for (Vertex v : sequence_) {
    if (static_cast<std::size_t>(v) < new_id.size() && new_id[v] >= 0) seq.push_back(new_id[v]);
  }
  return LinearOrder(std::move(seq));
}

std::string LinearOrder::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    if (i) out << ' ';
    out << sequence_[i];
  }
  return out.str();
}

LinearOrder LinearOrder::parse(const std::string& line) {
  std::istringstream in(line);
  std::vector<Vertex> seq;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw InputError("bad vertex id '" + tok + "'");
      seq.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError("bad vertex id '" + tok + "'");
    }
  }
  return LinearOrder(std::move(seq));
}

}  // namespace gcn
