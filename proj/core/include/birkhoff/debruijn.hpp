#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "birkhoff/pcc_function.hpp"
#include "birkhoff/word.hpp"

namespace birkhoff {

enum class Side { kMin, kMax };

using Node = std::uint64_t;

/// Order-k de Bruijn graph; the weight f(u) sits on both edges leaving u.
/// For k = 1 the nodes are {0,1} with all four edges.
class WeightedDeBruijn {
 public:
  explicit WeightedDeBruijn(PccFunction f);

  std::size_t order() const noexcept { return f_.depth(); }
  std::size_t node_count() const noexcept { return f_.size(); }
  std::size_t edge_count() const noexcept { return 2 * f_.size(); }
  const PccFunction& function() const noexcept { return f_; }

  Node successor(Node u, Bit b) const noexcept { return ((u << 1) & mask_) | b; }
  Node predecessor(Node v, Bit b) const noexcept {
    return (v >> 1) | (static_cast<Node>(b) << (order() - 1));
  }
  bool has_edge(Node u, Node v) const noexcept { return successor(u, 0) == v || successor(u, 1) == v; }
  double weight(Node u) const { return f_[u]; }
  BinaryWord label(Node u) const { return BinaryWord::from_index(u, order()); }

 private:
  PccFunction f_;
  Node mask_;
};

WeightedDeBruijn build_graph(const PccFunction& f);

struct CycleReport {
  double mean;
  std::vector<Node> cycle;
  PeriodicPoint witness;
};

/// A node/edge subset of a de Bruijn graph.
struct Subgraph {
  std::size_t order = 0;
  std::vector<Node> nodes;                     // sorted
  std::vector<std::pair<Node, Node>> edges;    // sorted
  bool empty() const noexcept { return nodes.empty(); }
};

/// Maximal cycle mean of the edge weights (Karp), without a witness.
double max_cycle_mean(const WeightedDeBruijn& g);

/// Maximal cycle mean plus a shortest maximizing simple cycle whose period
/// word is lexicographically least.
CycleReport max_mean_cycle(const WeightedDeBruijn& g);

/// (α*_min, α*_max).
std::pair<double, double> endpoints(const PccFunction& f);

using Rational = boost::rational<std::int64_t>;

/// Endpoints in exact arithmetic. Only available when every table value is a
/// dyadic rational with a small enough numerator and denominator.
std::optional<std::pair<Rational, Rational>> exact_endpoints(const PccFunction& f);

/// Reduced weights and a relaxed potential for one side of the graph.
struct Potential {
  double lambda;             // max cycle mean of the side's weights
  std::vector<double> phi;   // φ(v) >= φ(u) + w(u) - λ up to rounding
  double tolerance;          // tightness threshold
};

/// Side::kMax works with f, Side::kMin with -f.
Potential relaxed_potential(const WeightedDeBruijn& g, Side side);

Subgraph tight_subgraph(const WeightedDeBruijn& g, Side side);

/// log of the spectral radius of the subgraph's adjacency matrix.
double subgraph_entropy(const Subgraph& sub);

}  // namespace birkhoff
