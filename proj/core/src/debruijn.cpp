#include "birkhoff/debruijn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "birkhoff/birkhoff_sum.hpp"
#include "birkhoff/errors.hpp"
#include "birkhoff/perron.hpp"
#include "scc.hpp"

namespace birkhoff {

WeightedDeBruijn::WeightedDeBruijn(PccFunction f)
    : f_(std::move(f)), mask_((Node{1} << f_.depth()) - 1) {}

WeightedDeBruijn build_graph(const PccFunction& f) { return WeightedDeBruijn(f); }

namespace {

// Karp's recurrence D_j(v) = max over edges u->v of D_{j-1}(u) + w(u), with
// D_0 = 0. Two passes keep only O(|V|) rows alive: the first produces D_n,
// the second sweeps j = 0..n-1 and folds min_j (D_n - D_j)/(n - j).
template <class W, class Mean, class MakeMean>
Mean karp(const WeightedDeBruijn& g, const std::vector<W>& w, MakeMean make_mean) {
  const std::size_t n = g.node_count();
  std::vector<W> cur(n, W{0}), nxt(n);
  auto step = [&] {
    for (Node v = 0; v < n; ++v) {
      const Node a = g.predecessor(v, 0), b = g.predecessor(v, 1);
      nxt[v] = std::max(cur[a] + w[a], cur[b] + w[b]);
    }
    cur.swap(nxt);
  };
  for (std::size_t j = 0; j < n; ++j) step();
  const std::vector<W> dn = cur;

  std::fill(cur.begin(), cur.end(), W{0});
  std::vector<Mean> worst(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (Node v = 0; v < n; ++v) {
      const Mean m = make_mean(dn[v] - cur[v], n - j);
      if (j == 0 || m < worst[v]) worst[v] = m;
    }
    step();
  }
  return *std::max_element(worst.begin(), worst.end());
}

std::vector<double> side_weights(const WeightedDeBruijn& g, Side side) {
  std::vector<double> w = g.function().values();
  if (side == Side::kMin) {
    for (double& x : w) x = -x;
  }
  return w;
}

double karp_double(const WeightedDeBruijn& g, const std::vector<double>& w) {
  // extended precision keeps D_n - D_j accurate for long walks
  const std::vector<long double> wl(w.begin(), w.end());
  const long double lam = karp<long double, long double>(
      g, wl, [](long double d, std::size_t len) { return d / static_cast<long double>(len); });
  return static_cast<double>(lam);
}

// Per-node bitmask of tight out-edges (bit b for the edge appending b),
// restricted to nodes lying on cycles of the tight graph.
struct TightMask {
  std::vector<std::uint8_t> out;
};

TightMask tight_mask(const WeightedDeBruijn& g, Side side) {
  const Potential pot = relaxed_potential(g, side);
  const std::vector<double> w = side_weights(g, side);
  const std::size_t n = g.node_count();
  TightMask t{std::vector<std::uint8_t>(n, 0)};
  std::vector<std::vector<std::size_t>> adj(n);
  for (Node u = 0; u < n; ++u) {
    for (Bit b = 0; b < 2; ++b) {
      const Node v = g.successor(u, b);
      if (std::abs(pot.phi[u] + w[u] - pot.lambda - pot.phi[v]) <= pot.tolerance) {
        t.out[u] |= static_cast<std::uint8_t>(1U << b);
        adj[u].push_back(v);
      }
    }
  }
  std::size_t count = 0;
  const std::vector<std::size_t> comp = detail::strongly_connected(adj, count);
  std::vector<std::size_t> size(count, 0);
  for (Node u = 0; u < n; ++u) ++size[comp[u]];
  for (Node u = 0; u < n; ++u) {
    std::uint8_t keep = 0;
    for (Bit b = 0; b < 2; ++b) {
      if (!(t.out[u] >> b & 1U)) continue;
      const Node v = g.successor(u, b);
      if (comp[u] == comp[v] && (size[comp[u]] > 1 || u == v)) keep |= static_cast<std::uint8_t>(1U << b);
    }
    t.out[u] = keep;
  }
  return t;
}

// Length of the shortest cycle in the tight graph.
std::size_t shortest_cycle(const WeightedDeBruijn& g, const TightMask& t) {
  const std::size_t n = g.node_count();
  for (Node u = 0; u < n; ++u) {
    for (Bit b = 0; b < 2; ++b) {
      if ((t.out[u] >> b & 1U) && g.successor(u, b) == u) return 1;
    }
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n);
  std::vector<Node> queue;
  for (Node s = 0; s < n; ++s) {
    if (!t.out[s]) continue;
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
    queue.assign(1, s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Node u = queue[head];
      if (dist[u] + 1 >= best) break;
      for (Bit b = 0; b < 2; ++b) {
        if (!(t.out[u] >> b & 1U)) continue;
        const Node v = g.successor(u, b);
        if (v == s) {
          best = std::min(best, dist[u] + 1);
        } else if (dist[v] == std::numeric_limits<std::size_t>::max()) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) {
    throw NumericalError("tight subgraph has no cycle; tolerance too small for this table");
  }
  return best;
}

// Lexicographically least closed walk of length p from s in the tight graph,
// or an empty vector if none exists.
std::vector<Node> least_closed_walk(const WeightedDeBruijn& g, const TightMask& t, Node s, std::size_t p) {
  const std::size_t n = g.node_count();
  // reach[j][v]: v reaches s in exactly j tight steps
  std::vector<std::vector<char>> reach(p + 1, std::vector<char>(n, 0));
  reach[0][s] = 1;
  for (std::size_t j = 1; j <= p; ++j) {
    for (Node u = 0; u < n; ++u) {
      for (Bit b = 0; b < 2 && !reach[j][u]; ++b) {
        if ((t.out[u] >> b & 1U) && reach[j - 1][g.successor(u, b)]) reach[j][u] = 1;
      }
    }
  }
  if (!reach[p][s]) return {};
  std::vector<Node> walk{s};
  Node cur = s;
  for (std::size_t i = 1; i < p; ++i) {
    for (Bit b = 0; b < 2; ++b) {
      const Node v = g.successor(cur, b);
      if ((t.out[cur] >> b & 1U) && reach[p - i][v]) {
        cur = v;
        break;
      }
    }
    walk.push_back(cur);
  }
  return walk;
}

BinaryWord period_word(const WeightedDeBruijn& g, const std::vector<Node>& cycle) {
  std::vector<Bit> bits(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) bits[i] = static_cast<Bit>(cycle[i] >> (g.order() - 1) & 1U);
  return BinaryWord(std::move(bits));
}

}  // namespace

double max_cycle_mean(const WeightedDeBruijn& g) { return karp_double(g, g.function().values()); }

Potential relaxed_potential(const WeightedDeBruijn& g, Side side) {
  const std::vector<double> w = side_weights(g, side);
  const std::size_t n = g.node_count();
  Potential pot{karp_double(g, w), std::vector<double>(n, 0.0), 0.0};
  double norm = 0.0;
  for (double x : w) norm = std::max(norm, std::abs(x));
  pot.tolerance = 1e-9 * std::max(1.0, norm);
  const double relax_tol = pot.tolerance / (2.0 * static_cast<double>(n));
  // Bellman-Ford for longest paths; with no positive cycles it settles after
  // at most |V| - 1 improving passes.
  for (std::size_t round = 0; round <= n; ++round) {
    bool changed = false;
    for (Node u = 0; u < n; ++u) {
      const double out = pot.phi[u] + w[u] - pot.lambda;
      for (Bit b = 0; b < 2; ++b) {
        const Node v = g.successor(u, b);
        if (out > pot.phi[v] + relax_tol) {
          pot.phi[v] = out;
          changed = true;
        }
      }
    }
    if (!changed) return pot;
  }
  throw NumericalError("potential relaxation did not stabilize within " + std::to_string(n) + " rounds");
}

CycleReport max_mean_cycle(const WeightedDeBruijn& g) {
  const TightMask t = tight_mask(g, Side::kMax);
  const std::size_t p = shortest_cycle(g, t);
  const std::size_t k = g.order();
  const std::size_t lead = std::min(p, k);

  std::vector<Node> best_cycle;
  BinaryWord best_word;
  for (Node s = 0; s < g.node_count(); ++s) {
    if (!t.out[s]) continue;
    if (!best_cycle.empty() && (s >> (k - lead)) > best_word.prefix(lead).index()) break;
    std::vector<Node> walk = least_closed_walk(g, t, s, p);
    if (walk.empty()) continue;
    BinaryWord word = period_word(g, walk);
    if (best_cycle.empty() || word < best_word) {
      best_word = std::move(word);
      best_cycle = std::move(walk);
    }
  }
  PeriodicPoint witness(best_word);
  const double mean = periodic_birkhoff_average(g.function(), witness);
  return {mean, std::move(best_cycle), std::move(witness)};
}

std::pair<double, double> endpoints(const PccFunction& f) {
  const WeightedDeBruijn g(f);
  const double hi = max_cycle_mean(g);
  const double lo = -karp_double(g, side_weights(g, Side::kMin));
  return {lo, hi};
}

std::optional<std::pair<Rational, Rational>> exact_endpoints(const PccFunction& f) {
  if (f.depth() > 12) return std::nullopt;
  // find a common power-of-two denominator
  int shift = 0;
  for (double v : f.values()) {
    int e = 0;
    while (e <= 40 && std::ldexp(v, e) != std::trunc(std::ldexp(v, e))) ++e;
    if (e > 40) return std::nullopt;
    shift = std::max(shift, e);
  }
  std::vector<std::int64_t> num(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = std::ldexp(f[i], shift);
    if (std::abs(x) > 2147483648.0) return std::nullopt;
    num[i] = static_cast<std::int64_t>(x);
  }
  const WeightedDeBruijn g(f);
  auto make = [](std::int64_t d, std::size_t len) { return Rational(d, static_cast<std::int64_t>(len)); };
  const Rational den(std::int64_t{1} << shift);
  const Rational hi = karp<std::int64_t, Rational>(g, num, make) / den;
  for (auto& x : num) x = -x;
  const Rational lo = -karp<std::int64_t, Rational>(g, num, make) / den;
  return std::make_pair(lo, hi);
}

Subgraph tight_subgraph(const WeightedDeBruijn& g, Side side) {
  const TightMask t = tight_mask(g, side);
  Subgraph sub;
  sub.order = g.order();
  for (Node u = 0; u < g.node_count(); ++u) {
    if (!t.out[u]) continue;
    sub.nodes.push_back(u);
    for (Bit b = 0; b < 2; ++b) {
      if (t.out[u] >> b & 1U) sub.edges.emplace_back(u, g.successor(u, b));
    }
  }
  std::sort(sub.edges.begin(), sub.edges.end());
  sub.edges.erase(std::unique(sub.edges.begin(), sub.edges.end()), sub.edges.end());
  if (sub.empty()) throw NumericalError("tight subgraph is empty");
  return sub;
}

double subgraph_entropy(const Subgraph& sub) {
  require(!sub.empty(), "entropy of an empty subgraph is undefined");
  const std::size_t n = sub.nodes.size();
  auto local = [&](Node v) {
    const auto it = std::lower_bound(sub.nodes.begin(), sub.nodes.end(), v);
    require(it != sub.nodes.end() && *it == v, "subgraph edge leaves the node set");
    return static_cast<std::size_t>(it - sub.nodes.begin());
  };
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : sub.edges) adj[local(u)].push_back(local(v));

  std::size_t count = 0;
  const std::vector<std::size_t> comp = detail::strongly_connected(adj, count);
  double rho = 0.0;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (comp[i] == c) members.push_back(i);
    }
    std::vector<std::size_t> pos(n, 0);
    for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = i;
    std::vector<std::vector<std::size_t>> inner(members.size());
    bool branching = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j : adj[members[i]]) {
        if (comp[j] == c) inner[i].push_back(pos[j]);
      }
      branching = branching || inner[i].size() > 1;
    }
    if (inner.size() == 1 && inner[0].empty()) continue;  // trivial component
    if (!branching) {
      rho = std::max(rho, 1.0);  // a bare cycle
      continue;
    }
    const PerronResult r = perron_root(members.size(), [&](std::span<const double> x, std::span<double> y) {
      for (std::size_t i = 0; i < inner.size(); ++i) {
        double s = 0.0;
        for (std::size_t j : inner[i]) s += x[j];
        y[i] = s;
      }
    });
    rho = std::max(rho, r.rho);
  }
  require(rho > 0.0, "subgraph has no cycle");
  return std::log(rho);
}

}  // namespace birkhoff
