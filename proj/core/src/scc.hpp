#pragma once

#include <cstddef>
#include <vector>

namespace birkhoff::detail {

/// Tarjan's algorithm without recursion. Returns a component id per vertex.
inline std::vector<std::size_t> strongly_connected(const std::vector<std::vector<std::size_t>>& adj,
                                                   std::size_t& count) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  const std::size_t n = adj.size();
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> frames;  // (vertex, next edge)
  std::size_t next = 0;
  count = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    frames.emplace_back(root, 0);
    while (!frames.empty()) {
      auto& [v, e] = frames.back();
      if (e == 0 && index[v] == kUnset) {
        index[v] = low[v] = next++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      if (e < adj[v].size()) {
        const std::size_t w = adj[v][e++];
        if (index[w] == kUnset) {
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = count;
        } while (w != v);
        ++count;
      }
      const std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const std::size_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

}  // namespace birkhoff::detail
