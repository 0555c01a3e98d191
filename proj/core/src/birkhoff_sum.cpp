#include "birkhoff/birkhoff_sum.hpp"

#include <string>
#include <vector>

#include "birkhoff/errors.hpp"

namespace birkhoff {

double finite_birkhoff_average(const SymbolFunction& f, const BinaryWord& prefix, std::size_t n) {
  require(n >= 1, "Birkhoff average needs N >= 1");
  const std::size_t depth = f.effective_depth();
  require(prefix.size() >= n + depth - 1, "prefix of length " + std::to_string(prefix.size()) +
                                              " is too short for N=" + std::to_string(n) +
                                              " at depth " + std::to_string(depth));
  const BitSpan bits = prefix.bits();
  std::vector<double> terms(n);
  for (std::size_t i = 0; i < n; ++i) terms[i] = f.evaluate(bits.subspan(i, depth));
  return compensated_sum(terms) / static_cast<double>(n);
}

double periodic_birkhoff_average(const SymbolFunction& f, const PeriodicPoint& p) {
  const std::size_t len = p.length();
  // one period plus enough wrap-around to evaluate the last window
  const BinaryWord unrolled = p.unroll(len + f.effective_depth() - 1);
  return finite_birkhoff_average(f, unrolled, len);
}

}  // namespace birkhoff
