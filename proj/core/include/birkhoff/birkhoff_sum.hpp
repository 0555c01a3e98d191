#pragma once

#include <cstddef>

#include "birkhoff/symbol_function.hpp"
#include "birkhoff/word.hpp"

namespace birkhoff {

/// (1/N) Σ_{n=0}^{N-1} f(σ^n w); needs |w| >= N + depth - 1.
double finite_birkhoff_average(const SymbolFunction& f, const BinaryWord& prefix, std::size_t n);

/// Exact orbit average of f over one period of p.
double periodic_birkhoff_average(const SymbolFunction& f, const PeriodicPoint& p);

}  // namespace birkhoff
