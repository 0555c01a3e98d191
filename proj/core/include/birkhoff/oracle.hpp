#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "birkhoff/pcc_function.hpp"
#include "birkhoff/symbol_function.hpp"
#include "birkhoff/word.hpp"

namespace birkhoff {

/// Every periodic orbit with period <= max_period, once each (canonical
/// primitive words), with its exact orbit average.
std::vector<std::pair<PeriodicPoint, double>> enumerate_cycle_means(const PccFunction& f, std::size_t max_period);

inline constexpr std::size_t kCountingCap = 24;

/// (1/(N log 2)) log #{|w| = N+D-1 : |A_N f(w) - α| <= δ}; -inf for an empty count.
double counting_lambda(const PccFunction& f, double alpha, double delta, std::size_t n);
/// The raw count behind counting_lambda.
std::uint64_t counting_words(const PccFunction& f, double alpha, double delta, std::size_t n);

struct CoverReport {
  double bound;               // (N+L-1) C(N+L-1, 2(N+L-1)/L) 2^{β*N + L - 1}
  std::uint64_t exact_count;  // cylinders meeting {A_N f >= t*}
  bool pass;
  double threshold;           // t* = β*a + (1-β*)b
};

CoverReport lemma53_cover_check(double a, double b, std::size_t l, double beta, std::size_t n, double eps = 0.0);

/// Smallest N₀ such that the uniform average estimate holds for every N > N₀.
std::uint64_t uniform_N0(const PccFunction& f, double eps);

struct N0Report {
  std::uint64_t n0;
  bool pass;
  double worst_excess;  // max over samples of A_N f - (α*_max + ε)
};

/// Averages of `words` fair-coin words for N = N₀+1..N₀+32 stay below α*_max + ε.
N0Report uniform_N0_check(const PccFunction& f, double eps, std::size_t words = 1000, std::uint64_t seed = 1);

/// Running averages A_1 .. A_N along a fair-coin sequence drawn from
/// mt19937_64(seed), each draw supplying 64 symbols, least significant bit first.
std::vector<double> sample_trajectory(const SymbolFunction& f, std::uint64_t seed, std::size_t n);

/// The first `length` symbols of that same sequence.
BinaryWord random_word(std::uint64_t seed, std::size_t length);

}  // namespace birkhoff
