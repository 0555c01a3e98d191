#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace birkhoff {

/// y = M x for a nonnegative irreducible n×n matrix M.
using MatVec = std::function<void(std::span<const double> x, std::span<double> y)>;

struct PerronResult {
  double rho;                  // spectral radius of M
  std::vector<double> vector;  // Perron vector, max entry 1
  std::size_t iterations;
};

inline constexpr double kPerronTolerance = 1e-13;
inline constexpr std::size_t kPerronMaxIterations = 1'000'000;

/// Power iteration on M + I (primitive whenever M is irreducible), stopped
/// when the Collatz–Wielandt bounds agree to `rel_tol`. Throws
/// NumericalError if that does not happen within `max_iterations`.
PerronResult perron_root(std::size_t n, const MatVec& apply, double rel_tol = kPerronTolerance,
                         std::size_t max_iterations = kPerronMaxIterations);

}  // namespace birkhoff
