#include "birkhoff/perron.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "birkhoff/errors.hpp"

namespace birkhoff {

PerronResult perron_root(std::size_t n, const MatVec& apply, double rel_tol, std::size_t max_iterations) {
  require(n >= 1, "Perron iteration needs a nonempty matrix");
  std::vector<double> x(n, 1.0);
  std::vector<double> y(n);
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    apply(x, y);
    double lower = std::numeric_limits<double>::infinity();
    double upper = 0.0;
    bool pending = false;  // some zero entry is about to become positive
    double top = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] += x[i];
      top = std::max(top, y[i]);
      if (x[i] > 0.0) {
        const double r = y[i] / x[i];
        lower = std::min(lower, r);
        upper = std::max(upper, r);
      } else if (y[i] > 0.0) {
        pending = true;
      }
    }
    if (!(top > 0.0) || !std::isfinite(top)) throw NumericalError("Perron iteration degenerated");
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / top;
    if (!pending && upper - lower <= rel_tol * upper) {
      return {0.5 * (lower + upper) - 1.0, std::move(x), it};
    }
  }
  throw NumericalError("Perron iteration did not converge within " + std::to_string(max_iterations) +
                       " iterations");
}

}  // namespace birkhoff
