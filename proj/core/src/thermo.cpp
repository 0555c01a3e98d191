#include "birkhoff/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "birkhoff/errors.hpp"
#include "birkhoff/perron.hpp"

namespace birkhoff {

namespace {

constexpr double kDegenerateWidth = 1e-12;
constexpr double kInitialBracket = 64.0;
constexpr double kBracketCap = 1048576.0;  // 2^20, divided by ‖f‖

double entropy_dimension(const WeightedDeBruijn& g, Side side) {
  return subgraph_entropy(tight_subgraph(g, side)) / std::numbers::ln2;
}

}  // namespace

double MarkovMeasure::probability(Node u, Node v) const {
  double p = 0.0;
  for (Bit b = 0; b < 2; ++b) {
    if (graph.successor(u, b) == v) p += transitions[u][b];
  }
  return p;
}

SpectrumSolver::SpectrumSolver(const PccFunction& f)
    : graph_(f),
      hi_(relaxed_potential(graph_, Side::kMax)),
      lo_(relaxed_potential(graph_, Side::kMin)),
      dim_min_(entropy_dimension(graph_, Side::kMin)),
      dim_max_(entropy_dimension(graph_, Side::kMax)) {}

bool SpectrumSolver::degenerate() const noexcept {
  return std::abs(alpha_star_max() - alpha_star_min()) <= kDegenerateWidth;
}

std::vector<std::array<double, 2>> SpectrumSolver::kernel(double t) const {
  // t >= 0 conjugates with the potential of f, t < 0 with that of -f; either
  // way every exponent is <= 0 up to rounding and tight edges get weight 1.
  const Potential& pot = t >= 0.0 ? hi_ : lo_;
  const double s = std::abs(t);
  const double sign = t >= 0.0 ? 1.0 : -1.0;
  const std::size_t n = graph_.node_count();
  std::vector<std::array<double, 2>> k(n);
  for (Node u = 0; u < n; ++u) {
    const double w = sign * graph_.weight(u) - pot.lambda + pot.phi[u];
    for (Bit b = 0; b < 2; ++b) k[u][b] = std::exp(s * (w - pot.phi[graph_.successor(u, b)]));
  }
  return k;
}

double SpectrumSolver::pressure(double t) const {
  const auto k = kernel(t);
  const PerronResult r = perron_root(graph_.node_count(), [&](std::span<const double> x, std::span<double> y) {
    for (Node u = 0; u < k.size(); ++u) y[u] = k[u][0] * x[graph_.successor(u, 0)] + k[u][1] * x[graph_.successor(u, 1)];
  });
  const double lambda = t >= 0.0 ? hi_.lambda : lo_.lambda;
  return std::abs(t) * lambda + std::log(r.rho);
}

MarkovMeasure SpectrumSolver::gibbs(double t) const {
  const auto k = kernel(t);
  const std::size_t n = graph_.node_count();
  const PerronResult right = perron_root(n, [&](std::span<const double> x, std::span<double> y) {
    for (Node u = 0; u < n; ++u) y[u] = k[u][0] * x[graph_.successor(u, 0)] + k[u][1] * x[graph_.successor(u, 1)];
  });
  const PerronResult left = perron_root(n, [&](std::span<const double> x, std::span<double> y) {
    for (Node v = 0; v < n; ++v) {
      const Bit last = static_cast<Bit>(v & 1U);
      const Node a = graph_.predecessor(v, 0), b = graph_.predecessor(v, 1);
      y[v] = x[a] * k[a][last] + x[b] * k[b][last];
    }
  });
  const std::vector<double>& r = right.vector;
  const std::vector<double>& l = left.vector;

  MarkovMeasure mu{graph_, std::vector<std::array<double, 2>>(n), std::vector<double>(n), 0.0, 0.0};
  double total = 0.0;
  for (Node u = 0; u < n; ++u) {
    mu.stationary[u] = l[u] * r[u];
    total += mu.stationary[u];
  }
  for (double& p : mu.stationary) p /= total;

  std::vector<double> ent(n, 0.0), mean(n, 0.0);
  for (Node u = 0; u < n; ++u) {
    auto& row = mu.transitions[u];
    const double a = k[u][0] * r[graph_.successor(u, 0)];
    const double b = k[u][1] * r[graph_.successor(u, 1)];
    const double s = a + b;
    if (s > 0.0) {
      row = {a / s, b / s};
    } else {
      row = {0.5, 0.5};  // a row the chain never visits
    }
    for (double p : row) {
      if (p > 0.0) ent[u] -= mu.stationary[u] * p * std::log(p);
    }
    mean[u] = mu.stationary[u] * graph_.weight(u);
  }
  mu.entropy = std::max(0.0, compensated_sum(ent));
  mu.mean = compensated_sum(mean);
  return mu;
}

double SpectrumSolver::at(double alpha) const {
  const double lo = alpha_star_min(), hi = alpha_star_max();
  if (degenerate()) return std::abs(alpha - hi) <= kDegenerateWidth ? 1.0 : 0.0;
  if (alpha < lo || alpha > hi) return 0.0;
  if (alpha == lo) return dim_min_;
  if (alpha == hi) return dim_max_;

  const double center = mean(0.0);
  if (alpha == center) return 1.0;
  const double sign = alpha > center ? 1.0 : -1.0;
  const double norm = function().sup_norm();
  const double cap = kBracketCap / norm;

  auto gap = [&](double t) { return mean(t) - alpha; };
  double span = kInitialBracket;
  double far = gap(sign * span);
  while (sign * far < 0.0) {
    if (span > cap) return sign > 0.0 ? dim_max_ : dim_min_;
    span *= 2.0;
    far = gap(sign * span);
  }
  double t = sign * span;
  if (far != 0.0) {
    double a = 0.0, b = sign * span, fa = center - alpha, fb = far;
    if (a > b) {
      std::swap(a, b);
      std::swap(fa, fb);
    }
    std::uintmax_t iters = 200;
    const auto root = boost::math::tools::toms748_solve(gap, a, b, fa, fb,
                                                        boost::math::tools::eps_tolerance<double>(50), iters);
    t = 0.5 * (root.first + root.second);
  }
  const double s = (pressure(t) - t * alpha) / std::numbers::ln2;
  return std::clamp(s, 0.0, 1.0);
}

double pressure(const PccFunction& f, double t) {
  const double norm = f.sup_norm();
  require(norm == 0.0 || std::abs(t) <= 700.0 / norm,
          "|t| = " + std::to_string(std::abs(t)) + " exceeds overflow guard 700/||f||");
  return SpectrumSolver(f).pressure(t);
}

MarkovMeasure gibbs_measure(const PccFunction& f, double t) {
  const double norm = f.sup_norm();
  require(norm == 0.0 || std::abs(t) <= 700.0 / norm,
          "|t| = " + std::to_string(std::abs(t)) + " exceeds overflow guard 700/||f||");
  return SpectrumSolver(f).gibbs(t);
}

double spectrum_at(const PccFunction& f, double alpha) { return SpectrumSolver(f).at(alpha); }

SpectrumCurve spectrum_curve(const PccFunction& f, std::size_t grid_points) {
  require(grid_points >= 3, "spectrum grid needs at least 3 points");
  const SpectrumSolver solver(f);
  SpectrumCurve curve{solver.alpha_star_min(), solver.alpha_star_max(), f.integrate(), {}};
  if (solver.degenerate()) {
    curve.samples.emplace_back(curve.alpha_max, 1.0);
    return curve;
  }
  const double width = curve.alpha_max - curve.alpha_min;
  curve.samples.reserve(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) {
    double a = curve.alpha_min + width * static_cast<double>(i) / static_cast<double>(grid_points - 1);
    if (i + 1 == grid_points) a = curve.alpha_max;
    curve.samples.emplace_back(a, solver.at(a));
  }
  return curve;
}

double endpoint_dimension(const PccFunction& f, Side side) {
  return entropy_dimension(WeightedDeBruijn(f), side);
}

bool is_spectrum_continuous(const PccFunction& f, double tol) {
  require(tol > 0.0, "continuity tolerance must be positive");
  const WeightedDeBruijn g(f);
  return entropy_dimension(g, Side::kMin) < tol && entropy_dimension(g, Side::kMax) < tol;
}

std::vector<double> one_sided_slopes(const PccFunction& f, Side side, const std::vector<double>& deltas) {
  const SpectrumSolver solver(f);
  require(!solver.degenerate(), "one-sided slopes need a nondegenerate support");
  const double width = solver.alpha_star_max() - solver.alpha_star_min();
  std::vector<double> out;
  out.reserve(deltas.size());
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const double d = deltas[i];
    require(d > 0.0 && d < width, "delta " + std::to_string(d) + " must lie in (0, support width)");
    require(i == 0 || d < deltas[i - 1], "deltas must be strictly decreasing");
    const double end = side == Side::kMax ? solver.alpha_star_max() : solver.alpha_star_min();
    const double step = side == Side::kMax ? -d : d;
    out.push_back((solver.at(end + step) - solver.endpoint_dimension(side)) / step);
  }
  return out;
}

NormContinuityReport norm_continuity_check(const PccFunction& f, const PccFunction& g, double eps,
                                           std::size_t grid_points) {
  require(eps > 0.0, "epsilon must be positive");
  require(grid_points >= 1, "grid needs at least one point");
  const double dist = sup_distance(f, g);
  require(dist < eps, "sup distance " + std::to_string(dist) + " is not below epsilon " + std::to_string(eps));
  const SpectrumSolver sf(f), sg(g);
  const double peak = g.integrate();
  NormContinuityReport report{true, -std::numeric_limits<double>::infinity()};
  const double a0 = sf.alpha_star_min(), a1 = sf.alpha_star_max();
  const std::size_t points = sf.degenerate() ? 1 : grid_points;
  for (std::size_t i = 0; i < points; ++i) {
    const double alpha = points == 1 ? a1 : a0 + (a1 - a0) * static_cast<double>(i) / static_cast<double>(points - 1);
    const double target = sf.at(alpha);
    // S_g is concave with its peak at ∫g, so its max over the window sits at
    // the window point nearest the peak
    const double lo = std::max(alpha - eps, sg.alpha_star_min());
    const double hi = std::min(alpha + eps, sg.alpha_star_max());
    const double best = lo <= hi ? sg.at(std::clamp(peak, lo, hi)) : 0.0;
    const double gap = target - best;
    report.worst_gap = std::max(report.worst_gap, gap);
    if (gap > 1e-6) report.pass = false;
  }
  return report;
}

}  // namespace birkhoff
