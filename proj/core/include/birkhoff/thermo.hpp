#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "birkhoff/debruijn.hpp"
#include "birkhoff/pcc_function.hpp"

namespace birkhoff {

/// Stationary Markov chain on the de Bruijn graph of a PCC function.
struct MarkovMeasure {
  WeightedDeBruijn graph;
  /// transitions[u][b] = P(u -> successor(u, b)).
  std::vector<std::array<double, 2>> transitions;
  std::vector<double> stationary;
  double entropy;  // h_μ in nats
  double mean;     // ∫ f dμ

  double probability(Node u, Node v) const;
};

struct SpectrumCurve {
  double alpha_min;
  double alpha_max;
  double integral;  // ∫ f dλ, where S = 1
  std::vector<std::pair<double, double>> samples;  // (α, S), α increasing
};

/// Everything about one function that every spectrum query needs: support
/// endpoints, the relaxed potentials of both sides, endpoint dimensions.
/// Pressure is evaluated through the transfer matrix conjugated by the
/// potential, whose entries are all at most 1, so nothing overflows for
/// large |t|.
class SpectrumSolver {
 public:
  explicit SpectrumSolver(const PccFunction& f);

  const PccFunction& function() const noexcept { return graph_.function(); }
  const WeightedDeBruijn& graph() const noexcept { return graph_; }
  double alpha_star_min() const noexcept { return lo_.lambda * -1.0; }
  double alpha_star_max() const noexcept { return hi_.lambda; }
  bool degenerate() const noexcept;
  double endpoint_dimension(Side side) const noexcept { return side == Side::kMax ? dim_max_ : dim_min_; }

  /// P(t) with no overflow guard.
  double pressure(double t) const;
  MarkovMeasure gibbs(double t) const;
  double mean(double t) const { return gibbs(t).mean; }

  /// S_f(α).
  double at(double alpha) const;

 private:
  std::vector<std::array<double, 2>> kernel(double t) const;

  WeightedDeBruijn graph_;
  Potential hi_;  // potential for f
  Potential lo_;  // potential for -f
  double dim_min_;
  double dim_max_;
};

/// log ρ(M_t); requires |t| <= 700/‖f‖.
double pressure(const PccFunction& f, double t);
MarkovMeasure gibbs_measure(const PccFunction& f, double t);

double spectrum_at(const PccFunction& f, double alpha);
SpectrumCurve spectrum_curve(const PccFunction& f, std::size_t grid_points);

double endpoint_dimension(const PccFunction& f, Side side);
bool is_spectrum_continuous(const PccFunction& f, double tol);

/// Difference quotients of S at the `side` endpoint, one per δ, with S
/// evaluated exactly at α* ∓ δ.
std::vector<double> one_sided_slopes(const PccFunction& f, Side side, const std::vector<double>& deltas);

struct NormContinuityReport {
  bool pass;
  double worst_gap;  // max over grid of S_f(α) - max_{α'} S_g(α')
};

/// For every grid α in f's support, checks that some α' within ε of α has
/// S_g(α') >= S_f(α) - 1e-6. Concavity of S_g reduces the search over α' to
/// one evaluation.
NormContinuityReport norm_continuity_check(const PccFunction& f, const PccFunction& g, double eps,
                                           std::size_t grid_points);

}  // namespace birkhoff
