#include "birkhoff/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "birkhoff/birkhoff_sum.hpp"
#include "birkhoff/debruijn.hpp"
#include "birkhoff/errors.hpp"

namespace birkhoff {

PccFunction example_indicator() { return PccFunction(1, {0.0, 1.0}); }

PccFunction example23() {
  // index order 000, 001, ..., 111; the upper half is the negated mirror
  return PccFunction(3, {-2.0, -3.0, -2.0, 1.0, -1.0, 2.0, 3.0, 2.0});
}

// ---------------------------------------------------------------------------
// Positive endpoint dimension by perturbation

namespace {

bool matches(BitSpan w, std::size_t at, BitSpan pattern, std::size_t from) {
  const std::size_t len = pattern.size() - from;
  return std::equal(pattern.begin() + static_cast<std::ptrdiff_t>(from), pattern.end(),
                    w.begin() + static_cast<std::ptrdiff_t>(at),
                    w.begin() + static_cast<std::ptrdiff_t>(at + len));
}

// w ∈ σ^{i k_A} C_m for some i < ℓ: w starts with the tail X[i k_A:] or
// Y[i k_A:], followed by m - 1 whole blocks from {X, Y}.
bool in_p(BitSpan w, const BinaryWord& x, const BinaryWord& y, std::size_t k_a, std::size_t ell, std::size_t m) {
  const std::size_t len = x.size();
  for (std::size_t i = 0; i < ell; ++i) {
    const std::size_t off = i * k_a;
    if (!matches(w, 0, x.bits(), off) && !matches(w, 0, y.bits(), off)) continue;
    std::size_t at = len - off;
    bool ok = true;
    for (std::size_t j = 1; j < m && ok; ++j, at += len) {
      ok = matches(w, at, x.bits(), 0) || matches(w, at, y.bits(), 0);
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool ConstructionT41::perturbed(BitSpan w) const {
  require(w.size() >= h.effective_depth(), "word shorter than the perturbation depth");
  return in_p(w, x, y, k_a, ell, m);
}

bool ell_feasible(std::size_t ell, std::size_t k_a, double spread, double eps) {
  const double l = static_cast<double>(ell);
  return l * eps / 8.0 > 5.0 * static_cast<double>(k_a) * spread && 32 * ell > 8 * (2 * ell + 5);
}

ConstructionT41 theorem41(const PccFunction& f, double eps, std::optional<std::size_t> ell_override) {
  require(eps > 0.0 && std::isfinite(eps), "epsilon must be positive");
  const WeightedDeBruijn g(f);
  const auto [lo, hi] = endpoints(f);
  require(hi - lo > 1e-12, "base function is degenerate: its spectrum support is a single point");

  const BinaryWord root = max_mean_cycle(g).witness.period();
  const std::size_t k = f.depth();
  const BinaryWord a = root.repeat(k / std::gcd(root.size(), k));
  const std::size_t k_a = a.size();
  const bool a_zero = std::all_of(a.bits().begin(), a.bits().end(), [](Bit v) { return v == 0; });
  const BinaryWord b = BinaryWord::constant(a_zero ? 1 : 0, k_a);

  const double spread = hi - f.alpha_min();
  std::size_t ell = 0;
  if (ell_override) {
    ell = *ell_override;
    require(ell_feasible(ell, k_a, spread, eps), "ell = " + std::to_string(ell) + " violates the size conditions");
  } else {
    const double guess = std::floor(40.0 * static_cast<double>(k_a) * spread / eps);
    ell = std::max<std::size_t>(3, static_cast<std::size_t>(std::max(0.0, guess)));
    while (ell > 3 && ell_feasible(ell - 1, k_a, spread, eps)) --ell;
    while (!ell_feasible(ell, k_a, spread, eps)) ++ell;
  }
  const std::size_t m = ell + 7;
  const BinaryWord x = a.repeat(2 * ell + 2) + b + a + a;
  const BinaryWord y = a.repeat(2 * ell + 1) + b + a + a + a;

  const double bump = eps / 4.0;
  SymbolFunction h(m * x.size(), [f, x, y, k_a, ell, m, bump](BitSpan w) {
    return f.evaluate(w) + (in_p(w, x, y, k_a, ell, m) ? bump : 0.0);
  });

  ConstructionT41 c{f, eps, a, b, k_a, ell, m, x, y, hi, f.alpha_min(), 0.0, h};
  const BinaryWord omega = t41_point(c, "XY", x.size() + h.effective_depth() - 1);
  c.b_star = finite_birkhoff_average(h, omega, x.size());
  return c;
}

BinaryWord t41_point(const ConstructionT41& c, const std::string& choices, std::size_t length) {
  require(!choices.empty(), "block choices must be nonempty");
  std::vector<Bit> bits;
  bits.reserve(length + c.x.size());
  for (std::size_t i = 0; bits.size() < length; ++i) {
    const char ch = choices[i % choices.size()];
    require(ch == 'X' || ch == 'Y', "block choices may only contain X and Y");
    const BinaryWord& block = ch == 'X' ? c.x : c.y;
    bits.insert(bits.end(), block.bits().begin(), block.bits().end());
  }
  bits.resize(length);
  return BinaryWord(std::move(bits));
}

Sp7aReport verify_sp7a(const ConstructionT41& c, const std::string& choices, std::size_t t_max) {
  const std::size_t len = c.block_length();
  const std::size_t depth = c.h.effective_depth();
  const BinaryWord omega = t41_point(c, choices, (t_max + 1) * len + depth - 1);
  const BitSpan bits = omega.bits();
  Sp7aReport r{true, true, true, std::numeric_limits<double>::infinity(), {}};
  for (std::size_t t = 0; t <= t_max; ++t) {
    std::vector<double> terms(len);
    for (std::size_t j = 0; j < len; ++j) terms[j] = c.h.evaluate(bits.subspan(t * len + j, depth));
    const double avg = compensated_sum(terms) / static_cast<double>(len);
    r.windows.push_back(avg);
    r.margin = std::min(r.margin, avg - c.threshold());
    r.exceeds = r.exceeds && avg > c.threshold();
    r.constant = r.constant && std::abs(avg - c.b_star) <= 1e-12;
  }
  r.pass = r.exceeds && r.constant;
  return r;
}

// ---------------------------------------------------------------------------
// Collapsing the upper endpoint dimension

PccFunction lemma45(const PccFunction& f, double eps, std::size_t m) {
  require(eps > 0.0, "epsilon must be positive");
  const BinaryWord star = max_mean_cycle(WeightedDeBruijn(f)).witness.period();
  const std::size_t p = star.size();
  require(m >= f.depth() + p, "truncation depth " + std::to_string(m) + " is below depth + period = " +
                                  std::to_string(f.depth() + p));
  require(m <= kMaxTableDepth, "truncation depth exceeds the table cap");
  std::vector<double> g0(std::size_t{1} << m);
  for (std::size_t idx = 0; idx < g0.size(); ++idx) {
    double best = 1.0;
    for (std::size_t i = 0; i < p; ++i) {
      double d = 0.0;
      for (std::size_t kk = 0; kk < m; ++kk) {
        const Bit w = static_cast<Bit>(idx >> (m - 1 - kk) & 1U);
        if (w != star[(i + kk) % p]) d += std::ldexp(1.0, -static_cast<int>(kk + 1));
      }
      best = std::min(best, d);
    }
    g0[idx] = best;
  }
  const PccFunction dist(m, std::move(g0));
  const double c = eps * dist.integrate();
  return f.refine(m) + (dist * -eps + c);
}

// ---------------------------------------------------------------------------
// Long-run indicators, staircases, majority examples

PccFunction lemma53(double a, double b, std::size_t l) {
  require(b > a, "lemma53 needs b > a");
  require(l >= 6 && l <= kMaxTableDepth, "lemma53 needs 6 <= L <= 24");
  std::vector<double> values(std::size_t{1} << l, a);
  values.back() = b;
  return PccFunction(l, std::move(values));
}

double StaircaseParams::threshold(std::size_t j) { return 1.0 - std::ldexp(1.0, -static_cast<int>(j)); }

void StaircaseParams::validate() const {
  require(!lengths.empty(), "staircase needs at least one level");
  require(lengths.front() > 5, "staircase needs L_1 > 5");
  for (std::size_t j = 1; j < lengths.size(); ++j) {
    require(lengths[j] > lengths[j - 1], "staircase run lengths must be strictly increasing");
  }
  require(!tau || *tau > 0.0, "tau must be positive");
}

namespace {

double staircase_value(BitSpan w, const std::vector<std::size_t>& lengths) {
  const Bit lead = w[0];
  std::size_t run = 1;
  while (run < w.size() && w[run] == lead) ++run;
  double v = 0.0;
  for (std::size_t j = 0; j < lengths.size(); ++j) {
    if (run >= lengths[j]) v = StaircaseParams::threshold(j + 1);
  }
  return lead == 1 ? v : -v;
}

}  // namespace

SymbolFunction theorem52(const StaircaseParams& params) {
  params.validate();
  const std::vector<std::size_t> lengths = params.lengths;
  return SymbolFunction(lengths.back(), [lengths](BitSpan w) { return staircase_value(w, lengths); });
}

PccFunction theorem52_table(const StaircaseParams& params) {
  params.validate();
  require(params.lengths.back() <= kStaircaseTableCap,
          "staircase depth " + std::to_string(params.lengths.back()) +
              " exceeds the table cap of 16; evaluate the function lazily instead");
  return theorem52(params).tabulate();
}

bool lchoice_holds(std::uint64_t l, std::size_t n, double tau) {
  const double lf = static_cast<double>(l);
  const double lhs = 2.0 / lf * std::log(std::numbers::e * lf / 2.0);
  const double rhs = tau / std::ldexp(1.0, 2 * static_cast<int>(n)) * std::numbers::ln2;
  return lhs < rhs;
}

std::uint64_t lchoice_selector(std::size_t n, double tau) {
  require(tau > 0.0, "tau must be positive");
  require(n <= 30, "level too large");
  // the left side decreases for L > 2, so the feasible set is a ray
  std::uint64_t lo = 5, hi = 6;
  while (!lchoice_holds(hi, n, tau)) {
    lo = hi;
    require(hi < (std::uint64_t{1} << 62), "no admissible L below 2^62");
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (lchoice_holds(mid, n, tau)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

PccFunction remark55_majority(std::size_t k) {
  require(k >= 1 && 2 * k + 1 <= kMaxTableDepth, "majority needs 1 <= k <= 11");
  const std::size_t depth = 2 * k + 1;
  std::vector<double> values(std::size_t{1} << depth);
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = static_cast<std::size_t>(std::popcount(i)) > k ? 1.0 : -1.0;
  }
  return PccFunction(depth, std::move(values));
}

PccFunction remark55_biased(std::size_t k) {
  require(k >= 1 && k <= kMaxTableDepth, "biased needs 1 <= k <= 24");
  std::vector<double> values(std::size_t{1} << k, 1.0 / (std::ldexp(1.0, static_cast<int>(k)) - 1.0));
  values.front() = -1.0;
  return PccFunction(k, std::move(values));
}

// ---------------------------------------------------------------------------
// Separating α*_max from α_max

Derevealed derevealize_detail(const PccFunction& f, double eps) {
  require(eps > 0.0, "epsilon must be positive");
  const std::size_t k = f.depth();
  const Node ones = (Node{1} << k) - 1;
  const double top = f.alpha_max();
  const double hi = endpoints(f).second;
  const bool revealed = std::abs(top - hi) <= 1e-12 * std::max(1.0, f.sup_norm());

  auto bump = [&](const PccFunction& base, Node idx) {
    std::vector<double> v = base.values();
    v[idx] += eps;
    return PccFunction(base.depth(), std::move(v));
  };

  if (!revealed) {
    // a maximal cell cannot be constant here, or its fixed point would reach α_max
    const auto it = std::max_element(f.values().begin(), f.values().end());
    const Node idx = static_cast<Node>(it - f.values().begin());
    return {bump(f, idx), BinaryWord::from_index(idx, k), false};
  }
  const Subgraph tight = tight_subgraph(WeightedDeBruijn(f), Side::kMax);
  for (Node u : tight.nodes) {
    if (u != 0 && u != ones) return {bump(f, u), BinaryWord::from_index(u, k), false};
  }
  // only constant orbits maximize: A = 1^k 0, or 0^k 1 if 1^∞ does not
  const bool use_ones = std::binary_search(tight.nodes.begin(), tight.nodes.end(), ones);
  const BinaryWord a = BinaryWord::constant(use_ones ? 1 : 0, k) + BinaryWord::constant(use_ones ? 0 : 1, 1);
  return {bump(f.refine(k + 1), a.index()), a, true};
}

PccFunction derevealize(const PccFunction& f, double eps) { return derevealize_detail(f, eps).g; }

}  // namespace birkhoff
