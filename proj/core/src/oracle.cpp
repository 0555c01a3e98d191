#include "birkhoff/oracle.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "birkhoff/birkhoff_sum.hpp"
#include "birkhoff/constructions.hpp"
#include "birkhoff/debruijn.hpp"
#include "birkhoff/errors.hpp"

namespace birkhoff {

std::vector<std::pair<PeriodicPoint, double>> enumerate_cycle_means(const PccFunction& f, std::size_t max_period) {
  require(f.depth() <= 4, "cycle enumeration is capped at depth 4");
  require(max_period >= 1 && max_period <= (std::size_t{1} << f.depth()),
          "max period must lie in [1, 2^depth]");
  std::vector<std::pair<PeriodicPoint, double>> out;
  for (std::size_t p = 1; p <= max_period; ++p) {
    const std::uint64_t mask = (std::uint64_t{1} << p) - 1;
    auto rotl = [&](std::uint64_t x, std::size_t r) { return ((x << r) | (x >> (p - r))) & mask; };
    for (std::uint64_t idx = 0; idx <= mask; ++idx) {
      // canonical and primitive iff every proper rotation is strictly larger
      bool canonical = true;
      for (std::size_t r = 1; r < p && canonical; ++r) canonical = rotl(idx, r) > idx;
      if (!canonical) continue;
      PeriodicPoint pt(BinaryWord::from_index(idx, p));
      const double mean = periodic_birkhoff_average(f, pt);
      out.emplace_back(std::move(pt), mean);
    }
  }
  return out;
}

namespace {

// Visits every word of length N + D - 1, calling `leaf` with its Birkhoff
// sum over N windows. Sums are accumulated left to right.
template <class Leaf>
void for_each_sum(const PccFunction& f, std::size_t n, Leaf&& leaf) {
  const std::size_t d = f.depth();
  const std::uint64_t window_mask = (std::uint64_t{1} << d) - 1;
  const std::uint64_t state_mask = (std::uint64_t{1} << (d - 1)) - 1;
  const std::vector<double>& v = f.values();
  auto dfs = [&](auto&& self, std::size_t step, std::uint64_t state, double sum) -> void {
    if (step == n) {
      leaf(sum);
      return;
    }
    for (std::uint64_t b = 0; b < 2; ++b) {
      const std::uint64_t window = ((state << 1) | b) & window_mask;
      self(self, step + 1, window & state_mask, sum + v[window]);
    }
  };
  for (std::uint64_t prefix = 0; prefix <= state_mask; ++prefix) dfs(dfs, 0, prefix, 0.0);
}

constexpr double kSlack = 1e-12;

}  // namespace

std::uint64_t counting_words(const PccFunction& f, double alpha, double delta, std::size_t n) {
  require(n >= 1, "N must be positive");
  require(delta >= 0.0, "delta must be nonnegative");
  require(n + f.depth() - 1 <= kCountingCap, "N + depth - 1 exceeds the enumeration cap of 24");
  std::uint64_t count = 0;
  const double nn = static_cast<double>(n);
  for_each_sum(f, n, [&](double sum) {
    if (std::abs(sum / nn - alpha) <= delta + kSlack) ++count;
  });
  return count;
}

double counting_lambda(const PccFunction& f, double alpha, double delta, std::size_t n) {
  const std::uint64_t count = counting_words(f, alpha, delta, n);
  if (count == 0) return -std::numeric_limits<double>::infinity();
  return std::log(static_cast<double>(count)) / (static_cast<double>(n) * std::log(2.0));
}

CoverReport lemma53_cover_check(double a, double b, std::size_t l, double beta, std::size_t n, double eps) {
  require(l >= 6, "cover check needs L >= 6");
  require(n >= 1, "N must be positive");
  const std::size_t len = n + l - 1;
  require(len % l == 0, "L must divide N + L - 1");
  require(len <= kCountingCap, "N + L - 1 exceeds the enumeration cap of 24");
  const double beta_star = beta + eps / 2.0;
  require(beta_star >= 0.0 && beta_star <= 1.0, "beta + eps/2 must lie in [0,1]");

  const PccFunction f = lemma53(a, b, l);
  CoverReport r{};
  r.threshold = beta_star * a + (1.0 - beta_star) * b;
  const double nn = static_cast<double>(n);
  for_each_sum(f, n, [&](double sum) {
    if (sum / nn >= r.threshold - kSlack) ++r.exact_count;
  });
  const std::size_t kk = 2 * len / l;
  double binom = 1.0;
  for (std::size_t i = 1; i <= kk; ++i) binom = binom * static_cast<double>(len - kk + i) / static_cast<double>(i);
  r.bound = static_cast<double>(len) * binom * std::exp2(beta_star * nn + static_cast<double>(l) - 1.0);
  r.pass = static_cast<double>(r.exact_count) <= r.bound;
  return r;
}

std::uint64_t uniform_N0(const PccFunction& f, double eps) {
  require(eps > 0.0, "epsilon must be positive");
  const double k = static_cast<double>(f.depth());
  const double top = endpoints(f).second;
  const double rhs = k * (f.sup_norm() + top + eps / 2.0);
  // the estimate holds exactly when N ε/2 > rhs
  auto holds = [&](std::uint64_t nn) { return static_cast<double>(nn) * eps / 2.0 > rhs; };
  std::uint64_t n0 = static_cast<std::uint64_t>(std::max(0.0, std::floor(2.0 * rhs / eps)));
  while (!holds(n0 + 1)) ++n0;
  while (n0 > 0 && holds(n0)) --n0;
  return n0;
}

namespace {

class BitStream {
 public:
  explicit BitStream(std::uint64_t seed) : engine_(seed) {}
  Bit next() {
    if (left_ == 0) {
      word_ = engine_();
      left_ = 64;
    }
    const Bit b = static_cast<Bit>(word_ & 1U);
    word_ >>= 1;
    --left_;
    return b;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t word_ = 0;
  int left_ = 0;
};

}  // namespace

BinaryWord random_word(std::uint64_t seed, std::size_t length) {
  BitStream stream(seed);
  std::vector<Bit> bits(length);
  for (Bit& b : bits) b = stream.next();
  return BinaryWord(std::move(bits));
}

N0Report uniform_N0_check(const PccFunction& f, double eps, std::size_t words, std::uint64_t seed) {
  N0Report r{uniform_N0(f, eps), true, -std::numeric_limits<double>::infinity()};
  const double limit = endpoints(f).second + eps;
  const std::size_t longest = r.n0 + 32;
  const std::size_t d = f.depth();
  BitStream stream(seed);
  std::vector<Bit> bits(longest + d - 1);
  for (std::size_t w = 0; w < words; ++w) {
    for (Bit& b : bits) b = stream.next();
    const BitSpan span(bits);
    double sum = 0.0;
    for (std::size_t i = 0; i < longest; ++i) {
      sum += f.evaluate(span.subspan(i, d));
      if (i + 1 > r.n0) {
        const double excess = sum / static_cast<double>(i + 1) - limit;
        r.worst_excess = std::max(r.worst_excess, excess);
        if (excess > kSlack) r.pass = false;
      }
    }
  }
  return r;
}

std::vector<double> sample_trajectory(const SymbolFunction& f, std::uint64_t seed, std::size_t n) {
  require(n >= 1, "N must be positive");
  const std::size_t d = f.effective_depth();
  const BinaryWord w = random_word(seed, n + d - 1);
  const BitSpan span = w.bits();
  std::vector<double> out(n);
  double sum = 0.0, carry = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = f.evaluate(span.subspan(i, d));
    const double t = sum + v;
    carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
    out[i] = (sum + carry) / static_cast<double>(i + 1);
  }
  return out;
}

}  // namespace birkhoff
