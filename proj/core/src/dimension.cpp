#include "birkhoff/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "birkhoff/errors.hpp"

namespace birkhoff {

namespace {

bool is_prefix(const BinaryWord& a, const BinaryWord& b) {
  return a.size() <= b.size() && std::equal(a.bits().begin(), a.bits().end(), b.bits().begin());
}

}  // namespace

BlockAlphabet::BlockAlphabet(std::vector<BinaryWord> blocks) : blocks_(std::move(blocks)) {
  require(!blocks_.empty(), "block alphabet must be nonempty");
  for (const auto& b : blocks_) require(!b.empty(), "blocks must be nonempty words");
  const std::set<BinaryWord> unique(blocks_.begin(), blocks_.end());
  require(unique.size() == blocks_.size(), "blocks must be pairwise distinct");
  const bool same_length = std::all_of(blocks_.begin(), blocks_.end(),
                                       [&](const BinaryWord& b) { return b.size() == blocks_.front().size(); });
  if (same_length) return;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
      require(i == j || !is_prefix(blocks_[i], blocks_[j]),
              "separation violated: " + blocks_[i].to_string() + " is a prefix of " + blocks_[j].to_string());
    }
  }
}

double moran_dimension(const BlockAlphabet& alphabet) {
  const auto& blocks = alphabet.blocks();
  if (blocks.size() == 1) return 0.0;
  auto excess = [&](double s) {
    double sum = 0.0;
    for (const auto& b : blocks) sum += std::exp2(-static_cast<double>(b.size()) * s);
    return sum - 1.0;
  };
  double lo = 0.0;
  double hi = 1.0 + std::log2(static_cast<double>(blocks.size()));
  // the sum is decreasing in s; bisect down to adjacent doubles
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (excess(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double eggleston_dimension(double alpha) {
  require(alpha >= 0.0 && alpha <= 1.0, "frequency " + std::to_string(alpha) + " is outside [0,1]");
  auto term = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
  return term(alpha) + term(1.0 - alpha);
}

}  // namespace birkhoff
