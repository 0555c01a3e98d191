#include "birkhoff/pcc_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "birkhoff/errors.hpp"

namespace birkhoff {

PccFunction::PccFunction(std::size_t depth, std::vector<double> values)
    : depth_(depth), values_(std::move(values)) {
  require(depth_ >= 1, "PCC depth must be positive");
  require(depth_ <= kMaxTableDepth, "PCC depth " + std::to_string(depth_) + " exceeds table cap " +
                                        std::to_string(kMaxTableDepth));
  require(values_.size() == (std::size_t{1} << depth_),
          "PCC table must have exactly 2^depth = " + std::to_string(std::size_t{1} << depth_) +
              " values, got " + std::to_string(values_.size()));
  for (double v : values_) require(std::isfinite(v), "PCC values must be finite");
}

PccFunction PccFunction::constant(double value, std::size_t depth) {
  require(depth >= 1 && depth <= kMaxTableDepth, "constant function depth out of range");
  return PccFunction(depth, std::vector<double>(std::size_t{1} << depth, value));
}

double PccFunction::evaluate(BitSpan word) const {
  require(word.size() >= depth_, "word of length " + std::to_string(word.size()) +
                                     " is shorter than function depth " + std::to_string(depth_));
  return values_[prefix_index(word, depth_)];
}

double PccFunction::alpha_min() const { return *std::min_element(values_.begin(), values_.end()); }
double PccFunction::alpha_max() const { return *std::max_element(values_.begin(), values_.end()); }

double PccFunction::sup_norm() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double PccFunction::integrate() const {
  return compensated_sum(values_) / static_cast<double>(values_.size());
}

PccFunction PccFunction::refine(std::size_t m) const {
  require(m >= depth_, "refine depth " + std::to_string(m) + " is below function depth " + std::to_string(depth_));
  if (m == depth_) return *this;
  require(m <= kMaxTableDepth, "refine depth exceeds table cap");
  const std::size_t extra = m - depth_;
  std::vector<double> out(std::size_t{1} << m);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i >> extra];
  return PccFunction(m, std::move(out));
}

PccFunction PccFunction::operator-() const { return *this * -1.0; }

PccFunction PccFunction::operator+(double c) const {
  std::vector<double> out(values_);
  for (double& v : out) v += c;
  return PccFunction(depth_, std::move(out));
}

PccFunction PccFunction::operator*(double c) const {
  std::vector<double> out(values_);
  for (double& v : out) v *= c;
  return PccFunction(depth_, std::move(out));
}

PccFunction PccFunction::operator+(const PccFunction& other) const {
  const std::size_t m = std::max(depth_, other.depth_);
  PccFunction a = refine(m);
  const PccFunction b = other.refine(m);
  for (std::size_t i = 0; i < a.values_.size(); ++i) a.values_[i] += b.values_[i];
  return a;
}

PccFunction PccFunction::operator-(const PccFunction& other) const { return *this + (-other); }

double sup_distance(const PccFunction& f, const PccFunction& g) { return (f - g).sup_norm(); }

double compensated_sum(const std::vector<double>& values) {
  double sum = 0.0;
  double carry = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

}  // namespace birkhoff
