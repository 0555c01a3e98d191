#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "birkhoff/word.hpp"

namespace birkhoff {

/// Largest depth for which a value table is materialized (2^24 doubles).
inline constexpr std::size_t kMaxTableDepth = 24;

/// A locally constant potential of depth k, stored as its values on the
/// 2^k cylinders of length k in index order.
class PccFunction {
 public:
  PccFunction(std::size_t depth, std::vector<double> values);

  static PccFunction constant(double value, std::size_t depth = 1);

  std::size_t depth() const noexcept { return depth_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<double>& values() const noexcept { return values_; }
  double operator[](std::uint64_t index) const { return values_[index]; }

  /// Value on the cylinder [w|depth]; requires |w| >= depth.
  double evaluate(BitSpan word) const;

  double alpha_min() const;
  double alpha_max() const;
  /// sup-norm ‖f‖.
  double sup_norm() const;
  /// ∫ f dλ for the uniform Bernoulli measure.
  double integrate() const;

  /// The same function tabulated at depth m >= depth.
  PccFunction refine(std::size_t m) const;

  PccFunction operator-() const;
  PccFunction operator+(double c) const;
  PccFunction operator*(double c) const;
  /// Pointwise sum on the common refinement.
  PccFunction operator+(const PccFunction& other) const;
  PccFunction operator-(const PccFunction& other) const;

  bool operator==(const PccFunction&) const = default;

 private:
  std::size_t depth_;
  std::vector<double> values_;
};

/// sup |f - g| computed on the common refinement.
double sup_distance(const PccFunction& f, const PccFunction& g);

/// Table-order sum with Neumaier compensation.
double compensated_sum(const std::vector<double>& values);

}  // namespace birkhoff
