#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>

#include "birkhoff/pcc_function.hpp"
#include "birkhoff/word.hpp"

namespace birkhoff {

/// A potential that depends only on the first `effective_depth()` symbols.
/// Either backed by a PccFunction table or by a procedural rule, for
/// functions whose depth is far too large to tabulate.
class SymbolFunction {
 public:
  using Rule = std::function<double(BitSpan)>;

  SymbolFunction(PccFunction table);  // NOLINT(google-explicit-constructor)
  SymbolFunction(std::size_t effective_depth, Rule rule);

  std::size_t effective_depth() const noexcept { return depth_; }
  bool is_tabulated() const noexcept { return table_ != nullptr; }
  /// The backing table, when there is one.
  const PccFunction* table() const noexcept { return table_.get(); }

  /// Value on [w|depth]; throws PreconditionError if |w| < depth.
  double evaluate(BitSpan word) const;

  /// Tabulates the function (depth must be within kMaxTableDepth).
  PccFunction tabulate() const;

 private:
  std::size_t depth_;
  std::shared_ptr<const PccFunction> table_;
  Rule rule_;
};

/// ∫ f dλ = 2^{-D} Σ_{|w|=D} f(w).
double integrate(const SymbolFunction& f);

}  // namespace birkhoff
