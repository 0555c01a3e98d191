#include "birkhoff/symbol_function.hpp"

#include <string>

#include "birkhoff/errors.hpp"

namespace birkhoff {

SymbolFunction::SymbolFunction(PccFunction table)
    : depth_(table.depth()), table_(std::make_shared<const PccFunction>(std::move(table))) {}

SymbolFunction::SymbolFunction(std::size_t effective_depth, Rule rule)
    : depth_(effective_depth), rule_(std::move(rule)) {
  require(depth_ >= 1, "symbol function depth must be positive");
  require(static_cast<bool>(rule_), "symbol function rule must be callable");
}

double SymbolFunction::evaluate(BitSpan word) const {
  require(word.size() >= depth_, "word of length " + std::to_string(word.size()) +
                                     " is shorter than effective depth " + std::to_string(depth_));
  if (table_) return table_->evaluate(word);
  return rule_(word.first(depth_));
}

PccFunction SymbolFunction::tabulate() const {
  if (table_) return *table_;
  require(depth_ <= kMaxTableDepth, "effective depth " + std::to_string(depth_) +
                                        " is too large to tabulate; evaluate lazily instead");
  std::vector<double> values(std::size_t{1} << depth_);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const BinaryWord w = BinaryWord::from_index(i, depth_);
    values[i] = rule_(w.bits());
  }
  return PccFunction(depth_, std::move(values));
}

double integrate(const SymbolFunction& f) {
  if (const PccFunction* t = f.table()) return t->integrate();
  return f.tabulate().integrate();
}

}  // namespace birkhoff
