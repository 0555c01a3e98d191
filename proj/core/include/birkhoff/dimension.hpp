#pragma once

#include <vector>

#include "birkhoff/word.hpp"

namespace birkhoff {

/// Distinct blocks that either share one length or form a prefix-free set,
/// so that {blocks}^∞ is a self-similar set with disjoint pieces.
class BlockAlphabet {
 public:
  explicit BlockAlphabet(std::vector<BinaryWord> blocks);

  const std::vector<BinaryWord>& blocks() const noexcept { return blocks_; }

 private:
  std::vector<BinaryWord> blocks_;
};

/// The s >= 0 solving Σ 2^{-|w|s} = 1.
double moran_dimension(const BlockAlphabet& blocks);

/// Binary entropy of α in bits.
double eggleston_dimension(double alpha);

}  // namespace birkhoff
