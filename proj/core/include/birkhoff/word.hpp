#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace birkhoff {

using Bit = std::uint8_t;
using BitSpan = std::span<const Bit>;

/// A finite word over {0,1}. The first symbol is the most significant bit
/// of the word's table index.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<Bit> bits);

  static BinaryWord from_string(std::string_view text);
  /// The length-`length` word whose index is `index`.
  static BinaryWord from_index(std::uint64_t index, std::size_t length);
  static BinaryWord constant(Bit symbol, std::size_t length);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  Bit operator[](std::size_t i) const { return bits_[i]; }
  BitSpan bits() const noexcept { return bits_; }
  operator BitSpan() const noexcept { return bits_; }

  /// Σ w_i 2^{k-i}; requires size() <= 63.
  std::uint64_t index() const;
  std::string to_string() const;

  BinaryWord conjugate() const;
  BinaryWord repeat(std::size_t times) const;
  BinaryWord prefix(std::size_t length) const;
  BinaryWord rotate(std::size_t shift) const;
  BinaryWord operator+(const BinaryWord& other) const;

  /// Length of the shortest root r with this == r^n.
  std::size_t primitive_period() const;
  /// Lexicographically minimal rotation of the primitive root.
  BinaryWord canonical_cycle() const;

  auto operator<=>(const BinaryWord&) const = default;

 private:
  std::vector<Bit> bits_;
};

/// ω = period^∞.
class PeriodicPoint {
 public:
  explicit PeriodicPoint(BinaryWord period);

  const BinaryWord& period() const noexcept { return period_; }
  std::size_t length() const noexcept { return period_.size(); }
  PeriodicPoint canonical() const { return PeriodicPoint(period_.canonical_cycle()); }

  /// The first `length` symbols of the orbit point σ^shift ω.
  BinaryWord unroll(std::size_t length, std::size_t shift = 0) const;

  auto operator<=>(const PeriodicPoint&) const = default;

 private:
  BinaryWord period_;
};

/// Index of the first `depth` symbols of `bits`.
std::uint64_t prefix_index(BitSpan bits, std::size_t depth);

}  // namespace birkhoff
