#include "birkhoff/word.hpp"

#include <algorithm>

#include "birkhoff/errors.hpp"

namespace birkhoff {

BinaryWord::BinaryWord(std::vector<Bit> bits) : bits_(std::move(bits)) {
  for (Bit b : bits_) require(b <= 1, "binary word symbols must be 0 or 1");
}

BinaryWord BinaryWord::from_string(std::string_view text) {
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (char c : text) {
    require(c == '0' || c == '1', "binary word may only contain '0' and '1'");
    bits.push_back(static_cast<Bit>(c - '0'));
  }
  return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::from_index(std::uint64_t index, std::size_t length) {
  require(length <= 63, "word length exceeds index range");
  require(length == 63 || index < (std::uint64_t{1} << length), "index out of range for word length");
  std::vector<Bit> bits(length);
  for (std::size_t i = 0; i < length; ++i) bits[i] = static_cast<Bit>((index >> (length - 1 - i)) & 1U);
  return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::constant(Bit symbol, std::size_t length) {
  return BinaryWord(std::vector<Bit>(length, symbol));
}

std::uint64_t BinaryWord::index() const { return prefix_index(bits_, bits_.size()); }

std::string BinaryWord::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = static_cast<char>('0' + bits_[i]);
  return out;
}

BinaryWord BinaryWord::conjugate() const {
  std::vector<Bit> bits(bits_);
  for (Bit& b : bits) b ^= 1U;
  return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::repeat(std::size_t times) const {
  std::vector<Bit> bits;
  bits.reserve(bits_.size() * times);
  for (std::size_t t = 0; t < times; ++t) bits.insert(bits.end(), bits_.begin(), bits_.end());
  return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::prefix(std::size_t length) const {
  require(length <= bits_.size(), "prefix longer than word");
  return BinaryWord(std::vector<Bit>(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(length)));
}

BinaryWord BinaryWord::rotate(std::size_t shift) const {
  if (bits_.empty()) return *this;
  std::vector<Bit> bits(bits_);
  std::rotate(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(shift % bits.size()), bits.end());
  return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::operator+(const BinaryWord& other) const {
  std::vector<Bit> bits(bits_);
  bits.insert(bits.end(), other.bits_.begin(), other.bits_.end());
  return BinaryWord(std::move(bits));
}

std::size_t BinaryWord::primitive_period() const {
  const std::size_t n = bits_.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = bits_[i] == bits_[i - d];
    if (periodic) return d;
  }
  return n;
}

BinaryWord BinaryWord::canonical_cycle() const {
  const BinaryWord root = prefix(primitive_period());
  BinaryWord best = root;
  for (std::size_t s = 1; s < root.size(); ++s) best = std::min(best, root.rotate(s));
  return best;
}

PeriodicPoint::PeriodicPoint(BinaryWord period) : period_(std::move(period)) {
  require(!period_.empty(), "periodic point needs a nonempty period word");
}

BinaryWord PeriodicPoint::unroll(std::size_t length, std::size_t shift) const {
  std::vector<Bit> bits(length);
  const std::size_t p = period_.size();
  for (std::size_t i = 0; i < length; ++i) bits[i] = period_[(i + shift) % p];
  return BinaryWord(std::move(bits));
}

std::uint64_t prefix_index(BitSpan bits, std::size_t depth) {
  require(depth <= 63, "depth exceeds index range");
  require(bits.size() >= depth, "word shorter than depth");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < depth; ++i) idx = (idx << 1) | bits[i];
  return idx;
}

}  // namespace birkhoff
