#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace basekit {

/// Fixed-length bit vector used as a subset of an indexed element list.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits, bool value = false)
      : bits_(bits), words_((bits + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    trim();
  }

  std::size_t size() const noexcept { return bits_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const std::uint64_t* data() const noexcept { return words_.data(); }
  std::uint64_t* data() noexcept { return words_.data(); }

  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Only bit 0 may be set.
  bool at_most_first() const noexcept {
    if (words_.empty()) return true;
    if (words_[0] & ~std::uint64_t{1}) return false;
    for (std::size_t i = 1; i < words_.size(); ++i) {
      if (words_[i]) return false;
    }
    return true;
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  /// out = a & b, all three of equal length.
  static void intersect(const Bitset& a, const Bitset& b, Bitset& out) noexcept {
    for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] = a.words_[i] & b.words_[i];
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  void trim() noexcept {
    if (bits_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
  }

  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace basekit
