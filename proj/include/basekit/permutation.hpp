#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace basekit {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1} stored as its image sequence.
///
/// Composition follows the right-action convention used throughout the
/// library: `compose(p, q)` applies `p` first, then `q`, so that
/// `x^(pq) = (x^p)^q`. Cosets are right cosets `H*g`.
class Permutation {
 public:
  Permutation() = default;

  /// Throws HypothesisError unless `images` is a bijection of 0..n-1.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// x^-1 * this * x.
  Permutation conjugate_by(const Permutation& x) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::vector<Point> images_;
};

/// Apply p, then q. Throws HypothesisError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// Parses disjoint cycles of 1-based labels, e.g. "(1 2 3)(4 5)".
/// The empty string and "()" denote the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Disjoint-cycle notation with 1-based labels; the identity prints as "()".
std::string format_cycles(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

}  // namespace basekit
