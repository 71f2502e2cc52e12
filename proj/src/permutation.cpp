#include "basekit/permutation.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "basekit/error.hpp"

namespace basekit {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Point x = images_[i];
    if (x >= images_.size() || seen[x]) {
      throw HypothesisError("image sequence is not a bijection at position " +
                            std::to_string(i));
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::conjugate_by(const Permutation& x) const {
  // x^-1 * p * x maps x(i) to x(p(i)).
  if (x.degree() != degree()) throw HypothesisError("conjugate_by: degree mismatch");
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[x.images_[i]] = x.images_[images_[i]];
  return Permutation(std::move(out), Unchecked{});
}

std::size_t Permutation::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ images_.size();
  for (Point x : images_) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw HypothesisError("compose: degree mismatch (" + std::to_string(p.degree()) + " vs " +
                          std::to_string(q.degree()) + ")");
  }
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = q.images_[p.images_[i]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::vector<Point> cycle;
  bool open = false;
  std::size_t i = 0;

  auto close_cycle = [&] {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      images[cycle[j]] = cycle[(j + 1) % cycle.size()];
    }
    cycle.clear();
  };

  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (c == '(') {
      if (open) throw ParseError("nested '(' at offset " + std::to_string(i));
      open = true;
      ++i;
    } else if (c == ')') {
      if (!open) throw ParseError("unmatched ')' at offset " + std::to_string(i));
      close_cycle();
      open = false;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      const std::string_view token = text.substr(i, j - i);
      if (!open) throw ParseError("label '" + std::string(token) + "' outside a cycle");
      std::uint64_t label = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), label);
      if (ec != std::errc{} || label == 0 || label > degree) {
        throw ParseError("label '" + std::string(token) + "' out of range 1.." +
                         std::to_string(degree));
      }
      const Point p = static_cast<Point>(label - 1);
      if (used[p]) throw ParseError("repeated label '" + std::string(token) + "'");
      used[p] = true;
      cycle.push_back(p);
      i = j;
    } else {
      throw ParseError("unexpected token '" + std::string(1, c) + "' at offset " +
                       std::to_string(i));
    }
  }
  if (open) throw ParseError("unterminated cycle: missing ')'");
  return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& p) {
  std::ostringstream out;
  std::vector<bool> done(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (done[start] || p[start] == start) continue;
    out << '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out << ' ';
      out << (x + 1);
      first = false;
      x = p[x];
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

}  // namespace basekit
