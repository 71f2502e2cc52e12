#include "basekit/catalog.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <variant>

#include "basekit/error.hpp"
#include "basekit/wreath.hpp"

namespace basekit {

namespace {

constexpr std::size_t kMaxDegree = 4096;

void check_range(std::string_view what, std::size_t n, std::size_t lo) {
  if (n < lo || n > kMaxDegree) {
    throw ParseError(std::string(what) + "(" + std::to_string(n) + "): n out of supported range " +
                     std::to_string(lo) + ".." + std::to_string(kMaxDegree));
  }
}

Permutation cycle_on(std::size_t degree, std::initializer_list<std::size_t> points) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  const std::vector<std::size_t> pts(points);
  for (std::size_t i = 0; i < pts.size(); ++i) images[pts[i]] = static_cast<Point>(pts[(i + 1) % pts.size()]);
  return Permutation(std::move(images));
}

Permutation full_cycle(std::size_t degree, std::size_t from, std::size_t len) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < len; ++i) images[from + i] = static_cast<Point>(from + (i + 1) % len);
  return Permutation(std::move(images));
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Recursive-descent parser for catalog specs.
class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  Group parse_all() {
    Group g = parse_spec();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return g;
  }

 private:
  using Arg = std::variant<std::size_t, Group>;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("catalog spec '" + std::string(text_) + "': " + why + " at offset " +
                     std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string name() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a group name");
    return std::string(text_.substr(start, pos_ - start));
  }

  Arg arg() {
    skip_space();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
      if (ec != std::errc{}) fail("bad integer");
      pos_ = static_cast<std::size_t>(ptr - text_.data());
      return v;
    }
    return parse_spec();
  }

  static std::size_t as_int(const Arg& a, const std::string& who) {
    if (auto* v = std::get_if<std::size_t>(&a)) return *v;
    throw ParseError(who + ": expected an integer argument");
  }

  static const Group& as_group(const Arg& a, const std::string& who) {
    if (auto* g = std::get_if<Group>(&a)) return *g;
    throw ParseError(who + ": expected a group argument");
  }

  Group parse_spec() {
    const std::string id = name();
    std::vector<Arg> args;
    expect('(');
    if (!accept(')')) {
      do {
        args.push_back(arg());
      } while (accept(','));
      expect(')');
    }
    auto want = [&](std::size_t count) {
      if (args.size() != count) {
        throw ParseError(id + ": expected " + std::to_string(count) + " argument(s), got " +
                         std::to_string(args.size()));
      }
    };

    if (id == "sym") return want(1), symmetric_group(as_int(args[0], id));
    if (id == "alt") return want(1), alternating_group(as_int(args[0], id));
    if (id == "cyc") return want(1), cyclic_group(as_int(args[0], id));
    if (id == "dih") return want(1), dihedral_group(as_int(args[0], id));
    if (id == "agl") return want(1), affine_line_group(as_int(args[0], id));
    if (id == "young") {
      if (args.empty()) throw ParseError("young: expected at least one part");
      std::vector<std::size_t> parts;
      for (const auto& a : args) parts.push_back(as_int(a, id));
      return young_subgroup(parts);
    }
    if (id == "young-wreath") {
      want(2);
      return wreath_product(symmetric_group(as_int(args[0], id)), symmetric_group(as_int(args[1], id)));
    }
    if (id == "wreath") {
      want(2);
      return wreath_product(as_group(args[0], id), as_group(args[1], id));
    }
    if (id == "embed") {
      want(2);
      return embed(as_group(args[0], id), as_int(args[1], id));
    }
    if (id == "stab") {
      want(2);
      const Group& g = as_group(args[0], id);
      const std::size_t i = as_int(args[1], id);
      if (i == 0 || i > g.degree()) throw ParseError("stab: point out of range");
      return g.stabilizer(static_cast<Point>(i - 1));
    }
    throw ParseError("unknown group name '" + id + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Group symmetric_group(std::size_t n) {
  check_range("sym", n, 1);
  if (n == 1) return Group::trivial(1);
  if (n == 2) return Group(2, {cycle_on(2, {0, 1})});
  return Group(n, {full_cycle(n, 0, n), cycle_on(n, {0, 1})});
}

Group alternating_group(std::size_t n) {
  check_range("alt", n, 1);
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) gens.push_back(cycle_on(n, {0, 1, i}));
  return Group(n, std::move(gens));
}

Group cyclic_group(std::size_t n) {
  check_range("cyc", n, 1);
  return Group(n, {full_cycle(n, 0, n)});
}

Group dihedral_group(std::size_t n) {
  check_range("dih", n, 3);
  std::vector<Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<Point>((n - i) % n);
  return Group(n, {full_cycle(n, 0, n), Permutation(std::move(reflection))});
}

Group young_subgroup(std::span<const std::size_t> parts) {
  std::size_t n = 0;
  for (auto a : parts) {
    if (a == 0) throw ParseError("young: parts must be positive");
    n += a;
  }
  check_range("young", n, 1);
  std::vector<Permutation> gens;
  std::size_t from = 0;
  for (auto a : parts) {
    if (a >= 2) gens.push_back(full_cycle(n, from, a));
    if (a >= 3) gens.push_back(cycle_on(n, {from, from + 1}));
    from += a;
  }
  return Group(n, std::move(gens));
}

Group affine_line_group(std::size_t p) {
  check_range("agl", p, 2);
  if (!is_prime(p)) throw ParseError("agl(" + std::to_string(p) + "): p must be prime");
  // A primitive root generates the multiplicative group.
  std::size_t root = 1;
  for (std::size_t a = 1; a < p; ++a) {
    std::size_t x = 1, ord = 0;
    do {
      x = x * a % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) {
      root = a;
      break;
    }
  }
  std::vector<Point> mult(p);
  for (std::size_t x = 0; x < p; ++x) mult[x] = static_cast<Point>(x * root % p);
  return Group(p, {full_cycle(p, 0, p), Permutation(std::move(mult))});
}

Group embed(const Group& g, std::size_t n) {
  if (n < g.degree()) throw ParseError("embed: target degree smaller than the group degree");
  check_range("embed", n, 1);
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) {
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = i < g.degree() ? x[i] : static_cast<Point>(i);
    gens.emplace_back(std::move(images));
  }
  return Group(n, std::move(gens), g.cap());
}

Group catalog(std::string_view spec) { return SpecParser(spec).parse_all(); }

Group parse_group_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword)) continue;
    std::string rest;
    std::getline(words, rest);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (keyword == "degree") {
      if (degree) throw ParseError(where + "duplicate degree line");
      std::size_t d = 0;
      std::istringstream num(rest);
      std::string extra;
      if (!(num >> d) || (num >> extra) || d == 0 || d > kMaxDegree) {
        throw ParseError(where + "bad degree '" + rest + "'");
      }
      degree = d;
    } else if (keyword == "gen") {
      if (!degree) throw ParseError(where + "'gen' before 'degree'");
      try {
        gens.push_back(parse_cycles(rest, *degree));
      } catch (const ParseError& e) {
        throw ParseError(where + e.what());
      }
    } else {
      throw ParseError(where + "unknown keyword '" + keyword + "'");
    }
  }
  if (!degree) throw ParseError("group file has no 'degree' line");
  return Group(*degree, std::move(gens));
}

Group load_group(const std::string& source) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_group_file(buf.str());
  }
  return catalog(source);
}

}  // namespace basekit
