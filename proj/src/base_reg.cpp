#include "basekit/base_reg.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "basekit/error.hpp"
#include "basekit/group_struct.hpp"

namespace basekit {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > kSaturated / base) return kSaturated;
    r *= base;
  }
  return r;
}

struct Partial {
  std::uint64_t regular = 0;   // tuples with trivial H-stabilizer
  std::uint64_t stab_sum = 0;  // sum of |Stab_H(t)| over all tuples
  std::uint64_t nodes = 0;
};

// Depth-first scan of Omega^len under the point stabilizer H of point 0,
// intersecting per-point stabilizer masks coordinate by coordinate. Once a
// prefix has trivial stabilizer, every extension is regular and is counted
// without being visited.
class TupleScan {
 public:
  TupleScan(const ActionImage& image, std::size_t len)
      : image_(image),
        n_(image.group().degree()),
        len_(len),
        full_(image.stabilizer_elements().size(), true),
        buffers_(len, Bitset(image.stabilizer_elements().size())) {
    powers_.resize(len + 1);
    for (std::size_t i = 0; i <= len; ++i) powers_[i] = saturating_pow(n_, i);
  }

  const Bitset& full() const noexcept { return full_; }

  // Scans every tuple with first coordinate `first`.
  void scan_first(Point first, Partial& acc) {
    descend(0, full_, first, first + 1, acc);
  }

  // First regular tuple in lexicographic order.
  std::optional<PointTuple> first_regular(std::uint64_t& nodes) {
    PointTuple t(len_, 0);
    if (find(0, full_, t, nodes)) return t;
    return std::nullopt;
  }

  // Walks regular tuples in lexicographic order, reporting those that are the
  // least element of their H-orbit, until `cap` have been found.
  void collect_canonical(std::size_t cap, std::vector<PointTuple>& out, std::uint64_t& nodes) {
    if (cap == 0) return;
    PointTuple t(len_, 0);
    collect(0, full_, t, cap, out, nodes);
  }

 private:
  void descend(std::size_t depth, const Bitset& cur, Point lo, Point hi, Partial& acc) {
    Bitset& next = buffers_[depth];
    const std::uint64_t rest = powers_[len_ - depth - 1];
    for (Point p = lo; p < hi; ++p) {
      Bitset::intersect(cur, image_.stabilizer_mask(p), next);
      ++acc.nodes;
      if (next.at_most_first()) {
        acc.regular += rest;
        acc.stab_sum += rest;
      } else if (depth + 1 == len_) {
        acc.stab_sum += next.count();
      } else {
        descend(depth + 1, next, 0, static_cast<Point>(n_), acc);
      }
    }
  }

  bool find(std::size_t depth, const Bitset& cur, PointTuple& t, std::uint64_t& nodes) {
    Bitset& next = buffers_[depth];
    for (Point p = 0; p < n_; ++p) {
      Bitset::intersect(cur, image_.stabilizer_mask(p), next);
      ++nodes;
      t[depth] = p;
      if (next.at_most_first()) {
        std::fill(t.begin() + static_cast<std::ptrdiff_t>(depth) + 1, t.end(), 0);
        return true;
      }
      if (depth + 1 < len_ && find(depth + 1, next, t, nodes)) return true;
    }
    return false;
  }

  bool canonical(const PointTuple& t) const {
    const auto& stab = image_.stabilizer_elements();
    for (std::size_t e = 1; e < stab.size(); ++e) {
      const auto& h = stab[e];
      for (std::size_t i = 0; i < t.size(); ++i) {
        const Point a = h[t[i]];
        if (a < t[i]) return false;
        if (a > t[i]) break;
      }
    }
    return true;
  }

  // Returns true once `cap` representatives are collected.
  bool collect(std::size_t depth, const Bitset& cur, PointTuple& t, std::size_t cap,
               std::vector<PointTuple>& out, std::uint64_t& nodes) {
    Bitset& next = buffers_[depth];
    for (Point p = 0; p < n_; ++p) {
      Bitset::intersect(cur, image_.stabilizer_mask(p), next);
      ++nodes;
      t[depth] = p;
      if (next.at_most_first()) {
        if (complete(depth + 1, t, cap, out, nodes)) return true;
      } else if (depth + 1 < len_) {
        if (collect(depth + 1, next, t, cap, out, nodes)) return true;
      }
    }
    return false;
  }

  // Every completion of a regular prefix of length `depth` is regular.
  bool complete(std::size_t depth, PointTuple& t, std::size_t cap, std::vector<PointTuple>& out,
                std::uint64_t& nodes) {
    if (depth == len_) {
      ++nodes;
      if (canonical(t)) {
        out.push_back(t);
        if (out.size() >= cap) return true;
      }
      return false;
    }
    for (Point p = 0; p < n_; ++p) {
      t[depth] = p;
      if (complete(depth + 1, t, cap, out, nodes)) return true;
    }
    return false;
  }

  const ActionImage& image_;
  std::size_t n_;
  std::size_t len_;
  Bitset full_;
  std::vector<Bitset> buffers_;
  std::vector<std::uint64_t> powers_;
};

void check_budget(std::size_t n, std::size_t len, const ScanOptions& opts) {
  const std::uint64_t nominal = saturating_pow(n, len);
  if (nominal > opts.budget) {
    throw BudgetExceeded("scan of " + std::to_string(n) + "^" + std::to_string(len) +
                         " tuples exceeds the scan budget of " + std::to_string(opts.budget));
  }
}

PointTuple with_base_point(const PointTuple& suffix) {
  PointTuple t{0};
  t.insert(t.end(), suffix.begin(), suffix.end());
  return t;
}

}  // namespace

unsigned default_threads() {
  if (const char* env = std::getenv("BASEKIT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

bool is_regular_tuple(const CosetSpace& space, std::span<const Point> t) {
  const ActionImage& image = space.image();
  for (Point p : t) {
    if (p >= space.size()) throw HypothesisError("tuple entry out of range");
  }
  if (t.empty()) return image.order() == 1;
  // Move the first coordinate to point 0; the stabilizer of the moved tuple
  // is conjugate to the original one.
  const Permutation back = image.transversal(t[0]).inverse();
  Bitset cur(image.stabilizer_elements().size(), true);
  if (cur.at_most_first()) return true;
  for (std::size_t i = 1; i < t.size(); ++i) {
    cur &= image.stabilizer_mask(back[t[i]]);
    if (cur.at_most_first()) return true;
  }
  return false;
}

RegularOrbitReport reg_count(const CosetSpace& space, std::size_t k, const ScanOptions& opts) {
  if (k == 0) throw HypothesisError("reg_count requires k >= 1");
  const auto start = Clock::now();
  const ActionImage& image = space.image();
  const std::size_t n = space.size();
  const std::size_t len = k - 1;
  const std::uint64_t m = image.stabilizer_elements().size();
  check_budget(n, len, opts);

  RegularOrbitReport report;
  report.k = k;
  report.method = "point-stabilizer-reduction";
  report.trivial_action = n == 1;

  Partial total;
  if (len == 0) {
    total.regular = m == 1 ? 1 : 0;
    total.stab_sum = m;
  } else {
    std::vector<Partial> per_point(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      TupleScan scan(image, len);
      for (std::size_t p = next++; p < n; p = next++) {
        scan.scan_first(static_cast<Point>(p), per_point[p]);
      }
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(opts.threads, static_cast<unsigned>(n)));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    for (const auto& part : per_point) {
      total.regular += part.regular;
      total.stab_sum += part.stab_sum;
      total.nodes += part.nodes;
    }
  }
  if (total.regular % m != 0 || total.stab_sum % m != 0) {
    throw std::logic_error("reg_count: orbit sums are not multiples of |H|");
  }
  report.reg_count = total.regular / m;
  report.total_orbits = total.stab_sum / m;

  std::uint64_t rep_nodes = 0;
  if (report.reg_count > 0 && opts.rep_cap > 0) {
    if (len == 0) {
      report.representatives.push_back(PointTuple{0});
    } else {
      std::vector<PointTuple> suffixes;
      TupleScan scan(image, len);
      scan.collect_canonical(opts.rep_cap, suffixes, rep_nodes);
      for (const auto& s : suffixes) report.representatives.push_back(with_base_point(s));
    }
  }
  report.budget_used = total.nodes + rep_nodes;
  report.elapsed_ms = ms_since(start);
  return report;
}

RegularOrbitReport base_size(const CosetSpace& space, const ScanOptions& opts) {
  const auto start = Clock::now();
  const std::size_t n = space.size();
  if (n == 1) {
    RegularOrbitReport report;
    report.k = 0;
    report.base_size = 0;
    report.reg_count = 1;
    report.total_orbits = 1;
    report.representatives.push_back({});
    report.method = "trivial-action";
    report.trivial_action = true;
    report.elapsed_ms = ms_since(start);
    return report;
  }
  const ActionImage& image = space.image();
  const std::uint64_t m = image.stabilizer_elements().size();
  std::uint64_t nodes = 0;
  for (std::size_t k = base_lower_bound(n, m);; ++k) {
    bool found = k == 1 ? m == 1 : false;
    if (k > 1) {
      check_budget(n, k - 1, opts);
      TupleScan scan(image, k - 1);
      found = scan.first_regular(nodes).has_value();
    }
    if (found) {
      RegularOrbitReport report = reg_count(space, k, opts);
      report.base_size = k;
      report.method = "index-bound-start+point-stabilizer-reduction";
      report.budget_used += nodes;
      report.elapsed_ms = ms_since(start);
      return report;
    }
    if (k > n) throw std::logic_error("base_size: no regular tuple found; action not faithful");
  }
}

std::optional<std::vector<Permutation>> base_by_intersections(const Group& g, const Group& h,
                                                              std::size_t k) {
  if (!is_subgroup(h, g)) throw HypothesisError("subgroup is not contained in the group");
  const bool h_is_g = h.order() == g.order();
  if (k == 0) {
    if (h_is_g) return std::vector<Permutation>{};
    return std::nullopt;
  }

  const auto& ge = g.elements();
  const auto reps = right_transversal(g, h);

  // One bitset over G's elements per distinct conjugate H^r.
  std::vector<Bitset> conj;
  std::vector<std::size_t> conj_rep;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    Bitset bits(ge.size());
    for (const auto& y : h.elements()) bits.set(*ge.index_of(y.conjugate_by(reps[r])));
    if (std::find(conj.begin(), conj.end(), bits) == conj.end()) {
      conj.push_back(std::move(bits));
      conj_rep.push_back(r);
    }
  }
  Bitset core_bits = conj[0];
  for (const auto& c : conj) core_bits &= c;

  std::vector<std::size_t> chosen{0};
  auto witness = [&] {
    std::vector<Permutation> out;
    for (std::size_t c : chosen) out.push_back(reps[conj_rep[c]]);
    while (out.size() < k) out.push_back(Permutation::identity(g.degree()));
    return out;
  };

  auto search = [&](auto&& self, const Bitset& cur, std::size_t from) -> bool {
    if (cur == core_bits) return true;
    if (chosen.size() == k) return false;
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (size, index)
    for (std::size_t j = from; j < conj.size(); ++j) {
      Bitset next = cur;
      next &= conj[j];
      if (next == cur) continue;
      order.emplace_back(next.count(), j);
    }
    std::sort(order.begin(), order.end());
    for (const auto& [size, j] : order) {
      Bitset next = cur;
      next &= conj[j];
      chosen.push_back(j);
      if (self(self, next, j + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  if (search(search, conj[0], 1)) return witness();
  return std::nullopt;
}

std::size_t base_lower_bound(std::uint64_t index, std::uint64_t order_mod_core) {
  if (index < 2) throw HypothesisError("base_lower_bound requires index >= 2");
  if (order_mod_core <= 1) return 1;
  std::size_t k = 1;
  std::uint64_t power = 1;  // index^(k-1)
  while (power <= order_mod_core) {
    ++k;
    if (power > kSaturated / index) break;
    power *= index;
  }
  return k;
}

std::uint64_t burnside_orbit_count(const CosetSpace& space, std::size_t k) {
  const ActionImage& image = space.image();
  const std::size_t n = space.size();
  using Wide = unsigned __int128;
  const Wide limit = ~Wide{0} / 2;
  Wide sum = 0;
  for (const auto& g : image.group().elements()) {
    std::uint64_t fix = 0;
    for (std::size_t p = 0; p < n; ++p) fix += g[p] == p;
    Wide term = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (fix != 0 && term > limit / fix) throw BudgetExceeded("burnside_orbit_count overflow");
      term *= fix;
    }
    if (sum > limit - term) throw BudgetExceeded("burnside_orbit_count overflow");
    sum += term;
  }
  const Wide order = image.order();
  if (sum % order != 0) throw std::logic_error("burnside sum not divisible by |G|");
  const Wide result = sum / order;
  if (result > kSaturated) throw BudgetExceeded("burnside_orbit_count result exceeds 64 bits");
  return static_cast<std::uint64_t>(result);
}

RegularFloorReport regular_floor_check(const CosetSpace& space, const ScanOptions& opts) {
  const ActionImage& image = space.image();
  if (!is_solvable(image.group().stabilizer(0))) {
    throw HypothesisError("point stabilizer of the faithful action is not solvable");
  }
  RegularFloorReport out;
  const RegularOrbitReport base = base_size(space, opts);
  out.base = *base.base_size;
  out.k = std::max<std::size_t>(out.base, 6);
  ScanOptions counting = opts;
  counting.rep_cap = 0;
  out.reg = reg_count(space, out.k, counting).reg_count;
  out.holds = out.reg >= 5;
  return out;
}

}  // namespace basekit
