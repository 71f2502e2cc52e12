#pragma once

// Brute-force reference implementations on plain vectors. Nothing here calls
// into the library's algorithms; tests compare the two.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "basekit/group.hpp"

namespace oracle {

using Perm = std::vector<int>;

inline Perm mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Perm inv(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

inline Perm id(std::size_t n) {
  Perm r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<int>(i);
  return r;
}

inline std::vector<Perm> gens_of(const basekit::Group& g) {
  std::vector<Perm> out;
  for (const auto& x : g.generators()) out.emplace_back(x.images().begin(), x.images().end());
  return out;
}

inline std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t n) {
  std::set<Perm> seen{id(n)};
  std::vector<Perm> queue{id(n)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      Perm y = mul(queue[head], g);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return seen;
}

inline std::set<Perm> closure(const basekit::Group& g) { return closure(gens_of(g), g.degree()); }

// Action of G on right cosets Hx, each keyed by its least element.
struct Action {
  std::size_t points = 0;
  std::vector<Perm> gens;
  std::size_t image_order = 0;
  std::size_t stabilizer_order = 0;  // |H / H_G|
  std::vector<Perm> subgroup;
  std::map<Perm, int> index;

  Perm key(const Perm& x) const {
    Perm best;
    for (const auto& y : subgroup) {
      Perm c = mul(y, x);
      if (best.empty() || c < best) best = c;
    }
    return best;
  }

  // Point of the coset Hx.
  int locate(const Perm& x) const { return index.at(key(x)); }
};

inline Action coset_action(const basekit::Group& g, const basekit::Group& h) {
  const auto ge = closure(g);
  const auto he = closure(h);
  Action a;
  a.subgroup.assign(he.begin(), he.end());
  std::vector<Perm> reps;
  for (const auto& x : ge) {
    Perm k = a.key(x);
    if (!a.index.count(k)) {
      a.index.emplace(k, static_cast<int>(reps.size()));
      reps.push_back(x);
    }
  }
  a.points = reps.size();
  for (const auto& gen : gens_of(g)) {
    Perm p(a.points);
    for (std::size_t i = 0; i < a.points; ++i) p[i] = a.locate(mul(reps[i], gen));
    a.gens.push_back(p);
  }
  const auto image = closure(a.gens, a.points);
  a.image_order = image.size();
  for (const auto& x : image) a.stabilizer_order += x[0] == 0;
  return a;
}

struct OrbitCounts {
  std::uint64_t total = 0;
  std::uint64_t regular = 0;
};

// Orbits of the action on Omega^k by direct enumeration. N^k must be small.
inline OrbitCounts orbits_on_tuples(const Action& a, std::size_t k) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= a.points;
  auto encode = [&](const std::vector<int>& t) {
    std::uint64_t v = 0;
    for (int x : t) v = v * a.points + x;
    return v;
  };
  auto decode = [&](std::uint64_t v) {
    std::vector<int> t(k);
    for (std::size_t i = k; i-- > 0;) {
      t[i] = static_cast<int>(v % a.points);
      v /= a.points;
    }
    return t;
  };
  std::vector<bool> seen(count, false);
  OrbitCounts out;
  for (std::uint64_t start = 0; start < count; ++start) {
    if (seen[start]) continue;
    ++out.total;
    std::vector<std::uint64_t> queue{start};
    seen[start] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto t = decode(queue[head]);
      for (const auto& g : a.gens) {
        std::vector<int> u(k);
        for (std::size_t i = 0; i < k; ++i) u[i] = g[t[i]];
        const auto v = encode(u);
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    if (queue.size() == a.image_order) ++out.regular;
  }
  return out;
}

// Number of k-tuples over n symbols using at most m distinct symbols,
// by inclusion-exclusion over exact image sizes.
inline std::uint64_t tuples_with_at_most(std::uint64_t n, std::uint64_t k, std::uint64_t m) {
  auto binom = [](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  auto power = [](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
  };
  std::uint64_t total = 0;
  for (std::uint64_t j = 1; j <= m && j <= n; ++j) {
    // Surjections onto a fixed j-set.
    std::int64_t surj = 0;
    for (std::uint64_t i = 0; i <= j; ++i) {
      const std::int64_t term = static_cast<std::int64_t>(binom(j, i) * power(j - i, k));
      surj += (i % 2 == 0) ? term : -term;
    }
    total += binom(n, j) * static_cast<std::uint64_t>(surj);
  }
  return total;
}

// Partition of {0..n-1} into cells fixed only by the identity of `elems`.
inline bool asymmetric(const std::set<Perm>& elems, const std::vector<int>& color) {
  for (const auto& g : elems) {
    if (g == id(g.size())) continue;
    bool fixes = true;
    for (std::size_t i = 0; i < g.size() && fixes; ++i) fixes = color[g[i]] == color[i];
    if (fixes) return false;
  }
  return true;
}

// Least number of cells of an asymmetric partition, trying every coloring.
inline int min_asymmetric_cells(const std::set<Perm>& elems, std::size_t n, int max_cells) {
  for (int m = 1; m <= max_cells; ++m) {
    std::vector<int> color(n, 0);
    while (true) {
      if (asymmetric(elems, color)) return m;
      std::size_t i = 0;
      while (i < n && ++color[i] == m) color[i++] = 0;
      if (i == n) break;
    }
  }
  return -1;
}

// Subgroup generated by `seeds`.
inline std::set<Perm> generated(const std::set<Perm>& seeds, std::size_t n) {
  return closure(std::vector<Perm>(seeds.begin(), seeds.end()), n);
}

inline std::set<Perm> commutator_subgroup(const std::set<Perm>& g) {
  const std::size_t n = g.begin()->size();
  std::set<Perm> comms;
  for (const auto& a : g) {
    const Perm ai = inv(a);
    for (const auto& b : g) comms.insert(mul(mul(ai, inv(b)), mul(a, b)));
  }
  return generated(comms, n);
}

inline bool solvable(std::set<Perm> g) {
  while (g.size() > 1) {
    auto d = commutator_subgroup(g);
    if (d.size() == g.size()) return false;
    g = std::move(d);
  }
  return true;
}

inline std::vector<std::set<Perm>> conjugacy_classes(const std::set<Perm>& g) {
  std::vector<std::set<Perm>> out;
  std::set<Perm> done;
  for (const auto& x : g) {
    if (done.count(x)) continue;
    std::set<Perm> cls;
    for (const auto& y : g) cls.insert(mul(mul(inv(y), x), y));
    done.insert(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

// Every normal subgroup is the join of the normal closures of the classes
// it contains, so joining classes one at a time from {e} reaches all.
inline std::vector<std::set<Perm>> normal_subgroups(const std::set<Perm>& g) {
  const std::size_t n = g.begin()->size();
  const auto classes = conjugacy_classes(g);
  std::set<std::set<Perm>> found{{id(n)}};
  std::vector<std::set<Perm>> queue{{id(n)}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& c : classes) {
      if (queue[head].count(*c.begin())) continue;
      std::set<Perm> seeds = queue[head];
      seeds.insert(c.begin(), c.end());
      auto joined = generated(seeds, n);
      if (found.insert(joined).second) queue.push_back(std::move(joined));
    }
  }
  return queue;
}

inline std::set<Perm> intersect(const std::set<Perm>& a, const std::set<Perm>& b) {
  std::set<Perm> out;
  for (const auto& x : a) {
    if (b.count(x)) out.insert(x);
  }
  return out;
}

inline std::set<Perm> normalizer(const std::set<Perm>& h, const std::set<Perm>& within) {
  std::set<Perm> out;
  for (const auto& x : within) {
    const Perm xi = inv(x);
    bool keeps = true;
    for (const auto& y : h) {
      if (!h.count(mul(mul(xi, y), x))) {
        keeps = false;
        break;
      }
    }
    if (keeps) out.insert(x);
  }
  return out;
}

// Largest normal solvable subgroup.
inline std::set<Perm> solvable_radical(const std::set<Perm>& g) {
  std::set<Perm> best{id(g.begin()->size())};
  for (const auto& n : normal_subgroups(g)) {
    if (n.size() > best.size() && solvable(n)) best = n;
  }
  return best;
}

inline std::set<Perm> elements_of(const basekit::Group& g) {
  std::set<Perm> out;
  for (const auto& x : g.elements()) out.emplace(x.images().begin(), x.images().end());
  return out;
}

}  // namespace oracle
