#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "basekit/group.hpp"

namespace basekit {

// Standard groups on their natural point sets {0, ..., n-1}.
Group symmetric_group(std::size_t n);
Group alternating_group(std::size_t n);
Group cyclic_group(std::size_t n);
/// Dihedral group of order 2n acting on the n-gon, n >= 3.
Group dihedral_group(std::size_t n);
/// Sym(a_1) x Sym(a_2) x ... on consecutive blocks of sizes a_i.
Group young_subgroup(std::span<const std::size_t> parts);
/// x -> a*x + b over Z_p, p prime.
Group affine_line_group(std::size_t p);
/// `g` acting on the first g.degree() points of an n-point set.
Group embed(const Group& g, std::size_t n);

/// Builds a group from a catalog spec:
///
///   sym(n) alt(n) cyc(n) dih(n) agl(p) young(a,b,...)
///   young-wreath(m,t)        Sym_m wr Sym_t, imprimitive on m*t points
///   wreath(spec, spec)       permutation wreath product
///   embed(spec, n)           pad to n points
///   stab(spec, i)            stabilizer of the 1-based point i
///
/// Throws ParseError on malformed or unknown specs.
Group catalog(std::string_view spec);

/// Parses the group file format:
///
///   # comment
///   degree N
///   gen (1 2 3)(4 5)
///   gen (1 2)
///
/// Labels are 1-based.
Group parse_group_file(std::string_view text);

/// A catalog spec, or a path to a group file when one exists there.
Group load_group(const std::string& source);

}  // namespace basekit
