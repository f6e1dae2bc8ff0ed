#pragma once

// The matrix text format: a header naming the scalar domain, the chirality
// and the grid shape, then the grid entries as scalar literals.  The header
// is explicit because a literal like "1" is ambiguous across domains.
//
//   scalar gf 2
//   right
//   2 2
//   1 0
//   1 0
//
// Parsing is token based: newlines and a standalone "/" both separate, so
// the compact one-line form "scalar gf 2 / right / 2 2 / 1 0 / 1 0" reads
// the same.  Printing always emits the canonical multi-line form, and
// parse(print(m)) == m exactly.

#include <string>
#include <string_view>

#include "skewlin/linmap.hpp"

namespace skewlin {

LinMap parse_linmap_text(std::string_view text);
std::string print_linmap_text(const LinMap& m);

/// A vector printed as the grid of its inclusion map: one column for right
/// chirality, one row for left.
std::string print_vec_text(const Vec& v);

/// A subspace printed as the grid of its basis-inclusion map (dimension
/// many columns or rows).
std::string print_subspace_text(const Subspace& s);

}  // namespace skewlin
