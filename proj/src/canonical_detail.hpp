#ifndef HH_CANONICAL_DETAIL_HPP_
#define HH_CANONICAL_DETAIL_HPP_

// Fixed-capacity adjacency used by the canonical-labelling search and the
// enumerator's inner loop; avoids heap traffic per candidate.

#include <array>
#include <cstdint>

#include "hh/digraph.hpp"

namespace hh::detail {

struct SmallDigraph {
  int n = 0;
  std::array<std::uint8_t, kMaxCanonicalVertices> out{};
  std::array<std::uint8_t, kMaxCanonicalVertices> in{};

  bool has_edge(int x, int y) const { return (out[x] >> y) & 1u; }
  void add_edge(int x, int y) {
    out[x] |= static_cast<std::uint8_t>(1u << y);
    in[y] |= static_cast<std::uint8_t>(1u << x);
  }
};

// Index of the bit for pair (x, y) in growing-block order.
constexpr int bit_position(int x, int y) {
  if (x == y) return x * x;
  if (x < y) return y * y + 1 + 2 * x;
  return x * x + 2 + 2 * y;
}

SmallDigraph small_from(Digraph const& d);
SmallDigraph small_decode(int n, std::uint64_t code);
std::uint64_t small_encode(SmallDigraph const& d);

// Degree signature; canonical labellings list vertices by ascending signature.
std::uint32_t signature(SmallDigraph const& d, int v);

// True iff no signature-respecting relabelling has a smaller encoding and the
// vertices are already sorted by signature.
bool small_is_canonical(SmallDigraph const& d);

// order[pos] is the vertex placed at position pos in the canonical form.
std::array<int, kMaxCanonicalVertices> small_canonical_order(SmallDigraph const& d);

}  // namespace hh::detail

#endif  // HH_CANONICAL_DETAIL_HPP_
