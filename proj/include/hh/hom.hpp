#ifndef HH_HOM_HPP_
#define HH_HOM_HPP_

// Homomorphisms between induced subdigraphs of a digraph and the
// homomorphism-homogeneity decision.
//
// A homomorphism "between finite substructures" W1 -> W2 of d is handled as
// a homomorphism from d[W1] into d: extending it to an endomorphism never
// depends on the codomain restriction.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hh/digraph.hpp"

namespace hh {

inline constexpr Vertex kUnmapped = -1;

// A partial map V(d) -> V(d), stored densely; kUnmapped marks vertices
// outside the domain.
class PartialHom {
 public:
  PartialHom() = default;
  explicit PartialHom(int n) : image_(n, kUnmapped) {}
  PartialHom(int n, std::span<Vertex const> domain, std::span<Vertex const> images);

  int ambient_size() const { return static_cast<int>(image_.size()); }
  bool defined(Vertex v) const { return image_[v] != kUnmapped; }
  Vertex operator[](Vertex v) const { return image_[v]; }
  void assign(Vertex v, Vertex image);
  void erase(Vertex v) { image_[v] = kUnmapped; }

  // Sorted domain.
  std::vector<Vertex> domain() const;
  int domain_size() const;
  std::vector<Vertex> const& images() const { return image_; }

  bool operator==(PartialHom const&) const = default;

 private:
  std::vector<Vertex> image_;
};

// x -> y implies h(x) -> h(y) for every ordered pair of the domain,
// including x == y. Throws if the map does not fit d.
bool is_homomorphism(Digraph const& d, PartialHom const& h);
// Total map V(a) -> V(d).
bool is_homomorphism(Digraph const& a, Digraph const& d, std::span<Vertex const> map);

// All homomorphisms a -> d as image sequences, in lexicographic order.
std::vector<std::vector<Vertex>> enumerate_homs(Digraph const& a, Digraph const& d,
                                                std::optional<std::size_t> limit = {});

// Calls `visit` for every homomorphism d[domain] -> d, lexicographically by
// image sequence, until it returns false. Returns false iff stopped early.
bool for_each_hom_from_induced(Digraph const& d, std::span<Vertex const> domain,
                               std::function<bool(PartialHom const&)> const& visit);

// Least endomorphism agreeing with h under the engine's fixed variable
// order (most constrained first, ties by index), images tried ascending.
std::optional<std::vector<Vertex>> extend_to_endomorphism(Digraph const& d, PartialHom const& h);

// h extended at v by its least admissible image, if any.
std::optional<PartialHom> one_point_extendable(Digraph const& d, PartialHom const& h, Vertex v);

struct Witness {
  PartialHom hom;
  std::optional<Vertex> blocked_vertex;

  bool operator==(Witness const&) const = default;
};

struct Verdict {
  bool hh = true;
  std::optional<Witness> witness;

  static Verdict yes() { return {}; }
  static Verdict no(Witness w) { return {false, std::move(w)}; }
};

enum class HhStrategy {
  // Extend every homomorphism to a full endomorphism; the reference check.
  full_extension,
  // Only ask every homomorphism to extend by one more vertex.
  one_point,
  // one_point for the verdict, full_extension to locate a minimal witness.
  accelerated,
};

// Homomorphisms are visited by ascending domain size, then domain in
// lexicographic order, then image sequence. With full_extension and
// accelerated the witness therefore has a smallest possible domain; the
// one_point witness always carries a blocked vertex but may be larger.
Verdict is_hh(Digraph const& d, HhStrategy strategy = HhStrategy::accelerated);

// The first v outside the domain with no admissible image, if any.
std::optional<Vertex> find_blocked_vertex(Digraph const& d, PartialHom const& h);

// h is a homomorphism, no endomorphism extends it, and the blocked vertex
// (if given) admits no image.
bool verify_witness(Digraph const& d, Witness const& w);

}  // namespace hh

#endif  // HH_HOM_HPP_
