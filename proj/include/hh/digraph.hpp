#ifndef HH_DIGRAPH_HPP_
#define HH_DIGRAPH_HPP_

// Finite binary relational systems (V, E) with V = {0, ..., n-1}, stored as
// dense bitmask rows. Loops are representable.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace hh {

using Vertex = int;

// Rows are single 64-bit words.
inline constexpr int kMaxVertices = 64;

class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }

  bool has_edge(Vertex from, Vertex to) const {
    return (out_[from] >> to) & 1u;
  }
  void add_edge(Vertex from, Vertex to);
  void remove_edge(Vertex from, Vertex to);
  void set_edge(Vertex from, Vertex to, bool present) {
    present ? add_edge(from, to) : remove_edge(from, to);
  }

  // Bit j of out_mask(v) is set iff v -> j; bit j of in_mask(v) iff j -> v.
  std::uint64_t out_mask(Vertex v) const { return out_[v]; }
  std::uint64_t in_mask(Vertex v) const { return in_[v]; }
  // Vertices joined to v by a double edge (v itself excluded).
  std::uint64_t double_mask(Vertex v) const {
    return out_[v] & in_[v] & ~(std::uint64_t{1} << v);
  }

  bool has_loop(Vertex v) const { return has_edge(v, v); }
  int edge_count() const;

  bool operator==(Digraph const&) const = default;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

enum class EdgeKind { none, forward, backward, double_edge };

// Relation between an ordered pair of distinct vertices.
EdgeKind edge_kind(Digraph const& d, Vertex x, Vertex y);

// x ~ y: x -> y or y -> x.
inline bool adjacent(Digraph const& d, Vertex x, Vertex y) {
  return d.has_edge(x, y) || d.has_edge(y, x);
}
// x <-> y for distinct x, y.
inline bool is_double_edge(Digraph const& d, Vertex x, Vertex y) {
  return x != y && d.has_edge(x, y) && d.has_edge(y, x);
}
inline bool incident_with_double_edge(Digraph const& d, Vertex v) {
  return d.double_mask(v) != 0;
}

bool is_reflexive(Digraph const& d);
bool is_irreflexive(Digraph const& d);
// Symmetry and antisymmetry only look at pairs of distinct vertices.
bool is_symmetric(Digraph const& d);
bool is_antisymmetric(Digraph const& d);

// Edgeless digraphs are both symmetric and antisymmetric; they count as
// graphs.
enum class Shape { graph, proper, improper };
enum class Reflexivity { reflexive, irreflexive, neither };

struct Kind {
  Shape shape = Shape::graph;
  Reflexivity reflexivity = Reflexivity::irreflexive;
  bool operator==(Kind const&) const = default;
};

Kind classify_kind(Digraph const& d);

char const* to_string(Shape s);
char const* to_string(Reflexivity r);

// Constructors for the standard families.
Digraph make_complete(int n);
Digraph make_cycle(int n);
Digraph make_trivial();
Digraph make_loop_vertex();
Digraph disjoint_union(Digraph const& a, Digraph const& b);
Digraph k_copies(int k, Digraph const& d);

// The subdigraph induced by `w`, relabelled 0..|w|-1 in ascending vertex
// order. `w` may be given in any order but must be nonempty, in range and
// free of duplicates.
Digraph induced(Digraph const& d, std::span<Vertex const> w);

// Image of `d` under the relabelling v -> perm[v]; perm must be a
// permutation of 0..n-1.
Digraph relabel(Digraph const& d, std::span<Vertex const> perm);

// Weakly connected components and theta-classes (equal or joined by a chain
// of double edges). Both partitions list their blocks ordered by least
// member, each block sorted ascending.
struct ThetaPartition {
  std::vector<std::vector<Vertex>> classes;
  std::vector<std::vector<Vertex>> components;
  std::vector<int> class_of;
  std::vector<int> component_of;

  int omega() const { return static_cast<int>(components.size()); }
  int class_count() const { return static_cast<int>(classes.size()); }
  bool theta_connected() const { return omega() == class_count(); }
};

ThetaPartition theta_partition(Digraph const& d);
std::vector<std::vector<Vertex>> weak_components(Digraph const& d);
bool is_theta_connected(Digraph const& d);
bool is_weakly_connected(Digraph const& d);

// Canonical labelling. The encoding of a digraph lists its adjacency bits in
// growing-block order: for i = 0..n-1 the bit (i,i), then (j,i), (i,j) for
// j = 0..i-1. The first bit is the most significant, so lexicographic and
// numeric order coincide. The canonical form is the relabelling with the
// least encoding among those that sort vertices by their degree signature
// (loop, out-degree, in-degree, double-degree).
inline constexpr int kMaxCanonicalVertices = 8;

std::uint64_t encode(Digraph const& d);
Digraph decode(int n, std::uint64_t code);
// Throws std::domain_error above kMaxCanonicalVertices.
Digraph canonical_form(Digraph const& d);
std::uint64_t canonical_encoding(Digraph const& d);
// A permutation p with relabel(d, p) == canonical_form(d).
std::vector<Vertex> canonical_labelling(Digraph const& d);
bool is_canonical(Digraph const& d);
bool is_isomorphic(Digraph const& a, Digraph const& b);

}  // namespace hh

#endif  // HH_DIGRAPH_HPP_
