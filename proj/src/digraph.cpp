#include "hh/digraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace hh {

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// Union-find over vertex indices; returns blocks ordered by least member.
struct Blocks {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<int> block_of;
};

Blocks closure(Digraph const& d, bool double_only) {
  int const n = d.size();
  std::vector<int> label(n, -1);
  Blocks out;
  for (Vertex root = 0; root < n; ++root) {
    if (label[root] >= 0) continue;
    int const id = static_cast<int>(out.blocks.size());
    std::vector<Vertex> block;
    std::vector<Vertex> stack{root};
    label[root] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      block.push_back(v);
      std::uint64_t next = double_only ? d.double_mask(v) : (d.out_mask(v) | d.in_mask(v));
      while (next) {
        Vertex u = std::countr_zero(next);
        next &= next - 1;
        if (label[u] < 0) {
          label[u] = id;
          stack.push_back(u);
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  }
  out.block_of = std::move(label);
  return out;
}

}  // namespace

Digraph::Digraph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 0.." +
                                std::to_string(kMaxVertices));
  }
  n_ = n;
  out_.assign(n, 0);
  in_.assign(n, 0);
}

void Digraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for " +
                            std::to_string(n_) + " vertices");
  }
}

void Digraph::add_edge(Vertex from, Vertex to) {
  check_vertex(from);
  check_vertex(to);
  out_[from] |= bit(to);
  in_[to] |= bit(from);
}

void Digraph::remove_edge(Vertex from, Vertex to) {
  check_vertex(from);
  check_vertex(to);
  out_[from] &= ~bit(to);
  in_[to] &= ~bit(from);
}

int Digraph::edge_count() const {
  int total = 0;
  for (auto row : out_) total += std::popcount(row);
  return total;
}

EdgeKind edge_kind(Digraph const& d, Vertex x, Vertex y) {
  bool const fwd = d.has_edge(x, y);
  bool const bwd = d.has_edge(y, x);
  if (fwd && bwd) return EdgeKind::double_edge;
  if (fwd) return EdgeKind::forward;
  if (bwd) return EdgeKind::backward;
  return EdgeKind::none;
}

bool is_reflexive(Digraph const& d) {
  for (Vertex v = 0; v < d.size(); ++v)
    if (!d.has_loop(v)) return false;
  return true;
}

bool is_irreflexive(Digraph const& d) {
  for (Vertex v = 0; v < d.size(); ++v)
    if (d.has_loop(v)) return false;
  return true;
}

bool is_symmetric(Digraph const& d) {
  for (Vertex v = 0; v < d.size(); ++v)
    if ((d.out_mask(v) ^ d.in_mask(v)) != 0) return false;
  return true;
}

bool is_antisymmetric(Digraph const& d) {
  for (Vertex v = 0; v < d.size(); ++v)
    if (d.double_mask(v) != 0) return false;
  return true;
}

Kind classify_kind(Digraph const& d) {
  Kind k;
  if (is_symmetric(d))
    k.shape = Shape::graph;
  else if (is_antisymmetric(d))
    k.shape = Shape::proper;
  else
    k.shape = Shape::improper;
  // The empty digraph is vacuously both; it is reported irreflexive.
  if (is_irreflexive(d))
    k.reflexivity = Reflexivity::irreflexive;
  else if (is_reflexive(d))
    k.reflexivity = Reflexivity::reflexive;
  else
    k.reflexivity = Reflexivity::neither;
  return k;
}

char const* to_string(Shape s) {
  switch (s) {
    case Shape::graph: return "graph";
    case Shape::proper: return "proper";
    case Shape::improper: return "improper";
  }
  return "?";
}

char const* to_string(Reflexivity r) {
  switch (r) {
    case Reflexivity::reflexive: return "reflexive";
    case Reflexivity::irreflexive: return "irreflexive";
    case Reflexivity::neither: return "neither";
  }
  return "?";
}

Digraph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
  Digraph d(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j) d.add_edge(i, j);
  return d;
}

Digraph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("oriented cycle needs at least three vertices");
  Digraph d(n);
  for (Vertex i = 0; i < n; ++i) d.add_edge(i, (i + 1) % n);
  return d;
}

Digraph make_trivial() { return Digraph(1); }

Digraph make_loop_vertex() {
  Digraph d(1);
  d.add_edge(0, 0);
  return d;
}

Digraph disjoint_union(Digraph const& a, Digraph const& b) {
  Digraph d(a.size() + b.size());
  int const shift = a.size();
  for (Vertex x = 0; x < a.size(); ++x)
    for (Vertex y = 0; y < a.size(); ++y)
      if (a.has_edge(x, y)) d.add_edge(x, y);
  for (Vertex x = 0; x < b.size(); ++x)
    for (Vertex y = 0; y < b.size(); ++y)
      if (b.has_edge(x, y)) d.add_edge(x + shift, y + shift);
  return d;
}

Digraph k_copies(int k, Digraph const& d) {
  if (k < 0) throw std::invalid_argument("negative copy count");
  Digraph result;
  for (int i = 0; i < k; ++i) result = disjoint_union(result, d);
  return result;
}

Digraph induced(Digraph const& d, std::span<Vertex const> w) {
  if (w.empty()) throw std::invalid_argument("induced subdigraph needs a nonempty vertex set");
  std::vector<Vertex> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate vertex in induced vertex set");
  if (sorted.front() < 0 || sorted.back() >= d.size())
    throw std::out_of_range("induced vertex set leaves the digraph");
  int const m = static_cast<int>(sorted.size());
  Digraph sub(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (d.has_edge(sorted[i], sorted[j])) sub.add_edge(i, j);
  return sub;
}

Digraph relabel(Digraph const& d, std::span<Vertex const> perm) {
  int const n = d.size();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (Vertex p : perm) {
    if (p < 0 || p >= n || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
  Digraph r(n);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      if (d.has_edge(x, y)) r.add_edge(perm[x], perm[y]);
  return r;
}

ThetaPartition theta_partition(Digraph const& d) {
  Blocks theta = closure(d, true);
  Blocks weak = closure(d, false);
  ThetaPartition p;
  p.classes = std::move(theta.blocks);
  p.class_of = std::move(theta.block_of);
  p.components = std::move(weak.blocks);
  p.component_of = std::move(weak.block_of);
  return p;
}

std::vector<std::vector<Vertex>> weak_components(Digraph const& d) {
  return closure(d, false).blocks;
}

bool is_theta_connected(Digraph const& d) { return theta_partition(d).theta_connected(); }

bool is_weakly_connected(Digraph const& d) { return weak_components(d).size() <= 1; }

}  // namespace hh
