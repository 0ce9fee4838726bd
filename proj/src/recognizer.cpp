#include "hh/recognizer.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace hh {

namespace {

void require_irreflexive_improper(Digraph const& d, char const* what) {
  if (!is_irreflexive(d)) throw ScopeError(std::string(what) + " requires an irreflexive digraph");
  if (classify_kind(d).shape != Shape::improper)
    throw ScopeError(std::string(what) + " requires an improper digraph");
}

bool is_complete_block(Digraph const& d, std::vector<Vertex> const& block) {
  for (Vertex u : block)
    for (Vertex v : block)
      if (u != v && !is_double_edge(d, u, v)) return false;
  return true;
}

bool is_oriented_triangle(Digraph const& d, std::vector<Vertex> const& block) {
  if (block.size() != 3) return false;
  for (Vertex v : block) {
    int out = 0;
    int in = 0;
    for (Vertex u : block) {
      if (u == v) continue;
      if (is_double_edge(d, u, v)) return false;
      out += d.has_edge(v, u);
      in += d.has_edge(u, v);
    }
    if (out != 1 || in != 1) return false;
  }
  return true;
}

// Lexicographically least shortest double-edge path from `from` to `to`.
std::vector<Vertex> least_double_path(Digraph const& d, Vertex from, Vertex to) {
  std::vector<int> dist(d.size(), -1);
  std::deque<Vertex> queue{to};
  dist[to] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    std::uint64_t next = d.double_mask(v);
    while (next) {
      Vertex u = std::countr_zero(next);
      next &= next - 1;
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  std::vector<Vertex> path{from};
  Vertex cur = from;
  while (cur != to) {
    std::uint64_t next = d.double_mask(cur);
    while (next) {
      Vertex u = std::countr_zero(next);
      next &= next - 1;
      if (dist[u] == dist[cur] - 1) {
        cur = u;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

}  // namespace

std::string to_string(Family const& f) {
  switch (f.type) {
    case Family::Type::kKn:
      return std::to_string(f.k) + "*K_" + std::to_string(f.n);
    case Family::Type::kC3:
      return std::to_string(f.k) + "*C_3";
    case Family::Type::none:
      break;
  }
  return "none";
}

Family classify_hh_irreflexive(Digraph const& d) {
  if (!is_irreflexive(d)) throw ScopeError("classification covers irreflexive digraphs only");
  if (d.empty()) throw ScopeError("classification covers nonempty digraphs only");
  auto const components = weak_components(d);
  std::size_t const m = components.front().size();
  for (auto const& c : components)
    if (c.size() != m) return Family::no_family();
  int const k = static_cast<int>(components.size());
  if (std::all_of(components.begin(), components.end(),
                  [&](auto const& c) { return is_complete_block(d, c); }))
    return Family::clique_copies(k, static_cast<int>(m));
  if (std::all_of(components.begin(), components.end(),
                  [&](auto const& c) { return is_oriented_triangle(d, c); }))
    return Family::triangle_copies(k);
  return Family::no_family();
}

std::optional<Witness> lemma1_witness(Digraph const& d) {
  require_irreflexive_improper(d, "lemma1_witness");
  std::optional<Vertex> on_double;
  std::optional<Vertex> off_double;
  for (Vertex v = 0; v < d.size(); ++v) {
    if (incident_with_double_edge(d, v)) {
      if (!on_double) on_double = v;
    } else if (!off_double) {
      off_double = v;
    }
  }
  if (!on_double || !off_double) return std::nullopt;
  PartialHom h(d.size());
  h.assign(*on_double, *off_double);
  return Witness{h, find_blocked_vertex(d, h)};
}

std::optional<CliqueViolation> lemma2_check(Digraph const& d) {
  require_irreflexive_improper(d, "lemma2_check");
  return incomplete_theta_class(d);
}

std::optional<CliqueViolation> incomplete_theta_class(Digraph const& d) {
  auto const theta = theta_partition(d);
  for (auto const& cls : theta.classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        if (is_double_edge(d, cls[i], cls[j])) continue;
        CliqueViolation out;
        out.theta_class = cls;
        out.chain = least_double_path(d, cls[i], cls[j]);
        out.seed = PartialHom(d.size());
        out.seed.assign(out.chain[0], out.chain[1]);
        out.seed.assign(out.chain[2], out.chain[2]);
        return out;
      }
    }
  }
  return std::nullopt;
}

CliqueGrowth clique_growth_refuter(Digraph const& d, std::vector<Vertex> const& chain) {
  if (!is_irreflexive(d)) throw ScopeError("clique_growth_refuter requires an irreflexive digraph");
  if (chain.size() < 3) throw std::invalid_argument("chain needs at least three vertices");
  for (Vertex v : chain)
    if (v < 0 || v >= d.size()) throw std::out_of_range("chain vertex out of range");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!is_double_edge(d, chain[i], chain[i + 1]))
      throw std::invalid_argument("chain links must be double edges");
  Vertex const z1 = chain[0];
  Vertex const z2 = chain[1];
  Vertex const z3 = chain[2];
  if (z1 == z3 || is_double_edge(d, z1, z3))
    throw std::invalid_argument("chain must start with z1, z3 not doubly joined");

  CliqueGrowth out;
  PartialHom h(d.size());
  h.assign(z1, z2);
  h.assign(z3, z3);
  while (true) {
    ++out.iterations;
    if (out.iterations > d.size()) throw std::logic_error("clique growth did not terminate");
    auto const ext = extend_to_endomorphism(d, h);
    if (!ext) {
      out.witness = Witness{h, find_blocked_vertex(d, h)};
      return out;
    }
    Vertex const x = (*ext)[z2];
    if (h.defined(x) || x == z2) throw std::logic_error("clique growth revisited a vertex");
    out.harvested.push_back(x);
    h.assign(x, x);
  }
}

std::optional<Witness> proposition_witness(Digraph const& d) {
  require_irreflexive_improper(d, "proposition_witness");
  for (Vertex v = 0; v < d.size(); ++v)
    if (!incident_with_double_edge(d, v))
      throw ScopeError("proposition_witness requires every vertex on a double edge");
  auto const theta = theta_partition(d);
  for (auto const& cls : theta.classes)
    if (!is_complete_block(d, cls))
      throw ScopeError("proposition_witness requires complete theta-classes");

  for (Vertex x = 0; x < d.size(); ++x) {
    for (Vertex y = 0; y < d.size(); ++y) {
      if (x == y || !d.has_edge(x, y) || d.has_edge(y, x)) continue;
      PartialHom h(d.size());
      h.assign(x, y);
      for (Vertex t : theta.classes[theta.class_of[y]])
        if (t != y) h.assign(t, t);
      return Witness{h, find_blocked_vertex(d, h)};
    }
  }
  return std::nullopt;
}

Witness refute_improper(Digraph const& d) {
  require_irreflexive_improper(d, "refute_improper");
  if (auto w = lemma1_witness(d)) return *w;
  if (auto violation = lemma2_check(d)) return clique_growth_refuter(d, violation->chain).witness;
  if (auto w = proposition_witness(d)) return *w;
  throw std::logic_error("improper digraph without a single edge");
}

}  // namespace hh
