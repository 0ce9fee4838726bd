#include "hh/hom.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace hh {

namespace {

// Can v take image c given the vertices already mapped by `img`?
bool admissible(Digraph const& d, std::vector<Vertex> const& img, Vertex v, Vertex c) {
  if (d.has_loop(v) && !d.has_loop(c)) return false;
  std::uint64_t succ = d.out_mask(v) & ~(std::uint64_t{1} << v);
  while (succ) {
    Vertex u = std::countr_zero(succ);
    succ &= succ - 1;
    if (img[u] != kUnmapped && !d.has_edge(c, img[u])) return false;
  }
  std::uint64_t pred = d.in_mask(v) & ~(std::uint64_t{1} << v);
  while (pred) {
    Vertex u = std::countr_zero(pred);
    pred &= pred - 1;
    if (img[u] != kUnmapped && !d.has_edge(img[u], c)) return false;
  }
  return true;
}

void check_fits(Digraph const& d, PartialHom const& h) {
  if (h.ambient_size() != d.size())
    throw std::invalid_argument("partial map built for " + std::to_string(h.ambient_size()) +
                                " vertices, digraph has " + std::to_string(d.size()));
  for (Vertex v = 0; v < d.size(); ++v) {
    Vertex const c = h[v];
    if (c != kUnmapped && (c < 0 || c >= d.size()))
      throw std::out_of_range("image " + std::to_string(c) + " of vertex " + std::to_string(v) +
                              " out of range");
  }
}

// Static most-constrained-first order for the vertices outside h's domain.
std::vector<Vertex> extension_order(Digraph const& d, PartialHom const& h) {
  int const n = d.size();
  std::uint64_t placed = 0;
  std::vector<Vertex> pending;
  for (Vertex v = 0; v < n; ++v) {
    if (h.defined(v))
      placed |= std::uint64_t{1} << v;
    else
      pending.push_back(v);
  }
  std::vector<Vertex> order;
  order.reserve(pending.size());
  while (!pending.empty()) {
    auto best = pending.begin();
    int best_score = -1;
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      Vertex const v = *it;
      std::uint64_t const nbrs = (d.out_mask(v) | d.in_mask(v)) & ~(std::uint64_t{1} << v);
      int const score = std::popcount(nbrs & placed);
      if (score > best_score) {
        best_score = score;
        best = it;
      }
    }
    placed |= std::uint64_t{1} << *best;
    order.push_back(*best);
    pending.erase(best);
  }
  return order;
}

bool extend_rec(Digraph const& d, std::vector<Vertex>& img, std::vector<Vertex> const& order,
                std::size_t depth) {
  if (depth == order.size()) return true;
  Vertex const v = order[depth];
  for (Vertex c = 0; c < d.size(); ++c) {
    if (!admissible(d, img, v, c)) continue;
    img[v] = c;
    if (extend_rec(d, img, order, depth + 1)) return true;
  }
  img[v] = kUnmapped;
  return false;
}

bool homs_rec(Digraph const& d, std::span<Vertex const> domain, std::size_t depth, PartialHom& h,
              std::vector<Vertex>& img, std::function<bool(PartialHom const&)> const& visit) {
  if (depth == domain.size()) return visit(h);
  Vertex const v = domain[depth];
  for (Vertex c = 0; c < d.size(); ++c) {
    if (!admissible(d, img, v, c)) continue;
    img[v] = c;
    h.assign(v, c);
    bool const go_on = homs_rec(d, domain, depth + 1, h, img, visit);
    img[v] = kUnmapped;
    h.erase(v);
    if (!go_on) return false;
  }
  return true;
}

// Visits every nonempty vertex subset by ascending size, lexicographically
// within a size, until `visit` returns false.
bool for_each_subset(int n, int max_size, std::function<bool(std::span<Vertex const>)> const& visit) {
  std::vector<Vertex> combo;
  for (int s = 1; s <= max_size; ++s) {
    combo.resize(s);
    for (int i = 0; i < s; ++i) combo[i] = i;
    while (true) {
      if (!visit(combo)) return false;
      int i = s - 1;
      while (i >= 0 && combo[i] == n - s + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < s; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return true;
}

std::optional<Witness> full_extension_witness(Digraph const& d) {
  std::optional<Witness> found;
  for_each_subset(d.size(), d.size(), [&](std::span<Vertex const> w) {
    return for_each_hom_from_induced(d, w, [&](PartialHom const& h) {
      if (extend_to_endomorphism(d, h)) return true;
      found = Witness{h, find_blocked_vertex(d, h)};
      return false;
    });
  });
  return found;
}

std::optional<Witness> one_point_witness(Digraph const& d) {
  std::optional<Witness> found;
  for_each_subset(d.size(), d.size() - 1, [&](std::span<Vertex const> w) {
    return for_each_hom_from_induced(d, w, [&](PartialHom const& h) {
      if (auto v = find_blocked_vertex(d, h)) {
        found = Witness{h, v};
        return false;
      }
      return true;
    });
  });
  return found;
}

}  // namespace

PartialHom::PartialHom(int n, std::span<Vertex const> domain, std::span<Vertex const> images)
    : image_(n, kUnmapped) {
  if (domain.size() != images.size()) throw std::invalid_argument("domain/image length mismatch");
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (domain[i] < 0 || domain[i] >= n) throw std::out_of_range("domain vertex out of range");
    if (image_[domain[i]] != kUnmapped) throw std::invalid_argument("duplicate domain vertex");
    assign(domain[i], images[i]);
  }
}

void PartialHom::assign(Vertex v, Vertex image) {
  if (image < 0 || image >= ambient_size())
    throw std::out_of_range("image " + std::to_string(image) + " out of range");
  image_[v] = image;
}

std::vector<Vertex> PartialHom::domain() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < ambient_size(); ++v)
    if (defined(v)) out.push_back(v);
  return out;
}

int PartialHom::domain_size() const {
  return static_cast<int>(std::count_if(image_.begin(), image_.end(),
                                        [](Vertex c) { return c != kUnmapped; }));
}

bool is_homomorphism(Digraph const& d, PartialHom const& h) {
  check_fits(d, h);
  for (Vertex x = 0; x < d.size(); ++x) {
    if (!h.defined(x)) continue;
    for (Vertex y = 0; y < d.size(); ++y)
      if (h.defined(y) && d.has_edge(x, y) && !d.has_edge(h[x], h[y])) return false;
  }
  return true;
}

bool is_homomorphism(Digraph const& a, Digraph const& d, std::span<Vertex const> map) {
  if (static_cast<int>(map.size()) != a.size()) throw std::invalid_argument("map is not total");
  for (Vertex c : map)
    if (c < 0 || c >= d.size()) throw std::out_of_range("map value out of range");
  for (Vertex x = 0; x < a.size(); ++x)
    for (Vertex y = 0; y < a.size(); ++y)
      if (a.has_edge(x, y) && !d.has_edge(map[x], map[y])) return false;
  return true;
}

std::vector<std::vector<Vertex>> enumerate_homs(Digraph const& a, Digraph const& d,
                                                std::optional<std::size_t> limit) {
  std::vector<std::vector<Vertex>> out;
  if (limit && *limit == 0) return out;
  std::vector<Vertex> map(a.size(), kUnmapped);
  auto fits = [&](Vertex v, Vertex c) {
    if (a.has_loop(v) && !d.has_loop(c)) return false;
    for (Vertex u = 0; u < v; ++u) {
      if (a.has_edge(u, v) && !d.has_edge(map[u], c)) return false;
      if (a.has_edge(v, u) && !d.has_edge(c, map[u])) return false;
    }
    return true;
  };
  std::function<bool(Vertex)> rec = [&](Vertex v) {
    if (v == a.size()) {
      out.push_back(map);
      return !(limit && out.size() >= *limit);
    }
    for (Vertex c = 0; c < d.size(); ++c) {
      if (!fits(v, c)) continue;
      map[v] = c;
      if (!rec(v + 1)) return false;
    }
    return true;
  };
  rec(0);
  return out;
}

bool for_each_hom_from_induced(Digraph const& d, std::span<Vertex const> domain,
                               std::function<bool(PartialHom const&)> const& visit) {
  for (Vertex v : domain)
    if (v < 0 || v >= d.size()) throw std::out_of_range("domain vertex out of range");
  PartialHom h(d.size());
  std::vector<Vertex> img(d.size(), kUnmapped);
  return homs_rec(d, domain, 0, h, img, visit);
}

std::optional<std::vector<Vertex>> extend_to_endomorphism(Digraph const& d, PartialHom const& h) {
  if (!is_homomorphism(d, h)) throw std::invalid_argument("partial map is not a homomorphism");
  std::vector<Vertex> img = h.images();
  auto const order = extension_order(d, h);
  if (!extend_rec(d, img, order, 0)) return std::nullopt;
  return img;
}

std::optional<PartialHom> one_point_extendable(Digraph const& d, PartialHom const& h, Vertex v) {
  check_fits(d, h);
  if (v < 0 || v >= d.size()) throw std::out_of_range("vertex out of range");
  if (h.defined(v)) throw std::invalid_argument("vertex already in the domain");
  for (Vertex c = 0; c < d.size(); ++c) {
    if (admissible(d, h.images(), v, c)) {
      PartialHom grown = h;
      grown.assign(v, c);
      return grown;
    }
  }
  return std::nullopt;
}

std::optional<Vertex> find_blocked_vertex(Digraph const& d, PartialHom const& h) {
  for (Vertex v = 0; v < d.size(); ++v) {
    if (h.defined(v)) continue;
    if (!one_point_extendable(d, h, v)) return v;
  }
  return std::nullopt;
}

Verdict is_hh(Digraph const& d, HhStrategy strategy) {
  std::optional<Witness> w;
  switch (strategy) {
    case HhStrategy::full_extension:
      w = full_extension_witness(d);
      break;
    case HhStrategy::one_point:
      w = one_point_witness(d);
      break;
    case HhStrategy::accelerated:
      if (!one_point_witness(d)) return Verdict::yes();
      w = full_extension_witness(d);
      if (!w) throw std::logic_error("one-point and full extension checks disagree");
      break;
  }
  return w ? Verdict::no(std::move(*w)) : Verdict::yes();
}

bool verify_witness(Digraph const& d, Witness const& w) {
  if (w.hom.ambient_size() != d.size() || w.hom.domain_size() == 0) return false;
  if (!is_homomorphism(d, w.hom)) return false;
  if (extend_to_endomorphism(d, w.hom)) return false;
  if (w.blocked_vertex) {
    Vertex const v = *w.blocked_vertex;
    if (v < 0 || v >= d.size() || w.hom.defined(v)) return false;
    if (one_point_extendable(d, w.hom, v)) return false;
  }
  return true;
}

}  // namespace hh
