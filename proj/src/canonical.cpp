#include <algorithm>
#include <bit>
#include <string>

#include "canonical_detail.hpp"
#include "hh/digraph.hpp"

namespace hh {

namespace detail {

namespace {

constexpr int kCap = kMaxCanonicalVertices;

// Branch-and-bound over signature-respecting placements. Each position i
// contributes a block of 2i+1 bits; blocks are compared lexicographically
// against the incumbent so any prefix that is already larger is cut.
class LabelSearch {
 public:
  explicit LabelSearch(SmallDigraph const& d) : d_(d) {
    for (int v = 0; v < d.n; ++v) sig_[v] = signature(d, v);
    slot_sig_ = sig_;
    std::sort(slot_sig_.begin(), slot_sig_.begin() + d.n);
  }

  // Finds the least encoding.
  void minimise() {
    have_best_ = false;
    stop_on_improvement_ = false;
    recurse(0);
  }

  // Looks for any placement strictly below the identity labelling.
  bool identity_is_least() {
    for (int v = 0; v + 1 < d_.n; ++v)
      if (sig_[v] > sig_[v + 1]) return false;
    for (int i = 0; i < d_.n; ++i) {
      order_[i] = i;
      best_[i] = block(i, i);
    }
    best_order_ = order_;
    have_best_ = true;
    stop_on_improvement_ = true;
    improved_ = false;
    used_ = 0;
    recurse(0);
    return !improved_;
  }

  std::array<int, kCap> const& best_order() const { return best_order_; }

 private:
  // Block bits for placing vertex v at position i after order_[0..i-1].
  std::uint32_t block(int i, int v) const {
    std::uint32_t value = d_.has_edge(v, v) ? 1u : 0u;
    for (int j = 0; j < i; ++j) {
      int const u = order_[j];
      value = (value << 2) | (d_.has_edge(u, v) ? 2u : 0u) | (d_.has_edge(v, u) ? 1u : 0u);
    }
    return value;
  }

  // -1, 0, +1 comparing current_[0..i] against best_[0..i].
  int compare_prefix(int i) const {
    for (int j = 0; j <= i; ++j) {
      if (current_[j] < best_[j]) return -1;
      if (current_[j] > best_[j]) return 1;
    }
    return 0;
  }

  void recurse(int i) {
    if (i == d_.n) {
      best_ = current_;
      best_order_ = order_;
      have_best_ = true;
      improved_ = true;
      return;
    }
    for (int v = 0; v < d_.n; ++v) {
      if ((used_ >> v) & 1u) continue;
      if (sig_[v] != slot_sig_[i]) continue;
      order_[i] = v;
      current_[i] = block(i, v);
      if (have_best_) {
        int const cmp = compare_prefix(i);
        if (cmp > 0) continue;
        if (cmp == 0 && i + 1 == d_.n) continue;
      }
      used_ |= 1u << v;
      recurse(i + 1);
      used_ &= ~(1u << v);
      if (stop_on_improvement_ && improved_) return;
    }
  }

  SmallDigraph const& d_;
  std::array<std::uint32_t, kCap> sig_{};
  std::array<std::uint32_t, kCap> slot_sig_{};
  std::array<int, kCap> order_{};
  std::array<int, kCap> best_order_{};
  std::array<std::uint32_t, kCap> current_{};
  std::array<std::uint32_t, kCap> best_{};
  std::uint32_t used_ = 0;
  bool have_best_ = false;
  bool stop_on_improvement_ = false;
  bool improved_ = false;
};

}  // namespace

SmallDigraph small_from(Digraph const& d) {
  if (d.size() > kCap) {
    throw std::domain_error("canonical labelling is limited to " + std::to_string(kCap) +
                            " vertices, got " + std::to_string(d.size()));
  }
  SmallDigraph s;
  s.n = d.size();
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      if (d.has_edge(x, y)) s.add_edge(x, y);
  return s;
}

SmallDigraph small_decode(int n, std::uint64_t code) {
  SmallDigraph s;
  s.n = n;
  int const total = n * n;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((code >> (total - 1 - bit_position(x, y))) & 1u) s.add_edge(x, y);
  return s;
}

std::uint64_t small_encode(SmallDigraph const& d) {
  std::uint64_t code = 0;
  int const total = d.n * d.n;
  for (int x = 0; x < d.n; ++x)
    for (int y = 0; y < d.n; ++y)
      if (d.has_edge(x, y)) code |= std::uint64_t{1} << (total - 1 - bit_position(x, y));
  return code;
}

std::uint32_t signature(SmallDigraph const& d, int v) {
  auto const self = static_cast<std::uint8_t>(1u << v);
  std::uint32_t const loop = (d.out[v] & self) ? 1u : 0u;
  std::uint32_t const out = std::popcount(static_cast<unsigned>(d.out[v] & ~self));
  std::uint32_t const in = std::popcount(static_cast<unsigned>(d.in[v] & ~self));
  std::uint32_t const dbl = std::popcount(static_cast<unsigned>(d.out[v] & d.in[v] & ~self));
  return (loop << 24) | (out << 16) | (in << 8) | dbl;
}

bool small_is_canonical(SmallDigraph const& d) { return LabelSearch(d).identity_is_least(); }

std::array<int, kMaxCanonicalVertices> small_canonical_order(SmallDigraph const& d) {
  LabelSearch search(d);
  search.minimise();
  return search.best_order();
}

}  // namespace detail

std::uint64_t encode(Digraph const& d) { return detail::small_encode(detail::small_from(d)); }

Digraph decode(int n, std::uint64_t code) {
  if (n < 0 || n > kMaxCanonicalVertices)
    throw std::domain_error("encoding only defined up to " +
                            std::to_string(kMaxCanonicalVertices) + " vertices");
  auto const s = detail::small_decode(n, code);
  Digraph d(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (s.has_edge(x, y)) d.add_edge(x, y);
  return d;
}

std::vector<Vertex> canonical_labelling(Digraph const& d) {
  auto const s = detail::small_from(d);
  auto const order = detail::small_canonical_order(s);
  std::vector<Vertex> perm(d.size());
  for (int pos = 0; pos < d.size(); ++pos) perm[order[pos]] = pos;
  return perm;
}

Digraph canonical_form(Digraph const& d) { return relabel(d, canonical_labelling(d)); }

std::uint64_t canonical_encoding(Digraph const& d) { return encode(canonical_form(d)); }

bool is_canonical(Digraph const& d) { return detail::small_is_canonical(detail::small_from(d)); }

bool is_isomorphic(Digraph const& a, Digraph const& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace hh
