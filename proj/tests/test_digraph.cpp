#include "doctest.h"
#include "hh/digraph.hpp"
#include "oracles.hpp"

using namespace hh;

namespace {

Digraph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Digraph d(n);
  for (auto [x, y] : edges) d.add_edge(x, y);
  return d;
}

// a <-> b, b -> c
Digraph double_then_single() { return from_edges(3, {{0, 1}, {1, 0}, {1, 2}}); }

Digraph transitive_tournament() { return from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_CASE("complete graphs") {
  Digraph const k1 = make_complete(1);
  CHECK(k1 == make_trivial());
  CHECK(k1.edge_count() == 0);

  Digraph const k3 = make_complete(3);
  CHECK(k3.edge_count() == 6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(edge_kind(k3, i, j) == EdgeKind::double_edge);
  CHECK(is_irreflexive(k3));

  CHECK_THROWS_AS(make_complete(0), std::invalid_argument);
}

TEST_CASE("oriented cycles") {
  Digraph const c3 = make_cycle(3);
  CHECK(c3 == from_edges(3, {{0, 1}, {1, 2}, {2, 0}}));
  Kind const kind = classify_kind(c3);
  CHECK(kind.shape == Shape::proper);
  auto const theta = theta_partition(c3);
  CHECK(theta.class_count() == 3);
  CHECK(theta.omega() == 1);
  CHECK_FALSE(theta.theta_connected());

  Digraph const c4 = make_cycle(4);
  CHECK(c4.edge_count() == 4);
  CHECK(is_antisymmetric(c4));
  for (int v = 0; v < 4; ++v) {
    CHECK(std::popcount(c4.out_mask(v)) == 1);
    CHECK(std::popcount(c4.in_mask(v)) == 1);
  }

  CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
}

TEST_CASE("loop vertex") {
  Digraph const loop = make_loop_vertex();
  CHECK(loop.size() == 1);
  CHECK(loop.has_loop(0));
  CHECK(is_reflexive(loop));
  CHECK_FALSE(is_irreflexive(loop));
  int const all[] = {0};
  CHECK(induced(loop, all) == loop);
  CHECK(classify_kind(loop).reflexivity == Reflexivity::reflexive);
}

TEST_CASE("disjoint unions and copies") {
  Digraph const k2 = make_complete(2);
  CHECK(disjoint_union(k2, Digraph{}) == k2);
  CHECK(disjoint_union(Digraph{}, k2) == k2);
  CHECK(k_copies(0, k2).empty());
  CHECK(k_copies(1, k2) == k2);

  Digraph const two_points = disjoint_union(make_complete(1), make_complete(1));
  CHECK(two_points.size() == 2);
  CHECK(two_points.edge_count() == 0);
  CHECK(theta_partition(two_points).omega() == 2);

  Digraph const two_triangles = k_copies(2, make_cycle(3));
  CHECK(two_triangles.size() == 6);
  CHECK(two_triangles.edge_count() == 6);
  CHECK(theta_partition(two_triangles).omega() == 2);

  Digraph const three_k2 = k_copies(3, k2);
  CHECK(three_k2.size() == 6);
  CHECK(three_k2.edge_count() == 6);

  CHECK(is_isomorphic(k_copies(2, k2), disjoint_union(k2, k2)));
  CHECK(is_isomorphic(disjoint_union(k2, make_complete(1)), disjoint_union(make_complete(1), k2)));
}

TEST_CASE("induced subdigraphs") {
  int const w01[] = {0, 1};
  CHECK(induced(make_cycle(3), w01) == from_edges(2, {{0, 1}}));

  int const w123[] = {3, 1, 2};
  CHECK(induced(make_complete(4), w123) == make_complete(3));

  Digraph const d = double_then_single();
  int const all[] = {0, 1, 2};
  CHECK(induced(d, all) == d);

  // Relabelling keeps the ascending order of the chosen vertices.
  int const w02[] = {2, 0};
  CHECK(induced(make_cycle(3), w02) == from_edges(2, {{1, 0}}));

  CHECK_THROWS_AS(induced(d, std::span<int const>{}), std::invalid_argument);
  int const bad[] = {0, 3};
  CHECK_THROWS_AS(induced(d, bad), std::out_of_range);
  int const dup[] = {1, 1};
  CHECK_THROWS_AS(induced(d, dup), std::invalid_argument);
}

TEST_CASE("induced subdigraphs compose") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int const n = 2 + trial % 6;
    Digraph const d = oracle::random_digraph(rng, n, 0.4, true);
    std::vector<int> outer;
    for (int v = 0; v < n; ++v)
      if (rng() % 3 != 0) outer.push_back(v);
    if (outer.empty()) outer.push_back(0);
    std::vector<int> inner_positions;
    for (int i = 0; i < static_cast<int>(outer.size()); ++i)
      if (rng() % 2) inner_positions.push_back(i);
    if (inner_positions.empty()) inner_positions.push_back(0);
    std::vector<int> composed;
    for (int i : inner_positions) composed.push_back(outer[i]);
    CHECK(induced(induced(d, outer), inner_positions) == induced(d, composed));
  }
}

TEST_CASE("kind trichotomy") {
  CHECK(classify_kind(make_complete(3)) == Kind{Shape::graph, Reflexivity::irreflexive});
  CHECK(classify_kind(make_cycle(3)) == Kind{Shape::proper, Reflexivity::irreflexive});
  CHECK(classify_kind(double_then_single()) == Kind{Shape::improper, Reflexivity::irreflexive});
  CHECK(classify_kind(Digraph(3)).shape == Shape::graph);

  Digraph partly = make_cycle(3);
  partly.add_edge(0, 0);
  CHECK(classify_kind(partly).reflexivity == Reflexivity::neither);
}

TEST_CASE("edge kinds are determined by the two directions") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Digraph const d = oracle::random_digraph(rng, 5, 0.5, true);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        if (i == j) continue;
        bool const both = d.has_edge(i, j) && d.has_edge(j, i);
        CHECK((edge_kind(d, i, j) == EdgeKind::double_edge) == both);
        CHECK((edge_kind(d, j, i) == EdgeKind::double_edge) == both);
        CHECK(is_double_edge(d, i, j) == both);
      }
  }
}

TEST_CASE("theta partition examples") {
  auto const k3 = theta_partition(make_complete(3));
  CHECK(k3.class_count() == 1);
  CHECK(k3.omega() == 1);
  CHECK(k3.theta_connected());

  auto const two_k2 = theta_partition(k_copies(2, make_complete(2)));
  CHECK(two_k2.class_count() == 2);
  CHECK(two_k2.omega() == 2);
  CHECK(two_k2.theta_connected());

  CHECK(is_theta_connected(make_trivial()));
  CHECK_FALSE(is_theta_connected(make_cycle(3)));

  auto const mixed = theta_partition(double_then_single());
  CHECK(mixed.classes == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(mixed.components == std::vector<std::vector<int>>{{0, 1, 2}});
}

TEST_CASE("theta partition properties") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int const n = 1 + trial % 7;
    Digraph const d = oracle::random_digraph(rng, n, 0.35, trial % 2 == 0);
    auto const p = theta_partition(d);
    CHECK(p.omega() <= p.class_count());
    for (auto const& cls : p.classes) {
      int const comp = p.component_of[cls.front()];
      for (int v : cls) CHECK(p.component_of[v] == comp);
    }
    // Same class iff equal or joined by a chain of double edges.
    for (int x = 0; x < n; ++x) {
      std::vector<bool> reach(n, false);
      std::vector<int> stack{x};
      reach[x] = true;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u)
          if (!reach[u] && is_double_edge(d, v, u)) reach[u] = true, stack.push_back(u);
      }
      for (int y = 0; y < n; ++y) CHECK((p.class_of[x] == p.class_of[y]) == reach[y]);
    }
    if (is_symmetric(d)) CHECK(p.theta_connected());
    if (is_antisymmetric(d))
      for (auto const& cls : p.classes) CHECK(cls.size() == 1);
  }
}

TEST_CASE("canonical form examples") {
  Digraph const c3 = make_cycle(3);
  Digraph const canon = canonical_form(c3);
  for (auto const& p : oracle::all_permutations(3)) CHECK(canonical_form(relabel(c3, p)) == canon);

  Digraph const k2k1 = disjoint_union(make_complete(2), make_complete(1));
  Digraph const k1k2 = disjoint_union(make_complete(1), make_complete(2));
  CHECK(canonical_form(k2k1) == canonical_form(k1k2));

  // Both have three edges; the exhaustive oracle separates them.
  REQUIRE_FALSE(oracle::isomorphic(c3, transitive_tournament()));
  CHECK(canonical_form(c3) != canonical_form(transitive_tournament()));
  CHECK_FALSE(is_isomorphic(c3, transitive_tournament()));

  CHECK_FALSE(is_isomorphic(make_complete(3), c3));
  CHECK(is_isomorphic(double_then_single(), double_then_single()));

  CHECK_THROWS_AS(canonical_form(Digraph(kMaxCanonicalVertices + 1)), std::domain_error);
  CHECK(canonical_form(Digraph{}) == Digraph{});
}

TEST_CASE("canonical form is idempotent and a labelling of the input") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    int const n = 1 + trial % kMaxCanonicalVertices;
    Digraph const d = oracle::random_digraph(rng, n, 0.4, trial % 3 == 0);
    Digraph const c = canonical_form(d);
    CHECK(canonical_form(c) == c);
    CHECK(is_canonical(c));
    CHECK(relabel(d, canonical_labelling(d)) == c);
    auto const p = oracle::random_permutation(rng, n);
    CHECK(canonical_form(relabel(d, p)) == c);
    CHECK(decode(n, encode(d)) == d);
  }
}

TEST_CASE("is_isomorphic agrees with the permutation oracle, n <= 3 exhaustively") {
  for (int n = 1; n <= 3; ++n) {
    auto const all = oracle::all_labelled(n, n <= 2);
    for (auto const& a : all)
      for (auto const& b : all) REQUIRE(is_isomorphic(a, b) == oracle::isomorphic(a, b));
  }
  // n = 3 with loops: compare canonical forms against oracle keys.
  auto const looped = oracle::all_labelled(3, true);
  std::map<std::vector<std::pair<int, int>>, std::uint64_t> key_to_code;
  for (auto const& d : looped) {
    auto const key = oracle::brute_key(d);
    auto const code = canonical_encoding(d);
    auto [it, inserted] = key_to_code.emplace(key, code);
    REQUIRE(it->second == code);
  }
  std::set<std::uint64_t> codes;
  for (auto const& [key, code] : key_to_code) codes.insert(code);
  CHECK(codes.size() == key_to_code.size());
}

TEST_CASE("is_isomorphic agrees with the permutation oracle, n = 4 sampled") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 3000; ++trial) {
    bool const loops = trial % 4 == 0;
    Digraph const a = oracle::random_digraph(rng, 4, 0.5, loops);
    Digraph const b = trial % 2 ? relabel(a, oracle::random_permutation(rng, 4))
                                : oracle::random_digraph(rng, 4, 0.5, loops);
    REQUIRE(is_isomorphic(a, b) == oracle::isomorphic(a, b));
  }
}
