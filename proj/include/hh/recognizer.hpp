#ifndef HH_RECOGNIZER_HPP_
#define HH_RECOGNIZER_HPP_

// Closed-form recognition of the finite irreflexive homomorphism-homogeneous
// digraphs (k copies of K_n, or k copies of the oriented triangle) and the
// explicit refutations for improper digraphs.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hh/digraph.hpp"
#include "hh/hom.hpp"

namespace hh {

// Raised when an input lies outside the class the classification covers
// (loops present) or outside a refutation's precondition.
class ScopeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Family {
  enum class Type { kKn, kC3, none };

  Type type = Type::none;
  int k = 0;  // copies
  int n = 0;  // clique size, kKn only

  static Family clique_copies(int k, int n) { return {Type::kKn, k, n}; }
  static Family triangle_copies(int k) { return {Type::kC3, k, 0}; }
  static Family no_family() { return {}; }

  bool is_hh() const { return type != Type::none; }
  bool operator==(Family const&) const = default;
};

std::string to_string(Family const& f);

// Polynomial time; throws ScopeError unless d is irreflexive.
Family classify_hh_irreflexive(Digraph const& d);

// Size-one witness {x -> v} for a double edge x <-> y and a vertex v on no
// double edge. Requires d irreflexive and improper.
std::optional<Witness> lemma1_witness(Digraph const& d);

struct CliqueViolation {
  std::vector<Vertex> theta_class;
  // Shortest double-edge chain z1 <-> z2 <-> ... <-> zk, k >= 3, z1 and z3
  // not doubly joined.
  std::vector<Vertex> chain;
  // z1 -> z2, z3 -> z3.
  PartialHom seed;
};

// The first theta-class that does not induce a complete graph, with its
// least shortest chain. No precondition.
std::optional<CliqueViolation> incomplete_theta_class(Digraph const& d);

// incomplete_theta_class restricted to irreflexive improper digraphs.
std::optional<CliqueViolation> lemma2_check(Digraph const& d);

struct CliqueGrowth {
  Witness witness;
  // x1, x2, ...: the images of z2 under the extensions that did exist.
  std::vector<Vertex> harvested;
  // Number of extension attempts, the failing one included.
  int iterations = 0;
};

// Starting from z1 -> z2, z3 -> z3, repeatedly extends, harvests the image of
// z2 and fixes it, until an extension fails. Requires d irreflexive and the
// chain to start z1 <-> z2 <-> z3 with z1, z3 not doubly joined.
CliqueGrowth clique_growth_refuter(Digraph const& d, std::vector<Vertex> const& chain);

// For a single edge x -> y with T the theta-class of y: x -> y, t -> t for
// t in T \ {y}. Requires d irreflexive and improper, every vertex on a
// double edge and every theta-class complete.
std::optional<Witness> proposition_witness(Digraph const& d);

// Tries lemma1_witness, then the clique-growth refutation of lemma2_check's
// violation, then proposition_witness. Requires d irreflexive and improper.
Witness refute_improper(Digraph const& d);

}  // namespace hh

#endif  // HH_RECOGNIZER_HPP_
