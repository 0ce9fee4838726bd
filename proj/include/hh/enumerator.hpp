#ifndef HH_ENUMERATOR_HPP_
#define HH_ENUMERATOR_HPP_

// Generation of digraphs up to isomorphism and the census that checks the
// brute-force homogeneity test against the closed-form recognizer.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hh/digraph.hpp"
#include "hh/hom.hpp"
#include "hh/recognizer.hpp"

namespace hh {

// Irreflexive enumeration walks 2^(n(n-1)) candidates, with loops 2^(n^2).
inline constexpr int kMaxEnumerationVertices = 6;
inline constexpr int kMaxEnumerationVerticesWithLoops = 5;

struct EnumFilter {
  bool irreflexive_only = true;
  std::optional<Shape> shape;
  bool connected_only = false;
};

// Worker count from HHCHECK_WORKERS, else the hardware concurrency.
int default_workers();

// Encodings of the canonical representatives, ascending. Each candidate
// relation is kept iff it is its own canonical form.
std::vector<std::uint64_t> enumerate_codes(int n, EnumFilter const& filter, int workers = 0);

std::vector<Digraph> enumerate_digraphs(int n, EnumFilter const& filter, int workers = 0);

struct Disagreement {
  Digraph digraph;
  Verdict checker;
  Family recognizer;
};

struct CensusRow {
  int n = 0;
  std::size_t total = 0;
  std::size_t graphs = 0;
  std::size_t proper = 0;
  std::size_t improper = 0;
  // Filled by verify_corollary only.
  std::size_t hh_checker = 0;
  std::size_t hh_recognizer = 0;
  // Improper digraphs the checker rejected with a witness that passed
  // verify_witness.
  std::size_t improper_refuted = 0;
  // Non-HH verdicts whose witness failed verification.
  std::size_t bad_witnesses = 0;
  std::vector<Family> hh_families;
  std::vector<Disagreement> disagreements;
};

struct CensusReport {
  bool hh_checked = false;
  std::vector<CensusRow> rows;

  std::size_t disagreement_count() const;
};

struct CensusOptions {
  int workers = 0;
  // Called with (n, digraphs checked so far, digraphs at this n), possibly
  // from several worker threads at once.
  std::function<void(int, std::size_t, std::size_t)> progress;
};

// Canonical irreflexive digraphs on 1..max_n vertices split by shape.
CensusReport census_by_kind(int max_n, CensusOptions const& options = {});

// As census_by_kind, plus is_hh and classify_hh_irreflexive on every
// digraph.
CensusReport verify_corollary(int max_n, CensusOptions const& options = {});

}  // namespace hh

#endif  // HH_ENUMERATOR_HPP_
