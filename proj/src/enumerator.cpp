#include "hh/enumerator.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <cstring>
#include <string>
#include <thread>

#include "canonical_detail.hpp"

namespace hh {

namespace {

constexpr int kChunkBits = 8;
constexpr int kPrefixBits = 8;

struct Contribution {
  std::uint64_t code = 0;
  std::uint64_t out = 0;  // row x in byte x
  std::uint64_t in = 0;
};

// Splits the free bits of the candidate counter (most significant first) into
// byte chunks and tabulates what each byte value contributes.
class CandidateTable {
 public:
  CandidateTable(int n, bool loops) : n_(n) {
    std::vector<std::pair<int, int>> pairs;  // free pairs in encoding order
    std::vector<std::pair<int, int>> all(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) all[detail::bit_position(x, y)] = {x, y};
    for (auto const& p : all)
      if (loops || p.first != p.second) pairs.push_back(p);
    free_bits_ = static_cast<int>(pairs.size());
    int const chunks = (free_bits_ + kChunkBits - 1) / kChunkBits;
    tables_.assign(chunks, std::vector<Contribution>(1u << kChunkBits));
    for (int c = 0; c < chunks; ++c) {
      for (unsigned value = 0; value < (1u << kChunkBits); ++value) {
        Contribution entry;
        for (int b = 0; b < kChunkBits; ++b) {
          if (!((value >> b) & 1u)) continue;
          int const counter_bit = c * kChunkBits + b;  // from the least significant end
          if (counter_bit >= free_bits_) continue;
          auto const [x, y] = pairs[free_bits_ - 1 - counter_bit];
          entry.code |= std::uint64_t{1} << (n * n - 1 - detail::bit_position(x, y));
          entry.out |= std::uint64_t{1} << (8 * x + y);
          entry.in |= std::uint64_t{1} << (8 * y + x);
        }
        tables_[c][value] = entry;
      }
    }
  }

  int free_bits() const { return free_bits_; }

  Contribution lookup(std::uint64_t counter) const {
    Contribution sum;
    for (std::size_t c = 0; c < tables_.size(); ++c) {
      auto const& e = tables_[c][(counter >> (c * kChunkBits)) & 0xffu];
      sum.code |= e.code;
      sum.out |= e.out;
      sum.in |= e.in;
    }
    return sum;
  }

  detail::SmallDigraph unpack(Contribution const& c) const {
    detail::SmallDigraph d;
    d.n = n_;
    std::memcpy(d.out.data(), &c.out, sizeof(c.out));
    std::memcpy(d.in.data(), &c.in, sizeof(c.in));
    return d;
  }

 private:
  int n_;
  int free_bits_ = 0;
  std::vector<std::vector<Contribution>> tables_;
};

bool signatures_sorted(detail::SmallDigraph const& d) {
  std::uint32_t prev = 0;
  for (int v = 0; v < d.n; ++v) {
    std::uint32_t const s = detail::signature(d, v);
    if (s < prev) return false;
    prev = s;
  }
  return true;
}

Shape small_shape(detail::SmallDigraph const& d) {
  bool symmetric = true;
  bool antisymmetric = true;
  for (int v = 0; v < d.n; ++v) {
    auto const self = static_cast<std::uint8_t>(1u << v);
    if ((d.out[v] & ~self) != (d.in[v] & ~self)) symmetric = false;
    if ((d.out[v] & d.in[v] & ~self) != 0) antisymmetric = false;
  }
  if (symmetric) return Shape::graph;
  if (antisymmetric) return Shape::proper;
  return Shape::improper;
}

bool small_connected(detail::SmallDigraph const& d) {
  if (d.n == 0) return true;
  unsigned reached = 1;
  unsigned frontier = 1;
  while (frontier) {
    unsigned next = 0;
    for (unsigned f = frontier; f; f &= f - 1) {
      int const v = std::countr_zero(f);
      next |= d.out[v] | d.in[v];
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == (1u << d.n) - 1;
}

template <typename Job>
void run_parallel(std::size_t jobs, int workers, Job const& job) {
  int const count = std::max(1, std::min<int>(workers, static_cast<int>(jobs)));
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (std::size_t j = next++; j < jobs; j = next++) job(j);
  };
  if (count == 1) {
    loop();
    return;
  }
  std::vector<std::jthread> pool;
  for (int w = 0; w < count; ++w) pool.emplace_back(loop);
}

int resolve_workers(int requested) { return requested > 0 ? requested : default_workers(); }

void check_n(int n, EnumFilter const& filter) {
  int const cap = filter.irreflexive_only ? kMaxEnumerationVertices : kMaxEnumerationVerticesWithLoops;
  if (n < 1 || n > cap)
    throw std::invalid_argument("enumeration supports 1.." + std::to_string(cap) +
                                " vertices, got " + std::to_string(n));
}

CensusReport run_census(int max_n, CensusOptions const& options, bool check_hh) {
  if (max_n < 1 || max_n > kMaxEnumerationVertices)
    throw std::invalid_argument("census supports 1.." + std::to_string(kMaxEnumerationVertices) +
                                " vertices, got " + std::to_string(max_n));
  int const workers = resolve_workers(options.workers);
  CensusReport report;
  report.hh_checked = check_hh;
  for (int n = 1; n <= max_n; ++n) {
    auto const codes = enumerate_codes(n, EnumFilter{}, workers);
    CensusRow row;
    row.n = n;
    row.total = codes.size();

    struct Outcome {
      Shape shape = Shape::graph;
      bool checker_hh = false;
      bool witness_ok = true;
      Family family;
    };
    std::vector<Outcome> outcomes(codes.size());
    std::atomic<std::size_t> done{0};
    constexpr std::size_t kBatch = 256;
    std::size_t const batches = (codes.size() + kBatch - 1) / kBatch;
    run_parallel(batches, workers, [&](std::size_t b) {
      std::size_t const end = std::min(codes.size(), (b + 1) * kBatch);
      for (std::size_t i = b * kBatch; i < end; ++i) {
        Digraph const d = decode(n, codes[i]);
        Outcome& o = outcomes[i];
        o.shape = classify_kind(d).shape;
        if (!check_hh) continue;
        Verdict const v = is_hh(d);
        o.checker_hh = v.hh;
        o.witness_ok = v.hh || verify_witness(d, *v.witness);
        o.family = classify_hh_irreflexive(d);
      }
      std::size_t const finished = done += end - b * kBatch;
      if (options.progress) options.progress(n, finished, codes.size());
    });

    for (std::size_t i = 0; i < codes.size(); ++i) {
      Outcome const& o = outcomes[i];
      switch (o.shape) {
        case Shape::graph: ++row.graphs; break;
        case Shape::proper: ++row.proper; break;
        case Shape::improper: ++row.improper; break;
      }
      if (!check_hh) continue;
      row.hh_checker += o.checker_hh;
      row.hh_recognizer += o.family.is_hh();
      if (!o.witness_ok) ++row.bad_witnesses;
      if (o.shape == Shape::improper && !o.checker_hh && o.witness_ok) ++row.improper_refuted;
      if (o.family.is_hh()) row.hh_families.push_back(o.family);
      if (o.checker_hh != o.family.is_hh()) {
        Digraph d = decode(n, codes[i]);
        Verdict v = is_hh(d);
        row.disagreements.push_back({std::move(d), std::move(v), o.family});
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace

int default_workers() {
  if (char const* env = std::getenv("HHCHECK_WORKERS")) {
    int const value = std::atoi(env);
    if (value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::uint64_t> enumerate_codes(int n, EnumFilter const& filter, int workers) {
  check_n(n, filter);
  CandidateTable const table(n, !filter.irreflexive_only);
  int const free_bits = table.free_bits();
  int const prefix_bits = std::min(kPrefixBits, free_bits);
  int const suffix_bits = free_bits - prefix_bits;
  std::size_t const partitions = std::size_t{1} << prefix_bits;

  std::vector<std::vector<std::uint64_t>> found(partitions);
  run_parallel(partitions, resolve_workers(workers), [&](std::size_t p) {
    std::uint64_t const base = static_cast<std::uint64_t>(p) << suffix_bits;
    std::uint64_t const span = std::uint64_t{1} << suffix_bits;
    for (std::uint64_t low = 0; low < span; ++low) {
      Contribution const c = table.lookup(base | low);
      detail::SmallDigraph const d = table.unpack(c);
      if (!signatures_sorted(d)) continue;
      if (filter.shape && small_shape(d) != *filter.shape) continue;
      if (filter.connected_only && !small_connected(d)) continue;
      if (!detail::small_is_canonical(d)) continue;
      found[p].push_back(c.code);
    }
  });

  std::vector<std::uint64_t> codes;
  for (auto const& part : found) codes.insert(codes.end(), part.begin(), part.end());
  return codes;
}

std::vector<Digraph> enumerate_digraphs(int n, EnumFilter const& filter, int workers) {
  auto const codes = enumerate_codes(n, filter, workers);
  std::vector<Digraph> out;
  out.reserve(codes.size());
  for (auto code : codes) out.push_back(decode(n, code));
  return out;
}

std::size_t CensusReport::disagreement_count() const {
  std::size_t total = 0;
  for (auto const& row : rows) total += row.disagreements.size();
  return total;
}

CensusReport census_by_kind(int max_n, CensusOptions const& options) {
  return run_census(max_n, options, false);
}

CensusReport verify_corollary(int max_n, CensusOptions const& options) {
  return run_census(max_n, options, true);
}

}  // namespace hh
