#pragma once

// r-uniform hypergraphs on the vertex set {1..n} and the binomial random
// model G^(r)(n, p).

#include "hyperham/rng.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace hyperham {

/// Vertices are 1-based labels in {1..n}.
using Vertex = std::uint32_t;
/// An edge is a sorted, duplicate-free list of r vertices.
using Edge = std::vector<Vertex>;

/// Raised when arguments violate an operation's preconditions.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Colex ranking of r-subsets of {1..n}: rank(e) = sum_i C(e_i - 1, i + 1)
/// with e sorted ascending and i counted from 0.
class ColexRanker {
 public:
  ColexRanker(unsigned n, unsigned r);

  unsigned n() const noexcept { return n_; }
  unsigned r() const noexcept { return r_; }
  std::uint64_t total() const noexcept { return total_; }

  /// `edge` must be sorted ascending and in range.
  std::uint64_t rank(std::span<const Vertex> edge) const noexcept;
  /// Rank of the r-set whose vertex v is bit (v - 1) of `mask` (n <= 64).
  std::uint64_t rank_mask(std::uint64_t mask) const noexcept;
  Edge unrank(std::uint64_t rank) const;

 private:
  std::uint64_t choose(unsigned x, unsigned k) const noexcept { return table_[x * (r_ + 1) + k]; }

  unsigned n_;
  unsigned r_;
  std::uint64_t total_;
  std::vector<std::uint64_t> table_;  // C(x, k) for x < n, k <= r
};

/// Immutable r-uniform hypergraph. Membership is O(r) through a bitset over
/// colex ranks (or binary search over sorted ranks when C(n, r) is huge).
class Hypergraph {
 public:
  /// Validates every edge; duplicates are merged.
  Hypergraph(unsigned n, unsigned r, std::span<const Edge> edges);
  /// Empty hypergraph.
  Hypergraph(unsigned n, unsigned r);

  static Hypergraph from_ranks(unsigned n, unsigned r, std::vector<std::uint64_t> ranks);

  unsigned n() const noexcept { return ranker_.n(); }
  unsigned r() const noexcept { return ranker_.r(); }
  std::size_t num_edges() const noexcept { return ranks_.size(); }
  const ColexRanker& ranker() const noexcept { return ranker_; }

  /// Order-insensitive; throws ParameterError for wrong size, repeated or
  /// out-of-range vertices.
  bool contains_edge(std::span<const Vertex> edge) const;
  bool contains_rank(std::uint64_t rank) const noexcept;
  /// Fast path for n <= 64: vertex v is bit (v - 1). Caller guarantees popcount == r.
  bool contains_mask(std::uint64_t mask) const noexcept { return contains_rank(ranker_.rank_mask(mask)); }

  /// Edges in colex order.
  std::vector<Edge> edges() const;
  const std::vector<std::uint64_t>& edge_ranks() const noexcept { return ranks_; }
  /// Number of edges containing v.
  std::size_t degree(Vertex v) const { return degree_.at(v - 1); }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) noexcept {
    return a.n() == b.n() && a.r() == b.r() && a.ranks_ == b.ranks_;
  }

 private:
  Hypergraph(ColexRanker ranker, std::vector<std::uint64_t> sorted_ranks);
  void build_index();

  ColexRanker ranker_;
  std::vector<std::uint64_t> ranks_;  // sorted, unique
  std::vector<std::uint64_t> bits_;   // empty when C(n, r) exceeds the bitset limit
  std::vector<std::size_t> degree_;
};

Hypergraph complete_hypergraph(unsigned n, unsigned r);

/// H plus the given edges.
Hypergraph with_edges(const Hypergraph& h, std::span<const Edge> extra);

/// G^(r)(n, p): walks all C(n, r) r-sets in colex order, drawing one uniform
/// u_e per set and keeping e iff u_e < p. Two calls with the same seed and
/// p1 <= p2 therefore give nested edge sets.
Hypergraph sample_gnp(unsigned n, unsigned r, double p, RngSeed seed);

/// Same distribution via geometric skipping; O(expected edges) draws. Not
/// coupled across p.
Hypergraph sample_gnp_skip(unsigned n, unsigned r, double p, RngSeed seed);

/// Text format: first line "n r", then one edge per line as r space-separated
/// 1-based labels.
Hypergraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Hypergraph& h);

}  // namespace hyperham
