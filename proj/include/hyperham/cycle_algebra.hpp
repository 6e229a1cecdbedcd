#pragma once

// Block/subblock structure of Hamiltonian l-cycles, the quotient
// Q_n = S_n / (S_t x S_{s-t})^m, the cycle H_sigma induced by a permutation,
// and the threshold p*.

#include "hyperham/exact.hpp"
#include "hyperham/hypergraph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace hyperham {

/// Raised when an enumeration would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

/// (r, l, s, t, lambda, n, m) for Hamiltonian l-cycles on n vertices.
///
/// s = r - l, t is the representative of r mod s in [1, s] (so t = s when
/// s | r), lambda = t! (s - t)!, m = n / s.
struct CycleParameters {
  unsigned r = 0;
  unsigned ell = 0;
  unsigned s = 0;
  unsigned t = 0;
  std::uint64_t lambda = 0;
  unsigned n = 0;
  unsigned m = 0;

  /// Number of whole blocks an edge spans before its closing t-subblock:
  /// r = reach * s + t. This is also the number of wrap-around edges.
  unsigned reach() const noexcept { return (r - t) / s; }
  /// Subblocks are indexed 2j (t-part of block j) and 2j+1 ((s-t)-part).
  unsigned num_subblocks() const noexcept { return 2 * m; }
  unsigned subblock_size(unsigned k) const noexcept { return k % 2 == 0 ? t : s - t; }
  unsigned subblock_start(unsigned k) const noexcept { return (k / 2) * s + (k % 2 == 0 ? 0 : t); }

  friend bool operator==(const CycleParameters&, const CycleParameters&) = default;
};

/// Validates r > l >= 1, s | n and n >= r + s.
CycleParameters make_parameters(unsigned r, unsigned ell, unsigned n);

struct ThresholdValue {
  double value = 0.0;
  bool exceeds_one = false;
};

/// p* = lambda e^s / n^s, unclamped.
ThresholdValue p_star(const CycleParameters& params);
/// Same formula without the divisibility and size guards (only r > l >= 1, n >= 1).
ThresholdValue p_star(unsigned r, unsigned ell, unsigned n);

/// p = C * lambda * e^s / n^s with e replaced by e_rational_50().
Rational p_star_rational(const CycleParameters& params, const Rational& c = 1);

/// A class of Q_n, stored as its canonical arrangement: ascending inside
/// every subblock. Two values compare equal iff they are subblock equivalent.
class BlockPermutation {
 public:
  /// The arrangement 1, 2, ..., n.
  static BlockPermutation identity(const CycleParameters& params);

  /// arrangement[i] is the vertex at position i + 1.
  std::span<const Vertex> arrangement() const noexcept { return arrangement_; }
  Vertex at(unsigned position) const noexcept { return arrangement_[position]; }
  unsigned n() const noexcept { return static_cast<unsigned>(arrangement_.size()); }

  friend bool operator==(const BlockPermutation&, const BlockPermutation&) = default;
  friend auto operator<=>(const BlockPermutation&, const BlockPermutation&) = default;

 private:
  friend BlockPermutation canonicalize(const CycleParameters&, std::span<const Vertex>);
  friend class QnEnumerator;
  explicit BlockPermutation(std::vector<Vertex> arrangement) : arrangement_(std::move(arrangement)) {}

  std::vector<Vertex> arrangement_;
};

/// Sorts each subblock. Throws ParameterError unless `arrangement` is a
/// permutation of {1..n}.
BlockPermutation canonicalize(const CycleParameters& params, std::span<const Vertex> arrangement);

/// Edges e_0..e_{m-1} of H_sigma, e_i = {sigma(is+1), ..., sigma(is+r)}
/// with positions mod n. Each edge is stored sorted.
struct EllCyclePattern {
  CycleParameters params;
  BlockPermutation permutation;
  std::vector<Edge> edges;
};

EllCyclePattern cycle_from_permutation(const CycleParameters& params, const BlockPermutation& sigma);
/// Canonicalizes first; subblock-equivalent inputs give identical output.
EllCyclePattern cycle_from_permutation(const CycleParameters& params, std::span<const Vertex> arrangement);

/// Bit (v - 1) set for each vertex of edge i of H_sigma; requires n <= 64.
std::vector<std::uint64_t> cycle_edge_masks(const CycleParameters& params, const BlockPermutation& sigma);

/// |Q_n| = n! / lambda^m.
BigInt q_size(const CycleParameters& params);

/// Streams the canonical representatives of Q_n without repeats.
///
/// A class is determined by which subblock each vertex lands in, so the
/// enumerator walks the distinct arrangements of the multiset of subblock
/// labels in lexicographic order. A shard fixes the content of subblock 0.
class QnEnumerator {
 public:
  /// Throws CapExceeded when q_size(params) > cap.
  explicit QnEnumerator(const CycleParameters& params, std::uint64_t cap = kDefaultEnumerationCap);
  /// Only classes whose first t-subblock is exactly `first_subblock`.
  QnEnumerator(const CycleParameters& params, std::span<const Vertex> first_subblock,
               std::uint64_t cap = kDefaultEnumerationCap);

  /// Next class, or nullopt once exhausted.
  std::optional<BlockPermutation> next();

 private:
  void build_current();

  CycleParameters params_;
  std::vector<Vertex> fixed_;         // content of subblock 0 for shards
  std::vector<Vertex> free_vertices_;  // ascending
  std::vector<unsigned> labels_;       // subblock label of free_vertices_[i]
  std::vector<Vertex> current_;
  bool done_ = false;
};

/// Contents of subblock 0 for each shard: all t-subsets of {1..n}, in
/// lexicographic order. The shards partition Q_n.
std::vector<std::vector<Vertex>> qn_shards(const CycleParameters& params);

/// Calls fn for each class of Q_n.
void for_each_in_qn(const CycleParameters& params, const std::function<void(const BlockPermutation&)>& fn,
                    std::uint64_t cap = kDefaultEnumerationCap);

/// Converts between the 1-based space-separated text form and arrangements.
std::vector<Vertex> parse_permutation(std::string_view text);
std::string format_permutation(std::span<const Vertex> arrangement);

}  // namespace hyperham
