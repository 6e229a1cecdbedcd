#pragma once

// How two Hamiltonian l-cycles H_sigma and H_tau meet: weak paths, minimal
// covers, canonical/non-canonical classification, and the overlap counts
// N(b), N_c(b, a) and the normalized sums Gamma, Gamma_c, Gamma'.

#include "hyperham/cycle_algebra.hpp"
#include "hyperham/exact.hpp"

#include <cstdint>
#include <vector>

namespace hyperham {

/// A maximal cyclic run of shared edges of H_sigma in which consecutive
/// members intersect. `edges` lists sigma-edge indices in cyclic order.
struct WeakPath {
  std::vector<unsigned> edges;
  /// Number of H_sigma edges from the first to the last member, inclusive.
  unsigned span = 0;
  /// True iff the members are consecutive in H_sigma, i.e. form an l-path.
  bool is_l_path() const noexcept { return span == edges.size(); }
};

/// An l-path inside H_sigma: edges start, start+1, ..., start+length-1 (mod m).
struct PathRun {
  unsigned start = 0;
  unsigned length = 0;
  friend bool operator==(const PathRun&, const PathRun&) = default;
};

/// a vertex-disjoint l-paths of H_sigma, b edges in total.
struct BAConfiguration {
  std::vector<PathRun> paths;
  unsigned b = 0;
  unsigned a() const noexcept { return static_cast<unsigned>(paths.size()); }
  /// Vertices covered, counted from the runs (each run of c edges spans (c-1)s + r positions).
  unsigned covered_vertices(const CycleParameters& params) const noexcept;
};

struct IntersectionProfile {
  unsigned b = 0;
  std::vector<WeakPath> components;
  unsigned a = 0;
  /// Every component is an l-path and b < m. Vacuously true for b = 0.
  bool canonical = false;
  bool full_cycle = false;
  /// The shared edges chain all the way around the cycle without forming
  /// it (b < m, single cyclic component); no l-path covers it. Counted as
  /// non-canonical.
  bool degenerate = false;
  /// Minimal covers of the components; empty when degenerate or full_cycle.
  BAConfiguration minimal_cover;
  /// Cover edges missing from the intersection (m - b when degenerate).
  unsigned k = 0;
};

/// Classifies an intersection given which sigma-edges are shared.
/// `shared.size()` must equal params.m.
IntersectionProfile profile_from_shared(const CycleParameters& params, const std::vector<bool>& shared);

IntersectionProfile intersection_profile(const CycleParameters& params, const BlockPermutation& sigma,
                                         const BlockPermutation& tau);

struct OverlapOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  /// Worker threads for the sharded enumeration of Q_n; 0 picks hardware concurrency.
  unsigned threads = 1;
};

/// N(b) for b = 0..m: number of tau in Q_n with |H_sigma ∩ H_tau| = b.
std::vector<std::uint64_t> n_counts(const CycleParameters& params, const BlockPermutation& sigma,
                                    const OverlapOptions& options = {});

struct CanonicalCounts {
  /// n[b] = N(b), b = 0..m.
  std::vector<std::uint64_t> n;
  /// nc[b][a] = N_c(b, a) for 1 <= a <= b < m; zero elsewhere.
  std::vector<std::vector<std::uint64_t>> nc;
  /// nc_total[b] = N_c(b) = sum_a N_c(b, a).
  std::vector<std::uint64_t> nc_total;
  /// n_prime[b] = N(b) - N_c(b) for 1 <= b < m; n_prime[0] = n_prime[m] = 0.
  std::vector<std::uint64_t> n_prime;
  /// N(m): tau with H_tau = H_sigma, kept out of both tallies.
  std::uint64_t full_cycle = 0;
  /// Non-canonical meetings whose shared edges wrap the whole cycle.
  std::uint64_t degenerate = 0;
};

CanonicalCounts nc_counts(const CycleParameters& params, const BlockPermutation& sigma,
                          const OverlapOptions& options = {});

/// Gamma = sum_{b>=1} N(b) p^{-b} / |Q_n| split as Gamma_c + Gamma', where
/// the full-cycle term N(m) p^{-m} / |Q_n| (also reported as gamma_full)
/// is carried by Gamma'. p = C * lambda * e^s / n^s with e from e_rational_50().
struct GammaDecomposition {
  Rational p;
  Rational gamma;
  Rational gamma_c;
  Rational gamma_prime;
  Rational gamma_full;
};

GammaDecomposition gamma_decomposition(const CycleParameters& params, const Rational& c,
                                       const OverlapOptions& options = {});
/// Same sums from precomputed counts and an explicit p.
GammaDecomposition gamma_from_counts(const CycleParameters& params, const CanonicalCounts& counts,
                                     const Rational& p);

}  // namespace hyperham
