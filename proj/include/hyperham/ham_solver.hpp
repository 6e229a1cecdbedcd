#pragma once

// Exact search for Hamiltonian l-cycles.
//
// The search fills positions subblock by subblock. Each step picks the next
// subblock as an unordered set of unused vertices, so subblock-equivalent
// partial arrangements are never distinguished and the tree ranges over
// Q_n rather than S_n. Every edge of H_sigma starts at a block boundary and
// ends with a t-subblock, so an edge is tested the moment its closing
// t-subblock is placed; the reach() wrap-around edges are tested at the leaf.

#include "hyperham/cycle_algebra.hpp"
#include "hyperham/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace hyperham {

enum class SolveStatus { kFound, kNotFound, kUnknown };

std::string_view to_string(SolveStatus status) noexcept;

struct SolveStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kNotFound;
  std::optional<EllCyclePattern> certificate;
  SolveStats stats;

  bool found() const noexcept { return status == SolveStatus::kFound; }
};

struct SolveOptions {
  /// Maximum search nodes; 0 means unlimited. Hitting it yields kUnknown.
  std::uint64_t node_budget = 0;
  /// Require vertex 1 in block 0. Every cycle has a block rotation that
  /// satisfies this, so the decision stays exact.
  bool pin_first_vertex = true;
};

/// True iff every edge of the pattern is an edge of h.
bool is_l_cycle_subgraph(const Hypergraph& h, const EllCyclePattern& pattern);

/// Decides whether h contains a Hamiltonian l-cycle. Requires n <= 64.
SolveResult find_hamiltonian_l_cycle(const Hypergraph& h, unsigned ell, const SolveOptions& options = {});

/// X = #{sigma in Q_n : H_sigma subset of h}. Throws CapExceeded when
/// |Q_n| > cap. Requires n <= 64.
std::uint64_t count_X(const Hypergraph& h, unsigned ell, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace hyperham
