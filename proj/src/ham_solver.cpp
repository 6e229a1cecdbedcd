#include "hyperham/ham_solver.hpp"

#include <bit>
#include <chrono>
#include <string>

namespace hyperham {

std::string_view to_string(SolveStatus status) noexcept {
  switch (status) {
    case SolveStatus::kFound:
      return "FOUND";
    case SolveStatus::kNotFound:
      return "NOT_FOUND";
    case SolveStatus::kUnknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

bool is_l_cycle_subgraph(const Hypergraph& h, const EllCyclePattern& pattern) {
  if (pattern.params.n != h.n() || pattern.params.r != h.r())
    throw ParameterError("pattern (n, r) does not match the hypergraph");
  for (const Edge& e : pattern.edges)
    if (!h.contains_edge(e)) return false;
  return true;
}

namespace {

class CycleSearch {
 public:
  enum class Mode { kDecide, kCount };

  CycleSearch(const Hypergraph& h, const CycleParameters& params, Mode mode, bool pin, std::uint64_t budget)
      : h_(h),
        params_(params),
        mode_(mode),
        pin_(pin && mode == Mode::kDecide),
        budget_(budget),
        all_(params.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << params.n) - 1),
        sub_(params.num_subblocks(), 0) {}

  // Runs the search; returns true iff stopped early (found, or out of budget).
  bool run() { return place(0, 0); }

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::uint64_t count() const noexcept { return count_; }
  bool out_of_budget() const noexcept { return out_of_budget_; }
  bool found() const noexcept { return found_; }

  std::vector<Vertex> arrangement() const {
    std::vector<Vertex> out;
    out.reserve(params_.n);
    for (std::uint64_t mask : sub_) {
      while (mask != 0) {
        out.push_back(static_cast<Vertex>(std::countr_zero(mask)) + 1);
        mask &= mask - 1;
      }
    }
    return out;
  }

 private:
  std::uint64_t window(unsigned first, unsigned count) const noexcept {
    std::uint64_t mask = 0;
    for (unsigned j = 0; j < count; ++j) mask |= sub_[(first + j) % sub_.size()];
    return mask;
  }

  bool leaf() {
    const unsigned reach = params_.reach();
    for (unsigned i = params_.m - reach; i < params_.m; ++i)
      if (!h_.contains_mask(window(2 * i, 2 * reach + 1))) return false;
    if (mode_ == Mode::kCount) {
      ++count_;
      return false;
    }
    found_ = true;
    return true;
  }

  bool place(unsigned k, std::uint64_t used) {
    if (k == params_.num_subblocks()) return leaf();
    const unsigned size = params_.subblock_size(k);
    if (size == 0) {
      sub_[k] = 0;
      return place(k + 1, used);
    }
    // Vertex 1 must sit in block 0: force it into the last nonempty subblock
    // of block 0 if subblock 0 did not take it.
    std::uint64_t required = 0;
    if (pin_ && ((k == 0 && params_.t == params_.s) || (k == 1 && (sub_[0] & 1U) == 0))) required = 1;

    const bool closes_edge = k % 2 == 0 && k / 2 >= params_.reach();
    const std::uint64_t base = closes_edge ? window(k - 2 * params_.reach(), 2 * params_.reach()) : 0;
    const std::uint64_t avail = all_ & ~used & ~required;
    return pick(k, used, avail, size - static_cast<unsigned>(std::popcount(required)), required, closes_edge, base);
  }

  // Chooses `remaining` more vertices from `avail` (ascending) into `chosen`.
  bool pick(unsigned k, std::uint64_t used, std::uint64_t avail, unsigned remaining, std::uint64_t chosen,
            bool closes_edge, std::uint64_t base) {
    if (remaining == 0) {
      if (budget_ != 0 && nodes_ >= budget_) {
        out_of_budget_ = true;
        return true;
      }
      ++nodes_;
      if (closes_edge && !h_.contains_mask(base | chosen)) return false;
      sub_[k] = chosen;
      return place(k + 1, used | chosen);
    }
    while (static_cast<unsigned>(std::popcount(avail)) >= remaining) {
      const std::uint64_t bit = avail & (~avail + 1);
      avail &= avail - 1;
      if (pick(k, used, avail, remaining - 1, chosen | bit, closes_edge, base)) return true;
    }
    return false;
  }

  const Hypergraph& h_;
  const CycleParameters params_;
  const Mode mode_;
  const bool pin_;
  const std::uint64_t budget_;
  const std::uint64_t all_;
  std::vector<std::uint64_t> sub_;
  std::uint64_t nodes_ = 0;
  std::uint64_t count_ = 0;
  bool out_of_budget_ = false;
  bool found_ = false;
};

CycleParameters solver_parameters(const Hypergraph& h, unsigned ell) {
  const CycleParameters params = make_parameters(h.r(), ell, h.n());
  if (params.n > 64) throw ParameterError("the solver supports n <= 64");
  return params;
}

// Every position of a Hamiltonian l-cycle lies in at least floor(r / s) of
// its edges (at least 1, and at least 2 once l > s).
bool degrees_admit_cycle(const Hypergraph& h, const CycleParameters& params) {
  const std::size_t min_degree = params.r / params.s;
  for (Vertex v = 1; v <= h.n(); ++v)
    if (h.degree(v) < min_degree) return false;
  return true;
}

}  // namespace

SolveResult find_hamiltonian_l_cycle(const Hypergraph& h, unsigned ell, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const CycleParameters params = solver_parameters(h, ell);
  SolveResult result;
  if (degrees_admit_cycle(h, params)) {
    CycleSearch search(h, params, CycleSearch::Mode::kDecide, options.pin_first_vertex, options.node_budget);
    search.run();
    result.stats.nodes = search.nodes();
    if (search.found()) {
      result.status = SolveStatus::kFound;
      result.certificate = cycle_from_permutation(params, search.arrangement());
    } else if (search.out_of_budget()) {
      result.status = SolveStatus::kUnknown;
    }
  }
  result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::uint64_t count_X(const Hypergraph& h, unsigned ell, std::uint64_t cap) {
  const CycleParameters params = solver_parameters(h, ell);
  const BigInt size = q_size(params);
  if (size > cap) throw CapExceeded("|Q_n| = " + size.str() + " exceeds cap " + std::to_string(cap));
  if (!degrees_admit_cycle(h, params)) return 0;
  CycleSearch search(h, params, CycleSearch::Mode::kCount, false, 0);
  search.run();
  return search.count();
}

}  // namespace hyperham
