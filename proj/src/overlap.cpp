#include "hyperham/overlap.hpp"

#include "hyperham/parallel.hpp"

#include <algorithm>
#include <string>

namespace hyperham {

unsigned BAConfiguration::covered_vertices(const CycleParameters& params) const noexcept {
  std::vector<bool> covered(params.n, false);
  for (const PathRun& run : paths)
    for (unsigned e = 0; e < run.length; ++e)
      for (unsigned j = 0; j < params.r; ++j) covered[(((run.start + e) % params.m) * params.s + j) % params.n] = true;
  return static_cast<unsigned>(std::count(covered.begin(), covered.end(), true));
}

IntersectionProfile profile_from_shared(const CycleParameters& params, const std::vector<bool>& shared) {
  if (shared.size() != params.m) throw ParameterError("shared-edge mask must have m entries");
  const unsigned m = params.m;
  IntersectionProfile out;
  std::vector<unsigned> idx;
  for (unsigned i = 0; i < m; ++i)
    if (shared[i]) idx.push_back(i);
  out.b = static_cast<unsigned>(idx.size());
  if (out.b == 0) {
    out.canonical = true;
    return out;
  }
  if (out.b == m) {
    out.full_cycle = true;
    out.components.push_back({idx, m});
    out.a = 1;
    return out;
  }

  // Edges i and j (j after i cyclically) intersect iff (j - i) * s < r.
  // Forward distance in 1..m; an edge is m steps from itself.
  const auto step = [&](unsigned from, unsigned to) { return (to + m - from - 1) % m + 1; };
  const auto joined = [&](unsigned from, unsigned to) { return step(from, to) * params.s < params.r; };

  // Start at a shared edge whose cyclic predecessor is not joined to it.
  std::size_t start = idx.size();
  for (std::size_t j = 0; j < idx.size(); ++j) {
    const unsigned prev = idx[(j + idx.size() - 1) % idx.size()];
    if (!joined(prev, idx[j])) {
      start = j;
      break;
    }
  }
  if (start == idx.size()) {
    out.degenerate = true;
    out.components.push_back({idx, m});
    out.a = 1;
    out.k = m - out.b;
    return out;
  }

  WeakPath current;
  const auto close = [&] {
    current.span = (current.edges.back() + m - current.edges.front()) % m + 1;
    out.components.push_back(std::move(current));
    current = {};
  };
  for (std::size_t j = 0; j < idx.size(); ++j) {
    const unsigned e = idx[(start + j) % idx.size()];
    if (!current.edges.empty() && !joined(current.edges.back(), e)) close();
    current.edges.push_back(e);
  }
  close();

  out.a = static_cast<unsigned>(out.components.size());
  out.canonical = true;
  out.minimal_cover.b = 0;
  for (const WeakPath& w : out.components) {
    out.canonical = out.canonical && w.is_l_path();
    out.minimal_cover.paths.push_back({w.edges.front(), w.span});
    out.minimal_cover.b += w.span;
    out.k += w.span - static_cast<unsigned>(w.edges.size());
  }
  return out;
}

namespace {

void check_small(const CycleParameters& params) {
  if (params.n > 64) throw ParameterError("overlap analysis supports n <= 64");
}

std::vector<bool> shared_edges(const std::vector<std::uint64_t>& sigma_masks, std::vector<std::uint64_t> tau_masks) {
  std::sort(tau_masks.begin(), tau_masks.end());
  std::vector<bool> shared(sigma_masks.size());
  for (std::size_t i = 0; i < sigma_masks.size(); ++i)
    shared[i] = std::binary_search(tau_masks.begin(), tau_masks.end(), sigma_masks[i]);
  return shared;
}

// Visits every tau in Q_n, one accumulator per shard, merged in shard order.
template <typename Acc, typename Visit, typename Merge>
Acc sharded_over_qn(const CycleParameters& params, const OverlapOptions& options, const Acc& zero, Visit visit,
                    Merge merge) {
  const BigInt size = q_size(params);
  if (size > options.cap) throw CapExceeded("|Q_n| = " + size.str() + " exceeds cap " + std::to_string(options.cap));
  const auto shards = qn_shards(params);
  std::vector<Acc> partial(shards.size(), zero);
  parallel_for(shards.size(), options.threads, [&](std::size_t i) {
    QnEnumerator it(params, shards[i], options.cap);
    while (auto tau = it.next()) visit(*tau, partial[i]);
  });
  Acc total = zero;
  for (const Acc& p : partial) merge(total, p);
  return total;
}

}  // namespace

IntersectionProfile intersection_profile(const CycleParameters& params, const BlockPermutation& sigma,
                                         const BlockPermutation& tau) {
  check_small(params);
  if (sigma.n() != params.n || tau.n() != params.n) throw ParameterError("permutations do not match parameters");
  return profile_from_shared(params,
                             shared_edges(cycle_edge_masks(params, sigma), cycle_edge_masks(params, tau)));
}

std::vector<std::uint64_t> n_counts(const CycleParameters& params, const BlockPermutation& sigma,
                                    const OverlapOptions& options) {
  check_small(params);
  const auto sigma_masks = cycle_edge_masks(params, sigma);
  std::vector<std::uint64_t> zero(params.m + 1, 0);
  return sharded_over_qn(
      params, options, zero,
      [&](const BlockPermutation& tau, std::vector<std::uint64_t>& acc) {
        const auto shared = shared_edges(sigma_masks, cycle_edge_masks(params, tau));
        ++acc[static_cast<std::size_t>(std::count(shared.begin(), shared.end(), true))];
      },
      [](std::vector<std::uint64_t>& total, const std::vector<std::uint64_t>& part) {
        for (std::size_t b = 0; b < total.size(); ++b) total[b] += part[b];
      });
}

CanonicalCounts nc_counts(const CycleParameters& params, const BlockPermutation& sigma,
                          const OverlapOptions& options) {
  check_small(params);
  const unsigned m = params.m;
  const auto sigma_masks = cycle_edge_masks(params, sigma);
  CanonicalCounts zero;
  zero.n.assign(m + 1, 0);
  zero.nc.assign(m + 1, std::vector<std::uint64_t>(m + 1, 0));
  zero.nc_total.assign(m + 1, 0);
  zero.n_prime.assign(m + 1, 0);
  return sharded_over_qn(
      params, options, zero,
      [&](const BlockPermutation& tau, CanonicalCounts& acc) {
        const auto profile = profile_from_shared(params, shared_edges(sigma_masks, cycle_edge_masks(params, tau)));
        ++acc.n[profile.b];
        if (profile.b == 0) return;
        if (profile.full_cycle) {
          ++acc.full_cycle;
        } else if (profile.canonical) {
          ++acc.nc[profile.b][profile.a];
          ++acc.nc_total[profile.b];
        } else {
          ++acc.n_prime[profile.b];
          if (profile.degenerate) ++acc.degenerate;
        }
      },
      [](CanonicalCounts& total, const CanonicalCounts& part) {
        for (std::size_t b = 0; b < total.n.size(); ++b) {
          total.n[b] += part.n[b];
          total.nc_total[b] += part.nc_total[b];
          total.n_prime[b] += part.n_prime[b];
          for (std::size_t a = 0; a < total.nc[b].size(); ++a) total.nc[b][a] += part.nc[b][a];
        }
        total.full_cycle += part.full_cycle;
        total.degenerate += part.degenerate;
      });
}

GammaDecomposition gamma_from_counts(const CycleParameters& params, const CanonicalCounts& counts,
                                     const Rational& p) {
  if (p <= 0) throw ParameterError("gamma needs p > 0");
  const Rational q(q_size(params));
  const Rational inv_p = 1 / p;
  GammaDecomposition out;
  out.p = p;
  Rational inv_pow = 1;
  for (unsigned b = 1; b <= params.m; ++b) {
    inv_pow *= inv_p;
    const Rational weight = inv_pow / q;
    out.gamma += Rational(counts.n[b]) * weight;
    if (b < params.m) {
      out.gamma_c += Rational(counts.nc_total[b]) * weight;
      out.gamma_prime += Rational(counts.n_prime[b]) * weight;
    } else {
      out.gamma_full = Rational(counts.full_cycle) * weight;
    }
  }
  out.gamma_prime += out.gamma_full;
  return out;
}

GammaDecomposition gamma_decomposition(const CycleParameters& params, const Rational& c,
                                       const OverlapOptions& options) {
  if (c <= 0) throw ParameterError("C must be positive");
  const CanonicalCounts counts = nc_counts(params, BlockPermutation::identity(params), options);
  return gamma_from_counts(params, counts, p_star_rational(params, c));
}

}  // namespace hyperham
