#include "hyperham/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace hyperham {

namespace {

void check_probability(const Rational& p) {
  if (p < 0 || p > 1) throw ParameterError("p must lie in [0, 1]");
}

std::vector<std::uint64_t> sorted_masks(const CycleParameters& params, const BlockPermutation& sigma) {
  auto masks = cycle_edge_masks(params, sigma);
  std::sort(masks.begin(), masks.end());
  return masks;
}

// |A ∪ B| for sorted, duplicate-free edge lists.
unsigned union_size(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  unsigned common = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return static_cast<unsigned>(a.size() + b.size()) - common;
}

Rational weighted_powers(const std::vector<std::uint64_t>& hist, const Rational& p) {
  Rational sum = 0;
  Rational power = 1;  // p^u
  for (std::size_t u = 0; u < hist.size(); ++u) {
    if (hist[u] != 0) sum += Rational(hist[u]) * power;
    power *= p;
  }
  return sum;
}

}  // namespace

ExactValue expected_X(const CycleParameters& params, const Rational& p) {
  check_probability(p);
  ExactValue out;
  out.exact = Rational(factorial(params.n)) * pow(p / Rational(params.lambda), params.m);
  out.log_value = out.exact == 0 ? -std::numeric_limits<double>::infinity() : log_rational(out.exact);
  return out;
}

double log_expected_X(const CycleParameters& params, double p) {
  if (!(p > 0.0 && p <= 1.0)) throw ParameterError("log_expected_X needs p in (0, 1]");
  return std::lgamma(static_cast<double>(params.n) + 1.0) +
         static_cast<double>(params.m) * (std::log(p) - std::log(static_cast<double>(params.lambda)));
}

Rational second_moment_X(const CycleParameters& params, const Rational& p, std::uint64_t cap) {
  check_probability(p);
  const auto id_masks = sorted_masks(params, BlockPermutation::identity(params));
  std::vector<std::uint64_t> hist(2 * params.m + 1, 0);
  QnEnumerator it(params, cap);
  while (auto tau = it.next()) ++hist[union_size(id_masks, sorted_masks(params, *tau))];
  return Rational(q_size(params)) * weighted_powers(hist, p);
}

Rational second_moment_all_pairs(const CycleParameters& params, const Rational& p, std::uint64_t pair_cap) {
  check_probability(p);
  const BigInt q = q_size(params);
  if (q * q > pair_cap)
    throw CapExceeded("pair enumeration of " + BigInt(q * q).str() + " pairs exceeds cap " + std::to_string(pair_cap));
  std::vector<std::vector<std::uint64_t>> all;
  all.reserve(q.convert_to<std::size_t>());
  QnEnumerator it(params, pair_cap);
  while (auto sigma = it.next()) all.push_back(sorted_masks(params, *sigma));
  std::vector<std::uint64_t> hist(2 * params.m + 1, 0);
  for (const auto& a : all)
    for (const auto& b : all) ++hist[union_size(a, b)];
  return weighted_powers(hist, p);
}

Rational second_moment_from_counts(const CycleParameters& params, const Rational& p,
                                   const std::vector<std::uint64_t>& n_of_b) {
  check_probability(p);
  if (n_of_b.size() != params.m + 1) throw ParameterError("N(b) must have m + 1 entries");
  Rational sum = 0;
  for (unsigned b = 0; b <= params.m; ++b) sum += Rational(n_of_b[b]) * pow(p, params.m - b);
  return Rational(q_size(params)) * pow(p, params.m) * sum;
}

BoundValue paley_zygmund_bound(const Rational& e_x, const Rational& e_x2) {
  if (e_x <= 0 || e_x2 <= 0) throw ParameterError("Paley-Zygmund bound needs positive moments");
  BoundValue out{e_x * e_x / e_x2, false};
  if (out.value > 1) {
    out.value = 1;
    out.clamped = true;
  }
  return out;
}

LogInterval stirling_bounds(unsigned n) {
  if (n < 1) throw ParameterError("stirling_bounds needs n >= 1");
  const double x = n;
  const double core = x * (std::log(x) - 1.0);
  return {0.5 * std::log(2.0 * std::numbers::pi * x) + core, 1.0 + 0.5 * std::log(x) + core};
}

double binom_upper(unsigned n, unsigned k) {
  if (k < 1 || k > n) throw ParameterError("binom_upper needs 1 <= k <= n");
  return static_cast<double>(k) * (1.0 + std::log(static_cast<double>(n)) - std::log(static_cast<double>(k)));
}

MomentReport moment_report(const CycleParameters& params, const Rational& p, std::uint64_t cap) {
  MomentReport out;
  out.e_x = expected_X(params, p);
  if (q_size(params) > cap) return out;
  out.e_x2 = second_moment_X(params, p, cap);
  if (out.e_x.exact > 0) {
    const Rational ratio = *out.e_x2 / (out.e_x.exact * out.e_x.exact);
    out.ratio = to_double(ratio);
    const BoundValue pz = paley_zygmund_bound(out.e_x.exact, *out.e_x2);
    out.pz_lower_bound = pz.value;
    out.pz_clamped = pz.clamped;
  }
  return out;
}

}  // namespace hyperham
