#pragma once

// First and second moments of X, the Paley-Zygmund lower bound, and the
// Stirling / binomial estimates used to reason about them.

#include "hyperham/cycle_algebra.hpp"
#include "hyperham/exact.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hyperham {

struct ExactValue {
  Rational exact;
  /// Natural log of `exact`; -inf when exact == 0.
  double log_value = 0.0;
};

/// E[X] = n! (p / lambda)^m, exactly.
ExactValue expected_X(const CycleParameters& params, const Rational& p);
/// log E[X] for parameters beyond exact reach; p > 0.
double log_expected_X(const CycleParameters& params, double p);

/// E[X^2] = |Q_n| * sum_tau p^{|H_id ∪ H_tau|}, fixing sigma = identity by
/// symmetry. Throws CapExceeded when |Q_n| > cap.
Rational second_moment_X(const CycleParameters& params, const Rational& p,
                         std::uint64_t cap = kDefaultEnumerationCap);
/// E[X^2] summed over all ordered pairs (sigma, tau); throws CapExceeded when |Q_n|^2 > pair_cap.
Rational second_moment_all_pairs(const CycleParameters& params, const Rational& p,
                                 std::uint64_t pair_cap = kDefaultEnumerationCap);
/// |Q_n| p^m sum_b N(b) p^{m-b} from overlap counts N(0..m).
Rational second_moment_from_counts(const CycleParameters& params, const Rational& p,
                                   const std::vector<std::uint64_t>& n_of_b);

struct BoundValue {
  Rational value;
  /// Inputs had E[X]^2 > E[X^2] and the bound was clamped to 1.
  bool clamped = false;
};

/// E[X]^2 / E[X^2], at most 1. Throws ParameterError unless both inputs are positive.
BoundValue paley_zygmund_bound(const Rational& e_x, const Rational& e_x2);

struct LogInterval {
  double log_lower = 0.0;
  double log_upper = 0.0;
};

/// log sqrt(2 pi n)(n/e)^n and log e sqrt(n)(n/e)^n, which sandwich log n!.
LogInterval stirling_bounds(unsigned n);
/// log (e n / k)^k, an upper bound on log C(n, k); requires 1 <= k <= n.
double binom_upper(unsigned n, unsigned k);

struct MomentReport {
  ExactValue e_x;
  /// Present when |Q_n| is within the enumeration cap.
  std::optional<Rational> e_x2;
  std::optional<double> ratio;
  std::optional<Rational> pz_lower_bound;
  bool pz_clamped = false;
};

MomentReport moment_report(const CycleParameters& params, const Rational& p,
                           std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace hyperham
