#include "hyperham/cycle_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace hyperham {

namespace {

std::uint64_t small_factorial(unsigned k) {
  std::uint64_t out = 1;
  for (unsigned i = 2; i <= k; ++i) out *= i;
  return out;
}

// t in [1, s] with t = r mod s.
unsigned residue_t(unsigned r, unsigned s) { return r % s == 0 ? s : r % s; }

void check_overlap(unsigned r, unsigned ell) {
  if (ell < 1 || ell >= r)
    throw ParameterError("cycle parameters need r > l >= 1 (got r=" + std::to_string(r) +
                         ", l=" + std::to_string(ell) + ")");
  if (r - ell > 20) throw ParameterError("s = r - l > 20 is not supported (lambda overflows 64 bits)");
}

}  // namespace

CycleParameters make_parameters(unsigned r, unsigned ell, unsigned n) {
  check_overlap(r, ell);
  CycleParameters p;
  p.r = r;
  p.ell = ell;
  p.s = r - ell;
  p.t = residue_t(r, p.s);
  p.lambda = small_factorial(p.t) * small_factorial(p.s - p.t);
  if (n % p.s != 0)
    throw ParameterError("s = " + std::to_string(p.s) + " does not divide n = " + std::to_string(n));
  if (n < r + p.s)
    throw ParameterError("degenerate size: need n >= r + s = " + std::to_string(r + p.s));
  p.n = n;
  p.m = n / p.s;
  return p;
}

ThresholdValue p_star(unsigned r, unsigned ell, unsigned n) {
  check_overlap(r, ell);
  if (n < 1) throw ParameterError("p_star needs n >= 1");
  const unsigned s = r - ell;
  const unsigned t = residue_t(r, s);
  const double lambda = static_cast<double>(small_factorial(t) * small_factorial(s - t));
  const double value = lambda * std::exp(static_cast<double>(s)) / std::pow(static_cast<double>(n), s);
  return {value, value > 1.0};
}

ThresholdValue p_star(const CycleParameters& params) { return p_star(params.r, params.ell, params.n); }

Rational p_star_rational(const CycleParameters& params, const Rational& c) {
  const Rational es = pow(e_rational_50(), params.s);
  const Rational ns = pow(Rational(params.n), params.s);
  return c * Rational(params.lambda) * es / ns;
}

BlockPermutation BlockPermutation::identity(const CycleParameters& params) {
  std::vector<Vertex> a(params.n);
  for (unsigned i = 0; i < params.n; ++i) a[i] = i + 1;
  return BlockPermutation(std::move(a));
}

BlockPermutation canonicalize(const CycleParameters& params, std::span<const Vertex> arrangement) {
  if (arrangement.size() != params.n)
    throw ParameterError("arrangement has length " + std::to_string(arrangement.size()) + ", expected n = " +
                         std::to_string(params.n));
  std::vector<bool> seen(params.n + 1, false);
  for (const Vertex v : arrangement) {
    if (v < 1 || v > params.n || seen[v]) throw ParameterError("arrangement is not a permutation of {1..n}");
    seen[v] = true;
  }
  std::vector<Vertex> a(arrangement.begin(), arrangement.end());
  for (unsigned k = 0; k < params.num_subblocks(); ++k) {
    const auto first = a.begin() + params.subblock_start(k);
    std::sort(first, first + params.subblock_size(k));
  }
  return BlockPermutation(std::move(a));
}

EllCyclePattern cycle_from_permutation(const CycleParameters& params, const BlockPermutation& sigma) {
  if (sigma.n() != params.n) throw ParameterError("permutation size does not match parameters");
  EllCyclePattern out{params, sigma, {}};
  out.edges.reserve(params.m);
  for (unsigned i = 0; i < params.m; ++i) {
    Edge e(params.r);
    for (unsigned j = 0; j < params.r; ++j) e[j] = sigma.at((i * params.s + j) % params.n);
    std::sort(e.begin(), e.end());
    out.edges.push_back(std::move(e));
  }
  return out;
}

EllCyclePattern cycle_from_permutation(const CycleParameters& params, std::span<const Vertex> arrangement) {
  return cycle_from_permutation(params, canonicalize(params, arrangement));
}

std::vector<std::uint64_t> cycle_edge_masks(const CycleParameters& params, const BlockPermutation& sigma) {
  if (params.n > 64) throw ParameterError("edge masks need n <= 64");
  std::vector<std::uint64_t> masks(params.m, 0);
  for (unsigned i = 0; i < params.m; ++i)
    for (unsigned j = 0; j < params.r; ++j)
      masks[i] |= std::uint64_t{1} << (sigma.at((i * params.s + j) % params.n) - 1);
  return masks;
}

BigInt q_size(const CycleParameters& params) {
  return factorial(params.n) / boost::multiprecision::pow(BigInt(params.lambda), params.m);
}

namespace {

BigInt shard_size(const CycleParameters& params) {
  return q_size(params) / binomial_exact(params.n, params.t);
}

void check_cap(const BigInt& size, std::uint64_t cap) {
  if (size > cap)
    throw CapExceeded("enumeration of " + size.str() + " classes exceeds cap " + std::to_string(cap));
}

}  // namespace

QnEnumerator::QnEnumerator(const CycleParameters& params, std::uint64_t cap) : params_(params) {
  check_cap(q_size(params), cap);
  for (Vertex v = 1; v <= params.n; ++v) free_vertices_.push_back(v);
  for (unsigned k = 0; k < params.num_subblocks(); ++k) labels_.insert(labels_.end(), params.subblock_size(k), k);
  current_.resize(params.n);
}

QnEnumerator::QnEnumerator(const CycleParameters& params, std::span<const Vertex> first_subblock,
                           std::uint64_t cap)
    : params_(params), fixed_(first_subblock.begin(), first_subblock.end()) {
  check_cap(shard_size(params), cap);
  std::sort(fixed_.begin(), fixed_.end());
  if (fixed_.size() != params.t || std::adjacent_find(fixed_.begin(), fixed_.end()) != fixed_.end() ||
      (!fixed_.empty() && (fixed_.front() < 1 || fixed_.back() > params.n)))
    throw ParameterError("shard must fix t distinct vertices in range");
  for (Vertex v = 1; v <= params.n; ++v)
    if (!std::binary_search(fixed_.begin(), fixed_.end(), v)) free_vertices_.push_back(v);
  for (unsigned k = 1; k < params.num_subblocks(); ++k) labels_.insert(labels_.end(), params.subblock_size(k), k);
  current_.resize(params.n);
}

void QnEnumerator::build_current() {
  std::vector<unsigned> fill(params_.num_subblocks(), 0);
  for (std::size_t i = 0; i < fixed_.size(); ++i) current_[i] = fixed_[i];
  fill[0] = static_cast<unsigned>(fixed_.size());
  for (std::size_t i = 0; i < free_vertices_.size(); ++i) {
    const unsigned k = labels_[i];
    current_[params_.subblock_start(k) + fill[k]++] = free_vertices_[i];
  }
}

std::optional<BlockPermutation> QnEnumerator::next() {
  if (done_) return std::nullopt;
  build_current();
  done_ = !std::next_permutation(labels_.begin(), labels_.end());
  return BlockPermutation(current_);
}

std::vector<std::vector<Vertex>> qn_shards(const CycleParameters& params) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> combo(params.t);
  for (unsigned i = 0; i < params.t; ++i) combo[i] = i + 1;
  for (;;) {
    out.push_back(combo);
    // Advance to the next t-subset in lexicographic order.
    int i = static_cast<int>(params.t) - 1;
    while (i >= 0 && combo[i] == params.n - params.t + 1 + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++combo[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < params.t; ++j) combo[j] = combo[j - 1] + 1;
  }
  return out;
}

void for_each_in_qn(const CycleParameters& params, const std::function<void(const BlockPermutation&)>& fn,
                    std::uint64_t cap) {
  QnEnumerator it(params, cap);
  while (auto sigma = it.next()) fn(*sigma);
}

std::vector<Vertex> parse_permutation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Vertex> out;
  long long v = 0;
  while (in >> v) {
    if (v < 1) throw ParameterError("permutation entries are 1-based positive labels");
    out.push_back(static_cast<Vertex>(v));
  }
  if (!in.eof()) throw ParameterError("permutation text contains a non-integer token");
  return out;
}

std::string format_permutation(std::span<const Vertex> arrangement) {
  std::string out;
  for (std::size_t i = 0; i < arrangement.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(arrangement[i]);
  }
  return out;
}

}  // namespace hyperham
