#include "hyperham/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace hyperham {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kMaxRankSpace = std::uint64_t{1} << 62U;
constexpr std::uint64_t kBitsetLimit = std::uint64_t{1} << 27U;

void check_shape(unsigned n, unsigned r) {
  if (r < 2 || r > n)
    throw ParameterError("hypergraph requires 2 <= r <= n (got n=" + std::to_string(n) +
                         ", r=" + std::to_string(r) + ")");
  if (binomial(n, r) >= kMaxRankSpace)
    throw ParameterError("C(n, r) too large to index r-sets (n=" + std::to_string(n) + ")");
}

Edge normalized_edge(unsigned n, unsigned r, std::span<const Vertex> edge) {
  if (edge.size() != r)
    throw ParameterError("edge has " + std::to_string(edge.size()) + " vertices, expected " +
                         std::to_string(r));
  Edge e(edge.begin(), edge.end());
  std::sort(e.begin(), e.end());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 1 || e[i] > n) throw ParameterError("vertex " + std::to_string(e[i]) + " out of range");
    if (i > 0 && e[i] == e[i - 1]) throw ParameterError("edge repeats vertex " + std::to_string(e[i]));
  }
  return e;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

ColexRanker::ColexRanker(unsigned n, unsigned r) : n_(n), r_(r), total_(binomial(n, r)) {
  check_shape(n, r);
  table_.resize(static_cast<std::size_t>(n) * (r + 1));
  for (unsigned x = 0; x < n; ++x)
    for (unsigned k = 0; k <= r; ++k) table_[x * (r + 1) + k] = binomial(x, k);
}

std::uint64_t ColexRanker::rank(std::span<const Vertex> edge) const noexcept {
  std::uint64_t out = 0;
  for (unsigned i = 0; i < r_; ++i) out += choose(edge[i] - 1, i + 1);
  return out;
}

std::uint64_t ColexRanker::rank_mask(std::uint64_t mask) const noexcept {
  std::uint64_t out = 0;
  unsigned i = 1;
  while (mask != 0) {
    const auto b = static_cast<unsigned>(std::countr_zero(mask));
    out += choose(b, i++);
    mask &= mask - 1;
  }
  return out;
}

Edge ColexRanker::unrank(std::uint64_t rank) const {
  Edge e(r_);
  unsigned x = n_;
  for (unsigned k = r_; k >= 1; --k) {
    // Largest x with C(x, k) <= rank.
    do {
      --x;
    } while (choose(x, k) > rank);
    e[k - 1] = x + 1;
    rank -= choose(x, k);
  }
  return e;
}

Hypergraph::Hypergraph(ColexRanker ranker, std::vector<std::uint64_t> sorted_ranks)
    : ranker_(std::move(ranker)), ranks_(std::move(sorted_ranks)) {
  build_index();
}

Hypergraph::Hypergraph(unsigned n, unsigned r) : Hypergraph(ColexRanker(n, r), {}) {}

Hypergraph::Hypergraph(unsigned n, unsigned r, std::span<const Edge> edges) : ranker_(n, r) {
  ranks_.reserve(edges.size());
  for (const Edge& e : edges) ranks_.push_back(ranker_.rank(normalized_edge(n, r, e)));
  std::sort(ranks_.begin(), ranks_.end());
  ranks_.erase(std::unique(ranks_.begin(), ranks_.end()), ranks_.end());
  build_index();
}

Hypergraph Hypergraph::from_ranks(unsigned n, unsigned r, std::vector<std::uint64_t> ranks) {
  ColexRanker ranker(n, r);
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  if (!ranks.empty() && ranks.back() >= ranker.total()) throw ParameterError("edge rank out of range");
  return Hypergraph(std::move(ranker), std::move(ranks));
}

void Hypergraph::build_index() {
  bits_.clear();
  if (ranker_.total() <= kBitsetLimit) {
    bits_.assign((ranker_.total() + 63) / 64, 0);
    for (const std::uint64_t rk : ranks_) bits_[rk >> 6U] |= std::uint64_t{1} << (rk & 63U);
  }
  degree_.assign(ranker_.n(), 0);
  for (const std::uint64_t rk : ranks_)
    for (const Vertex v : ranker_.unrank(rk)) ++degree_[v - 1];
}

bool Hypergraph::contains_rank(std::uint64_t rank) const noexcept {
  if (!bits_.empty()) return rank < ranker_.total() && ((bits_[rank >> 6U] >> (rank & 63U)) & 1U) != 0;
  return std::binary_search(ranks_.begin(), ranks_.end(), rank);
}

bool Hypergraph::contains_edge(std::span<const Vertex> edge) const {
  const Edge e = normalized_edge(n(), r(), edge);
  return contains_rank(ranker_.rank(e));
}

std::vector<Edge> Hypergraph::edges() const {
  std::vector<Edge> out;
  out.reserve(ranks_.size());
  for (const std::uint64_t rk : ranks_) out.push_back(ranker_.unrank(rk));
  return out;
}

Hypergraph complete_hypergraph(unsigned n, unsigned r) {
  ColexRanker ranker(n, r);
  std::vector<std::uint64_t> ranks(ranker.total());
  for (std::uint64_t i = 0; i < ranks.size(); ++i) ranks[i] = i;
  return Hypergraph::from_ranks(n, r, std::move(ranks));
}

Hypergraph with_edges(const Hypergraph& h, std::span<const Edge> extra) {
  std::vector<std::uint64_t> ranks = h.edge_ranks();
  Hypergraph added(h.n(), h.r(), extra);
  ranks.insert(ranks.end(), added.edge_ranks().begin(), added.edge_ranks().end());
  return Hypergraph::from_ranks(h.n(), h.r(), std::move(ranks));
}

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("edge probability must lie in [0, 1]");
}

}  // namespace

Hypergraph sample_gnp(unsigned n, unsigned r, double p, RngSeed seed) {
  ColexRanker ranker(n, r);
  check_probability(p);
  SplitMix64 rng(seed);
  std::vector<std::uint64_t> ranks;
  for (std::uint64_t i = 0; i < ranker.total(); ++i)
    if (rng.uniform() < p) ranks.push_back(i);
  return Hypergraph::from_ranks(n, r, std::move(ranks));
}

Hypergraph sample_gnp_skip(unsigned n, unsigned r, double p, RngSeed seed) {
  ColexRanker ranker(n, r);
  check_probability(p);
  std::vector<std::uint64_t> ranks;
  if (p >= 1.0) return complete_hypergraph(n, r);
  if (p > 0.0) {
    SplitMix64 rng(seed);
    const double log_q = std::log1p(-p);
    // Position of the next kept r-set; the gap is Geometric(p).
    double pos = -1.0;
    const auto total = static_cast<double>(ranker.total());
    for (;;) {
      const double u = 1.0 - rng.uniform();  // (0, 1]
      pos += 1.0 + std::floor(std::log(u) / log_q);
      if (pos >= total) break;
      ranks.push_back(static_cast<std::uint64_t>(pos));
    }
  }
  return Hypergraph::from_ranks(n, r, std::move(ranks));
}

Hypergraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  const auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_content_line()) throw ParameterError("edge list: missing 'n r' header");
  std::istringstream header(line);
  long long n = 0;
  long long r = 0;
  if (!(header >> n >> r) || n <= 0 || r <= 0) throw ParameterError("edge list: malformed header '" + line + "'");
  std::vector<Edge> edges;
  while (next_content_line()) {
    std::istringstream row(line);
    Edge e;
    long long v = 0;
    while (row >> v) {
      if (v < 1 || v > n)
        throw ParameterError("edge list line " + std::to_string(line_no) + ": vertex out of range");
      e.push_back(static_cast<Vertex>(v));
    }
    if (!row.eof()) throw ParameterError("edge list line " + std::to_string(line_no) + ": not an integer");
    if (e.size() != static_cast<std::size_t>(r))
      throw ParameterError("edge list line " + std::to_string(line_no) + ": expected " + std::to_string(r) +
                           " vertices");
    edges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<unsigned>(n), static_cast<unsigned>(r), edges);
}

void write_edge_list(std::ostream& out, const Hypergraph& h) {
  out << h.n() << ' ' << h.r() << '\n';
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

}  // namespace hyperham
