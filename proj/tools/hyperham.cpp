// hyperham: random hypergraph sampling, Hamiltonian l-cycle search, exact
// moment and overlap reports, and threshold sweeps.

#include "hyperham/cycle_algebra.hpp"
#include "hyperham/ham_solver.hpp"
#include "hyperham/hypergraph.hpp"
#include "hyperham/moments.hpp"
#include "hyperham/overlap.hpp"
#include "hyperham/sweep.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace hyperham;

struct Globals {
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string out;
};

void warn_linear(unsigned ell) {
  if (ell == 1)
    std::cerr << "note: l = 1 (linear cycles) lies outside the nonlinear range r > l > 1 "
                 "for which p* is the sharp threshold\n";
}

Hypergraph load_graph(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_edge_list(in);
}

// Writes to --out when set, stdout otherwise.
void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(g.out, std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write '" + g.out + "'");
  file << text;
}

std::string rational_text(const Rational& x, bool exact) {
  std::ostringstream s;
  if (exact) s << x.str() << " (" << to_decimal_string(x, 12) << ")";
  else s << std::setprecision(12) << to_double(x);
  return s.str();
}

Rational probability_from_flags(const CycleParameters& params, const std::optional<std::string>& p_text,
                                const std::optional<std::string>& c_text) {
  if (p_text.has_value() == c_text.has_value()) throw CLI::ValidationError("exactly one of --p and --C is required");
  if (p_text) {
    // Fractions stay exact; decimals go through the 2^-53 grid.
    if (p_text->find('/') != std::string::npos) return parse_rational(*p_text);
    return rational_from_double(std::stod(*p_text));
  }
  return p_star_rational(params, parse_rational(*c_text));
}

int run_moments(const Globals& g, unsigned r, unsigned ell, unsigned n, const std::optional<std::string>& p_text,
                const std::optional<std::string>& c_text, bool exact, std::uint64_t cap) {
  warn_linear(ell);
  const CycleParameters params = make_parameters(r, ell, n);
  const Rational p = probability_from_flags(params, p_text, c_text);
  if (p > 1) throw ParameterError("p = C p* exceeds 1 at this n");
  const MomentReport rep = moment_report(params, p, cap);
  std::ostringstream s;
  s << "r=" << r << " ell=" << ell << " n=" << n << " s=" << params.s << " t=" << params.t
    << " lambda=" << params.lambda << " m=" << params.m << '\n';
  s << "p = " << rational_text(p, exact) << '\n';
  s << "p_star = " << std::setprecision(12) << p_star(params).value << '\n';
  s << "q_size = " << q_size(params).str() << '\n';
  s << "e_x = " << rational_text(rep.e_x.exact, exact) << '\n';
  s << "log_e_x = " << std::setprecision(12) << rep.e_x.log_value << '\n';
  if (rep.e_x2) {
    s << "e_x2 = " << rational_text(*rep.e_x2, exact) << '\n';
    if (rep.ratio) s << "ratio = " << std::setprecision(12) << *rep.ratio << '\n';
    if (rep.pz_lower_bound)
      s << "pz_lower_bound = " << rational_text(*rep.pz_lower_bound, exact) << (rep.pz_clamped ? " (clamped)" : "")
        << '\n';
  } else {
    s << "e_x2 = (skipped: |Q_n| exceeds the enumeration cap)\n";
  }
  emit(g, s.str());
  return 0;
}

int run_overlap(const Globals& g, unsigned r, unsigned ell, unsigned n, const std::string& c_text,
                const std::string& format, std::uint64_t cap) {
  warn_linear(ell);
  const CycleParameters params = make_parameters(r, ell, n);
  const OverlapOptions opts{cap, g.threads};
  const CanonicalCounts counts = nc_counts(params, BlockPermutation::identity(params), opts);
  const GammaDecomposition gamma = gamma_from_counts(params, counts, p_star_rational(params, parse_rational(c_text)));
  constexpr unsigned kDigits = 30;
  std::ostringstream s;
  if (format == "csv") {
    s << "quantity,b,a,value\n";
    for (unsigned b = 0; b <= params.m; ++b) s << "N," << b << ",," << counts.n[b] << '\n';
    for (unsigned b = 1; b < params.m; ++b)
      for (unsigned a = 1; a <= b; ++a) s << "Nc," << b << ',' << a << ',' << counts.nc[b][a] << '\n';
    for (unsigned b = 1; b < params.m; ++b) s << "Nprime," << b << ",," << counts.n_prime[b] << '\n';
    s << "full_cycle,,," << counts.full_cycle << '\n';
    s << "degenerate,,," << counts.degenerate << '\n';
    s << "gamma,,," << to_decimal_string(gamma.gamma, kDigits) << '\n';
    s << "gamma_c,,," << to_decimal_string(gamma.gamma_c, kDigits) << '\n';
    s << "gamma_prime,,," << to_decimal_string(gamma.gamma_prime, kDigits) << '\n';
    s << "gamma_full,,," << to_decimal_string(gamma.gamma_full, kDigits) << '\n';
  } else {
    s << "r=" << r << " ell=" << ell << " n=" << n << " m=" << params.m << " q_size=" << q_size(params).str()
      << " C=" << c_text << '\n';
    s << "N(b):";
    for (const auto v : counts.n) s << ' ' << v;
    s << "\nN_c(b,a):\n";
    for (unsigned b = 1; b < params.m; ++b) {
      s << "  b=" << b << ':';
      for (unsigned a = 1; a <= b; ++a) s << ' ' << counts.nc[b][a];
      s << '\n';
    }
    s << "N'(b):";
    for (unsigned b = 1; b < params.m; ++b) s << ' ' << counts.n_prime[b];
    s << "\nfull_cycle: " << counts.full_cycle << "\ndegenerate: " << counts.degenerate << '\n';
    s << "gamma: " << to_decimal_string(gamma.gamma, kDigits) << '\n';
    s << "gamma_c: " << to_decimal_string(gamma.gamma_c, kDigits) << '\n';
    s << "gamma_prime: " << to_decimal_string(gamma.gamma_prime, kDigits) << '\n';
    s << "gamma_full: " << to_decimal_string(gamma.gamma_full, kDigits) << '\n';
  }
  emit(g, s.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random hypergraphs and Hamiltonian l-cycles"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Master RNG seed")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)")->envname("HYPERHAM_THREADS");
  app.add_option("--out", g.out, "Output file (default stdout)");
  app.fallthrough();

  // sample
  auto* sample = app.add_subcommand("sample", "Sample G^(r)(n,p) as an edge list");
  unsigned sample_n = 0;
  unsigned sample_r = 3;
  double sample_p = 0.5;
  std::uint64_t sample_stream = 0;
  bool sample_skip = false;
  sample->add_option("--n", sample_n, "Vertices")->required();
  sample->add_option("--r", sample_r, "Uniformity")->capture_default_str();
  sample->add_option("--p", sample_p, "Edge probability")->required();
  sample->add_option("--stream", sample_stream, "Stream id")->capture_default_str();
  sample->add_flag("--skip", sample_skip, "Use geometric skipping (not coupled across p)");

  // solve
  auto* solve = app.add_subcommand("solve", "Search for a Hamiltonian l-cycle");
  std::string solve_input;
  unsigned solve_ell = 0;
  std::uint64_t solve_budget = 0;
  solve->add_option("--input", solve_input, "Edge-list file ('-' for stdin)")->required();
  solve->add_option("--ell", solve_ell, "Overlap l")->required();
  solve->add_option("--budget", solve_budget, "Node budget (0 = unlimited)");

  // count
  auto* count = app.add_subcommand("count", "Count sigma in Q_n with H_sigma in the hypergraph");
  std::string count_input;
  unsigned count_ell = 0;
  std::uint64_t count_cap = kDefaultEnumerationCap;
  count->add_option("--input", count_input, "Edge-list file ('-' for stdin)")->required();
  count->add_option("--ell", count_ell, "Overlap l")->required();
  count->add_option("--cap", count_cap, "Refuse when |Q_n| exceeds this")->capture_default_str();

  // moments
  auto* moments = app.add_subcommand("moments", "First/second moments of X and the Paley-Zygmund bound");
  unsigned mo_r = 3;
  unsigned mo_ell = 2;
  unsigned mo_n = 6;
  std::optional<std::string> mo_p;
  std::optional<std::string> mo_c;
  bool mo_exact = false;
  std::uint64_t mo_cap = 1'000'000;
  moments->add_option("--r", mo_r)->required();
  moments->add_option("--ell", mo_ell)->required();
  moments->add_option("--n", mo_n)->required();
  moments->add_option("--p", mo_p, "Edge probability (decimal or a/b)");
  moments->add_option("--C", mo_c, "p as a multiple of p*");
  moments->add_flag("--exact", mo_exact, "Print exact rationals");
  moments->add_option("--cap", mo_cap, "Enumeration cap for E[X^2]")->capture_default_str();

  // overlap
  auto* overlap = app.add_subcommand("overlap", "Overlap counts N(b), N_c(b,a) and the Gamma decomposition");
  unsigned ov_r = 3;
  unsigned ov_ell = 2;
  unsigned ov_n = 6;
  std::string ov_c = "1";
  std::string ov_format = "text";
  std::uint64_t ov_cap = kDefaultEnumerationCap;
  overlap->add_option("--r", ov_r)->required();
  overlap->add_option("--ell", ov_ell)->required();
  overlap->add_option("--n", ov_n)->required();
  overlap->add_option("--C", ov_c, "p as a multiple of p*")->capture_default_str();
  overlap->add_option("--format", ov_format)->check(CLI::IsMember({"text", "csv"}))->capture_default_str();
  overlap->add_option("--cap", ov_cap)->capture_default_str();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep of P(Hamiltonian l-cycle) over C = p/p*");
  std::string sw_config;
  SweepConfig sw;
  bool sw_resume = false;
  sweep->add_option("--config", sw_config, "JSON config (flags override its fields)");
  auto* sw_r = sweep->add_option("--r", sw.r);
  auto* sw_ell = sweep->add_option("--ell", sw.ell);
  auto* sw_n = sweep->add_option("--n", sw.n_list, "Vertex counts")->delimiter(',');
  auto* sw_c = sweep->add_option("--C", sw.c_grid, "Ascending C-grid")->delimiter(',');
  auto* sw_trials = sweep->add_option("--trials", sw.trials);
  auto* sw_budget = sweep->add_option("--budget", sw.solver_budget, "Per-trial node budget");
  auto* sw_coupled = sweep->add_flag("--coupled", sw.coupled, "Share edge uniforms across the C-grid");
  sweep->add_flag("--resume", sw_resume, "Skip cells already present in --out");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sample) {
      const Hypergraph h = sample_skip ? sample_gnp_skip(sample_n, sample_r, sample_p, {g.seed, sample_stream})
                                       : sample_gnp(sample_n, sample_r, sample_p, {g.seed, sample_stream});
      std::ostringstream s;
      write_edge_list(s, h);
      emit(g, s.str());
    } else if (*solve) {
      warn_linear(solve_ell);
      const Hypergraph h = load_graph(solve_input);
      const SolveResult res = find_hamiltonian_l_cycle(h, solve_ell, {.node_budget = solve_budget});
      std::ostringstream s;
      s << to_string(res.status) << '\n';
      if (res.certificate) s << format_permutation(res.certificate->permutation.arrangement()) << '\n';
      emit(g, s.str());
      std::cerr << "nodes=" << res.stats.nodes << " seconds=" << res.stats.seconds << '\n';
    } else if (*count) {
      warn_linear(count_ell);
      const Hypergraph h = load_graph(count_input);
      emit(g, std::to_string(count_X(h, count_ell, count_cap)) + "\n");
    } else if (*moments) {
      return run_moments(g, mo_r, mo_ell, mo_n, mo_p, mo_c, mo_exact, mo_cap);
    } else if (*overlap) {
      return run_overlap(g, ov_r, ov_ell, ov_n, ov_c, ov_format, ov_cap);
    } else if (*sweep) {
      SweepConfig cfg;
      if (!sw_config.empty()) {
        std::ifstream in(sw_config);
        if (!in) throw std::runtime_error("cannot open config '" + sw_config + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        cfg = sweep_config_from_json(buf.str());
      }
      if (*sw_r || sw_config.empty()) cfg.r = sw.r;
      if (*sw_ell || sw_config.empty()) cfg.ell = sw.ell;
      if (*sw_n || sw_config.empty()) cfg.n_list = sw.n_list;
      if (*sw_c || sw_config.empty()) cfg.c_grid = sw.c_grid;
      if (*sw_trials || sw_config.empty()) cfg.trials = sw.trials;
      if (*sw_budget || sw_config.empty()) cfg.solver_budget = sw.solver_budget;
      if (*sw_coupled) cfg.coupled = true;
      if (app.get_option("--seed")->count() > 0 || sw_config.empty()) cfg.master_seed = g.seed;
      if (app.get_option("--threads")->count() > 0 || sw_config.empty()) cfg.thread_count = g.threads;
      if (!g.out.empty()) cfg.output_path = g.out;
      warn_linear(cfg.ell);
      const auto cells = run_sweep(cfg, {.resume = sw_resume});
      if (cfg.output_path.empty()) write_sweep_csv(std::cout, cells);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
