#include "hyperham/sweep.hpp"

#include "hyperham/ham_solver.hpp"
#include "hyperham/hypergraph.hpp"
#include "hyperham/parallel.hpp"
#include "hyperham/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hyperham {

void SweepConfig::validate() const {
  if (ell < 1 || ell >= r) throw ParameterError("sweep needs r > l >= 1");
  for (const unsigned n : n_list) make_parameters(r, ell, n);
  if (trials < 1) throw ParameterError("sweep needs trials >= 1");
  if (!std::is_sorted(c_grid.begin(), c_grid.end())) throw ParameterError("C-grid must be sorted ascending");
  for (const double c : c_grid)
    if (!(c > 0.0) || !std::isfinite(c)) throw ParameterError("C-grid entries must be positive");
}

SweepConfig sweep_config_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParameterError(std::string("sweep config: ") + e.what());
  }
  if (!j.is_object()) throw ParameterError("sweep config must be a JSON object");
  SweepConfig c;
  static const char* const kKeys[] = {"r",           "ell",           "n_list",       "c_grid",      "trials",
                                      "master_seed", "solver_budget", "thread_count", "output_path", "coupled"};
  for (const auto& item : j.items())
    if (std::find(std::begin(kKeys), std::end(kKeys), item.key()) == std::end(kKeys))
      throw ParameterError("sweep config: unknown field '" + item.key() + "'");
  try {
    c.r = j.value("r", c.r);
    c.ell = j.value("ell", c.ell);
    c.n_list = j.value("n_list", c.n_list);
    c.c_grid = j.value("c_grid", c.c_grid);
    c.trials = j.value("trials", c.trials);
    c.master_seed = j.value("master_seed", c.master_seed);
    c.solver_budget = j.value("solver_budget", c.solver_budget);
    c.thread_count = j.value("thread_count", c.thread_count);
    c.output_path = j.value("output_path", c.output_path);
    c.coupled = j.value("coupled", c.coupled);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("sweep config: ") + e.what());
  }
  return c;
}

std::string sweep_config_to_json(const SweepConfig& c) {
  nlohmann::json j = {{"r", c.r},
                      {"ell", c.ell},
                      {"n_list", c.n_list},
                      {"c_grid", c.c_grid},
                      {"trials", c.trials},
                      {"master_seed", c.master_seed},
                      {"solver_budget", c.solver_budget},
                      {"thread_count", c.thread_count},
                      {"output_path", c.output_path},
                      {"coupled", c.coupled}};
  return j.dump(2);
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  // Exact endpoints at k = 0 and k = n; the formula leaves rounding dust there.
  const double low = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double high = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {low, high};
}

std::uint64_t trial_stream(unsigned n, std::uint64_t c_index, std::uint64_t trial) noexcept {
  return hash_words({n, c_index, trial});
}

TrialOutcome run_trial(const CycleParameters& params, double p, std::uint64_t seed, std::uint64_t stream,
                       std::uint64_t budget) {
  const Hypergraph g = sample_gnp(params.n, params.r, std::clamp(p, 0.0, 1.0), {seed, stream});
  const SolveResult res = find_hamiltonian_l_cycle(g, params.ell, {.node_budget = budget});
  switch (res.status) {
    case SolveStatus::kFound:
      return TrialOutcome::kSuccess;
    case SolveStatus::kNotFound:
      return TrialOutcome::kFailure;
    case SolveStatus::kUnknown:
      break;
  }
  return TrialOutcome::kUnknown;
}

namespace {

struct PendingCell {
  CycleParameters params;
  double c = 0.0;
  double p = 0.0;
  std::uint64_t c_index = 0;
  std::vector<TrialOutcome> outcomes;
  std::vector<double> seconds;
};

SweepCell summarize(const PendingCell& pc, std::uint64_t seed) {
  SweepCell cell;
  cell.n = pc.params.n;
  cell.r = pc.params.r;
  cell.ell = pc.params.ell;
  cell.c = pc.c;
  cell.p = pc.p;
  cell.trials = pc.outcomes.size();
  cell.seed = seed;
  for (const TrialOutcome o : pc.outcomes) {
    if (o == TrialOutcome::kSuccess) ++cell.successes;
    if (o == TrialOutcome::kUnknown) ++cell.unknowns;
  }
  const std::uint64_t decided = cell.trials - cell.unknowns;
  cell.p_hat = decided == 0 ? std::numeric_limits<double>::quiet_NaN()
                            : static_cast<double>(cell.successes) / static_cast<double>(decided);
  cell.ci = wilson_interval(cell.successes, decided);
  for (const double s : pc.seconds) cell.wall_seconds += s;
  return cell;
}

// Runs every trial of every cell on one pool; results land in per-trial slots.
void run_cells(std::vector<PendingCell>& cells, std::uint64_t trials, std::uint64_t seed, std::uint64_t budget,
               unsigned threads) {
  for (PendingCell& pc : cells) {
    pc.outcomes.assign(trials, TrialOutcome::kUnknown);
    pc.seconds.assign(trials, 0.0);
  }
  parallel_for(cells.size() * trials, threads, [&](std::size_t task) {
    PendingCell& pc = cells[task / trials];
    const std::uint64_t trial = task % trials;
    const auto start = std::chrono::steady_clock::now();
    pc.outcomes[trial] = run_trial(pc.params, pc.p, seed, trial_stream(pc.params.n, pc.c_index, trial), budget);
    pc.seconds[trial] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });
}

}  // namespace

SweepCell estimate_prob(const CycleParameters& params, double p, std::uint64_t trials, std::uint64_t seed,
                        std::uint64_t budget, unsigned threads, std::uint64_t c_index) {
  std::vector<PendingCell> cells(1);
  cells[0].params = params;
  cells[0].p = p;
  cells[0].c = p / p_star(params).value;
  cells[0].c_index = c_index;
  run_cells(cells, trials, seed, budget, threads);
  return summarize(cells[0], seed);
}

std::vector<SweepCell> run_sweep(const SweepConfig& config, const SweepOptions& options) {
  config.validate();
  std::map<std::pair<unsigned, std::string>, SweepCell> done;
  if (options.resume && !config.output_path.empty()) {
    std::ifstream existing(config.output_path);
    if (existing) {
      for (SweepCell& cell : read_sweep_csv(existing))
        if (cell.r == config.r && cell.ell == config.ell && cell.trials == config.trials &&
            cell.seed == config.master_seed)
          done.emplace(std::pair{cell.n, format_double(cell.c)}, cell);
    }
  }

  std::vector<PendingCell> pending;
  std::vector<std::pair<unsigned, std::string>> order;
  for (const unsigned n : config.n_list) {
    const CycleParameters params = make_parameters(config.r, config.ell, n);
    const double pstar = p_star(params).value;
    for (std::size_t ci = 0; ci < config.c_grid.size(); ++ci) {
      const double c = config.c_grid[ci];
      auto key = std::pair{n, format_double(c)};
      order.push_back(key);
      if (done.count(key) != 0) continue;
      PendingCell pc;
      pc.params = params;
      pc.c = c;
      pc.p = c * pstar;
      pc.c_index = config.coupled ? 0 : ci;
      pending.push_back(std::move(pc));
    }
  }
  run_cells(pending, config.trials, config.master_seed, config.solver_budget, config.thread_count);
  for (const PendingCell& pc : pending)
    done.insert_or_assign(std::pair{pc.params.n, format_double(pc.c)}, summarize(pc, config.master_seed));

  std::vector<SweepCell> out;
  out.reserve(order.size());
  for (const auto& key : order) out.push_back(done.at(key));

  if (!config.output_path.empty()) {
    std::ofstream file(config.output_path, std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write sweep output '" + config.output_path + "'");
    write_sweep_csv(file, out);
    if (!file) throw std::runtime_error("error writing sweep output '" + config.output_path + "'");
  }
  return out;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string csv_row(const SweepCell& c) {
  std::ostringstream row;
  row << c.n << ',' << c.r << ',' << c.ell << ',' << format_double(c.c) << ',' << format_double(c.p) << ','
      << c.trials << ',' << c.successes << ',' << c.unknowns << ',' << format_double(c.p_hat) << ','
      << format_double(c.ci.low) << ',' << format_double(c.ci.high) << ',' << c.seed;
  return row.str();
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepCell>& cells) {
  out << kSweepCsvHeader << '\n';
  for (const SweepCell& c : cells) out << csv_row(c) << '\n';
}

namespace {

double parse_double(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) throw ParameterError("sweep csv: bad number '" + s + "'");
  return v;
}

std::uint64_t parse_u64(const std::string& s) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) throw ParameterError("sweep csv: bad integer '" + s + "'");
  return v;
}

}  // namespace

std::vector<SweepCell> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) return {};
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kSweepCsvHeader) throw ParameterError("sweep csv: unexpected header '" + line + "'");
  std::vector<SweepCell> out;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) f.push_back(field);
    if (f.size() != 12) throw ParameterError("sweep csv: expected 12 fields in '" + line + "'");
    SweepCell c;
    c.n = static_cast<unsigned>(parse_u64(f[0]));
    c.r = static_cast<unsigned>(parse_u64(f[1]));
    c.ell = static_cast<unsigned>(parse_u64(f[2]));
    c.c = parse_double(f[3]);
    c.p = parse_double(f[4]);
    c.trials = parse_u64(f[5]);
    c.successes = parse_u64(f[6]);
    c.unknowns = parse_u64(f[7]);
    c.p_hat = parse_double(f[8]);
    c.ci = {parse_double(f[9]), parse_double(f[10])};
    c.seed = parse_u64(f[11]);
    out.push_back(c);
  }
  return out;
}

}  // namespace hyperham
