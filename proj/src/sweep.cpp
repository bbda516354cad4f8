#include "qcap/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qcap/degradability.hpp"

namespace qcap {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::vector<double> parse_range(const std::string& text) {
  double start = 0.0, stop = 0.0, step = 0.0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step, &tail) != 3)
    throw std::invalid_argument("range: expected start:stop:step, got '" + text + "'");
  if (!(step > 0.0)) throw std::invalid_argument("range: step must be positive");
  if (stop < start) throw std::invalid_argument("range: stop below start");
  std::vector<double> grid;
  for (std::size_t k = 0;; ++k) {
    const double x = start + double(k) * step;
    if (x > stop + 1e-12) break;
    grid.push_back(std::min(x, stop));
  }
  return grid;
}

namespace {

MetricKind metric_from_name(const std::string& m) {
  if (m == "ic") return MetricKind::coherent_info;
  if (m == "rci") return MetricKind::reverse_coherent_info;
  if (m == "ce") return MetricKind::ea_mutual_info;
  throw std::invalid_argument("metric: expected ic, rci or ce, got '" + m + "'");
}

InputMode mode_from_name(const std::string& m) {
  if (m == "pure") return InputMode::pure;
  if (m == "mixed") return InputMode::mixed;
  throw std::invalid_argument("mode: expected pure or mixed, got '" + m + "'");
}

std::string convention_of(const std::string& channel) {
  if (channel == "dep-iso" || channel == "flagged-dep-iso") return "iso";
  if (channel == "dep-pauli" || channel == "flagged-dep-pauli") return "pauli";
  return "n/a";
}

KrausChannel uniform_pauli_noise() { return pauli_channel(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0); }

std::vector<std::pair<std::string, double>> params_at(const SweepArgs& args, double x) {
  if (args.channel == "gadc") return {{"gamma", x}, {"nth", args.nth}};
  if (args.channel == "flagged-ad") return {{"gamma", x}, {"p_mix", args.p_mix}};
  if (args.channel == "ad") return {{"gamma", x}};
  return {{"p", x}};
}

}  // namespace

KrausChannel sweep_channel_at(const SweepArgs& args, double x) {
  if (args.channel == "ad") return amplitude_damping_channel(x);
  if (args.channel == "gadc") return gadc_channel(x, args.nth);
  if (args.channel == "dep-iso") return depolarizing_iso_channel(x);
  if (args.channel == "dep-pauli") return depolarizing_pauli_channel(x);
  // Flagged kinds expose the mixture structure: a unitary branch and a
  // uniform-Pauli noise branch whose flag-trace recovers the plain channel.
  if (args.channel == "flagged-dep-iso")
    return flagged_extension(identity_channel(2), uniform_pauli_noise(), 1.0 - 0.75 * x);
  if (args.channel == "flagged-dep-pauli")
    return flagged_extension(identity_channel(2), uniform_pauli_noise(), 1.0 - x);
  if (args.channel == "flagged-ad")
    return flagged_extension(identity_channel(2), amplitude_damping_channel(x), args.p_mix);
  throw std::invalid_argument("channel: unknown sweep channel '" + args.channel + "'");
}

std::vector<SweepRecord> run_sweep(const SweepArgs& args) {
  const std::vector<double> grid = parse_range(args.range);
  const InputMode mode = mode_from_name(args.mode);
  std::vector<MetricKind> metrics;
  for (const auto& m : args.metrics) metrics.push_back(metric_from_name(m));
  if (metrics.empty()) throw std::invalid_argument("metric: empty list");

  OptimizerConfig cfg;
  cfg.rng_seed = args.seed;
  cfg.input_mode = mode;

  std::vector<SweepRecord> records(grid.size() * metrics.size());
  auto work = [&](std::size_t gi) {
    const KrausChannel ch = sweep_channel_at(args, grid[gi]);
    for (std::size_t mi = 0; mi < metrics.size(); ++mi) {
      const OptResult r = maximize_metric(ch, metrics[mi], cfg);
      SweepRecord rec;
      rec.channel_kind = args.channel;
      rec.convention = convention_of(args.channel);
      rec.params = params_at(args, grid[gi]);
      rec.metric = args.metrics[mi];
      rec.input_mode = args.mode;
      rec.best_value = r.best_value;
      rec.theta = r.best_point.theta;
      rec.phi = r.best_point.phi;
      rec.r = r.best_point.r;
      rec.converged = r.converged;
      rec.rng_seed = args.seed;
      records[gi * metrics.size() + mi] = std::move(rec);
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, args.jobs);
  if (jobs == 1 || grid.size() <= 1) {
    for (std::size_t gi = 0; gi < grid.size(); ++gi) work(gi);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(jobs, grid.size()); ++t)
      pool.emplace_back([&]() {
        for (std::size_t gi = next.fetch_add(1); gi < grid.size(); gi = next.fetch_add(1)) work(gi);
      });
    for (auto& th : pool) th.join();
  }
  return records;
}

namespace {

std::string pack_params(const std::vector<std::pair<std::string, double>>& params) {
  std::string out;
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (k) out += ';';
    out += params[k].first + "=" + format_double(params[k].second);
  }
  return out;
}

std::vector<std::pair<std::string, double>> unpack_params(const std::string& text) {
  std::vector<std::pair<std::string, double>> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("csv: bad params field '" + text + "'");
    out.push_back({item.substr(0, eq), std::stod(item.substr(eq + 1))});
  }
  return out;
}

void write_metadata(std::ostream& out, const SweepArgs& args) {
  out << "# qcap " << kToolVersion << "\n";
  out << "# command: sweep\n";
  out << "# channel: " << args.channel << "\n";
  out << "# convention: " << convention_of(args.channel) << "\n";
  out << "# range: " << args.range << "\n";
  if (args.channel == "gadc") out << "# nth: " << format_double(args.nth) << "\n";
  if (args.channel == "flagged-ad") out << "# p_mix: " << format_double(args.p_mix) << "\n";
  out << "# metrics:";
  for (const auto& m : args.metrics) out << " " << m;
  out << "\n";
  out << "# mode: " << args.mode << "\n";
  out << "# rng_seed: " << args.seed << "\n";
  out << "# optimizer: n_grid=512 n_seeds=8 objective_tol=1e-09 max_iters=2000"
         " sampler=latin-hypercube refiner=nelder-mead\n";
  out << "# note: n_seeds=8 is this tool's default for the refine stage\n";
  out << "# note: rci and ce are maximized over the same input family as ic\n";
  out << "# columns: channel_kind,convention,params,metric,input_mode,best_value,"
         "theta,phi,r,converged,rng_seed\n";
}

}  // namespace

void write_sweep_csv(std::ostream& out, const SweepArgs& args,
                     const std::vector<SweepRecord>& records) {
  write_metadata(out, args);
  for (const auto& r : records) {
    out << r.channel_kind << ',' << r.convention << ',' << pack_params(r.params) << ','
        << r.metric << ',' << r.input_mode << ',' << format_double(r.best_value) << ','
        << format_double(r.theta) << ',' << format_double(r.phi) << ',' << format_double(r.r)
        << ',' << (r.converged ? 1 : 0) << ',' << r.rng_seed << "\n";
  }
}

std::vector<SweepRecord> parse_sweep_csv(std::istream& in) {
  std::vector<SweepRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::istringstream row(line);
    std::vector<std::string> fields;
    std::string f;
    while (std::getline(row, f, ',')) fields.push_back(f);
    if (fields.size() != 11) throw std::invalid_argument("csv: expected 11 fields per row");
    SweepRecord r;
    r.channel_kind = fields[0];
    r.convention = fields[1];
    r.params = unpack_params(fields[2]);
    r.metric = fields[3];
    r.input_mode = fields[4];
    r.best_value = std::stod(fields[5]);
    r.theta = std::stod(fields[6]);
    r.phi = std::stod(fields[7]);
    r.r = std::stod(fields[8]);
    r.converged = fields[9] == "1";
    r.rng_seed = std::stoull(fields[10]);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<TableRow> compute_table() {
  std::vector<TableRow> rows;
  for (double p : {0.05, 0.10, 0.15}) {
    const MaxRainsResult r = max_rains_bound_full(depolarizing_iso_channel(p));
    rows.push_back(TableRow{p, hashing_bound(p), r.value_bits, r.duality_gap_bits});
  }
  return rows;
}

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows) {
  out << "# qcap " << kToolVersion << "\n";
  out << "# command: table\n";
  out << "# channel: depolarizing, iso convention D_p(rho) = (1-p) rho + p I/2\n";
  out << "# note: the hashing column evaluates the Pauli-convention closed form\n";
  out << "#       1 - H2(p) - p log2(3) at the printed p. Reference tables that\n";
  out << "#       caption these same numbers with the iso form are internally\n";
  out << "#       inconsistent; the conventions map by p_iso = 4*p_pauli/3.\n";
  out << "# note: max_rains is the certified optimum of the SDP upper bound;\n";
  out << "#       see docs/max_rains_discrepancy.md for the comparison against\n";
  out << "#       commonly quoted illustrative values.\n";
  out << "# columns: p,hashing,max_rains,duality_gap\n";
  for (const auto& r : rows) {
    out << format_double(r.p) << ',' << format_double(r.hashing) << ','
        << format_double(r.max_rains) << ',' << format_double(r.duality_gap) << "\n";
  }
}

}  // namespace qcap
