#include "qcap/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qcap/channel_json.hpp"
#include "qcap/degradability.hpp"
#include "qcap/sweep.hpp"

namespace qcap {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;

struct ChannelFlags {
  std::string channel;
  std::string channel_file;
  double gamma = 0.0;
  double p = 0.0;
  double nth = 0.0;
  double p_mix = 0.5;
};

void add_channel_flags(CLI::App* cmd, ChannelFlags& cf) {
  cmd->add_option("--channel", cf.channel,
                  "named channel: ad | gadc | dep-iso | dep-pauli | flagged-ad");
  cmd->add_option("--channel-file", cf.channel_file, "channel-spec JSON file");
  cmd->add_option("--gamma", cf.gamma, "damping parameter for ad/gadc/flagged-ad");
  cmd->add_option("--p", cf.p, "depolarizing probability");
  cmd->add_option("--nth", cf.nth, "gadc bath population");
  cmd->add_option("--p-mix", cf.p_mix, "unitary-branch weight for flagged-ad");
}

KrausChannel channel_from_flags(const ChannelFlags& cf) {
  if (!cf.channel_file.empty()) return channel_from_json_file(cf.channel_file);
  if (cf.channel == "ad") return amplitude_damping_channel(cf.gamma);
  if (cf.channel == "gadc") return gadc_channel(cf.gamma, cf.nth);
  if (cf.channel == "dep-iso") return depolarizing_iso_channel(cf.p);
  if (cf.channel == "dep-pauli") return depolarizing_pauli_channel(cf.p);
  if (cf.channel == "flagged-ad")
    return flagged_extension(identity_channel(2), amplitude_damping_channel(cf.gamma), cf.p_mix);
  throw std::invalid_argument("channel: give --channel ad|gadc|dep-iso|dep-pauli|flagged-ad "
                              "or --channel-file");
}

// Output sink: path or "-" for stdout.
class OutSink {
 public:
  OutSink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw std::invalid_argument("out: cannot open '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

std::vector<std::string> split_metrics(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("QCAP_SEED")) return std::strtoull(env, nullptr, 10);
  return flag_seed;
}

int do_sweep(const SweepArgs& args_in, const std::string& out_path, std::ostream& out) {
  SweepArgs args = args_in;
  args.seed = effective_seed(args.seed);
  const std::vector<SweepRecord> records = run_sweep(args);
  OutSink sink(out_path, out);
  write_sweep_csv(sink.stream(), args, records);
  return kExitOk;
}

int do_table(const std::string& out_path, std::ostream& out) {
  const std::vector<TableRow> rows = compute_table();
  OutSink sink(out_path, out);
  write_table_csv(sink.stream(), rows);
  return kExitOk;
}

int do_bound(const ChannelFlags& cf, std::ostream& out) {
  const KrausChannel ch = channel_from_flags(cf);
  const MaxRainsResult r = max_rains_bound_full(ch);
  out << "max_rains_bits: " << format_double(r.value_bits) << "\n";
  out << "gamma_primal: " << format_double(r.gamma_primal) << "\n";
  out << "gamma_dual: " << format_double(r.gamma_dual) << "\n";
  out << "duality_gap_bits: " << format_double(r.duality_gap_bits) << "\n";
  out << "iterations: " << r.primal.iterations << "\n";
  return kExitOk;
}

int do_verify(const ChannelFlags& cf, std::ostream& out) {
  if (cf.channel == "ad") {
    out << "channel: ad gamma=" << format_double(cf.gamma) << "\n";
    if (cf.gamma <= 0.5) {
      const DegradingMap d = ad_degrader(cf.gamma);
      const double delta = (1.0 - 2.0 * cf.gamma) / (1.0 - cf.gamma);
      out << "degradable: yes\n";
      out << "degrader: ad delta=" << format_double(delta) << "\n";
      out << "residual: " << format_double(d.residual) << "\n";
    } else {
      out << "degradable: no (anti-degradable regime, gamma > 1/2)\n";
    }
    out << "entanglement_breaking_ppt: "
        << (eb_check_ppt(amplitude_damping_channel(cf.gamma)) ? "yes" : "no") << "\n";
    return kExitOk;
  }
  if (cf.channel == "flagged-ad") {
    out << "channel: flagged-ad gamma=" << format_double(cf.gamma)
        << " p_mix=" << format_double(cf.p_mix) << "\n";
    if (cf.gamma > 0.5) {
      out << "degradable: unknown (noise branch outside its degradable regime)\n";
      return kExitOk;
    }
    const KrausChannel m = amplitude_damping_channel(cf.gamma);
    const DegradingMap dm = flagged_degrader(identity_channel(2), m, ad_degrader(cf.gamma), cf.p_mix);
    out << "degradable: yes\n";
    out << "residual: " << format_double(dm.residual) << "\n";
    return kExitOk;
  }

  const KrausChannel ch = channel_from_flags(cf);
  out << "channel: " << (cf.channel.empty() ? ch.label() : cf.channel) << "\n";
  if (ch.d_in() == 2 && ch.d_out() == 2) {
    out << "entanglement_breaking_ppt: " << (eb_check_ppt(ch) ? "yes" : "no") << "\n";
    if (cf.channel == "dep-iso" || cf.channel == "dep-pauli") {
      out << "note: reported zero-capacity threshold p_crit ~ "
          << kDepolarizingZeroCapacityThreshold
          << " (parameter convention iso-vs-pauli unresolved; reference constant only)\n";
    }
  } else {
    out << "note: PPT check supports qubit-to-qubit channels only\n";
  }
  out << "cptp: " << (validate_cptp(ch).pass ? "pass" : "fail") << "\n";
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qcap: capacity bounds and coherent-information optimization for small quantum channels"};
  app.require_subcommand(1);

  // sweep
  SweepArgs sweep_args;
  std::string sweep_metrics = "ic";
  std::string sweep_out = "-";
  CLI::App* sweep = app.add_subcommand("sweep", "optimize a metric over a parameter grid");
  sweep->add_option("--channel", sweep_args.channel,
                    "ad | gadc | dep-iso | dep-pauli | flagged-ad | flagged-dep-iso | "
                    "flagged-dep-pauli")
      ->required();
  sweep->add_option("--range", sweep_args.range, "start:stop:step for the swept parameter")
      ->required();
  sweep->add_option("--nth", sweep_args.nth, "gadc bath population");
  sweep->add_option("--p-mix", sweep_args.p_mix, "flagged-ad mixture weight");
  sweep->add_option("--metric", sweep_metrics, "comma list of ic|rci|ce");
  sweep->add_option("--mode", sweep_args.mode, "pure | mixed");
  sweep->add_option("--seed", sweep_args.seed, "optimizer rng seed");
  sweep->add_option("--jobs", sweep_args.jobs, "grid points evaluated concurrently");
  sweep->add_option("--out", sweep_out, "output path or - for stdout");

  // table
  std::string table_out = "-";
  CLI::App* table = app.add_subcommand("table", "lower/upper bound table for depolarizing noise");
  table->add_option("--out", table_out, "output path or - for stdout");

  // bound
  ChannelFlags bound_flags;
  CLI::App* bound = app.add_subcommand("bound", "max-Rains upper bound for one channel");
  add_channel_flags(bound, bound_flags);

  // verify
  ChannelFlags verify_flags;
  CLI::App* verify = app.add_subcommand("verify", "degradability / entanglement-breaking report");
  add_channel_flags(verify, verify_flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (sweep->parsed()) {
      sweep_args.metrics = split_metrics(sweep_metrics);
      return do_sweep(sweep_args, sweep_out, out);
    }
    if (table->parsed()) return do_table(table_out, out);
    if (bound->parsed()) return do_bound(bound_flags, out);
    if (verify->parsed()) return do_verify(verify_flags, out);
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << " (best bound " << format_double(e.best_bound) << ")\n";
    return kExitSolver;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace qcap
