#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qcap/optimize.hpp"
#include "qcap/sdp.hpp"

namespace qcap {

inline constexpr const char* kToolVersion = "0.1.0";

// One row of a parameter sweep: channel, swept parameters, metric, optimum.
struct SweepRecord {
  std::string channel_kind;
  std::string convention;  // iso | pauli | n/a
  std::vector<std::pair<std::string, double>> params;
  std::string metric;      // ic | rci | ce
  std::string input_mode;  // pure | mixed
  double best_value;
  double theta;
  double phi;
  double r;
  bool converged;
  std::uint64_t rng_seed;
};

struct SweepArgs {
  std::string channel;  // ad | gadc | dep-iso | dep-pauli | flagged-ad |
                        // flagged-dep-iso | flagged-dep-pauli
  std::string range;    // "start:stop:step", inclusive when step divides the span
  double nth = 0.0;     // gadc bath population
  double p_mix = 0.5;   // flagged-ad mixture weight on the unitary branch
  std::vector<std::string> metrics = {"ic"};
  std::string mode = "pure";
  std::uint64_t seed = 12345;
  std::size_t jobs = 1;
};

// Grid for "start:stop:step"; both endpoints included when the step divides
// the span within 1e-12.
std::vector<double> parse_range(const std::string& text);

// Builds the channel a sweep evaluates at parameter value x.
KrausChannel sweep_channel_at(const SweepArgs& args, double x);

// One record per grid point per metric, in ascending parameter order;
// deterministic for a fixed seed, independent of the jobs count.
std::vector<SweepRecord> run_sweep(const SweepArgs& args);

// CSV with '#'-prefixed metadata; floats carry 9 significant digits.
void write_sweep_csv(std::ostream& out, const SweepArgs& args,
                     const std::vector<SweepRecord>& records);

std::vector<SweepRecord> parse_sweep_csv(std::istream& in);

struct TableRow {
  double p;          // iso-convention depolarizing parameter
  double hashing;    // Pauli-convention closed form at the printed p
  double max_rains;  // certified SDP upper bound
  double duality_gap;
};

// Lower/upper bound table at p in {0.05, 0.10, 0.15}.
std::vector<TableRow> compute_table();

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows);

std::string format_double(double v);  // 9 significant digits

}  // namespace qcap
