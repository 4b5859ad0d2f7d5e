//
// Copyright (c) 2026 The voigt library authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "voigt/engine.hpp"

namespace voigt {

/// Sweep definition: x linearly spaced (endpoint-inclusive), y log spaced as
/// 10^e with e linearly spaced.
struct GridSpec {
  double x_start;
  double x_stop;
  int x_count;
  double y_exp_start;
  double y_exp_stop;
  int y_count;
};

/// Result of a compare sweep.
struct ErrorSummary {
  double max_rel_v = 0.0;
  double max_rel_l = 0.0;
  ComplexPoint argmax_v{0.0, 0.0};
  ComplexPoint argmax_l{0.0, 0.0};
  long long points_evaluated = 0;
  long long points_skipped = 0;
};

enum class CompareReference { tiny_min, oracle };

/// Desk-scale default sweep: x in [-200, 200] x 4001, y = 10^e for
/// e in [-20, 4] x 71. --full-paper-grid swaps in the 40001-point x axis.
GridSpec default_grid();
GridSpec paper_grid();

std::vector<double> grid_x_values(const GridSpec& g);
std::vector<double> grid_y_values(const GridSpec& g);
long long grid_size(const GridSpec& g);

/// Parse "xstart:xstop:xcount,yexpstart:yexpstop:ycount".
GridSpec parse_grid_spec(const std::string& text);

/// Single-point evaluation, 17 significant digits, key=value lines.
/// Returns the process exit code (0, 2 invalid input, 3 overflow domain).
int run_eval(double x, double y, double tiny, bool with_derivatives,
             std::ostream& out, std::ostream& err);

/// Sweep the grid and write one CSV record per point (header x,y,V,L,status),
/// y-outer row-major, deterministic bytes. Throws on I/O failure.
void run_grid(const GridSpec& g, double tiny, const std::string& out_path);

/// Max relative deviation of a tiny_test sweep against a reference sweep
/// (tiny_min engine rerun, or the oracle inside its convergence region).
/// Points with a zero or unobtainable reference are skipped.
ErrorSummary run_compare(const GridSpec& g, double tiny_test,
                         CompareReference ref, std::ostream& out);

struct BenchRow {
  double tiny;
  double median_seconds;
  double ratio_to_tiny_min;
  bool low_confidence;
};

/// Median whole-grid wall time per tiny value (one warm pass first), plus
/// ratios against the tiny_min entry. threads > 1 times partitioned
/// throughput instead of the default single-threaded sweep.
std::vector<BenchRow> run_bench(const GridSpec& g,
                                const std::vector<double>& tiny_list,
                                int repeats, int threads, std::ostream& out);

/// Embedded reference values (literature table plus one spot value).
struct GoldenPoint {
  double x;
  double y;
  double v;
  double l;      ///< ignored when check_l is false
  bool check_l;
  double tol_v;  ///< relative
  double tol_l;  ///< relative
};

std::span<const GoldenPoint> golden_points();

/// Evaluate every golden point at tiny_min, check tolerances, cross-check
/// against the oracle where it converges; per-point report plus summary.
/// Returns true iff everything passed.
bool run_verify(std::ostream& out);

} // namespace voigt
