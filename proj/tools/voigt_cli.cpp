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
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "voigt/errors.hpp"
#include "voigt/harness.hpp"

namespace {

struct GridOptions {
  std::string spec;
  bool full_paper_grid = false;
};

voigt::GridSpec resolve_grid(const GridOptions& o) {
  voigt::GridSpec g =
      o.spec.empty() ? voigt::default_grid() : voigt::parse_grid_spec(o.spec);
  if (o.full_paper_grid) g.x_count = voigt::paper_grid().x_count;
  return g;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Faddeyeva / Voigt function evaluator"};
  app.require_subcommand(1);

  const double tmin = voigt::tiny_min();
  double tiny = tmin;
  GridOptions grid_opts;

  auto add_tiny = [&](CLI::App* cmd) {
    cmd->add_option("--tiny", tiny,
                    "accuracy knob, clamped into [tiny_min, 1e-4]")
        ->capture_default_str();
  };
  auto add_grid = [&](CLI::App* cmd) {
    cmd->add_option("--grid", grid_opts.spec,
                    "xstart:xstop:xcount,yexpstart:yexpstop:ycount");
    cmd->add_flag("--full-paper-grid", grid_opts.full_paper_grid,
                  "use the 40001-point x axis");
  };

  // eval
  double ex = 0.0, ey = 0.0;
  bool with_derivs = false;
  CLI::App* eval = app.add_subcommand("eval", "evaluate w(z) at one point");
  eval->add_option("x", ex, "Re z")->required();
  eval->add_option("y", ey, "Im z")->required();
  eval->add_flag("--derivatives", with_derivs, "also print the four partials");
  add_tiny(eval);

  // grid
  std::string out_path;
  CLI::App* grid = app.add_subcommand("grid", "sweep a grid to a CSV file");
  grid->add_option("--out", out_path, "output CSV path")->required();
  add_grid(grid);
  add_tiny(grid);

  // compare
  std::string reference = "tiny_min";
  CLI::App* compare = app.add_subcommand(
      "compare", "max relative deviation of a tiny setting vs a reference");
  compare->add_option("--reference", reference, "tiny_min | oracle")
      ->check(CLI::IsMember({"tiny_min", "oracle"}))
      ->capture_default_str();
  add_grid(compare);
  add_tiny(compare);

  // bench
  std::vector<double> tiny_list;
  int repeats = 5;
  int threads = 1;
  CLI::App* bench = app.add_subcommand("bench", "time grid sweeps per tiny");
  bench->add_option("--tiny-list", tiny_list, "tiny values to time")
      ->delimiter(',');
  bench->add_option("--repeats", repeats, "timed passes per tiny (>= 3 recommended)")
      ->capture_default_str();
  bench->add_option("--parallel", threads,
                    "worker threads for parallel-throughput timing")
      ->capture_default_str();
  add_grid(bench);

  // verify
  CLI::App* verify =
      app.add_subcommand("verify", "check embedded reference values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed())
      return voigt::run_eval(ex, ey, tiny, with_derivs, std::cout, std::cerr);
    if (grid->parsed()) {
      voigt::run_grid(resolve_grid(grid_opts), tiny, out_path);
      return 0;
    }
    if (compare->parsed()) {
      const auto ref = reference == "oracle" ? voigt::CompareReference::oracle
                                             : voigt::CompareReference::tiny_min;
      voigt::run_compare(resolve_grid(grid_opts), tiny, ref, std::cout);
      return 0;
    }
    if (bench->parsed()) {
      voigt::run_bench(resolve_grid(grid_opts), tiny_list, repeats, threads,
                       std::cout);
      return 0;
    }
    if (verify->parsed()) return voigt::run_verify(std::cout) ? 0 : 1;
  } catch (const voigt::OverflowDomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const voigt::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
