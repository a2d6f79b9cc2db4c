// Copyright 2026 The spinparity developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "spinparity/errors.hpp"
#include "spinparity/sweep.hpp"

namespace {

int run(const std::string& config_path, const std::string& output_path,
        int threads, bool with_oracle, bool check) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot open " << config_path << "\n";
    return 1;
  }

  spinparity::SweepSpec spec;
  try {
    spec = spinparity::parse_config(in);
  } catch (const spinparity::ConfigError& e) {
    std::cerr << "error: " << config_path << ": " << e.what() << "\n";
    return 1;
  }

  std::vector<spinparity::ResultRow> rows;
  try {
    rows = spinparity::run_sweep(spec, threads, with_oracle || check);
  } catch (const spinparity::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::ostringstream csv;
  spinparity::emit_csv(csv, spec, rows, with_oracle);
  if (output_path == "stdout") {
    std::cout << csv.str();
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << output_path << "\n";
      return 1;
    }
    out << csv.str();
  }

  if (check) {
    const spinparity::CheckReport rep = spinparity::check_rows(rows);
    std::cerr << "check: " << rep.rows_checked << " rows, "
              << rep.values_checked << " values, worst error " << rep.worst;
    if (!rep.worst_column.empty())
      std::cerr << " (" << rep.worst_column << ", row " << rep.worst_row
                << ")";
    std::cerr << "\n" << (rep.ok ? "check passed" : "check failed") << "\n";
    if (!rep.ok) return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Sweeps the closed Dirac case studies over a parameter grid and "
      "writes correlation measures as CSV.\n"
      "With --check, numeric columns are compared against the closed forms "
      "with error |numeric - closed| / max(1, |closed|) and tolerance 1e-8; "
      "a failed check exits with status 3."};
  app.name("spinparity-sweep");

  std::string config_path;
  std::string output_path = "stdout";
  int threads = 0;
  bool with_oracle = false;
  bool check = false;
  app.add_option("-c,--config", config_path, "sweep configuration file")
      ->required();
  app.add_option("-o,--output", output_path,
                 "output file, or 'stdout' (the default)");
  app.add_option("-t,--threads", threads,
                 "worker threads, 0 selects the hardware concurrency");
  app.add_flag("--oracle", with_oracle,
               "append closed-form columns to the CSV");
  app.add_flag("--check", check,
               "compare numeric columns against the closed forms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    return run(config_path, output_path, threads, with_oracle, check);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
