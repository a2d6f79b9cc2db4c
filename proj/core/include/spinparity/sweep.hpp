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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "spinparity/scenarios.hpp"

namespace spinparity {

/** Geometry frames available to parameter sweeps. */
enum class Geometry {
  None,
  BInPlane,
  WInPlane,
  WPerp,
  WParallelOmegaB,
  WAntiparallelOmegaB,
  BParallelOmegaW,
  BAntiparallelOmegaW
};

/**
 * A parsed sweep description: an optional named case study with a geometry
 * frame, base values for the couplings, an optional family axis and an
 * optional sweep axis. With no case the field vectors are taken verbatim
 * from x,y,z triples; with no sweep the grid is a single point per family
 * value.
 */
struct SweepSpec {
  std::string case_name;
  Geometry geometry = Geometry::None;
  std::map<std::string, double> scalars;
  std::map<std::string, Vector3> vectors;
  int s = 1;
  int n = 2;
  double scale = 1.0;
  bool tensor_b_lock = false;
  std::string family_param;
  std::vector<double> family_values;
  std::string sweep_param;
  double sweep_start = 0.0;
  double sweep_stop = 0.0;
  long sweep_count = 0;
};

/**
 * Parse a key-value sweep configuration. Lines hold a key and its value,
 * separated by whitespace or '='; '#' starts a comment. A, P, W, B and E
 * accept x,y,z triples when no case is named; `family <param> <v1,v2,...>`
 * selects the family axis and `sweep <param> <start> <stop> <count>` the
 * sweep axis. Throws ParseError, UnknownKey or InvalidRange on malformed
 * input.
 */
SweepSpec parse_config(std::istream& in);

/** One evaluated grid point. Quantities are NaN where not applicable. */
struct ResultRow {
  double family_value = 0.0;
  double sweep_value = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double lambda = 0.0;
  double purity = 0.0;
  double concurrence = 0.0;
  double eof = 0.0;
  double discord_geo_1 = 0.0;
  double discord_geo_2 = 0.0;
  double entropy_sub2 = 0.0;
  std::string validity = "ok";
  bool has_oracle = false;
  double oracle_c1 = 0.0;
  double oracle_c2 = 0.0;
  double oracle_lambda = 0.0;
  double oracle_a_squared = 0.0;
  double oracle_concurrence = 0.0;
  double oracle_discord_1 = 0.0;
  double oracle_discord_2 = 0.0;
  double oracle_measure = 0.0;
};

/** The field configuration of one grid point of the sweep. */
FieldConfig make_config(const SweepSpec& spec,
                        const std::map<std::string, double>& scalars);

/**
 * Evaluate the whole grid, family-major. The numeric pipeline builds the
 * Hamiltonian, classifies it, builds the stationary state and measures it;
 * rows where no state exists carry a validity tag instead of numbers. With
 * with_oracle the closed-form case evaluation is attached to each row.
 * threads <= 0 selects the hardware concurrency. Row values do not depend
 * on the thread count.
 */
std::vector<ResultRow> run_sweep(const SweepSpec& spec, int threads,
                                 bool with_oracle);

/**
 * Write the rows as RFC 4180 style CSV with an LF line ending and a header
 * row. Numbers are formatted with 17 significant digits, locale independent,
 * so output is byte reproducible.
 */
void emit_csv(std::ostream& out, const SweepSpec& spec,
              const std::vector<ResultRow>& rows, bool with_oracle);

/** Result of comparing numeric columns against their closed-form values. */
struct CheckReport {
  bool ok = true;
  std::size_t rows_checked = 0;
  std::size_t values_checked = 0;
  double worst = 0.0;
  std::string worst_column;
  std::size_t worst_row = 0;
};

/**
 * Compare numeric columns against the attached closed forms wherever both
 * are finite. Columns checked: c1, c2, lambda, concurrence, discord_geo_1,
 * discord_geo_2. The per-value error is |numeric - oracle| scaled by
 * max(1, |oracle|), so large invariants are compared relatively and
 * quantities of order one absolutely.
 */
CheckReport check_rows(const std::vector<ResultRow>& rows, double tol = 1e-8);

}  // namespace spinparity
