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

#include "spinparity/sweep.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "spinparity/correlations.hpp"
#include "spinparity/errors.hpp"

namespace spinparity {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kHalfPi = 1.5707963267948966;

const std::set<std::string>& scalar_field_keys() {
  static const std::set<std::string> keys = {"m",   "phi_S", "mu", "q",
                                             "kappa", "chi", "A0"};
  return keys;
}

const std::set<std::string>& vector_field_keys() {
  static const std::set<std::string> keys = {"A", "P", "W", "B", "E"};
  return keys;
}

const std::set<std::string>& axis_params() {
  static const std::set<std::string> keys = {"theta", "P", "W",
                                             "q",     "B", "mu"};
  return keys;
}

const std::set<std::string>& case_names() {
  static const std::set<std::string> names = {
      "pseudoscalar", "tensor", "pseudotensor", "pseudovector", "combined"};
  return names;
}

const std::set<std::string>& allowed_keys(const std::string& case_name) {
  static const std::map<std::string, std::set<std::string>> table = {
      {"pseudoscalar", {"m", "phi_S", "mu", "P", "A0"}},
      {"tensor", {"m", "phi_S", "mu", "kappa", "B", "P", "theta", "A0"}},
      {"pseudotensor", {"m", "phi_S", "mu", "chi", "B", "P", "theta", "A0"}},
      {"pseudovector", {"m", "phi_S", "mu", "q", "W", "P", "theta", "A0"}},
      {"combined", {"m", "phi_S", "mu", "q", "W", "B", "P", "theta", "A0"}}};
  return table.at(case_name);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& tok, std::size_t line) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = first + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line, "expected a number, got '" + tok + "'");
  return v;
}

long parse_integer(const std::string& tok, std::size_t line) {
  long v = 0;
  const char* first = tok.data();
  const char* last = first + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return v;
}

std::vector<double> parse_list(const std::string& tok, std::size_t line) {
  std::vector<double> out;
  for (const std::string& part : split(tok, ','))
    out.push_back(parse_double(part, line));
  return out;
}

Geometry parse_geometry(const std::string& name, std::size_t line) {
  if (name == "none") return Geometry::None;
  if (name == "b_in_plane") return Geometry::BInPlane;
  if (name == "w_in_plane") return Geometry::WInPlane;
  if (name == "w_perp") return Geometry::WPerp;
  if (name == "w_parallel_omega_b") return Geometry::WParallelOmegaB;
  if (name == "w_antiparallel_omega_b") return Geometry::WAntiparallelOmegaB;
  if (name == "b_parallel_omega_w") return Geometry::BParallelOmegaW;
  if (name == "b_antiparallel_omega_w") return Geometry::BAntiparallelOmegaW;
  throw ParseError(line, "unknown geometry: " + name);
}

const std::string& geometry_name(Geometry g) {
  static const std::map<Geometry, std::string> names = {
      {Geometry::None, "none"},
      {Geometry::BInPlane, "b_in_plane"},
      {Geometry::WInPlane, "w_in_plane"},
      {Geometry::WPerp, "w_perp"},
      {Geometry::WParallelOmegaB, "w_parallel_omega_b"},
      {Geometry::WAntiparallelOmegaB, "w_antiparallel_omega_b"},
      {Geometry::BParallelOmegaW, "b_parallel_omega_w"},
      {Geometry::BAntiparallelOmegaW, "b_antiparallel_omega_w"}};
  return names.at(g);
}

Geometry default_geometry(const std::string& case_name) {
  if (case_name == "tensor" || case_name == "pseudotensor")
    return Geometry::BInPlane;
  if (case_name == "pseudovector") return Geometry::WInPlane;
  if (case_name == "combined") return Geometry::WParallelOmegaB;
  return Geometry::None;
}

void check_geometry(const SweepSpec& spec) {
  const Geometry g = spec.geometry;
  bool ok = false;
  if (spec.case_name.empty() || spec.case_name == "pseudoscalar")
    ok = g == Geometry::None;
  if (spec.case_name == "tensor" || spec.case_name == "pseudotensor")
    ok = g == Geometry::BInPlane;
  if (spec.case_name == "pseudovector")
    ok = g == Geometry::WInPlane || g == Geometry::WPerp;
  if (spec.case_name == "combined")
    ok = g == Geometry::WParallelOmegaB ||
         g == Geometry::WAntiparallelOmegaB ||
         g == Geometry::BParallelOmegaW || g == Geometry::BAntiparallelOmegaW;
  if (!ok)
    throw ConfigError("geometry " + geometry_name(g) +
                      " is not valid for case " +
                      (spec.case_name.empty() ? "none" : spec.case_name));
}

double get_scalar(const std::map<std::string, double>& sc,
                  const std::string& key, double dflt = 0.0) {
  const auto it = sc.find(key);
  return it == sc.end() ? dflt : it->second;
}

std::string format_double(double v) {
  std::array<char, 64> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                       std::chars_format::general, 17);
  return std::string(buf.data(), ptr);
}

ScenarioResult evaluate_oracle(const SweepSpec& spec, const FieldConfig& f,
                               const std::map<std::string, double>& sc) {
  if (spec.case_name.empty() || spec.case_name == "combined")
    return case_combined(f, spec.s, spec.n);
  const double m = f.effective_mass();
  const double mu = f.mu;
  const double P = f.kinetic_momentum().norm();
  const double theta = get_scalar(sc, "theta");
  if (spec.case_name == "pseudoscalar")
    return case_pseudoscalar(m, mu, P, spec.n);
  if (spec.case_name == "tensor" || spec.case_name == "pseudotensor") {
    const bool pt = spec.case_name == "pseudotensor";
    return case_tensor_pseudoscalar(m, mu, pt ? f.chi : f.kappa, f.B.norm(),
                                    P, theta, spec.s, spec.n, pt);
  }
  return case_pseudovector(
      m, mu, f.q, f.W.norm(), P,
      spec.geometry == Geometry::WPerp ? kHalfPi : theta, spec.s, spec.n);
}

ResultRow evaluate_row(const SweepSpec& spec,
                       const std::map<std::string, double>& sc,
                       double family_value, double sweep_value,
                       bool with_oracle) {
  ResultRow row;
  row.family_value = family_value;
  row.sweep_value = sweep_value;
  row.c1 = row.c2 = row.lambda = row.purity = row.concurrence = row.eof =
      row.discord_geo_1 = row.discord_geo_2 = row.entropy_sub2 = kNaN;
  row.oracle_c1 = row.oracle_c2 = row.oracle_lambda = row.oracle_a_squared =
      row.oracle_concurrence = row.oracle_discord_1 = row.oracle_discord_2 =
          row.oracle_measure = kNaN;

  const FieldConfig f = make_config(spec, sc);
  try {
    const DiracHamiltonian h = build_hamiltonian(f);
    const Invariants inv = compute_invariants(h);
    row.c1 = inv.c1;
    row.c2 = inv.c2;
    const StationaryState st = build_state(h, spec.s, spec.n);
    row.lambda = st.lambda;
    const CorrelationReport rep = full_report(st.rho);
    row.purity = rep.purity;
    row.concurrence = rep.concurrence;
    row.eof = rep.eof;
    row.discord_geo_1 = rep.discord_geo_1;
    row.discord_geo_2 = rep.discord_geo_2;
    row.entropy_sub2 = rep.entropy_sub2;
    row.validity = "ok";
  } catch (const DegenerateEnergy&) {
    row.validity = "degenerate_energy";
  } catch (const UnsupportedConfiguration&) {
    row.validity = "unsupported";
  } catch (const ConstraintViolated&) {
    row.validity = "constraint_violated";
  }

  if (with_oracle) {
    try {
      const ScenarioResult o = evaluate_oracle(spec, f, sc);
      row.has_oracle = true;
      row.oracle_c1 = o.c1;
      row.oracle_c2 = o.c2;
      row.oracle_lambda = o.lambda;
      row.oracle_a_squared = o.a_squared;
      row.oracle_concurrence =
          spec.case_name == "pseudoscalar" ? 0.0 : o.measure;
      row.oracle_discord_1 = o.discord_geo_1;
      row.oracle_discord_2 = o.discord_geo_2;
      row.oracle_measure = o.measure;
    } catch (const Error&) {
      row.has_oracle = false;
    }
  }
  return row;
}

}  // namespace

SweepSpec parse_config(std::istream& in) {
  SweepSpec spec;
  struct Entry {
    std::size_t line = 0;
    std::string value;
  };
  std::map<std::string, Entry> fields;
  std::set<std::string> seen;
  std::string geometry_value;
  std::size_t geometry_line = 0;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq != std::string::npos) line[eq] = ' ';
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);

    if (!seen.insert(key).second)
      throw ParseError(lineno, "duplicate key: " + key);

    if (key == "sweep") {
      if (toks.size() != 4)
        throw ParseError(lineno,
                         "sweep expects: <param> <start> <stop> <count>");
      if (!axis_params().count(toks[0]))
        throw ParseError(lineno, "unknown sweep parameter: " + toks[0]);
      spec.sweep_param = toks[0];
      spec.sweep_start = parse_double(toks[1], lineno);
      spec.sweep_stop = parse_double(toks[2], lineno);
      spec.sweep_count = parse_integer(toks[3], lineno);
      if (spec.sweep_stop < spec.sweep_start)
        throw InvalidRange("sweep stop is less than start");
      if (spec.sweep_count < 2 || spec.sweep_count > 10000000)
        throw InvalidRange("sweep count must be between 2 and 1e7");
      continue;
    }
    if (key == "family") {
      if (toks.size() != 2)
        throw ParseError(lineno, "family expects: <param> <v1,v2,...>");
      if (!axis_params().count(toks[0]))
        throw ParseError(lineno, "unknown family parameter: " + toks[0]);
      spec.family_param = toks[0];
      spec.family_values = parse_list(toks[1], lineno);
      continue;
    }

    if (toks.size() != 1)
      throw ParseError(lineno, "key " + key + " expects one value");
    const std::string& value = toks[0];

    if (key == "case") {
      if (!case_names().count(value))
        throw ParseError(lineno, "unknown case: " + value);
      spec.case_name = value;
    } else if (key == "geometry") {
      geometry_value = value;
      geometry_line = lineno;
    } else if (key == "s" || key == "n") {
      const long v = parse_integer(value, lineno);
      if (v != 1 && v != 2) throw ParseError(lineno, key + " must be 1 or 2");
      (key == "s" ? spec.s : spec.n) = static_cast<int>(v);
    } else if (key == "scale") {
      spec.scale = parse_double(value, lineno);
      if (!(spec.scale > 0.0))
        throw ParseError(lineno, "scale must be positive");
    } else if (key == "tensor_b_lock") {
      if (value == "1" || value == "on" || value == "true")
        spec.tensor_b_lock = true;
      else if (value == "0" || value == "off" || value == "false")
        spec.tensor_b_lock = false;
      else
        throw ParseError(lineno, "tensor_b_lock must be on or off");
    } else if (scalar_field_keys().count(key) ||
               vector_field_keys().count(key) || key == "theta") {
      fields[key] = {lineno, value};
    } else {
      throw UnknownKey(key);
    }
  }

  spec.geometry = geometry_value.empty()
                      ? default_geometry(spec.case_name)
                      : parse_geometry(geometry_value, geometry_line);
  check_geometry(spec);

  const bool raw = spec.case_name.empty();
  for (const auto& [key, entry] : fields) {
    const bool is_vector = vector_field_keys().count(key) > 0;
    if (raw && key == "theta")
      throw ConfigError("key theta needs a case and its geometry frame");
    if (!raw) {
      if (!allowed_keys(spec.case_name).count(key))
        throw ConfigError("key " + key + " is not used by case " +
                          spec.case_name);
      if (entry.value.find(',') != std::string::npos)
        throw ParseError(entry.line, "key " + key +
                                         " expects one value (families use "
                                         "the family key)");
      spec.scalars[key] = parse_double(entry.value, entry.line);
      continue;
    }
    if (is_vector) {
      const auto parts = split(entry.value, ',');
      if (parts.size() != 3)
        throw ParseError(entry.line,
                         "key " + key + " expects an x,y,z triple");
      Vector3 v;
      for (int i = 0; i < 3; ++i) v[i] = parse_double(parts[i], entry.line);
      spec.vectors[key] = v;
    } else {
      spec.scalars[key] = parse_double(entry.value, entry.line);
    }
  }

  const auto check_axis = [&](const std::string& param) {
    if (param.empty()) return;
    if (raw) {
      if (param == "theta")
        throw ConfigError("parameter theta needs a case");
      if (param == "P" || param == "W" || param == "B") {
        const auto it = spec.vectors.find(param);
        if (it == spec.vectors.end() || it->second.norm() == 0.0)
          throw ConfigError("parameter " + param +
                            " needs a nonzero direction triple");
      }
    } else if (!allowed_keys(spec.case_name).count(param)) {
      throw ConfigError("parameter " + param + " is not used by case " +
                        spec.case_name);
    }
    if (spec.scalars.count(param))
      throw ConfigError("parameter " + param + " is both fixed and varied");
  };
  check_axis(spec.sweep_param);
  check_axis(spec.family_param);
  if (!spec.sweep_param.empty() && spec.sweep_param == spec.family_param)
    throw ConfigError("sweep and family cannot use the same parameter");

  if (spec.tensor_b_lock) {
    if (spec.case_name != "tensor" && spec.case_name != "pseudotensor")
      throw ConfigError("tensor_b_lock applies to the tensor cases only");
    if (spec.scalars.count("B") || spec.family_param == "B" ||
        spec.sweep_param == "B")
      throw ConfigError("tensor_b_lock fixes B");
  }
  if (spec.geometry == Geometry::WPerp &&
      (spec.scalars.count("theta") || spec.sweep_param == "theta" ||
       spec.family_param == "theta"))
    throw ConfigError("geometry w_perp fixes theta");
  return spec;
}

FieldConfig make_config(const SweepSpec& spec,
                        const std::map<std::string, double>& sc) {
  const double scale = spec.scale;
  const double m = get_scalar(sc, "m") * scale;
  const double phi_S = get_scalar(sc, "phi_S") * scale;
  const double mu = get_scalar(sc, "mu") * scale;
  const double q = get_scalar(sc, "q") * scale;
  const double P = get_scalar(sc, "P") * scale;
  const double W = get_scalar(sc, "W") * scale;
  double B = get_scalar(sc, "B") * scale;
  const double theta = get_scalar(sc, "theta");

  FieldConfig f;
  if (spec.case_name.empty()) {
    f.m = m;
    f.mu = mu;
    f.q = q;
    f.kappa = get_scalar(sc, "kappa");
    f.chi = get_scalar(sc, "chi");
    const auto vec = [&](const char* key) -> Vector3 {
      const auto it = spec.vectors.find(key);
      return it == spec.vectors.end() ? Vector3(Vector3::Zero())
                                      : Vector3(scale * it->second);
    };
    f.A = vec("A");
    f.p = vec("P");
    f.W = vec("W");
    f.B = vec("B");
    f.E = vec("E");
    const auto resize = [&](const std::string& key, Vector3& target) {
      const auto it = sc.find(key);
      if (it == sc.end()) return;
      const double norm = target.norm();
      if (norm == 0.0)
        throw ConfigError("parameter " + key +
                          " needs a nonzero direction triple");
      target *= it->second * scale / norm;
    };
    resize("P", f.p);
    resize("W", f.W);
    resize("B", f.B);
  } else if (spec.case_name == "pseudoscalar") {
    f.m = m;
    f.mu = mu;
    f.p = P * Vector3::UnitX();
  } else if (spec.case_name == "tensor" || spec.case_name == "pseudotensor") {
    const bool pt = spec.case_name == "pseudotensor";
    const double coupling = get_scalar(sc, pt ? "chi" : "kappa", 1.0);
    if (spec.tensor_b_lock) B = std::hypot(P, m + phi_S) / coupling;
    f = frame_b_in_plane(m, mu, coupling, B, P, theta, pt);
  } else if (spec.case_name == "pseudovector") {
    f = frame_w_in_plane(m, mu, q, W, P, theta);
    if (spec.geometry == Geometry::WPerp) f.W = Vector3(0.0, W, 0.0);
  } else {
    const bool anti = spec.geometry == Geometry::WAntiparallelOmegaB ||
                      spec.geometry == Geometry::BAntiparallelOmegaW;
    if (spec.geometry == Geometry::WParallelOmegaB ||
        spec.geometry == Geometry::WAntiparallelOmegaB)
      f = frame_w_parallel_omega_b(m, mu, q, W, B, P, theta, anti);
    else
      f = frame_b_parallel_omega_w(m, mu, q, W, B, P, theta, anti);
  }
  f.phi_S = phi_S;
  f.A0 = get_scalar(sc, "A0") * scale;
  return f;
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec, int threads,
                                 bool with_oracle) {
  std::vector<double> family = spec.family_values;
  if (family.empty()) family.push_back(kNaN);
  const std::size_t count =
      spec.sweep_param.empty() ? 1
                               : static_cast<std::size_t>(spec.sweep_count);
  const std::size_t total = family.size() * count;
  std::vector<ResultRow> rows(total);

  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::size_t fi = i / count;
      const std::size_t si = i % count;
      double sv = kNaN;
      std::map<std::string, double> sc = spec.scalars;
      if (!spec.family_param.empty()) sc[spec.family_param] = family[fi];
      if (!spec.sweep_param.empty()) {
        sv = spec.sweep_start + (spec.sweep_stop - spec.sweep_start) *
                                    static_cast<double>(si) /
                                    static_cast<double>(count - 1);
        sc[spec.sweep_param] = sv;
      }
      rows[i] = evaluate_row(spec, sc, family[fi], sv, with_oracle);
    }
  };

  std::size_t nthreads =
      threads > 0 ? static_cast<std::size_t>(threads)
                  : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min(nthreads, total);
  if (nthreads <= 1) {
    work(0, total);
    return rows;
  }

  const std::size_t chunk = (total + nthreads - 1) / nthreads;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(total, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, t, begin, end] {
      try {
        work(begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

void emit_csv(std::ostream& out, const SweepSpec& spec,
              const std::vector<ResultRow>& rows, bool with_oracle) {
  out << "case,geometry,s,n,family_param,family_value,sweep_param,"
         "sweep_value,c1,c2,lambda,purity,concurrence,eof,discord_geo_1,"
         "discord_geo_2,entropy_sub2,validity";
  if (with_oracle)
    out << ",oracle_c1,oracle_c2,oracle_lambda,oracle_a_squared,"
           "oracle_concurrence,oracle_discord_1,oracle_discord_2,"
           "oracle_measure";
  out << '\n';

  const std::string case_label =
      spec.case_name.empty() ? "none" : spec.case_name;
  const std::string family =
      spec.family_param.empty() ? "none" : spec.family_param;
  const std::string sweep =
      spec.sweep_param.empty() ? "none" : spec.sweep_param;
  for (const ResultRow& r : rows) {
    out << case_label << ',' << geometry_name(spec.geometry) << ',' << spec.s
        << ',' << spec.n << ',' << family << ','
        << format_double(r.family_value) << ',' << sweep << ','
        << format_double(r.sweep_value) << ',' << format_double(r.c1) << ','
        << format_double(r.c2) << ',' << format_double(r.lambda) << ','
        << format_double(r.purity) << ',' << format_double(r.concurrence)
        << ',' << format_double(r.eof) << ','
        << format_double(r.discord_geo_1) << ','
        << format_double(r.discord_geo_2) << ','
        << format_double(r.entropy_sub2) << ',' << r.validity;
    if (with_oracle)
      out << ',' << format_double(r.oracle_c1) << ','
          << format_double(r.oracle_c2) << ','
          << format_double(r.oracle_lambda) << ','
          << format_double(r.oracle_a_squared) << ','
          << format_double(r.oracle_concurrence) << ','
          << format_double(r.oracle_discord_1) << ','
          << format_double(r.oracle_discord_2) << ','
          << format_double(r.oracle_measure);
    out << '\n';
  }
}

CheckReport check_rows(const std::vector<ResultRow>& rows, double tol) {
  CheckReport rep;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ResultRow& r = rows[i];
    if (r.validity != "ok" || !r.has_oracle) continue;
    ++rep.rows_checked;
    const auto probe = [&](double num, double oracle, const char* name) {
      if (!std::isfinite(oracle)) return;
      ++rep.values_checked;
      const double err =
          std::isfinite(num)
              ? std::abs(num - oracle) / std::max(1.0, std::abs(oracle))
              : std::numeric_limits<double>::infinity();
      if (err > rep.worst) {
        rep.worst = err;
        rep.worst_column = name;
        rep.worst_row = i;
      }
    };
    probe(r.c1, r.oracle_c1, "c1");
    probe(r.c2, r.oracle_c2, "c2");
    probe(r.lambda, r.oracle_lambda, "lambda");
    probe(r.concurrence, r.oracle_concurrence, "concurrence");
    probe(r.discord_geo_1, r.oracle_discord_1, "discord_geo_1");
    probe(r.discord_geo_2, r.oracle_discord_2, "discord_geo_2");
  }
  rep.ok = rep.worst <= tol;
  return rep;
}

}  // namespace spinparity
