// Copyright 2026 The qdist Authors.
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

// Subcommand bodies of the qdist tool. Each returns the process exit code:
// 0 success, 1 verified failure (violation or deviation), 2 usage/input error.
// Results go to `out`, diagnostics to `err`.

#ifndef QDIST_TOOLS_COMMANDS_HPP
#define QDIST_TOOLS_COMMANDS_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qdist/qdist.hpp"

namespace qdist::cli {

enum class ExitCode : int { Ok = 0, Failed = 1, Usage = 2 };

enum class Format { Json, Csv };

inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string num(const ExtendedReal& v) { return v.to_string(12); }

inline std::string json_num(const ExtendedReal& v) {
  return v.is_finite() ? num(v.value()) : "\"" + v.to_string() + "\"";
}

/// "a,b,c" or "start:stop:count" (count evenly spaced points, both ends included).
inline std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  auto to_double = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw Error(Errc::ParseError, "bad number '" + s + "' in grid '" + text + "'");
    return v;
  };
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw Error(Errc::ParseError, "range grid must be start:stop:count");
    const double lo = to_double(parts[0]), hi = to_double(parts[1]);
    const double count = to_double(parts[2]);
    if (count < 1 || count != std::floor(count)) throw Error(Errc::ParseError, "grid count must be a positive integer");
    const auto n = static_cast<int>(count);
    if (n == 1) return {lo};
    for (int k = 0; k < n; ++k) out.push_back(k == n - 1 ? hi : lo + (hi - lo) * k / (n - 1));
    return out;
  }
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) out.push_back(to_double(p));
  if (out.empty()) throw Error(Errc::ParseError, "empty grid");
  return out;
}

/// "2,3,4" or "2..8".
inline std::vector<Index> parse_dims(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw Error(Errc::ParseError, "bad dimension '" + s + "'");
    return static_cast<Index>(v);
  };
  std::vector<Index> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const Index lo = to_int(text.substr(0, dots)), hi = to_int(text.substr(dots + 2));
    for (Index d = lo; d <= hi; ++d) out.push_back(d);
  } else {
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) out.push_back(to_int(p));
  }
  if (out.empty()) throw Error(Errc::ParseError, "no dimensions in '" + text + "'");
  return out;
}

/// Writes `text` to `path`, or to `out` when no path is given.
inline void emit(const std::string& text, const std::optional<std::string>& path, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(Errc::IoError, "cannot open " + *path + " for writing");
  f << text;
  if (!f) throw Error(Errc::IoError, "write to " + *path + " failed");
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return static_cast<int>(body());
  } catch (const Error& e) {
    err << "qdist: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Usage);
  }
}

// compute ------------------------------------------------------------------

struct ComputeOptions {
  std::string rho_path;
  std::string sigma_path;
  double prior = 0.5;
  Format format = Format::Json;
  std::optional<std::string> out_path;
};

inline std::string render_report(const MeasureReport& r, Format format) {
  if (format == Format::Csv) {
    return "L,T,F,Q,Q_min,s_star,C,S\n" + num(r.overlap) + "," + num(r.trace_distance) + "," + num(r.fidelity) +
           "," + num(r.hellinger) + "," + num(r.q_min) + "," + num(r.s_star) + "," + num(r.chernoff) + "," +
           num(r.relative_entropy) + "\n";
  }
  return "{\"L\": " + num(r.overlap) + ", \"T\": " + num(r.trace_distance) + ", \"F\": " + num(r.fidelity) +
         ", \"Q\": " + num(r.hellinger) + ", \"Q_min\": " + num(r.q_min) + ", \"s_star\": " + num(r.s_star) +
         ", \"C\": " + json_num(r.chernoff) + ", \"S\": " + json_num(r.relative_entropy) + "}\n";
}

inline DensityOperator load_state(const std::string& path) {
  try {
    return validate_density(read_matrix(path));
  } catch (const Error& e) {
    const std::string& msg = e.message();
    throw Error(e.code(), msg.find(path) == std::string::npos ? path + ": " + msg : msg);
  }
}

inline int cmd_compute(const ComputeOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const DensityOperator rho = load_state(o.rho_path);
    const DensityOperator sigma = load_state(o.sigma_path);
    if (rho.dim() != sigma.dim()) {
      throw Error(Errc::DomainMismatch, o.rho_path + " is " + std::to_string(rho.dim()) + "-dimensional but " +
                                            o.sigma_path + " is " + std::to_string(sigma.dim()) + "-dimensional");
    }
    emit(render_report(measure_report(make_weighted_pair(rho, sigma, o.prior)), o.format), o.out_path, out);
    return ExitCode::Ok;
  });
}

// verify -------------------------------------------------------------------

enum class PriorSelection { Uniform, Random, Both };

struct VerifyOptions {
  std::vector<Index> dims{2, 3, 4};
  std::uint64_t samples = 1000;
  std::uint64_t seed = 42;
  double eta = 1e-9;
  PriorSelection priors = PriorSelection::Both;
  Format format = Format::Csv;
  unsigned threads = 1;
  std::optional<std::string> out_path;
};

inline std::string render_verification(const VerificationReport& rep, Format format) {
  if (format == Format::Csv) return rep.to_csv();
  std::string s = "{\"passed\": " + std::string(rep.passed() ? "true" : "false") + ", \"records\": [";
  for (std::size_t i = 0; i < rep.records.size(); ++i) {
    const auto& r = rep.records[i];
    s += std::string(i ? ", " : "") + "{\"record_id\": \"" + r.record_id + "\", \"samples\": " +
         std::to_string(r.samples) + ", \"violations\": " + std::to_string(r.violations) +
         ", \"min_slack\": " + json_num(r.min_slack) + ", \"argmin_seed\": " + std::to_string(r.argmin_seed) + "}";
  }
  return s + "]}\n";
}

inline int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(o.eta > 0.0)) throw Error(Errc::DomainError, "--tol must be > 0");
    if (o.samples < 1) throw Error(Errc::DomainError, "--samples must be >= 1");
    VerificationReport total;
    auto run = [&](PriorMode mode) {
      total.merge(sweep(SweepConfig{o.dims, o.samples, mode, o.seed, o.eta, o.threads}));
    };
    if (o.priors != PriorSelection::Random) run(PriorMode::Uniform);
    if (o.priors != PriorSelection::Uniform) run(PriorMode::Random);
    emit(render_verification(total, o.format), o.out_path, out);
    if (!total.passed()) {
      err << "qdist: " << total.total_violations() << " inequality violations\n";
      return ExitCode::Failed;
    }
    return ExitCode::Ok;
  });
}

// families -----------------------------------------------------------------

struct FamiliesOptions {
  std::vector<Family> families{Family::A, Family::B, Family::C, Family::D};
  std::vector<double> t_grid = parse_grid("0:1:11");
  double eta = 1e-10;
  std::optional<std::string> out_path;
};

struct FamilyRow {
  Family family;
  double t;
  MeasureReport computed;
  MeasureReport expected;
  double max_deviation;
  double max_equality_slack;
};

inline double deviation(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.is_finite() && b.is_finite()) return std::abs(a.value() - b.value());
  return a.kind() == b.kind() ? 0.0 : HUGE_VAL;
}

/// Largest |computed - expected| over all closed-form fields (s_star excluded).
inline double max_deviation(const MeasureReport& c, const MeasureReport& e) {
  double d = 0.0;
  d = std::max(d, std::abs(c.overlap - e.overlap));
  d = std::max(d, std::abs(c.trace_distance - e.trace_distance));
  d = std::max(d, std::abs(c.fidelity - e.fidelity));
  d = std::max(d, std::abs(c.hellinger - e.hellinger));
  d = std::max(d, std::abs(c.q_min - e.q_min));
  d = std::max(d, deviation(c.chernoff, e.chernoff));
  d = std::max(d, deviation(c.relative_entropy, e.relative_entropy));
  return d;
}

inline FamilyRow family_row(Family f, double t) {
  const FamilyPoint fp = family_point(f, t);
  const MeasureReport computed = measure_report(make_weighted_pair(fp.rho, fp.sigma, 0.5));
  double worst_slack = 0.0;
  for (const auto& fs : family_equality_slacks(f, t)) {
    worst_slack = std::max(worst_slack, fs.slack.is_finite() ? std::abs(fs.slack.value()) : HUGE_VAL);
  }
  return {f, t, computed, fp.expected, max_deviation(computed, fp.expected), worst_slack};
}

inline int cmd_families(const FamiliesOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(o.eta > 0.0)) throw Error(Errc::DomainError, "--tol must be > 0");
    std::string text =
        "family,t,L,T,F,Q,Q_min,C,S,L_expected,T_expected,F_expected,Q_expected,Q_min_expected,C_expected,"
        "S_expected,max_deviation,max_equality_slack\n";
    bool ok = true;
    for (Family f : o.families) {
      for (double t : o.t_grid) {
        const FamilyRow r = family_row(f, t);
        const auto& c = r.computed;
        const auto& e = r.expected;
        text += std::string(1, family_letter(f)) + "," + num(t) + "," + num(c.overlap) + "," +
                num(c.trace_distance) + "," + num(c.fidelity) + "," + num(c.hellinger) + "," + num(c.q_min) + "," +
                num(c.chernoff) + "," + num(c.relative_entropy) + "," + num(e.overlap) + "," +
                num(e.trace_distance) + "," + num(e.fidelity) + "," + num(e.hellinger) + "," + num(e.q_min) + "," +
                num(e.chernoff) + "," + num(e.relative_entropy) + "," + num(r.max_deviation) + "," +
                num(r.max_equality_slack) + "\n";
        if (!(r.max_deviation <= o.eta) || !(r.max_equality_slack <= o.eta)) {
          ok = false;
          err << "qdist: family (" << family_letter(f) << ") t=" << num(t) << ": deviation "
              << num(r.max_deviation) << ", equality slack " << num(r.max_equality_slack) << "\n";
        }
      }
    }
    emit(text, o.out_path, out);
    return ok ? ExitCode::Ok : ExitCode::Failed;
  });
}

// hot ----------------------------------------------------------------------

struct HotOptions {
  std::vector<double> x_grid = parse_grid("0:0.9:10");
  std::optional<std::string> out_path;
};

inline int cmd_hot(const HotOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    for (double x : o.x_grid) {
      if (!(x >= 0.0 && x < 1.0)) throw Error(Errc::DomainError, "x = " + num(x) + " outside [0, 1)");
    }
    std::string text = "x,s,series,pinsker,upper\n";
    bool ok = true;
    for (double x : o.x_grid) {
      const double s = hot_function(x), lower = pinsker_lower(x), upper = hot_upper(x);
      text += num(x) + "," + num(s) + "," + num(hot_series(x)) + "," + num(lower) + "," + num(upper) + "\n";
      // the upper envelope is approached from below to within rounding as x -> 1
      if (s < lower - 1e-12 || s > upper + 1e-12 * std::max(1.0, upper)) {
        ok = false;
        err << "qdist: s(" << num(x) << ") = " << num(s) << " outside [" << num(lower) << ", " << num(upper) << "]\n";
      }
    }
    emit(text, o.out_path, out);
    return ok ? ExitCode::Ok : ExitCode::Failed;
  });
}

// gen ----------------------------------------------------------------------

enum class StateKind { Pure, Mixed };

struct GenOptions {
  StateKind kind = StateKind::Mixed;
  Index dim = 2;
  std::optional<Index> rank;
  std::uint64_t seed = 0;
  std::optional<std::string> out_path;
};

inline int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (o.dim < 1) throw Error(Errc::InvalidRank, "--dim must be >= 1");
    const DensityOperator state =
        o.kind == StateKind::Pure ? random_pure(o.dim, o.seed) : random_mixed(o.dim, o.rank.value_or(o.dim), o.seed);
    emit(format_matrix(state.matrix()), o.out_path, out);
    return ExitCode::Ok;
  });
}

}  // namespace qdist::cli

#endif  // QDIST_TOOLS_COMMANDS_HPP
