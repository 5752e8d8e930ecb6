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


#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using namespace qdist;
using namespace qdist::cli;

Format to_format(const std::string& name) { return name == "csv" ? Format::Csv : Format::Json; }

template <class T>
CLI::Option* add_optional(CLI::App* app, const std::string& name, std::optional<T>& target, const std::string& help) {
  return app->add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

int run(int argc, char** argv) {
  CLI::App app{"Distinguishability measures between quantum states and the inequalities relating them."};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "Measures for a pair of state files");
  c->add_option("--rho", compute.rho_path, "State file for rho")->required();
  c->add_option("--sigma", compute.sigma_path, "State file for sigma")->required();
  c->add_option("--prior", compute.prior, "Prior probability p of rho")->capture_default_str();
  std::string compute_format = "json";
  c->add_option("--format", compute_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  add_optional(c, "--out", compute.out_path, "Output path (default stdout)");

  VerifyOptions verify;
  std::string dims = "2..4";
  std::string prior_mode = "both";
  auto* v = app.add_subcommand("verify", "Random sweep over the inequality catalog");
  v->add_option("--dims", dims, "Dimensions, e.g. 2,3,4 or 2..8")->capture_default_str();
  v->add_option("--samples", verify.samples, "Samples per dimension and prior mode")->capture_default_str();
  v->add_option("--seed", verify.seed, "Base seed")->capture_default_str();
  v->add_option("--tol", verify.eta, "Violation tolerance")->capture_default_str();
  v->add_option("--prior", prior_mode, "uniform, random or both")
      ->check(CLI::IsMember({"uniform", "random", "both"}))
      ->capture_default_str();
  v->add_option("--threads", verify.threads, "Worker threads")->capture_default_str();
  std::string verify_format = "csv";
  v->add_option("--format", verify_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  add_optional(v, "--out", verify.out_path, "Output path (default stdout)");

  FamiliesOptions families;
  std::string family = "all";
  std::string t_grid = "0:1:11";
  auto* f = app.add_subcommand("families", "Closed-form equality families against computed values");
  f->add_option("--family", family, "a, b, c, d or all")
      ->check(CLI::IsMember({"a", "b", "c", "d", "all"}))
      ->capture_default_str();
  f->add_option("--t-grid", t_grid, "Comma list or start:stop:count")->capture_default_str();
  f->add_option("--tol", families.eta, "Allowed deviation")->capture_default_str();
  add_optional(f, "--out", families.out_path, "Output path (default stdout)");

  HotOptions hot;
  std::string x_grid = "0:0.9:10";
  auto* h = app.add_subcommand("hot", "Tabulate s(x) with its series and envelopes");
  h->add_option("--x-grid", x_grid, "Comma list or start:stop:count")->capture_default_str();
  add_optional(h, "--out", hot.out_path, "Output path (default stdout)");

  GenOptions gen;
  std::string kind = "mixed";
  auto* g = app.add_subcommand("gen", "Write a random density matrix");
  g->add_option("kind", kind, "pure or mixed")->check(CLI::IsMember({"pure", "mixed"}))->capture_default_str();
  g->add_option("--dim", gen.dim, "Hilbert space dimension")->required();
  add_optional(g, "--rank", gen.rank, "Rank of a mixed state (default dim)");
  g->add_option("--seed", gen.seed, "Seed")->capture_default_str();
  add_optional(g, "--out", gen.out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::Usage);
  }

  // grid and enum flags are parsed here so malformed values get the same exit code as bad input files
  std::ostream& out = std::cout;
  std::ostream& err = std::cerr;
  if (c->parsed()) {
    compute.format = to_format(compute_format);
    return cmd_compute(compute, out, err);
  }
  if (v->parsed()) {
    return guarded(err, [&] {
      verify.dims = parse_dims(dims);
      verify.format = to_format(verify_format);
      verify.priors = prior_mode == "uniform"  ? PriorSelection::Uniform
                      : prior_mode == "random" ? PriorSelection::Random
                                               : PriorSelection::Both;
      return static_cast<ExitCode>(cmd_verify(verify, out, err));
    });
  }
  if (f->parsed()) {
    return guarded(err, [&] {
      families.t_grid = parse_grid(t_grid);
      families.families = family == "all" ? std::vector<Family>(kAllFamilies.begin(), kAllFamilies.end())
                                          : std::vector<Family>{parse_family(family).value()};
      return static_cast<ExitCode>(cmd_families(families, out, err));
    });
  }
  if (h->parsed()) {
    return guarded(err, [&] {
      hot.x_grid = parse_grid(x_grid);
      return static_cast<ExitCode>(cmd_hot(hot, out, err));
    });
  }
  gen.kind = kind == "pure" ? StateKind::Pure : StateKind::Mixed;
  return cmd_gen(gen, out, err);
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
