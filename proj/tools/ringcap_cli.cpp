// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringcap/errors.hpp"
#include "ringcap/io.hpp"
#include "ringcap/oracle.hpp"
#include "ringcap/parallel.hpp"
#include "ringcap/suite.hpp"

namespace {

using namespace ringcap;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitVerifyFail = 4;

struct MeshSpec {
  int n_phi = 128;
  int n_s = 32;
};

MeshSpec parse_mesh(const std::string& spec) {
  MeshSpec m;
  if (std::sscanf(spec.c_str(), "%dx%d", &m.n_phi, &m.n_s) != 2)
    throw DomainError("mesh must be given as <n_phi>x<n_s>, e.g. 128x32");
  return m;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DomainError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

DerivativeMethod parse_method(const std::string& name) {
  if (name == "smoothing_spline") return DerivativeMethod::SmoothingSpline;
  if (name == "finite_diff") return DerivativeMethod::FiniteDiff;
  throw DomainError("method must be smoothing_spline or finite_diff");
}

json run_config_json(const RingRunConfig& cfg, const RingDomain& ring) {
  json j;
  j["domain"] = io::ring_to_json(ring);
  j["p"] = cfg.p;
  j["mesh"] = std::to_string(cfg.n_phi) + "x" + std::to_string(cfg.n_s);
  j["grading"] = cfg.grading;
  j["levels"] = cfg.n_t;
  j["t_probe"] = cfg.t_probe;
  j["method"] = cfg.method == DerivativeMethod::SmoothingSpline
                    ? "smoothing_spline"
                    : "finite_diff";
  return j;
}

int cmd_solve(const std::string& domain_path, double p,
              const std::string& mesh, double grading, int levels,
              double t_probe, const std::string& method,
              const std::string& out, const std::string& profile_out) {
  const RingDomain ring = io::ring_from_json(read_json_file(domain_path));
  RingRunConfig cfg;
  cfg.p = p;
  const MeshSpec ms = parse_mesh(mesh);
  cfg.n_phi = ms.n_phi;
  cfg.n_s = ms.n_s;
  cfg.grading = grading;
  cfg.n_t = levels;
  cfg.t_probe = t_probe;
  cfg.method = parse_method(method);

  const RingRun run = run_ring(ring, cfg);
  json rep = io::capacity_report_to_json(run.cap);
  rep["config"] = run_config_json(cfg, ring);
  write_text(out, rep.dump(2) + "\n");
  if (!profile_out.empty()) {
    std::ostringstream csv;
    io::write_profile_csv(run.profile, csv);
    write_text(profile_out, csv.str());
  }
  return kExitOk;
}

int cmd_green(const std::string& domain_path, std::vector<double> pole,
              double p, const std::string& mesh, double grading, int levels,
              std::vector<double> deltas, const std::string& out,
              const std::string& profile_out) {
  const ConvexBody domain = io::body_from_json(read_json_file(domain_path));
  GreenParams params;
  params.p = p;
  if (pole.size() == 2) params.pole = {pole[0], pole[1]};
  else params.pole = domain.centroid();
  const MeshSpec ms = parse_mesh(mesh);
  params.n_phi = ms.n_phi;
  params.n_s = ms.n_s;
  params.grading = grading;
  params.n_t = levels;
  if (!deltas.empty()) params.delta_fracs = deltas;

  const GreenReport rep = green_report(domain, params);
  json j = io::green_report_to_json(rep);
  j["config"] = {{"domain", io::body_to_json(domain)},
                 {"pole", {params.pole.x, params.pole.y}},
                 {"p", p},
                 {"mesh", mesh},
                 {"grading", grading},
                 {"levels", levels},
                 {"delta_fracs", params.delta_fracs}};
  write_text(out, j.dump(2) + "\n");
  if (!profile_out.empty()) {
    std::ostringstream csv;
    io::write_green_profile_csv(rep.profile, p, csv);
    write_text(profile_out, csv.str());
  }
  return kExitOk;
}

int cmd_planecap(const std::string& body_path, double p,
                 const std::string& mesh, double grading,
                 const std::string& out) {
  PlaneCapRequest req;
  req.K = io::body_from_json(read_json_file(body_path));
  req.p = p;
  PlaneCapContext ctx;
  const MeshSpec ms = parse_mesh(mesh);
  ctx.n_phi = ms.n_phi;
  ctx.n_s = ms.n_s;
  ctx.grading = grading;

  const PlaneCapReport rep = pcap_plane(req, ctx);
  json j = io::plane_cap_report_to_json(rep);
  j["config"] = {{"body", io::body_to_json(req.K)},
                 {"p", p},
                 {"mesh", mesh},
                 {"grading", grading}};
  write_text(out, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_verify(const std::string& domain_path, int random_rings,
               std::uint64_t seed, double p, const std::string& mesh,
               double grading, int levels, const std::string& method,
               const std::string& out, const std::string& csv_out) {
  RingRunConfig cfg;
  cfg.p = p;
  const MeshSpec ms = parse_mesh(mesh);
  cfg.n_phi = ms.n_phi;
  cfg.n_s = ms.n_s;
  cfg.grading = grading;
  cfg.n_t = levels;
  cfg.method = parse_method(method);

  std::vector<RingDomain> rings;
  std::vector<std::string> labels;
  if (!domain_path.empty()) {
    rings.push_back(io::ring_from_json(read_json_file(domain_path)));
    labels.push_back(domain_path);
  }
  for (int i = 0; i < random_rings; ++i) {
    rings.push_back(random_ring(seed, i));
    labels.push_back("random-" + std::to_string(i));
  }
  if (rings.empty())
    throw DomainError("verify needs --domain and/or --random-rings");

  bool any_fail = false;
  json runs = json::array();
  std::ostringstream csv;
  bool wrote_header = false;
  for (std::size_t i = 0; i < rings.size(); ++i) {
    const RingSuiteResult res = run_ring_suite(rings[i], cfg);
    const bool ok = all_passed(res.checks);
    any_fail = any_fail || !ok;
    json entry;
    entry["config"] = run_config_json(cfg, rings[i]);
    entry["label"] = labels[i];
    entry["cap"] = io::capacity_report_to_json(res.cap);
    entry["checks"] = io::check_results_to_json(res.checks);
    entry["verdict"] = ok ? "pass" : "fail";
    runs.push_back(std::move(entry));
    std::ostringstream chunk;
    io::write_checks_csv(res.checks, chunk);
    std::string text = chunk.str();
    if (wrote_header) text.erase(0, text.find('\n') + 1);
    wrote_header = true;
    csv << text;
    std::cerr << "[verify] " << labels[i] << ": " << (ok ? "pass" : "FAIL")
              << "\n";
  }
  json summary;
  summary["runs"] = std::move(runs);
  summary["verdict"] = any_fail ? "fail" : "pass";
  if (!out.empty()) write_text(out, summary.dump(2) + "\n");
  if (!csv_out.empty()) write_text(csv_out, csv.str());
  return any_fail ? kExitVerifyFail : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-Laplace capacity, level-curve geometry and inequality "
               "verification on convex plane rings"};
  app.require_subcommand(1);

  // --- oracle ---------------------------------------------------------
  auto* oracle_cmd = app.add_subcommand("oracle", "closed-form radial values");
  oracle_cmd->require_subcommand(1);
  double o_r = 1.0, o_R = 2.0, o_p = 2.0, o_s = 1.0;

  auto* oc_annulus = oracle_cmd->add_subcommand("annulus", "annulus capacity");
  oc_annulus->add_option("--r", o_r, "inner radius")->required();
  oc_annulus->add_option("--R", o_R, "outer radius")->required();
  oc_annulus->add_option("--p", o_p, "exponent in (1,2]")->required();

  auto* oc_potential =
      oracle_cmd->add_subcommand("potential", "radial potential value");
  oc_potential->add_option("--r", o_r, "inner radius")->required();
  oc_potential->add_option("--R", o_R, "outer radius")->required();
  oc_potential->add_option("--p", o_p, "exponent in (1,2]")->required();
  oc_potential->add_option("--s", o_s, "evaluation radius")->required();

  auto* oc_green =
      oracle_cmd->add_subcommand("green", "centered-disk Green value");
  oc_green->add_option("--R", o_R, "disk radius")->required();
  oc_green->add_option("--p", o_p, "exponent in (1,2]")->required();
  oc_green->add_option("--s", o_s, "evaluation radius")->required();

  // --- solve ----------------------------------------------------------
  auto* solve_cmd =
      app.add_subcommand("solve", "ring capacity potential and level profile");
  std::string s_domain, s_mesh = "128x32", s_out, s_profile_out;
  std::string s_method = "smoothing_spline";
  double s_p = 2.0, s_grading = 1.0, s_t_probe = 0.5;
  int s_levels = 21;
  solve_cmd->add_option("--domain", s_domain, "ring JSON file")->required();
  solve_cmd->add_option("--p", s_p, "exponent in (1,2]")->required();
  solve_cmd->add_option("--mesh", s_mesh, "mesh as n_phi x n_s");
  solve_cmd->add_option("--grading", s_grading, "radial grading exponent");
  solve_cmd->add_option("--levels", s_levels, "level count");
  solve_cmd->add_option("--t-probe", s_t_probe, "flux probe level");
  solve_cmd->add_option("--method", s_method, "derivative estimator");
  solve_cmd->add_option("--out", s_out, "report JSON path (default stdout)");
  solve_cmd->add_option("--profile-out", s_profile_out, "profile CSV path");

  // --- green ----------------------------------------------------------
  auto* green_cmd =
      app.add_subcommand("green", "Green function, Robin constant, radius");
  std::string g_domain, g_mesh = "128x96", g_out, g_profile_out;
  std::vector<double> g_pole, g_deltas;
  double g_p = 2.0, g_grading = 3.0;
  int g_levels = 15;
  green_cmd->add_option("--domain", g_domain, "domain body JSON file")
      ->required();
  green_cmd->add_option("--pole", g_pole, "pole x y (default centroid)")
      ->expected(2);
  green_cmd->add_option("--p", g_p, "exponent in (1,2]")->required();
  green_cmd->add_option("--mesh", g_mesh, "mesh as n_phi x n_s");
  green_cmd->add_option("--grading", g_grading, "radial grading exponent");
  green_cmd->add_option("--levels", g_levels, "level count");
  green_cmd->add_option("--deltas", g_deltas,
                        "inner radii as fractions of the inradius");
  green_cmd->add_option("--out", g_out, "report JSON path (default stdout)");
  green_cmd->add_option("--profile-out", g_profile_out, "profile CSV path");

  // --- planecap -------------------------------------------------------
  auto* plane_cmd =
      app.add_subcommand("planecap", "whole-plane capacity of a convex body");
  std::string pc_body, pc_mesh = "128x64", pc_out;
  double pc_p = 2.0, pc_grading = 2.0;
  plane_cmd->add_option("--body", pc_body, "body JSON file")->required();
  plane_cmd->add_option("--p", pc_p, "exponent in (1,2]")->required();
  plane_cmd->add_option("--mesh", pc_mesh, "mesh as n_phi x n_s");
  plane_cmd->add_option("--grading", pc_grading, "radial grading exponent");
  plane_cmd->add_option("--out", pc_out, "report JSON path (default stdout)");

  // --- verify ---------------------------------------------------------
  auto* verify_cmd =
      app.add_subcommand("verify", "run the inequality check suites");
  std::string v_domain, v_mesh = "128x32", v_out, v_csv;
  std::string v_suite = "all", v_method = "smoothing_spline";
  double v_p = 2.0, v_grading = 1.0;
  int v_levels = 21, v_random = 0;
  std::uint64_t v_seed = 1;
  verify_cmd->add_option("--suite", v_suite, "suite selector (all)");
  verify_cmd->add_option("--domain", v_domain, "ring JSON file");
  verify_cmd->add_option("--random-rings", v_random,
                         "number of seeded random rings");
  verify_cmd->add_option("--seed", v_seed, "random ring seed");
  verify_cmd->add_option("--p", v_p, "exponent in (1,2]")->required();
  verify_cmd->add_option("--mesh", v_mesh, "mesh as n_phi x n_s");
  verify_cmd->add_option("--grading", v_grading, "radial grading exponent");
  verify_cmd->add_option("--levels", v_levels, "level count");
  verify_cmd->add_option("--method", v_method, "derivative estimator");
  verify_cmd->add_option("--out", v_out, "summary JSON path");
  verify_cmd->add_option("--csv", v_csv, "margin CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (oc_annulus->parsed()) {
      std::cout << ringcap::io::format_double(
                       oracle::annulus_capacity({o_r, o_R, o_p}))
                << "\n";
      return kExitOk;
    }
    if (oc_potential->parsed()) {
      std::cout << ringcap::io::format_double(
                       oracle::annulus_potential(o_s, {o_r, o_R, o_p}))
                << "\n";
      return kExitOk;
    }
    if (oc_green->parsed()) {
      std::cout << ringcap::io::format_double(oracle::disk_green(o_s, o_R, o_p))
                << "\n";
      return kExitOk;
    }
    if (solve_cmd->parsed())
      return cmd_solve(s_domain, s_p, s_mesh, s_grading, s_levels, s_t_probe,
                       s_method, s_out, s_profile_out);
    if (green_cmd->parsed())
      return cmd_green(g_domain, g_pole, g_p, g_mesh, g_grading, g_levels,
                       g_deltas, g_out, g_profile_out);
    if (plane_cmd->parsed())
      return cmd_planecap(pc_body, pc_p, pc_mesh, pc_grading, pc_out);
    if (verify_cmd->parsed()) {
      if (v_suite != "all") throw DomainError("unknown suite: " + v_suite);
      return cmd_verify(v_domain, v_random, v_seed, v_p, v_mesh, v_grading,
                        v_levels, v_method, v_out, v_csv);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (residual " << e.residual()
              << ")\n";
    return kExitNumeric;
  } catch (const TopologyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitDomain;
}
