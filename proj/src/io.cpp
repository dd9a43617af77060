// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "ringcap/io.hpp"

#include <cstdio>
#include <ostream>
#include <set>

#include "ringcap/errors.hpp"

namespace ringcap::io {

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.count(key))
      throw DomainError("unknown field in JSON object: " + key);
  }
}

Vec2 point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw DomainError("a point must be a [x, y] array");
  return {j[0].get<double>(), j[1].get<double>()};
}

double require_number(const json& j, const char* key) {
  if (!j.contains(key)) throw DomainError(std::string("missing field: ") + key);
  if (!j[key].is_number()) throw DomainError(std::string(key) + " must be a number");
  return j[key].get<double>();
}

}  // namespace

ConvexBody body_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw DomainError("body JSON must be an object with a 'kind' field");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "disk") {
    reject_unknown(j, {"kind", "center", "r"});
    if (!j.contains("center")) throw DomainError("missing field: center");
    return ConvexBody::disk(point_from_json(j["center"]),
                            require_number(j, "r"));
  }
  if (kind == "ellipse") {
    reject_unknown(j, {"kind", "center", "a", "b", "rot"});
    if (!j.contains("center")) throw DomainError("missing field: center");
    const double rot = j.contains("rot") ? require_number(j, "rot") : 0.0;
    return ConvexBody::ellipse(point_from_json(j["center"]),
                               require_number(j, "a"), require_number(j, "b"),
                               rot);
  }
  if (kind == "polygon") {
    reject_unknown(j, {"kind", "vertices"});
    if (!j.contains("vertices") || !j["vertices"].is_array())
      throw DomainError("polygon needs a 'vertices' array");
    std::vector<Vec2> verts;
    for (const json& v : j["vertices"]) verts.push_back(point_from_json(v));
    return ConvexBody::polygon(std::move(verts));
  }
  throw DomainError("unknown body kind: " + kind);
}

json body_to_json(const ConvexBody& body) {
  json j;
  switch (body.kind()) {
    case BodyKind::Disk:
      j["kind"] = "disk";
      j["center"] = {body.center().x, body.center().y};
      j["r"] = body.radius();
      break;
    case BodyKind::Ellipse:
      j["kind"] = "ellipse";
      j["center"] = {body.center().x, body.center().y};
      j["a"] = body.semi_major();
      j["b"] = body.semi_minor();
      j["rot"] = body.rotation();
      break;
    case BodyKind::Polygon: {
      j["kind"] = "polygon";
      json verts = json::array();
      for (const Vec2& v : body.vertices()) verts.push_back({v.x, v.y});
      j["vertices"] = std::move(verts);
      break;
    }
  }
  return j;
}

RingDomain ring_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("ring JSON must be an object");
  reject_unknown(j, {"inner", "outer", "ref"});
  if (!j.contains("inner") || !j.contains("outer"))
    throw DomainError("ring JSON needs 'inner' and 'outer' bodies");
  ConvexBody inner = body_from_json(j["inner"]);
  ConvexBody outer = body_from_json(j["outer"]);
  if (j.contains("ref"))
    return RingDomain(std::move(inner), std::move(outer),
                      point_from_json(j["ref"]));
  return RingDomain(std::move(inner), std::move(outer));
}

json ring_to_json(const RingDomain& ring) {
  json j;
  j["inner"] = body_to_json(ring.inner);
  j["outer"] = body_to_json(ring.outer);
  j["ref"] = {ring.ref.x, ring.ref.y};
  return j;
}

json capacity_report_to_json(const CapacityReport& rep) {
  return json{{"p", rep.p},
              {"cap_energy", rep.cap_energy},
              {"cap_flux", rep.cap_flux},
              {"p_modulus", rep.p_modulus},
              {"iterations", rep.iterations},
              {"residual", rep.residual}};
}

json plane_cap_report_to_json(const PlaneCapReport& rep) {
  return json{{"pcap_plane", rep.pcap_plane},
              {"F_sequence", rep.F_sequence},
              {"R_seq", rep.R_seq},
              {"model", rep.model}};
}

json green_report_to_json(const GreenReport& rep) {
  return json{{"p", rep.p},
              {"tau_p", rep.tau_p},
              {"rho_p", rep.rho_p},
              {"gamma_ratio", rep.gamma_ratio},
              {"conditioning_warning", rep.conditioning_warning}};
}

json check_results_to_json(const std::vector<CheckResult>& checks) {
  json arr = json::array();
  for (const CheckResult& c : checks) {
    double min_margin = 0.0, max_abs = 0.0;
    for (double m : c.margins) {
      min_margin = std::min(min_margin, m);
      max_abs = std::max(max_abs, std::abs(m));
    }
    json j{{"name", c.name},
           {"verdict", verdict_name(c.verdict)},
           {"tol", c.tol},
           {"min_margin", min_margin},
           {"max_abs_margin", max_abs},
           {"informational", c.informational}};
    if (!c.notes.empty()) j["notes"] = c.notes;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_profile_csv(const LevelProfile& prof, std::ostream& os) {
  os << "t,A,L,dA,d2A,d3A,dL,d2L\n";
  for (std::size_t i = 0; i < prof.t.size(); ++i) {
    os << format_double(prof.t[i]) << ',' << format_double(prof.A[i]) << ','
       << format_double(prof.L[i]) << ',' << format_double(prof.dA[i]) << ','
       << format_double(prof.d2A[i]) << ',' << format_double(prof.d3A[i])
       << ',' << format_double(prof.dL[i]) << ','
       << format_double(prof.d2L[i]) << '\n';
  }
}

void write_green_profile_csv(const LevelProfile& prof, double p,
                             std::ostream& os) {
  os << "t,A,L,dA,d2A,d3A,dL,d2L,A_bound,L_bound\n";
  for (std::size_t i = 0; i < prof.t.size(); ++i) {
    const GreenBounds b =
        green_profile_bounds(prof.A[0], prof.L[0], p, prof.t[i]);
    os << format_double(prof.t[i]) << ',' << format_double(prof.A[i]) << ','
       << format_double(prof.L[i]) << ',' << format_double(prof.dA[i]) << ','
       << format_double(prof.d2A[i]) << ',' << format_double(prof.d3A[i])
       << ',' << format_double(prof.dL[i]) << ','
       << format_double(prof.d2L[i]) << ',' << format_double(b.A_bound) << ','
       << format_double(b.L_bound) << '\n';
  }
}

void write_checks_csv(const std::vector<CheckResult>& checks,
                      std::ostream& os) {
  os << "name,t,margin,tol,verdict\n";
  for (const CheckResult& c : checks) {
    for (std::size_t i = 0; i < c.margins.size(); ++i) {
      const double t = i < c.t_values.size() ? c.t_values[i] : 0.0;
      os << c.name << ',' << format_double(t) << ','
         << format_double(c.margins[i]) << ',' << format_double(c.tol) << ','
         << verdict_name(c.verdict) << '\n';
    }
  }
}

}  // namespace ringcap::io
