// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include <sstream>

#include "ringcap/errors.hpp"
#include "ringcap/io.hpp"
#include "ringcap/oracle.hpp"

using namespace ringcap;
using nlohmann::json;

TEST_CASE("body JSON round-trips") {
  const json specs = json::array(
      {json::parse(R"({"kind":"disk","center":[0.5,-1.0],"r":2.0})"),
       json::parse(R"({"kind":"ellipse","center":[0,0],"a":2.0,"b":1.0,"rot":0.3})"),
       json::parse(
           R"({"kind":"polygon","vertices":[[-1,-1],[1,-1],[1,1],[-1,1]]})")});
  for (const json& j : specs) {
    const ConvexBody body = io::body_from_json(j);
    const json back = io::body_to_json(body);
    const ConvexBody body2 = io::body_from_json(back);
    CHECK(body2.kind() == body.kind());
    CHECK(body2.area() == doctest::Approx(body.area()).epsilon(1e-14));
  }
}

TEST_CASE("unknown fields are rejected") {
  CHECK_THROWS_AS(io::body_from_json(json::parse(
                      R"({"kind":"disk","center":[0,0],"r":1.0,"color":"red"})")),
                  DomainError);
  CHECK_THROWS_AS(io::body_from_json(json::parse(
                      R"({"kind":"torus","center":[0,0],"r":1.0})")),
                  DomainError);
  CHECK_THROWS_AS(
      io::ring_from_json(json::parse(
          R"({"inner":{"kind":"disk","center":[0,0],"r":1},"outer":{"kind":"disk","center":[0,0],"r":2},"extra":1})")),
      DomainError);
}

TEST_CASE("invalid bodies are rejected at parse time") {
  CHECK_THROWS_AS(io::body_from_json(json::parse(
                      R"({"kind":"disk","center":[0,0],"r":-1.0})")),
                  DomainError);
  CHECK_THROWS_AS(io::body_from_json(json::parse(
                      R"({"kind":"ellipse","center":[0,0],"a":1.0,"b":2.0})")),
                  DomainError);
}

TEST_CASE("ring JSON defaults the reference point to the inner centroid") {
  const RingDomain ring = io::ring_from_json(json::parse(
      R"({"inner":{"kind":"disk","center":[0.5,0],"r":1},"outer":{"kind":"disk","center":[0,0],"r":4}})"));
  CHECK(ring.ref.x == doctest::Approx(0.5));
  CHECK(ring.ref.y == doctest::Approx(0.0));
}

TEST_CASE("profile CSV layout and determinism") {
  std::vector<double> grid(11);
  for (int i = 0; i < 11; ++i) grid[i] = i / 10.0;
  const LevelProfile prof =
      oracle::annulus_profile({1.0, 2.0, 1.5}, grid);
  std::ostringstream a, b;
  io::write_profile_csv(prof, a);
  io::write_profile_csv(prof, b);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("t,A,L,dA,d2A,d3A,dL,d2L\n", 0) == 0);
  // 11 data rows + header
  int lines = 0;
  for (char ch : a.str())
    if (ch == '\n') ++lines;
  CHECK(lines == 12);
}

TEST_CASE("green profile CSV carries bound columns") {
  std::vector<double> grid(9);
  for (int i = 0; i < 9; ++i) grid[i] = i * 0.02;
  LevelProfile prof;
  prof.t = grid;
  prof.A.assign(9, 3.0);
  prof.L.assign(9, 6.5);
  prof.dA.assign(9, -1.0);
  prof.d2A.assign(9, 1.0);
  prof.d3A.assign(9, -1.0);
  prof.dL.assign(9, -1.0);
  prof.d2L.assign(9, 1.0);
  std::ostringstream os;
  io::write_green_profile_csv(prof, 2.0, os);
  CHECK(os.str().rfind("t,A,L,dA,d2A,d3A,dL,d2L,A_bound,L_bound\n", 0) == 0);
}

TEST_CASE("capacity report JSON carries the contract fields") {
  CapacityReport rep{1.5, 7.25, 7.26, 0.019, 42, 1e-11, 0.5};
  const json j = io::capacity_report_to_json(rep);
  for (const char* key :
       {"p", "cap_energy", "cap_flux", "p_modulus", "iterations", "residual"})
    CHECK(j.contains(key));
}
