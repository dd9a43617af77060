// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringcap/checks.hpp"
#include "ringcap/geometry.hpp"
#include "ringcap/green.hpp"
#include "ringcap/levelflow.hpp"
#include "ringcap/mesh.hpp"
#include "ringcap/planecap.hpp"
#include "ringcap/plaplace.hpp"

namespace ringcap::io {

using nlohmann::json;

// {"kind":"disk","center":[x,y],"r":v} |
// {"kind":"ellipse","center":[x,y],"a":v,"b":v,"rot":v} |
// {"kind":"polygon","vertices":[[x,y],...]}
// Unknown fields are rejected.
ConvexBody body_from_json(const json& j);
json body_to_json(const ConvexBody& body);

// {"inner": <body>, "outer": <body>}
RingDomain ring_from_json(const json& j);
json ring_to_json(const RingDomain& ring);

json capacity_report_to_json(const CapacityReport& rep);
json plane_cap_report_to_json(const PlaneCapReport& rep);
json green_report_to_json(const GreenReport& rep);
json check_results_to_json(const std::vector<CheckResult>& checks);

// Profile CSV: t,A,L,dA,d2A,d3A,dL,d2L (derivative columns must be filled).
void write_profile_csv(const LevelProfile& prof, std::ostream& os);
// Green variant with the closed-form decay bounds appended.
void write_green_profile_csv(const LevelProfile& prof, double p,
                             std::ostream& os);
// Verification CSV: name,t,margin,tol,verdict (one row per margin entry).
void write_checks_csv(const std::vector<CheckResult>& checks,
                      std::ostream& os);

std::string format_double(double v);

}  // namespace ringcap::io
