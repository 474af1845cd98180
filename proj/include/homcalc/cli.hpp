#pragma once

#include "homcalc/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace homcalc {

// Exit codes: 0 all axioms pass, 1 an axiom or derivation precondition fails, 2 usage, parse or semantic error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Machine-readable report; every field except elapsed_ms is deterministic.
std::string report_json(const VerificationReport& report);

} // namespace homcalc
