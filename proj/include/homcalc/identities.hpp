#pragma once

#include "homcalc/algebroid.hpp"
#include "homcalc/report.hpp"
#include "homcalc/sampling.hpp"

#include <string>
#include <vector>

namespace homcalc {

struct IdentityInfo {
    std::string id;
    std::string anchor;
};

// Fixed catalog of calculus identities of a Hom-Lie algebroid, in evaluation order.
const std::vector<IdentityInfo>& identity_catalog();

// Evaluates both sides on basis multisections and forms with monomial coefficients whose joint degree is at
// most config.max_degree. Throws std::invalid_argument for an unknown id.
AxiomResult verify_identity(const HomLieAlgebroid& alg, const std::string& id, const SampleConfig& config = {});
VerificationReport verify_identities(const HomLieAlgebroid& alg, const SampleConfig& config = {});

} // namespace homcalc
