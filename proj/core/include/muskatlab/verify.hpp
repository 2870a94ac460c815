#pragma once

#include <string>
#include <vector>

#include "muskatlab/config.hpp"

namespace muskat {

struct IdentityResult {
    std::string name;
    double measured = 0.0;   // relative error (or ratio) the identity produced
    double tolerance = 0.0;  // pass iff measured <= tolerance
    bool pass = false;
};

struct IdentitySuite {
    std::vector<IdentityResult> results;
    bool all_pass = false;
};

// Deterministic operator-identity suite: even/odd recombination, arctan-form
// equivalence, constant-slope cancellation on the inner window, and the
// quadrature Lambda against the spectral one.  verify.perturb_rule != 0
// perturbs the positive-node weights and is expected to break the suite.
IdentitySuite run_identity_suite(const RunConfig& rc);

std::string identity_suite_to_json(const IdentitySuite& suite);

}  // namespace muskat
