#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycgm/gauss_manin.hpp"

namespace cycgm {

struct CheckResult {
    enum class Status { Pass, Fail, Error };
    std::string name;
    Status status = Status::Pass;
    std::string expected;  // set on failure
    std::string actual;    // set on failure
    std::string message;   // set on error

    bool passed() const { return status == Status::Pass; }
};

struct VerifyOptions {
    /// Run a single named check.
    std::optional<std::string> only;
    /// Named perturbation of the connection coefficients; the resulting run
    /// must go red, which is how the harness proves it can fail.
    std::optional<std::string> fault;
};

/// Names of the supported fault injections.
const std::vector<std::string>& fault_names();
GmWeights faulted_weights(const std::string& fault, int d);

/// Names of all checks, in execution order.
const std::vector<std::string>& check_names();

/// Replays every printed computation: genus values, eigenform bases,
/// stratum signatures, the connection matrix and section derivatives,
/// difference-quotient displays, both determinant identities, monodromy
/// orbits, flatness and the genus-sum identity.
std::vector<CheckResult> verify_paper(const VerifyOptions& options = {});

}  // namespace cycgm
