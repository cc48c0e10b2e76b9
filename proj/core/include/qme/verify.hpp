#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qme/explore.hpp"

namespace qme {

struct Check {
    std::string name;
    double observed;   // worst residual seen (or observed order for convergence)
    double tolerance;  // pass bound on the residual
    bool passed;
};

struct VerifyReport {
    std::vector<Check> checks;

    bool all_passed() const;
};

struct VerifyOptions {
    std::size_t cycle_samples = 10000;      // random cycles for the first-law /
                                            // two-route / isentropy checks
    std::size_t state_samples = 1000;       // random (rho, H, beta) draws
    std::size_t commuting_samples = 100;    // commuting-measurement null draws
    int symmetry_alpha_steps = 91;
    int symmetry_phi_steps = 180;
    std::uint64_t seed = 0x51e57ab1e5eedULL;
};

/// Runs the whole invariant battery: first law, the paired divergence /
/// trace routes for every stroke quantity, divergence identities on random
/// states, isentropy and entropy ordering, exact-vs-sliced propagator
/// convergence, the commuting-measurement null, and the landscape
/// antisymmetry defects.
VerifyReport run_verification(const VerifyOptions& options = {});

}  // namespace qme
