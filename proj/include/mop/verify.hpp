#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mop/type1.hpp"

namespace mop {

struct CheckResult {
    std::string check;
    bool pass = false;
    std::string residual; // exact value minus expectation, or an error message
};

struct InstanceReport {
    MultiIndex index;
    std::vector<CheckResult> checks;
    double seconds = 0.0;
    std::size_t max_coeff_bits = 0;

    int passed() const;
    int failed() const;
    bool all_passed() const { return failed() == 0; }
};

struct VerifyOptions {
    bool oracle_cross_check = true;
    bool limit_identity = true; // Laguerre family only
    bool linearity_probe = true;
    std::uint64_t seed = 0;
};

/// Builds the closed-form type I vector for one index and runs every exact
/// check against it: pairings, degree bounds, oracle cross-check, a seeded
/// random-polynomial linearity probe, and (Laguerre) the coefficientwise
/// limit identity. Errors become failing check rows, never exceptions.
InstanceReport verify_instance(const WeightSystem& ws, const MultiIndex& n,
                               const VerifyOptions& options = {});

/// Same orthogonality checks against an externally supplied vector
/// (fault-injection hook; skips oracle and limit checks).
InstanceReport verify_vector(const TypeIVector& v, const VerifyOptions& options = {});

/// Per-index verification over the whole lattice 1 <= |n| <= max_total_degree.
std::vector<InstanceReport> sweep_serial(const WeightSystem& ws, unsigned max_total_degree,
                                         const VerifyOptions& options = {});

/// OpenMP across lattice indices; rows (order and content) match sweep_serial.
std::vector<InstanceReport> sweep_parallel(const WeightSystem& ws, unsigned max_total_degree,
                                           const VerifyOptions& options = {});

} // namespace mop
