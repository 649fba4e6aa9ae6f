#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mop/rational.hpp"

namespace mop {

/// Process exit codes: 0 pass, 1 verification failure, 2 invalid input,
/// 3 internal inconsistency.
enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_invalid_input = 2,
    exit_internal = 3,
};

struct RunConfig {
    std::string family = "jacobi-pineiro"; // or "laguerre1"
    std::vector<Rational> alphas;
    std::optional<Rational> beta;          // Jacobi-Pineiro only
    std::vector<unsigned> n;
    std::string mode = "exact";            // or "float"
    int precision_bits = 128;
    std::string output = "json";           // or "csv"
    std::uint64_t seed = 0;
};

int cmd_coeffs(const RunConfig& cfg, std::ostream& os);
int cmd_verify(const RunConfig& cfg, unsigned max_total_degree, std::ostream& os);
int cmd_kp(const std::string& instance_file, const std::string& output, std::ostream& os);
int cmd_sweep(const RunConfig& cfg, unsigned p_max, unsigned total_degree_max, bool parallel,
              std::ostream& os);
int cmd_limit(const RunConfig& cfg, std::size_t component, const Rational& x,
              const std::vector<Rational>& betas, std::ostream& os);

/// argv interface behind the mopkit binary.
int run_cli(int argc, const char* const* argv);

} // namespace mop
