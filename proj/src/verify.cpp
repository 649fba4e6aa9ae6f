#include "mop/verify.hpp"

#include <chrono>
#include <exception>

#include "mop/jacobi_pineiro.hpp"
#include "mop/laguerre.hpp"
#include "mop/oracle.hpp"
#include "mop/param_gen.hpp"

namespace mop {

int InstanceReport::passed() const {
    int c = 0;
    for (const auto& r : checks) c += r.pass ? 1 : 0;
    return c;
}

int InstanceReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

namespace {

TypeIVector build_closed_form(const WeightSystem& ws, const MultiIndex& n) {
    if (const auto* jp = std::get_if<JPWeightSystem>(&ws)) return jp_type1_vector(*jp, n);
    return lag_type1_vector(std::get<LaguerreWeightSystem>(ws), n);
}

void run_pairing_checks(const TypeIVector& v, InstanceReport& rep) {
    const unsigned N = v.index().total();
    for (unsigned long j = 0; j < N; ++j) {
        const Rational expected(j + 1 == N ? 1 : 0);
        CheckResult r{"pairing j=" + std::to_string(j), false, ""};
        const Rational residual = type1_pairing(v, j) - expected;
        r.pass = residual.is_zero();
        r.residual = residual.str();
        rep.checks.push_back(std::move(r));
    }
}

void run_degree_checks(const TypeIVector& v, InstanceReport& rep) {
    bool ok = true;
    std::string bad;
    for (std::size_t i = 0; i < v.p(); ++i) {
        const long expected = static_cast<long>(v.index()[i]) - 1;
        if (v.component(i).degree() != expected) {
            ok = false;
            bad = "component " + std::to_string(i + 1) + " degree " +
                  std::to_string(v.component(i).degree()) + ", expected " + std::to_string(expected);
            break;
        }
    }
    rep.checks.push_back({"degree-bounds", ok, ok ? "0" : bad});
}

void run_linearity_check(const TypeIVector& v, std::uint64_t seed, InstanceReport& rep) {
    const unsigned N = v.index().total();
    Rng rng(mix_seed(seed, 0x11e4));
    const Polynomial q = random_polynomial(rng, N - 1);
    const Rational residual = type1_pairing(v, q) - q.leading();
    rep.checks.push_back({"linearity", residual.is_zero(), residual.str()});
}

std::size_t vector_bits(const TypeIVector& v) {
    std::size_t bits = 0;
    for (const auto& c : v.components()) bits = std::max(bits, c.max_coeff_bits());
    return bits;
}

} // namespace

InstanceReport verify_instance(const WeightSystem& ws, const MultiIndex& n,
                               const VerifyOptions& options) {
    InstanceReport rep;
    rep.index = n;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const TypeIVector v = build_closed_form(ws, n);
        rep.max_coeff_bits = vector_bits(v);
        run_pairing_checks(v, rep);
        run_degree_checks(v, rep);
        if (options.linearity_probe) run_linearity_check(v, options.seed, rep);
        if (options.oracle_cross_check) {
            const TypeIVector ref = oracle_type1_solve(ws, n);
            rep.max_coeff_bits = std::max(rep.max_coeff_bits, vector_bits(ref));
            const bool match = type1_equal(v, ref);
            rep.checks.push_back({"oracle-match", match, match ? "0" : "coefficient mismatch"});
        }
        if (options.limit_identity) {
            if (const auto* lag = std::get_if<LaguerreWeightSystem>(&ws)) {
                for (std::size_t i = 0; i < lag->p(); ++i) {
                    const CoefficientLimitReport lr = lag_limit_coefficientwise(*lag, n, i);
                    rep.checks.push_back({"limit-coeff i=" + std::to_string(i + 1), lr.pass,
                                          lr.pass ? "0" : lr.detail});
                }
            }
        }
    } catch (const std::exception& e) {
        rep.checks.push_back({"construct", false, e.what()});
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

InstanceReport verify_vector(const TypeIVector& v, const VerifyOptions& options) {
    InstanceReport rep;
    rep.index = v.index();
    const auto t0 = std::chrono::steady_clock::now();
    try {
        rep.max_coeff_bits = vector_bits(v);
        run_pairing_checks(v, rep);
        run_degree_checks(v, rep);
        if (options.linearity_probe) run_linearity_check(v, options.seed, rep);
    } catch (const std::exception& e) {
        rep.checks.push_back({"construct", false, e.what()});
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

namespace {

std::vector<InstanceReport> run_sweep(const WeightSystem& ws, unsigned max_total_degree,
                                      const VerifyOptions& options, bool parallel) {
    const std::vector<MultiIndex> lattice = MultiIndex::lattice(weight_count(ws), max_total_degree);
    std::vector<InstanceReport> rows(lattice.size());
    const long count = static_cast<long>(lattice.size());
    // per-index seeds keep rows independent of scheduling
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long t = 0; t < count; ++t) {
        VerifyOptions local = options;
        local.seed = mix_seed(options.seed, static_cast<std::uint64_t>(t));
        rows[static_cast<std::size_t>(t)] =
            verify_instance(ws, lattice[static_cast<std::size_t>(t)], local);
    }
    return rows;
}

} // namespace

std::vector<InstanceReport> sweep_serial(const WeightSystem& ws, unsigned max_total_degree,
                                         const VerifyOptions& options) {
    return run_sweep(ws, max_total_degree, options, false);
}

std::vector<InstanceReport> sweep_parallel(const WeightSystem& ws, unsigned max_total_degree,
                                           const VerifyOptions& options) {
    return run_sweep(ws, max_total_degree, options, true);
}

} // namespace mop
