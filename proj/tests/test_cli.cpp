#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mop/cli.hpp"
#include "mop/jacobi_pineiro.hpp"
#include "mop/laguerre.hpp"
#include "mop/param_gen.hpp"
#include "mop/verify.hpp"

using namespace mop;
using Json = nlohmann::json;

namespace {

RunConfig jp_example() {
    RunConfig cfg;
    cfg.family = "jacobi-pineiro";
    cfg.alphas = {Rational(0), Rational(1, 2)};
    cfg.beta = Rational(0);
    cfg.n = {1, 1};
    return cfg;
}

RunConfig lag_example() {
    RunConfig cfg;
    cfg.family = "laguerre1";
    cfg.alphas = {Rational(0), Rational(1, 2)};
    cfg.n = {1, 1};
    return cfg;
}

std::string temp_file(const std::string& name, const std::string& contents) {
    const std::string path = std::string("/tmp/mop_test_") + name;
    std::ofstream out(path);
    out << contents;
    return path;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("coeffs emits exact strings") {
    std::ostringstream os;
    REQUIRE(cmd_coeffs(jp_example(), os) == exit_ok);
    const Json j = Json::parse(os.str());
    CHECK(j["family"] == "jacobi-pineiro");
    CHECK(j["components"][0]["monomial_coeffs"][0] == "-10");
    CHECK(j["components"][1]["monomial_coeffs"][0] == "15");

    std::ostringstream os2;
    REQUIRE(cmd_coeffs(lag_example(), os2) == exit_ok);
    const Json j2 = Json::parse(os2.str());
    CHECK(j2["components"][1]["monomial_coeffs"][0] == "2/Γ(3/2)");
}

TEST_CASE("coeffs float mode") {
    RunConfig cfg = lag_example();
    cfg.mode = "float";
    std::ostringstream os;
    REQUIRE(cmd_coeffs(cfg, os) == exit_ok);
    const Json j = Json::parse(os.str());
    const double v = std::stod(j["components"][1]["monomial_coeffs"][0].get<std::string>());
    CHECK(v == doctest::Approx(2.2567583341910251).epsilon(1e-12)); // 2/Gamma(3/2)
}

TEST_CASE("exact output round-trips to identical values") {
    Rng rng(113);
    for (int t = 0; t < 10; ++t) {
        const LaguerreWeightSystem ws = random_laguerre_system(rng, 2);
        const MultiIndex n = random_index(rng, 2, 1 + t % 4);
        RunConfig cfg;
        cfg.family = "laguerre1";
        cfg.alphas = ws.alphas();
        cfg.n = n.entries();
        std::ostringstream os;
        REQUIRE(cmd_coeffs(cfg, os) == exit_ok);
        const Json j = Json::parse(os.str());
        const TypeIVector v = lag_type1_vector(ws, n);
        for (std::size_t i = 0; i < v.p(); ++i) {
            const auto& coeffs = j["components"][i]["monomial_coeffs"];
            for (std::size_t l = 0; l < coeffs.size(); ++l) {
                const GammaScaled parsed = GammaScaled::parse(coeffs[l].get<std::string>());
                CHECK(parsed.identical(v.component(i).monomial_coeff(l)));
            }
        }
    }
}

TEST_CASE("verify passes on an admissible instance") {
    std::ostringstream os;
    CHECK(cmd_verify(jp_example(), 12, os) == exit_ok);
    const Json j = Json::parse(os.str());
    CHECK(j["all_passed"] == true);
    for (const auto& c : j["checks"]) {
        CHECK(c["status"] == "pass");
        CHECK(c.contains("residual"));
        CHECK(c.contains("index"));
        CHECK(c.contains("params"));
    }
}

TEST_CASE("verify rejects integral alpha differences with exit 2") {
    RunConfig cfg = jp_example();
    cfg.alphas = {Rational(0), Rational(2)};
    std::ostringstream os;
    CHECK(cmd_verify(cfg, 12, os) == exit_invalid_input);
    const Json j = Json::parse(os.str());
    CHECK(j["error"]["type"] == "ATSystemError");
}

TEST_CASE("verify guards the total degree") {
    std::ostringstream os;
    CHECK(cmd_verify(jp_example(), 1, os) == exit_invalid_input);
}

TEST_CASE("tampered coefficients produce exact nonzero residuals") {
    const JPWeightSystem ws({Rational(0), Rational(1, 2)}, Rational(0));
    const MultiIndex n({1, 1});
    const TypeIVector v = jp_type1_vector(ws, n);
    PolyComponent broken = v.component(0);
    broken.coeffs[0] += Rational(1, 7);
    const InstanceReport rep = verify_vector(v.with_component(0, broken));
    CHECK_FALSE(rep.all_passed());
    bool saw_exact_residual = false;
    for (const auto& c : rep.checks)
        if (c.check == "pairing j=0" && !c.pass) {
            // residual = (1/7) * prefactor * moment(0,0) = (1/7)(-10)(1)
            CHECK(c.residual == Rational(-10, 7).str());
            saw_exact_residual = true;
        }
    CHECK(saw_exact_residual);
}

TEST_CASE("kp batch: pass, mismatch-free, and per-instance errors") {
    const std::string good = temp_file(
        "kp_good.json",
        R"([{"a":"0","f":[],"m":[],"b":["5/2"],"k":[2]},
            {"a":"-1","f":[],"m":[],"b":["2"],"k":[1]},
            {"a":"-2","f":["3"],"m":[1],"b":["1"],"k":[2]}])");
    std::ostringstream os;
    CHECK(cmd_kp(good, "json", os) == exit_ok);
    const Json j = Json::parse(os.str());
    CHECK(j["all_passed"] == true);
    CHECK(j["instances"][1]["lhs"] == "1/3");
    CHECK(j["instances"][1]["rhs"] == "1/3");

    // second instance violates the distinctness hypothesis: reported, batch continues
    const std::string mixed = temp_file(
        "kp_mixed.json",
        R"([{"a":"-1","f":[],"m":[],"b":["2"],"k":[1]},
            {"a":"-1","f":[],"m":[],"b":["1/3","4/3"],"k":[2,1]}])");
    std::ostringstream os2;
    CHECK(cmd_kp(mixed, "json", os2) == exit_verification_failed);
    const Json j2 = Json::parse(os2.str());
    CHECK(j2["instances"][0]["status"] == "pass");
    CHECK(j2["instances"][1]["status"] == "error");

    const std::string broken = temp_file("kp_broken.json", "[\n{\"a\": \"0\",\n broken\n]");
    std::ostringstream os3;
    CHECK(cmd_kp(broken, "json", os3) == exit_invalid_input);
    const Json j3 = Json::parse(os3.str());
    const std::string msg = j3["error"]["message"].get<std::string>();
    CHECK(msg.find("line 3") != std::string::npos);

    std::ostringstream os4;
    CHECK(cmd_kp("/nonexistent/file.json", "json", os4) == exit_invalid_input);
}

TEST_CASE("kp batch over a randomized instance file") {
    Rng rng(127);
    Json arr = Json::array();
    for (int t = 0; t < 25; ++t) {
        const KPInstance inst = random_kp_instance(rng);
        Json item;
        item["a"] = inst.a.str();
        item["f"] = Json::array();
        for (const auto& v : inst.f) item["f"].push_back(v.str());
        item["m"] = inst.m;
        item["b"] = Json::array();
        for (const auto& v : inst.b) item["b"].push_back(v.str());
        item["k"] = inst.k;
        arr.push_back(item);
    }
    const std::string path = temp_file("kp_random.json", arr.dump());
    std::ostringstream os;
    CHECK(cmd_kp(path, "json", os) == exit_ok);
    const Json j = Json::parse(os.str());
    CHECK(j["all_passed"] == true);
}

TEST_CASE("sweep: empty lattice, guards, and row agreement") {
    RunConfig cfg = jp_example();
    cfg.output = "csv";
    std::ostringstream os;
    CHECK(cmd_sweep(cfg, 4, 0, false, os) == exit_ok);
    CHECK(os.str() == "index,total_degree,checks_passed,checks_failed,max_coeff_bits,seconds\n");

    std::ostringstream os2;
    CHECK(cmd_sweep(cfg, 1, 4, false, os2) == exit_invalid_input); // p exceeds p-max

    const WeightSystem ws(JPWeightSystem({Rational(0), Rational(1, 2)}, Rational(0)));
    VerifyOptions options;
    options.seed = 5;
    const auto serial = sweep_serial(ws, 4, options);
    const auto parallel = sweep_parallel(ws, 4, options);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t t = 0; t < serial.size(); ++t) {
        CHECK(serial[t].index == parallel[t].index);
        REQUIRE(serial[t].checks.size() == parallel[t].checks.size());
        for (std::size_t c = 0; c < serial[t].checks.size(); ++c) {
            CHECK(serial[t].checks[c].check == parallel[t].checks[c].check);
            CHECK(serial[t].checks[c].pass == parallel[t].checks[c].pass);
            CHECK(serial[t].checks[c].residual == parallel[t].checks[c].residual);
        }
    }
}

TEST_CASE("verify output is byte-deterministic for a fixed seed") {
    RunConfig cfg = jp_example();
    cfg.seed = 99;
    std::ostringstream a, b;
    CHECK(cmd_verify(cfg, 12, a) == exit_ok);
    CHECK(cmd_verify(cfg, 12, b) == exit_ok);
    CHECK(a.str() == b.str());
}

TEST_CASE("limit command") {
    RunConfig cfg;
    cfg.family = "laguerre1";
    cfg.alphas = {Rational(0), Rational(1, 2)};
    cfg.n = {2, 1};
    std::ostringstream os;
    const std::vector<Rational> betas{Rational(100), Rational(1000)};
    CHECK(cmd_limit(cfg, 1, Rational(1), betas, os) == exit_ok);
    const Json j = Json::parse(os.str());
    CHECK(j["coefficientwise"] == "pass");
    const double d0 = j["deviations"][0]["deviation"].get<double>();
    const double d1 = j["deviations"][1]["deviation"].get<double>();
    CHECK(d0 > d1);

    RunConfig bad = cfg;
    bad.family = "jacobi-pineiro";
    bad.beta = Rational(0);
    std::ostringstream os2;
    CHECK(cmd_limit(bad, 1, Rational(1), betas, os2) == exit_invalid_input);
}

TEST_CASE("run_cli end to end") {
    const char* argv[] = {"mopkit", "coeffs", "--family", "jacobi-pineiro", "--alpha", "0,1/2",
                          "--beta", "0", "--n", "1,1", "--out-file", "/tmp/mop_cli_out.json"};
    CHECK(run_cli(12, argv) == exit_ok);
    std::ifstream in("/tmp/mop_cli_out.json");
    REQUIRE(in.good());
    const Json j = Json::parse(in);
    CHECK(j["components"][0]["monomial_coeffs"][0] == "-10");
    std::remove("/tmp/mop_cli_out.json");

    const char* bad[] = {"mopkit", "coeffs", "--alpha", "0,1/2", "--n", "1,1"};
    CHECK(run_cli(6, bad) == exit_invalid_input); // missing --beta for jacobi-pineiro
}

} // TEST_SUITE
