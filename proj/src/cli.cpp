#include "mop/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <variant>

#include "mop/jacobi_pineiro.hpp"
#include "mop/laguerre.hpp"
#include "mop/oracle.hpp"
#include "mop/param_gen.hpp"
#include "mop/verify.hpp"

namespace mop {

namespace {

using Json = nlohmann::ordered_json;

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int emit_error(const RunConfig& cfg, std::ostream& os, int code, const std::string& type,
               const std::string& message) {
    if (cfg.output == "csv") {
        os << "error," << csv_quote(type) << "," << csv_quote(message) << "\n";
    } else {
        Json j;
        j["error"] = {{"type", type}, {"message", message}};
        os << j.dump(2) << "\n";
    }
    return code;
}

WeightSystem make_weight_system(const RunConfig& cfg) {
    if (cfg.family == "jacobi-pineiro") {
        if (!cfg.beta) throw ATSystemError("jacobi-pineiro requires --beta");
        return JPWeightSystem(cfg.alphas, *cfg.beta);
    }
    if (cfg.family == "laguerre1") {
        if (cfg.beta) throw ATSystemError("laguerre1 takes no --beta");
        return LaguerreWeightSystem(cfg.alphas);
    }
    throw ATSystemError("unknown family '" + cfg.family + "'");
}

MultiIndex make_index(const RunConfig& cfg) {
    if (cfg.n.size() != cfg.alphas.size())
        throw ATSystemError("--n must have one entry per alpha");
    MultiIndex n{cfg.n};
    if (n.total() == 0) throw ATSystemError("|n| must be at least 1");
    return n;
}

TypeIVector closed_form_vector(const WeightSystem& ws, const MultiIndex& n) {
    if (const auto* jp = std::get_if<JPWeightSystem>(&ws)) return jp_type1_vector(*jp, n);
    return lag_type1_vector(std::get<LaguerreWeightSystem>(ws), n);
}

Json config_json(const RunConfig& cfg) {
    Json j;
    j["family"] = cfg.family;
    Json alphas = Json::array();
    for (const Rational& a : cfg.alphas) alphas.push_back(a.str());
    j["alphas"] = alphas;
    if (cfg.beta) j["beta"] = cfg.beta->str();
    j["n"] = cfg.n;
    return j;
}

std::string coeff_string(const RunConfig& cfg, const GammaScaled& value) {
    if (cfg.mode == "float")
        return value.to_float(cfg.precision_bits)
            .str(static_cast<std::size_t>(cfg.precision_bits * 0.302) + 2);
    return value.str();
}

std::string index_params_string(const WeightSystem& ws, const RunConfig& cfg) {
    return params_string(ws) + " seed=" + std::to_string(cfg.seed);
}

} // namespace

int cmd_coeffs(const RunConfig& cfg, std::ostream& os) {
    RunConfig local = cfg;
    try {
        if (cfg.mode != "exact" && cfg.mode != "float")
            throw ATSystemError("mode must be exact or float");
        const WeightSystem ws = make_weight_system(cfg);
        const MultiIndex n = make_index(cfg);
        const TypeIVector v = closed_form_vector(ws, n);

        if (cfg.output == "csv") {
            os << "family,component,power,coefficient\n";
            for (std::size_t i = 0; i < v.p(); ++i) {
                const PolyComponent& comp = v.component(i);
                for (long l = 0; l <= comp.degree(); ++l)
                    os << cfg.family << "," << (i + 1) << "," << l << ","
                       << csv_quote(coeff_string(cfg, comp.monomial_coeff(l))) << "\n";
            }
        } else {
            Json j = config_json(cfg);
            j["mode"] = cfg.mode;
            Json comps = Json::array();
            for (std::size_t i = 0; i < v.p(); ++i) {
                const PolyComponent& comp = v.component(i);
                Json c;
                c["component"] = i + 1;
                c["degree"] = comp.degree();
                Json coeffs = Json::array();
                for (long l = 0; l <= comp.degree(); ++l)
                    coeffs.push_back(coeff_string(cfg, comp.monomial_coeff(l)));
                c["monomial_coeffs"] = coeffs;
                comps.push_back(c);
            }
            j["components"] = comps;
            os << j.dump(2) << "\n";
        }
        return exit_ok;
    } catch (const ATSystemError& e) {
        return emit_error(local, os, exit_invalid_input, "ATSystemError", e.what());
    } catch (const IncompatibleGammaError& e) {
        return emit_error(local, os, exit_internal, "IncompatibleGammaError", e.what());
    } catch (const Error& e) {
        return emit_error(local, os, exit_invalid_input, "Error", e.what());
    }
}

int cmd_verify(const RunConfig& cfg, unsigned max_total_degree, std::ostream& os) {
    try {
        const WeightSystem ws = make_weight_system(cfg);
        const MultiIndex n = make_index(cfg);
        if (n.total() > max_total_degree)
            throw ATSystemError("|n| exceeds --max-total-degree " + std::to_string(max_total_degree));

        VerifyOptions options;
        options.seed = cfg.seed;
        const InstanceReport rep = verify_instance(ws, n, options);
        const std::string params = index_params_string(ws, cfg);

        if (cfg.output == "csv") {
            os << "check,status,residual,index,params\n";
            for (const CheckResult& c : rep.checks)
                os << csv_quote(c.check) << "," << (c.pass ? "pass" : "fail") << ","
                   << csv_quote(c.residual) << "," << csv_quote(rep.index.str()) << ","
                   << csv_quote(params) << "\n";
        } else {
            Json j = config_json(cfg);
            j["seed"] = cfg.seed;
            Json checks = Json::array();
            for (const CheckResult& c : rep.checks) {
                Json r;
                r["check"] = c.check;
                r["status"] = c.pass ? "pass" : "fail";
                r["residual"] = c.residual;
                r["index"] = rep.index.str();
                r["params"] = params;
                checks.push_back(r);
            }
            j["checks"] = checks;
            j["all_passed"] = rep.all_passed();
            os << j.dump(2) << "\n";
        }
        return rep.all_passed() ? exit_ok : exit_verification_failed;
    } catch (const ATSystemError& e) {
        return emit_error(cfg, os, exit_invalid_input, "ATSystemError", e.what());
    } catch (const IncompatibleGammaError& e) {
        return emit_error(cfg, os, exit_internal, "IncompatibleGammaError", e.what());
    } catch (const Error& e) {
        return emit_error(cfg, os, exit_invalid_input, "Error", e.what());
    }
}

namespace {

Rational json_rational(const Json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw ParseError("expected a rational as \"p/q\" string");
}

KPInstance kp_instance_from_json(const Json& j) {
    KPInstance inst;
    inst.a = json_rational(j.at("a"));
    for (const auto& v : j.at("f")) inst.f.push_back(json_rational(v));
    for (const auto& v : j.at("m")) inst.m.push_back(v.get<unsigned>());
    for (const auto& v : j.at("b")) inst.b.push_back(json_rational(v));
    for (const auto& v : j.at("k")) inst.k.push_back(v.get<unsigned>());
    return inst;
}

std::size_t line_of_byte(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t t = 0; t < byte && t < text.size(); ++t)
        if (text[t] == '\n') ++line;
    return line;
}

} // namespace

int cmd_kp(const std::string& instance_file, const std::string& output, std::ostream& os) {
    RunConfig err_cfg;
    err_cfg.output = output;
    std::ifstream in(instance_file);
    if (!in)
        return emit_error(err_cfg, os, exit_invalid_input, "IOError",
                          "cannot open '" + instance_file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    Json doc;
    try {
        doc = Json::parse(text);
        if (!doc.is_array()) throw ParseError("top-level JSON value must be an array");
    } catch (const nlohmann::json::parse_error& e) {
        return emit_error(err_cfg, os, exit_invalid_input, "ParseError",
                          std::string(e.what()) + " (line " + std::to_string(line_of_byte(text, e.byte)) +
                              ")");
    } catch (const ParseError& e) {
        return emit_error(err_cfg, os, exit_invalid_input, "ParseError", e.what());
    }

    Json rows = Json::array();
    bool all_passed = true;
    for (std::size_t t = 0; t < doc.size(); ++t) {
        Json row;
        row["index"] = t;
        try {
            const KPInstance inst = kp_instance_from_json(doc[t]);
            row["instance"] = inst.str();
            std::string why;
            if (!kp_instance_valid(inst, &why)) throw DenominatorPoleError(why);
            const GammaScaled lhs = kp_lhs(inst);
            const GammaScaled rhs = kp_rhs(inst);
            const bool equal = value_equal(lhs, rhs);
            row["lhs"] = lhs.str();
            row["rhs"] = rhs.str();
            row["status"] = equal ? "pass" : "fail";
            all_passed = all_passed && equal;
        } catch (const std::exception& e) {
            row["status"] = "error";
            row["error"] = e.what();
            all_passed = false;
        }
        rows.push_back(row);
    }

    if (output == "csv") {
        os << "index,instance,lhs,rhs,status\n";
        for (const auto& row : rows)
            os << row["index"] << "," << csv_quote(row.value("instance", std::string{})) << ","
               << csv_quote(row.value("lhs", std::string{})) << ","
               << csv_quote(row.value("rhs", std::string{})) << ","
               << row["status"].get<std::string>() << "\n";
    } else {
        Json j;
        j["instances"] = rows;
        j["all_passed"] = all_passed;
        os << j.dump(2) << "\n";
    }
    return all_passed ? exit_ok : exit_verification_failed;
}

int cmd_sweep(const RunConfig& cfg, unsigned p_max, unsigned total_degree_max, bool parallel,
              std::ostream& os) {
    try {
        const WeightSystem ws = make_weight_system(cfg);
        if (weight_count(ws) > p_max)
            throw ATSystemError("p exceeds --p-max " + std::to_string(p_max));

        VerifyOptions options;
        options.seed = cfg.seed;
        const std::vector<InstanceReport> rows =
            parallel ? sweep_parallel(ws, total_degree_max, options)
                     : sweep_serial(ws, total_degree_max, options);

        bool all_passed = true;
        for (const auto& r : rows) all_passed = all_passed && r.all_passed();

        if (cfg.output == "csv") {
            os << "index,total_degree,checks_passed,checks_failed,max_coeff_bits,seconds\n";
            for (const auto& r : rows)
                os << csv_quote(r.index.str()) << "," << r.index.total() << "," << r.passed() << ","
                   << r.failed() << "," << r.max_coeff_bits << "," << r.seconds << "\n";
        } else {
            Json j = config_json(cfg);
            j["seed"] = cfg.seed;
            Json jr = Json::array();
            for (const auto& r : rows) {
                Json row;
                row["index"] = r.index.str();
                row["total_degree"] = r.index.total();
                row["checks_passed"] = r.passed();
                row["checks_failed"] = r.failed();
                row["max_coeff_bits"] = r.max_coeff_bits;
                row["seconds"] = r.seconds;
                jr.push_back(row);
            }
            j["rows"] = jr;
            j["all_passed"] = all_passed;
            os << j.dump(2) << "\n";
        }
        return all_passed ? exit_ok : exit_verification_failed;
    } catch (const ATSystemError& e) {
        return emit_error(cfg, os, exit_invalid_input, "ATSystemError", e.what());
    } catch (const IncompatibleGammaError& e) {
        return emit_error(cfg, os, exit_internal, "IncompatibleGammaError", e.what());
    } catch (const Error& e) {
        return emit_error(cfg, os, exit_invalid_input, "Error", e.what());
    }
}

int cmd_limit(const RunConfig& cfg, std::size_t component, const Rational& x,
              const std::vector<Rational>& betas, std::ostream& os) {
    try {
        if (cfg.family != "laguerre1") throw ATSystemError("limit requires --family laguerre1");
        const LaguerreWeightSystem ws(cfg.alphas);
        const MultiIndex n = make_index(cfg);
        if (component == 0 || component > ws.p())
            throw ATSystemError("component must be in 1..p");
        const std::size_t i = component - 1;

        const CoefficientLimitReport exact = lag_limit_coefficientwise(ws, n, i);
        const std::vector<double> deviations =
            lag_limit_check(ws, n, i, x, betas, cfg.precision_bits);

        if (cfg.output == "csv") {
            os << "beta,deviation\n";
            for (std::size_t t = 0; t < betas.size(); ++t)
                os << betas[t].str() << "," << deviations[t] << "\n";
        } else {
            Json j = config_json(cfg);
            j["component"] = component;
            j["x"] = x.str();
            j["precision_bits"] = cfg.precision_bits;
            Json devs = Json::array();
            for (std::size_t t = 0; t < betas.size(); ++t)
                devs.push_back({{"beta", betas[t].str()}, {"deviation", deviations[t]}});
            j["deviations"] = devs;
            j["coefficientwise"] = exact.pass ? "pass" : "fail";
            if (!exact.pass) j["coefficientwise_detail"] = exact.detail;
            os << j.dump(2) << "\n";
        }
        return exact.pass ? exit_ok : exit_verification_failed;
    } catch (const ATSystemError& e) {
        return emit_error(cfg, os, exit_invalid_input, "ATSystemError", e.what());
    } catch (const IncompatibleGammaError& e) {
        return emit_error(cfg, os, exit_internal, "IncompatibleGammaError", e.what());
    } catch (const Error& e) {
        return emit_error(cfg, os, exit_invalid_input, "Error", e.what());
    } catch (const std::invalid_argument& e) {
        return emit_error(cfg, os, exit_invalid_input, "InvalidArgument", e.what());
    }
}

namespace {

std::vector<Rational> parse_rational_list(const std::vector<std::string>& raw) {
    std::vector<Rational> out;
    for (const std::string& chunk : raw) {
        std::size_t start = 0;
        while (start <= chunk.size()) {
            const std::size_t comma = chunk.find(',', start);
            const std::string piece =
                chunk.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!piece.empty()) out.push_back(Rational::parse(piece));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return out;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Type I multiple orthogonal polynomials (Jacobi-Pineiro, Laguerre first kind): "
                 "exact construction and verification"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<std::string> alpha_raw;
    std::string beta_raw;
    std::string out_file;

    auto add_common = [&](CLI::App* sub, bool needs_index) {
        sub->add_option("--family", cfg.family, "jacobi-pineiro | laguerre1")
            ->default_val("jacobi-pineiro");
        sub->add_option("--alpha", alpha_raw, "weight exponents, repeatable or comma-separated")
            ->required();
        sub->add_option("--beta", beta_raw, "measure exponent (jacobi-pineiro)");
        if (needs_index)
            sub->add_option("--n", cfg.n, "multi-index entries")->required()->delimiter(',');
        sub->add_option("--mode", cfg.mode, "exact | float")->default_val("exact");
        sub->add_option("--precision-bits", cfg.precision_bits, "float precision")
            ->default_val(128);
        sub->add_option("--output", cfg.output, "json | csv")->default_val("json");
        sub->add_option("--seed", cfg.seed, "seed for randomized probes")->default_val(0);
        sub->add_option("--out-file", out_file, "write output to a file instead of stdout");
    };

    CLI::App* coeffs = app.add_subcommand("coeffs", "closed-form monomial coefficients");
    add_common(coeffs, true);

    CLI::App* verify = app.add_subcommand("verify", "exact checks for one multi-index");
    unsigned max_total_degree = 12;
    add_common(verify, true);
    verify->add_option("--max-total-degree", max_total_degree, "guard on |n|")->default_val(12);

    CLI::App* kp = app.add_subcommand("kp", "two-sided summation identity over an instance file");
    std::string kp_file, kp_output = "json";
    kp->add_option("file", kp_file, "JSON array of {a,f,m,b,k}")->required();
    kp->add_option("--output", kp_output, "json | csv")->default_val("json");
    kp->add_option("--out-file", out_file, "write output to a file instead of stdout");

    CLI::App* sweep = app.add_subcommand("sweep", "verify every index of the lattice");
    unsigned p_max = 4, total_degree_max = 12;
    bool serial = false;
    add_common(sweep, false);
    sweep->add_option("--p-max", p_max, "guard on p")->default_val(4);
    sweep->add_option("--max-total-degree", total_degree_max, "lattice bound")->default_val(12);
    sweep->add_flag("--serial", serial, "disable the parallel engine");

    CLI::App* limit = app.add_subcommand("limit", "beta->infinity limit checks (laguerre1)");
    std::size_t component = 1;
    std::string x_raw = "1";
    std::vector<std::string> betas_raw;
    add_common(limit, true);
    limit->add_option("--component", component, "1-based component")->default_val(1);
    limit->add_option("--x", x_raw, "sample point")->default_val("1");
    limit->add_option("--betas", betas_raw, "beta values, comma-separated")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return exit_invalid_input;
    }

    std::ofstream file_stream;
    std::ostream* os = &std::cout;
    if (!out_file.empty()) {
        file_stream.open(out_file);
        if (!file_stream) {
            std::cerr << "cannot open --out-file '" << out_file << "'\n";
            return exit_invalid_input;
        }
        os = &file_stream;
    }

    try {
        cfg.alphas = parse_rational_list(alpha_raw);
        if (!beta_raw.empty()) cfg.beta = Rational::parse(beta_raw);
    } catch (const ParseError& e) {
        return emit_error(cfg, *os, exit_invalid_input, "ParseError", e.what());
    }

    if (coeffs->parsed()) return cmd_coeffs(cfg, *os);
    if (verify->parsed()) return cmd_verify(cfg, max_total_degree, *os);
    if (kp->parsed()) return cmd_kp(kp_file, kp_output, *os);
    if (sweep->parsed()) return cmd_sweep(cfg, p_max, total_degree_max, !serial, *os);
    if (limit->parsed()) {
        try {
            const Rational x = Rational::parse(x_raw);
            std::vector<Rational> betas = parse_rational_list(betas_raw);
            return cmd_limit(cfg, component, x, betas, *os);
        } catch (const ParseError& e) {
            return emit_error(cfg, *os, exit_invalid_input, "ParseError", e.what());
        }
    }
    return exit_invalid_input;
}

} // namespace mop
