#include "lnd/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <ostream>

#include "lnd/bundle_json.hpp"
#include "lnd/parse.hpp"

namespace lnd {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
    std::string format;  // json | text; per-command default when empty
    std::string out_path;
    std::uint64_t step_budget = 1'000'000;
    std::uint64_t nilpotency_cap = 10'000;
    unsigned jobs = 1;

    BuchbergerOptions groebner() const { return BuchbergerOptions{step_budget}; }
};

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
        return;
    }
    std::ofstream file(cfg.out_path);
    if (!file) throw InputError("cannot open output file '" + cfg.out_path + "'");
    file << text;
    if (!text.empty() && text.back() != '\n') file << "\n";
}

std::string render_checks_text(const VerificationReport& rep) {
    std::string s;
    for (const auto& c : rep.checks) {
        const char* tag = c.status == CheckStatus::pass     ? "PASS"
                          : c.status == CheckStatus::fail   ? "FAIL"
                                                            : "SKIP";
        s += std::string(tag) + "  " + c.name;
        if (!c.detail.empty()) s += "  (" + c.detail + ")";
        s += "\n";
    }
    return s;
}

std::string bundle_text(const CounterexampleBundle& b) {
    std::string s;
    s += "m        = " + std::to_string(b.m) + "\n";
    s += "alpha    = " + b.param.alpha.render() + "\n";
    s += "beta     = " + b.param.beta.render() + "\n";
    s += "F        = " + b.F.render() + "\n";
    for (std::size_t v = 0; v < b.D.ring()->arity(); ++v)
        s += "D(" + b.D.ring()->variable(v) + ")    = " + b.D.image(v).render() + "\n";
    s += "x1       = " + b.x1.render() + "\n";
    s += "z        = " + b.z.render() + "\n";
    s += "t        = " + b.t.render() + "\n";
    s += "y        = " + b.y.render() + "\n";
    s += std::string("fpf              = ") + (b.flags.fixed_point_free ? "true" : "false") + "\n";
    s += std::string("curve_singular   = ") + (b.flags.curve_singular ? "true" : "false") + "\n";
    s += std::string("kernel_certified = ") + (b.flags.kernel_certified ? "true" : "false") + "\n";
    s += render_checks_text(b.report);
    return s;
}

std::string report_payload(const RunConfig& cfg, const VerificationReport& rep) {
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["checks"] = checks_to_json(rep);
        j["overall"] = rep.overall();
        return j.dump(2);
    }
    return render_checks_text(rep) +
           std::string("overall: ") + (rep.overall() ? "pass" : "fail") + "\n";
}

Polynomial parse_univariate(const std::string& text, const std::string& var) {
    return parse(text, PolyRing::make({var}));
}

int cmd_construct(const RunConfig& cfg, unsigned m, const std::string& alpha,
                  const std::string& beta, std::ostream& out) {
    CurveParam param = CurveParam::make(parse_univariate(alpha, "W"), parse_univariate(beta, "W"));
    CounterexampleBundle bundle = build_counterexample(m, param, cfg.groebner());
    emit(cfg, cfg.format == "json" ? bundle_to_json(bundle).dump(2) : bundle_text(bundle), out);
    return bundle.report.overall() ? kExitOk : kExitVerificationFailed;
}

int cmd_example55(const RunConfig& cfg, const std::vector<unsigned>& ns, std::ostream& out) {
    std::vector<CounterexampleBundle> bundles;
    if (cfg.jobs > 1 && ns.size() > 1) {
        std::vector<std::future<CounterexampleBundle>> futs;
        futs.reserve(ns.size());
        for (unsigned n : ns)
            futs.push_back(std::async(std::launch::async,
                                      [n, &cfg] { return standard_family(n, cfg.groebner()); }));
        for (auto& f : futs) bundles.push_back(f.get());  // input order, not finish order
    } else {
        for (unsigned n : ns) bundles.push_back(standard_family(n, cfg.groebner()));
    }

    std::string payload;
    if (cfg.format == "json") {
        if (bundles.size() == 1) {
            payload = bundle_to_json(bundles[0]).dump(2);
        } else {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& b : bundles) arr.push_back(bundle_to_json(b));
            payload = arr.dump(2);
        }
    } else {
        for (const auto& b : bundles) payload += bundle_text(b) + "\n";
    }
    emit(cfg, payload, out);
    for (const auto& b : bundles)
        if (!b.report.overall()) return kExitVerificationFailed;
    return kExitOk;
}

int cmd_winkelmann(const RunConfig& cfg, std::ostream& out) {
    VerificationReport rep = winkelmann_check(cfg.groebner());
    emit(cfg, report_payload(cfg, rep), out);
    return rep.overall() ? kExitOk : kExitVerificationFailed;
}

int cmd_implicitize(const RunConfig& cfg, const std::string& alpha, const std::string& beta,
                    std::ostream& out) {
    CurveParam param = CurveParam::make(parse_univariate(alpha, "W"), parse_univariate(beta, "W"));
    Polynomial F = implicitize(param, cfg.groebner());
    std::uint64_t deg = param.alpha.is_constant() ? 1 : map_degree(param, cfg.groebner());
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["F"] = F.render();
        j["map_degree"] = deg;
        emit(cfg, j.dump(2), out);
    } else {
        emit(cfg, "F = " + F.render() + "\nmap_degree = " + std::to_string(deg), out);
    }
    return kExitOk;
}

int cmd_smooth(const RunConfig& cfg, const std::string& f_text, std::ostream& out) {
    RingPtr zt = PolyRing::make({"Z", "T"});
    Polynomial F = parse(f_text, zt);
    bool smooth = is_smooth_curve(F, cfg.groebner());
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["F"] = F.render();
        j["smooth"] = smooth;
        emit(cfg, j.dump(2), out);
    } else {
        emit(cfg, std::string(smooth ? "smooth" : "singular"), out);
    }
    return kExitOk;
}

int cmd_derive(const RunConfig& cfg, const std::string& vars_csv,
               const std::vector<std::string>& image_specs, const std::string& apply_expr,
               bool do_exp, const std::string& nilpotency_expr, std::ostream& out) {
    std::vector<std::string> vars;
    std::string cur;
    for (char ch : vars_csv + ",") {
        if (ch == ',') {
            if (!cur.empty()) vars.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    RingPtr ring = PolyRing::make(vars);
    std::vector<Polynomial> images(ring->arity(), Polynomial::zero(ring));
    for (const auto& spec : image_specs) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) throw InputError("--images expects VAR=EXPR: '" + spec + "'");
        std::string name = spec.substr(0, eq);
        images[ring->require_index(name)] = parse(spec.substr(eq + 1), ring);
    }
    Derivation D = Derivation::make(ring, std::move(images));

    nlohmann::ordered_json j;
    std::string text;
    if (!apply_expr.empty()) {
        Polynomial r = apply(D, parse(apply_expr, ring));
        j["apply"] = r.render();
        text = r.render();
    } else if (do_exp) {
        auto cert = certify_triangular(D);
        if (!cert) throw InputError("derivation is not triangular; no exponential");
        nlohmann::ordered_json flows;
        for (std::size_t v = 0; v < ring->arity(); ++v) {
            Polynomial e = exp_map(D, *cert, "s", Polynomial::variable(ring, v));
            flows[ring->variable(v)] = e.render();
            text += "exp(sD)(" + ring->variable(v) + ") = " + e.render() + "\n";
        }
        j["exp"] = std::move(flows);
    } else if (!nilpotency_expr.empty()) {
        auto idx = nilpotency_index(D, parse(nilpotency_expr, ring), cfg.nilpotency_cap);
        if (idx) {
            j["nilpotency_index"] = *idx;
            text = std::to_string(*idx);
        } else {
            j["nilpotency_index"] = "cap-exceeded";
            text = "cap-exceeded";
        }
    } else {
        throw InputError("derive needs one of --apply, --exp, --nilpotency");
    }
    emit(cfg, cfg.format == "json" ? j.dump(2) : text, out);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact constructions and kernel certification for locally nilpotent "
                 "derivations of polynomial rings"};
    app.name("lnd");

    RunConfig cfg;
    if (const char* env = std::getenv("LND_STEP_BUDGET")) {
        try {
            cfg.step_budget = std::stoull(env);
        } catch (const std::exception&) {
            err << "bad LND_STEP_BUDGET value '" << env << "'\n";
            return kExitInput;
        }
        if (cfg.step_budget == 0) {
            err << "LND_STEP_BUDGET must be positive\n";
            return kExitInput;
        }
    }
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", cfg.out_path, "write the document to a file");
    app.add_option("--step-budget", cfg.step_budget, "Groebner pair-reduction budget")
        ->check(CLI::PositiveNumber);
    app.add_option("--nilpotency-cap", cfg.nilpotency_cap, "cap for nilpotency indices")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", cfg.jobs, "parallel bundle constructions")
        ->check(CLI::PositiveNumber);
    app.require_subcommand(1);

    unsigned m = 1;
    std::string alpha, beta, f_text;
    std::vector<unsigned> ns;
    std::vector<std::string> image_specs;
    std::string vars_csv, apply_expr, nilpotency_expr;
    bool do_exp = false;

    CLI::App* construct = app.add_subcommand(
        "construct", "build and certify the bundle for a curve parametrization");
    construct->fallthrough();
    construct->add_option("--m", m, "exponent of X1")->required()->check(CLI::PositiveNumber);
    construct->add_option("--alpha", alpha, "alpha(W)")->required();
    construct->add_option("--beta", beta, "beta(W)")->required();

    CLI::App* example55 = app.add_subcommand(
        "example55", "built-in family alpha = W^n, beta = W*(W^n+1)");
    example55->fallthrough();
    example55->add_option("--n", ns, "family parameter, n >= 2 (repeatable)")->required();

    app.add_subcommand("winkelmann", "check Winkelmann's derivation and its kernel relations")
        ->fallthrough();

    CLI::App* implicitize_cmd =
        app.add_subcommand("implicitize", "implicit equation of a parametrized plane curve");
    implicitize_cmd->fallthrough();
    implicitize_cmd->add_option("--alpha", alpha, "alpha(W)")->required();
    implicitize_cmd->add_option("--beta", beta, "beta(W)")->required();

    CLI::App* smooth = app.add_subcommand("smooth", "Jacobian smoothness test for F(Z,T)");
    smooth->fallthrough();
    smooth->add_option("--f", f_text, "curve equation in Z, T")->required();

    CLI::App* derive = app.add_subcommand("derive", "evaluate a derivation");
    derive->fallthrough();
    derive->add_option("--vars", vars_csv, "comma-separated ring variables")->required();
    derive->add_option("--images,--image", image_specs,
                       "VAR=EXPR image of a variable (repeatable; others map to 0)");
    derive->add_option("--apply", apply_expr, "apply the derivation to an expression");
    derive->add_flag("--exp", do_exp, "print the exponential automorphism exp(sD)");
    derive->add_option("--nilpotency", nilpotency_expr, "nilpotency index of an expression");

    std::vector<const char*> argv;
    argv.push_back("lnd");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    auto with_default_format = [&](const char* def) {
        if (cfg.format.empty()) cfg.format = def;
    };
    try {
        if (construct->parsed()) {
            with_default_format("json");
            return cmd_construct(cfg, m, alpha, beta, out);
        }
        if (example55->parsed()) {
            with_default_format("json");
            for (unsigned n : ns)
                if (n < 2) throw InputError("example55 needs n >= 2");
            return cmd_example55(cfg, ns, out);
        }
        with_default_format("text");
        if (app.get_subcommand("winkelmann")->parsed()) return cmd_winkelmann(cfg, out);
        if (implicitize_cmd->parsed()) return cmd_implicitize(cfg, alpha, beta, out);
        if (smooth->parsed()) return cmd_smooth(cfg, f_text, out);
        if (derive->parsed())
            return cmd_derive(cfg, vars_csv, image_specs, apply_expr, do_exp, nilpotency_expr,
                              out);
        err << "no subcommand\n";
        return kExitInput;
    } catch (const BudgetExceededError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const RingMismatchError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
}

}  // namespace lnd
