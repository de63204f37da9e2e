#include "lnd/bundle_json.hpp"

namespace lnd {

namespace {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

}  // namespace

nlohmann::ordered_json checks_to_json(const VerificationReport& report) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json j;
        j["name"] = c.name;
        j["status"] = status_name(c.status);
        j["detail"] = c.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

nlohmann::ordered_json bundle_to_json(const CounterexampleBundle& bundle) {
    nlohmann::ordered_json j;
    j["variables"] = bundle.D.ring()->variables();
    j["m"] = bundle.m;
    j["alpha"] = bundle.param.alpha.render();
    j["beta"] = bundle.param.beta.render();
    j["F"] = bundle.F.render();
    nlohmann::ordered_json der;
    for (std::size_t v = 0; v < bundle.D.ring()->arity(); ++v)
        der[bundle.D.ring()->variable(v)] = bundle.D.image(v).render();
    j["derivation"] = std::move(der);
    nlohmann::ordered_json gens;
    gens["x1"] = bundle.x1.render();
    gens["z"] = bundle.z.render();
    gens["t"] = bundle.t.render();
    gens["y"] = bundle.y.render();
    j["generators"] = std::move(gens);
    nlohmann::ordered_json flags;
    flags["fpf"] = bundle.flags.fixed_point_free;
    flags["curve_singular"] = bundle.flags.curve_singular;
    flags["kernel_certified"] = bundle.flags.kernel_certified;
    j["flags"] = std::move(flags);
    j["checks"] = checks_to_json(bundle.report);
    return j;
}

}  // namespace lnd
