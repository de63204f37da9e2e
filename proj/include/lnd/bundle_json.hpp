#ifndef LND_BUNDLE_JSON_HPP
#define LND_BUNDLE_JSON_HPP

#include <json.hpp>

#include "lnd/construction.hpp"

namespace lnd {

// Bundle document, deterministically ordered:
// {"variables", "m", "alpha", "beta", "F", "derivation": {var: expr},
//  "generators": {"x1","z","t","y"}, "flags", "checks": [{name,status,detail}]}
// Polynomials are serialized through the expression grammar, so the document
// re-parses to identical canonical forms.
nlohmann::ordered_json bundle_to_json(const CounterexampleBundle& bundle);

nlohmann::ordered_json checks_to_json(const VerificationReport& report);

}  // namespace lnd

#endif
