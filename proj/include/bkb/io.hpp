#pragma once

// JSON forms of systems, convex sets, certificates and verdicts, plus the
// built-in system names accepted on the command line.

#include "bkb/walkgraph.hpp"

#include <json.hpp>

#include <string>

namespace bkb {

using json = nlohmann::json;

// {"labels": [...], "bonds": [[a, b, m], ...], "mu": [[a, b, "3/2"], ...],
//  "weights": [[a, b, "z+1"], ...], "field_order": N}; m is an integer or "inf".
SystemPtr system_from_json(const json& j);
json system_to_json(const CoxeterSystem& sys);

// A_n, B_n, H3, I2(m), A~n, C~n, G~2, D~4, F~4, E~6, E~8, rank3(p,q,r),
// Bfam(n,b,b'), Dfam(n,a,a',b,b'), RA(n;i-j;...) with 1-based infinite bonds.
SystemPtr builtin_system(const std::string& name);
// "builtin:NAME" or a JSON file path.
SystemPtr load_system(const std::string& spec);

// {"hull": ["w1", ...]} with words in application order, or
// {"halfspaces": [{"root": ["c0", ...], "sign": 1}, ...], "witness": "w"}.
ConvexSet convex_from_json(const CoxeterSystem& sys, const json& j);
json convex_to_json(const ConvexSet& L);
ConvexSet load_convex(const CoxeterSystem& sys, const std::string& path);

json certificate_to_json(const WalkCertificate& c);
WalkCertificate certificate_from_json(const json& j);

json verdict_to_json(const CoxeterSystem& sys, const HeavyVerdict& v);

json read_json_file(const std::string& path);

}  // namespace bkb
