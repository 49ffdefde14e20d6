#pragma once

#include "json.hpp"
#include "mfa/svf/set_valued_function.hpp"

namespace mfa::cli {

// Builds a piecewise set-valued function from an inline description:
//
//   {"domain": [a, b],              (default [-pi, pi])
//    "variation": V,                (optional hint)
//    "pieces": [{"from": lo, "to": hi, "closed": [true, false],
//                "points": [[...], ...],
//                "curves": [{"kind": "segment", "from": [...], "to": [...], "eps": e},
//                           {"kind": "circle", "center": [...], "radius": r, "eps": e}],
//                "discs": [{"center": [...], "radius": r, "eps": e}],
//                "velocity": [...], "anchor": x}, ...]}
//
// A piece's value is the union of its points, curve samples and disc nets,
// translated by velocity * (x - anchor). Pieces are tried in order. Throws
// ConfigError on malformed input.
SetValuedFunction parse_inline_svf(const nlohmann::json& j, double dedup_tol = kDefaultDedupTol);

}  // namespace mfa::cli
