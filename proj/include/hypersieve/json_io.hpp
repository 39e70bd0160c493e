#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hypersieve/basischange.hpp"
#include "hypersieve/en_bound.hpp"
#include "hypersieve/experiments.hpp"
#include "hypersieve/falsify.hpp"
#include "hypersieve/realroots.hpp"
#include "hypersieve/sequence.hpp"

namespace hypersieve {

using json = nlohmann::json;

// Every *_from_json throws Error(ParseError) on a schema violation.

json rationals_to_json(const std::vector<Rational>& values);
std::vector<Rational> rationals_from_json(const json& j);

/// {"coeffs": ["1/8", "1", "2"]}, constant term first, no trailing zeros.
json to_json(const RationalPoly& f);
RationalPoly poly_from_json(const json& j);

/// {"verdict": "AllRealRooted", "distinct_real_roots": 2, "squarefree_degree": 2}
json to_json(const RealRootCertificate& cert);
RealRootCertificate certificate_from_json(const json& j);

std::string_view to_string(Verdict v);

json to_json(const IsolatingInterval& interval);

/// {"prefix": ["1/8", "1", "2"], "tail": {"kind": "zeros"}}; tail kinds are
/// "zeros", "constant" and "geometric" (with "ratio"). A missing tail means zeros.
json to_json(const GammaSequence& g);
GammaSequence sequence_from_json(const json& j);

/// {"kind": "generalized_hermite", "alpha": "-1/2"}, {"kind": "q2"},
/// {"kind": "truncated_sum", "j": 3}, {"kind": "custom", "polys": [...]}.
/// Derived sets (affine, alpha_deformed) serialize with their name only.
json basis_descriptor(const SimpleSet& basis);
SimpleSet basis_from_json(const json& j);

/// "std", "standard", "q1".."q3", "laguerre", "legendre",
/// "hermite:<alpha>" / "generalized_hermite:<alpha>", "truncated_sum:<j>".
SimpleSet basis_from_shorthand(std::string_view text);

/// JSON descriptor when the text starts with '{', shorthand otherwise.
SimpleSet basis_from_text(std::string_view text);

/// {"source": ..., "target": ..., "order": n, "rows": [["1"], ["0", "1"], ...]}
json to_json(const ExpansionMatrix& m);

json to_json(const FalsificationReport& report);
FalsificationReport report_from_json(const json& j);

json to_json(const EnBound& bound);

json to_json(const ConvergenceTrace& trace);
json to_json(const ConvergenceReport& report);

}  // namespace hypersieve
