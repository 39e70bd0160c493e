#include "hypersieve/json_io.hpp"

#include <limits>

namespace hypersieve {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) schema_error("expected a rational string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

std::size_t size_from_json(const json& j, const char* what) {
  if (!j.is_number_unsigned()) schema_error(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

// Integer basis parameters (truncated_sum j) accept a JSON integer or a string.
std::size_t index_param(const json& j) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  const Rational r = rational_from_json(j);
  if (r.sign() < 0 || boost::multiprecision::denominator(r) != 1 || r > 100000) {
    schema_error("basis index parameter must be a small nonnegative integer");
  }
  return boost::multiprecision::numerator(r).convert_to<std::size_t>();
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "AllRealRooted") return Verdict::AllRealRooted;
  if (s == "HasNonRealRoot") return Verdict::HasNonRealRoot;
  if (s == "DegenerateZeroPoly") return Verdict::DegenerateZeroPoly;
  schema_error("unknown verdict '" + s + "'");
}

}  // namespace

json rationals_to_json(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(format_rational(v));
  return arr;
}

std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) schema_error("expected an array of rational strings");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

json to_json(const RationalPoly& f) { return json{{"coeffs", rationals_to_json(f.coeffs())}}; }

RationalPoly poly_from_json(const json& j) {
  if (j.is_array()) return RationalPoly(rationals_from_json(j));
  return RationalPoly(rationals_from_json(field(j, "coeffs")));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::AllRealRooted: return "AllRealRooted";
    case Verdict::HasNonRealRoot: return "HasNonRealRoot";
    case Verdict::DegenerateZeroPoly: return "DegenerateZeroPoly";
  }
  return "Unknown";
}

json to_json(const RealRootCertificate& cert) {
  return json{{"verdict", std::string(to_string(cert.verdict))},
              {"distinct_real_roots", cert.distinct_real_roots},
              {"squarefree_degree", cert.squarefree_degree}};
}

RealRootCertificate certificate_from_json(const json& j) {
  const json& verdict = field(j, "verdict");
  if (!verdict.is_string()) schema_error("verdict must be a string");
  RealRootCertificate cert;
  cert.verdict = verdict_from_string(verdict.get<std::string>());
  cert.distinct_real_roots = size_from_json(field(j, "distinct_real_roots"), "distinct_real_roots");
  cert.squarefree_degree = size_from_json(field(j, "squarefree_degree"), "squarefree_degree");
  if (j.contains("sturm_chain_length")) {
    cert.sturm_chain_length = size_from_json(j.at("sturm_chain_length"), "sturm_chain_length");
  }
  return cert;
}

json to_json(const IsolatingInterval& interval) {
  return json{{"lo", format_rational(interval.lo)}, {"hi", format_rational(interval.hi)}};
}

json to_json(const GammaSequence& g) {
  json tail_json;
  if (std::holds_alternative<tail::Zeros>(g.tail())) {
    tail_json = {{"kind", "zeros"}};
  } else if (std::holds_alternative<tail::Constant>(g.tail())) {
    tail_json = {{"kind", "constant"}};
  } else {
    tail_json = {{"kind", "geometric"},
                 {"ratio", format_rational(std::get<tail::Geometric>(g.tail()).ratio)}};
  }
  return json{{"prefix", rationals_to_json(g.prefix())}, {"tail", tail_json}};
}

GammaSequence sequence_from_json(const json& j) {
  std::vector<Rational> prefix = rationals_from_json(field(j, "prefix"));
  TailRule rule = tail::Zeros{};
  if (j.contains("tail")) {
    const json& t = j.at("tail");
    const json& kind = field(t, "kind");
    if (!kind.is_string()) schema_error("tail kind must be a string");
    const auto k = kind.get<std::string>();
    if (k == "zeros") {
      rule = tail::Zeros{};
    } else if (k == "constant") {
      rule = tail::Constant{};
    } else if (k == "geometric") {
      rule = tail::Geometric{rational_from_json(field(t, "ratio"))};
    } else {
      schema_error("unknown tail kind '" + k + "'");
    }
  }
  return GammaSequence(std::move(prefix), std::move(rule));
}

json basis_descriptor(const SimpleSet& basis) {
  const auto& kind = basis.kind();
  if (kind == "generalized_hermite") {
    return json{{"kind", kind}, {"alpha", format_rational(basis.params().at(0))}};
  }
  if (kind == "truncated_sum") {
    return json{{"kind", kind}, {"j", boost::multiprecision::numerator(basis.params().at(0))
                                          .convert_to<std::size_t>()}};
  }
  if (kind == "custom") {
    json polys = json::array();
    for (const auto& p : basis.explicit_polys()) polys.push_back(to_json(p));
    return json{{"kind", kind}, {"polys", polys}};
  }
  if (kind == "standard" || kind == "q1" || kind == "q2" || kind == "q3" || kind == "laguerre" ||
      kind == "legendre") {
    return json{{"kind", kind}};
  }
  return json{{"kind", kind}, {"name", basis.name()}};
}

SimpleSet basis_from_json(const json& j) {
  const json& kind_json = field(j, "kind");
  if (!kind_json.is_string()) schema_error("basis kind must be a string");
  const auto kind = kind_json.get<std::string>();
  if (kind == "standard" || kind == "std") return standard_basis();
  if (kind == "q1") return q1_basis();
  if (kind == "q2") return q2_basis();
  if (kind == "q3") return q3_basis();
  if (kind == "laguerre") return laguerre_basis();
  if (kind == "legendre") return legendre_basis();
  if (kind == "generalized_hermite" || kind == "hermite") {
    return generalized_hermite_basis(rational_from_json(field(j, "alpha")));
  }
  if (kind == "truncated_sum") return truncated_sum_basis(index_param(field(j, "j")));
  if (kind == "custom") {
    const json& polys = field(j, "polys");
    if (!polys.is_array()) schema_error("custom basis 'polys' must be an array");
    std::vector<RationalPoly> list;
    for (const auto& p : polys) list.push_back(poly_from_json(p));
    return custom_basis(std::move(list));
  }
  schema_error("unknown basis kind '" + kind + "'");
}

SimpleSet basis_from_shorthand(std::string_view text) {
  const auto colon = text.find(':');
  const std::string kind(text.substr(0, colon));
  const bool has_param = colon != std::string_view::npos;
  const std::string param = has_param ? std::string(text.substr(colon + 1)) : std::string();
  if (kind == "hermite" || kind == "generalized_hermite") {
    if (!has_param) schema_error("basis '" + kind + "' needs a parameter, e.g. hermite:1");
    return generalized_hermite_basis(parse_rational(param));
  }
  if (kind == "truncated_sum" || kind == "truncated") {
    if (!has_param) schema_error("basis '" + kind + "' needs a parameter, e.g. truncated_sum:2");
    return truncated_sum_basis(index_param(json(param)));
  }
  if (has_param) schema_error("basis '" + kind + "' takes no parameter");
  return basis_from_json(json{{"kind", kind}});
}

SimpleSet basis_from_text(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      schema_error(std::string("basis descriptor is not valid JSON: ") + e.what());
    }
    return basis_from_json(j);
  }
  return basis_from_shorthand(text);
}

json to_json(const ExpansionMatrix& m) {
  json rows = json::array();
  for (std::size_t k = 0; k <= m.order; ++k) {
    json row = json::array();
    for (std::size_t j = 0; j <= k; ++j) row.push_back(format_rational(m(k, j)));
    rows.push_back(row);
  }
  return json{{"source", m.source}, {"target", m.target}, {"order", m.order}, {"rows", rows}};
}

json to_json(const FalsificationReport& report) {
  json outcome;
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    outcome = {{"kind", "counterexample_found"},
               {"f", to_json(c.f)},
               {"image", to_json(c.image)},
               {"input_certificate", to_json(c.input_certificate)},
               {"certificate", to_json(c.certificate)},
               {"source", c.source},
               {"candidate_index", c.candidate_index}};
  } else {
    outcome = {{"kind", "none_found_within_budget"}};
  }
  return json{{"sequence", to_json(report.sequence)},
              {"basis", basis_descriptor(report.basis)},
              {"degree_budget", report.degree_budget},
              {"trials", report.trials},
              {"seed", report.seed},
              {"candidates_examined", report.candidates_examined},
              {"outcome", outcome}};
}

FalsificationReport report_from_json(const json& j) {
  FalsificationReport report{sequence_from_json(field(j, "sequence")),
                             basis_from_json(field(j, "basis")),
                             size_from_json(field(j, "degree_budget"), "degree_budget"),
                             size_from_json(field(j, "trials"), "trials"),
                             0,
                             size_from_json(field(j, "candidates_examined"), "candidates_examined"),
                             std::nullopt};
  const json& seed = field(j, "seed");
  if (!seed.is_number_unsigned()) schema_error("seed must be a nonnegative integer");
  report.seed = seed.get<std::uint64_t>();

  const json& outcome = field(j, "outcome");
  const json& kind = field(outcome, "kind");
  if (kind == "counterexample_found") {
    Counterexample c;
    c.f = poly_from_json(field(outcome, "f"));
    c.image = poly_from_json(field(outcome, "image"));
    c.input_certificate = certificate_from_json(field(outcome, "input_certificate"));
    c.certificate = certificate_from_json(field(outcome, "certificate"));
    const json& source = field(outcome, "source");
    if (!source.is_string()) schema_error("source must be a string");
    c.source = source.get<std::string>();
    c.candidate_index = size_from_json(field(outcome, "candidate_index"), "candidate_index");
    report.counterexample = std::move(c);
  } else if (kind != "none_found_within_budget") {
    schema_error("unknown outcome kind " + kind.dump());
  }
  return report;
}

json to_json(const EnBound& bound) {
  return json{{"n", bound.n},
              {"basis", bound.basis},
              {"lo", format_rational(bound.lo)},
              {"hi", format_rational(bound.hi)},
              {"width", format_rational(bound.width())},
              {"lo_certificate", to_json(bound.lo_certificate)},
              {"hi_certificate", to_json(bound.hi_certificate)}};
}

json to_json(const ConvergenceTrace& trace) {
  json rows = json::array();
  for (const auto& rec : trace.records) {
    json deformed = json::array();
    for (const auto& p : rec.deformed) deformed.push_back(to_json(p));
    rows.push_back({{"alpha", format_rational(rec.alpha)},
                    {"coefficients", rationals_to_json(rec.coefficients)},
                    {"deformed_basis", deformed}});
  }
  return json{{"f", to_json(trace.f)},
              {"from", trace.from},
              {"to", trace.to},
              {"limit_coefficients", rationals_to_json(trace.limit_coefficients)},
              {"rows", rows}};
}

json to_json(const ConvergenceReport& report) {
  json steps = json::array();
  for (const auto& s : report.steps) {
    steps.push_back({{"alpha", format_rational(s.alpha)},
                     {"next_alpha", format_rational(s.next_alpha)},
                     {"required_factor", format_rational(s.required_factor)},
                     {"basis_gap", format_rational(s.basis_gap)},
                     {"next_basis_gap", format_rational(s.next_basis_gap)},
                     {"coefficient_gaps", rationals_to_json(s.coefficient_gaps)},
                     {"next_coefficient_gaps", rationals_to_json(s.next_coefficient_gaps)},
                     {"image_gap", format_rational(s.image_gap)},
                     {"next_image_gap", format_rational(s.next_image_gap)},
                     {"basis_ok", s.basis_ok},
                     {"coefficients_ok", s.coefficients_ok},
                     {"image_ok", s.image_ok}});
  }
  return json{{"leading_coefficient_exact", report.leading_coefficient_exact},
              {"passed", report.passed()},
              {"steps", steps}};
}

}  // namespace hypersieve
