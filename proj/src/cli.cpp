#include "hypersieve/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "hypersieve/facts.hpp"
#include "hypersieve/json_io.hpp"
#include "hypersieve/mstest.hpp"
#include "hypersieve/poly_parse.hpp"

namespace hypersieve {

namespace {

struct Common {
  std::string output = "human";
  bool json() const { return output == "json"; }
};

std::string read_text(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + arg + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, what + " is not valid JSON: " + e.what());
  }
}

/// A file path or an inline JSON object.
GammaSequence load_sequence(const std::string& arg) {
  return sequence_from_json(parse_json_text(read_text(arg), "sequence"));
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty list");
  return out;
}

std::string join(const std::vector<Rational>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + format_rational(values[i]);
  return s + "]";
}

std::uint64_t default_seed() {
  const char* env = std::getenv("HYPERSIEVE_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const std::uint64_t seed = std::stoull(env, &used);
    if (used == std::string(env).size()) return seed;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidArgument, std::string("HYPERSIEVE_SEED is not an integer: ") + env);
}

// check ------------------------------------------------------------------

struct CheckLine {
  std::string name;
  std::string verdict;  // "pass", "fail", "n/a"
  std::string detail;
};

int cmd_check(const std::string& seq_arg, std::size_t degree, const Common& common, std::ostream& out) {
  const GammaSequence g = load_sequence(seq_arg);
  std::vector<CheckLine> lines;

  const auto ps = polya_schur_check(g, degree);
  if (ps.passed()) {
    lines.push_back({"polya_schur", "pass", "real-rooted up to degree " + std::to_string(degree)});
  } else {
    lines.push_back({"polya_schur", "fail",
                     "degree " + std::to_string(ps.failure->n) + ": " + format_polynomial(ps.failure->image)});
  }

  const auto turan = turan_check(g, degree);
  lines.push_back({"turan", turan.passed() ? "pass" : "fail",
                   turan.passed() ? "" : "k = " + std::to_string(*turan.fail_at)});

  const auto signs = sign_pattern_check(g, degree);
  switch (signs.kind) {
    case SignPattern::Kind::AllSameSign: lines.push_back({"sign_pattern", "pass", "same sign"}); break;
    case SignPattern::Kind::Alternating: lines.push_back({"sign_pattern", "pass", "alternating"}); break;
    case SignPattern::Kind::Neither:
      lines.push_back({"sign_pattern", "fail", "k = " + std::to_string(signs.violation)});
      break;
  }

  const auto zeros = zero_pattern_check(g, degree);
  lines.push_back({"zero_pattern", zeros.passed() ? "pass" : "fail",
                   zeros.passed() ? "" : "k = " + std::to_string(*zeros.fail_at)});

  try {
    const auto ext = geometric_extrapolation(g);
    if (!ext) {
      lines.push_back({"geometric_extrapolation", "n/a", "not a geometric start"});
    } else if (ext->consistent()) {
      lines.push_back({"geometric_extrapolation", "pass", "ratio " + format_rational(ext->alpha)});
    } else {
      std::string ks;
      for (auto k : ext->violations) ks += (ks.empty() ? "" : ",") + std::to_string(k);
      lines.push_back({"geometric_extrapolation", "fail",
                       "ratio " + format_rational(ext->alpha) + ", violated at k = " + ks});
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ZeroLeadingTerms) throw;
    lines.push_back({"geometric_extrapolation", "n/a", "gamma_0 or gamma_1 is zero"});
  }

  bool ok = true;
  for (const auto& l : lines) ok = ok && l.verdict != "fail";

  if (common.json()) {
    json checks = json::array();
    for (const auto& l : lines) checks.push_back({{"name", l.name}, {"verdict", l.verdict}, {"detail", l.detail}});
    out << json{{"sequence", to_json(g)}, {"degree", degree}, {"checks", checks}, {"passed", ok}}.dump(2)
        << "\n";
  } else {
    for (const auto& l : lines) {
      out << l.name << ": " << l.verdict;
      if (!l.detail.empty()) out << " (" << l.detail << ")";
      out << "\n";
    }
    out << (ok ? "all checks passed" : "some checks failed") << "\n";
  }
  return ok ? kExitSuccess : kExitInconclusive;
}

// falsify ----------------------------------------------------------------

int cmd_falsify(const std::string& seq_arg, const std::string& basis_arg, const FalsifyOptions& opts,
                const std::string& out_path, const Common& common, std::ostream& out) {
  const GammaSequence g = load_sequence(seq_arg);
  const SimpleSet basis = basis_from_text(basis_arg);
  const auto report = falsify(g, basis, opts);
  const json j = to_json(report);
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write '" + out_path + "'");
    file << j.dump(2) << "\n";
  }
  if (common.json()) {
    out << j.dump(2) << "\n";
  } else if (report.falsified()) {
    const auto& c = *report.counterexample;
    out << "counterexample found for basis " << basis.name() << "\n"
        << "  f      = " << format_polynomial(c.f) << "\n"
        << "  image  = " << format_polynomial(c.image) << " (" << to_string(c.certificate.verdict) << ")\n"
        << "  source = " << c.source << " (candidate " << c.candidate_index << ")\n";
  } else {
    out << "no counterexample within degree budget " << report.degree_budget << " and " << report.trials
        << " random trials (" << report.candidates_examined << " candidates examined)\n";
  }
  return report.falsified() ? kExitSuccess : kExitInconclusive;
}

// expand / apply ---------------------------------------------------------

int cmd_expand_poly(const std::string& poly, const std::string& basis_arg, const Common& common,
                    std::ostream& out) {
  const SimpleSet basis = basis_from_text(basis_arg);
  const RationalPoly f = parse_polynomial(poly);
  const auto coeffs = expand_in_basis(f, basis);
  if (common.json()) {
    out << json{{"f", to_json(f)}, {"basis", basis_descriptor(basis)}, {"coeffs", rationals_to_json(coeffs)}}
               .dump(2)
        << "\n";
  } else {
    out << join(coeffs) << "\n";
  }
  return kExitSuccess;
}

int cmd_expand_matrix(const std::string& from_arg, const std::string& basis_arg, std::size_t order,
                      const Common& common, std::ostream& out) {
  const auto m = expansion_matrix(basis_from_text(from_arg), basis_from_text(basis_arg), order);
  if (common.json()) {
    out << to_json(m).dump(2) << "\n";
  } else {
    out << "rows: " << m.source << " in terms of " << m.target << "\n";
    for (std::size_t k = 0; k <= order; ++k) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j <= k; ++j) row.push_back(m(k, j));
      out << "  q_" << k << ": " << join(row) << "\n";
    }
  }
  return kExitSuccess;
}

int cmd_apply(const std::string& poly, const std::string& basis_arg, const std::string& seq_arg,
              const Common& common, std::ostream& out) {
  const SimpleSet basis = basis_from_text(basis_arg);
  const GammaSequence g = load_sequence(seq_arg);
  const RationalPoly f = parse_polynomial(poly);
  const RationalPoly image = apply_sequence(g, f, basis);
  const auto cert = is_real_rooted(image);
  if (common.json()) {
    out << json{{"f", to_json(f)}, {"basis", basis_descriptor(basis)}, {"sequence", to_json(g)},
                {"image", to_json(image)}, {"certificate", to_json(cert)}}
               .dump(2)
        << "\n";
  } else {
    out << format_polynomial(image) << "\n";
  }
  return kExitSuccess;
}

// en-bound / converge ----------------------------------------------------

int cmd_en_bound(const std::string& basis_arg, std::size_t n, const std::string& tol, bool allow_multiple,
                 const Common& common, std::ostream& out) {
  EnBoundOptions opts;
  opts.tol = parse_rational(tol);
  opts.require_simple = !allow_multiple;
  const auto bound = en_max_bound(basis_from_text(basis_arg), n, opts);
  if (common.json()) {
    out << to_json(bound).dump(2) << "\n";
  } else {
    out << "max E_" << n << " for " << bound.basis << " in [" << format_rational(bound.lo) << ", "
        << format_rational(bound.hi) << "], width " << format_rational(bound.width()) << "\n";
  }
  return kExitSuccess;
}

int cmd_converge(const std::string& from_arg, const std::string& to_arg, const std::string& poly,
                 const std::string& schedule_arg, const std::string& seq_arg, const std::string& grid_arg,
                 const Common& common, std::ostream& out) {
  const auto trace = deformed_expansion_trace(parse_polynomial(poly), basis_from_text(from_arg),
                                              basis_from_text(to_arg), parse_rational_list(schedule_arg));
  const GammaSequence g = seq_arg.empty() ? GammaSequence::constant(1) : load_sequence(seq_arg);
  const auto grid = grid_arg.empty() ? default_grid() : parse_rational_list(grid_arg);
  std::optional<ConvergenceReport> report;
  if (trace.records.size() >= 2) report = claim_convergence_check(trace, grid, g);
  const bool ok = !report || report->passed();

  if (common.json()) {
    json j = to_json(trace);
    if (report) j["check"] = to_json(*report);
    out << j.dump(2) << "\n";
  } else {
    out << "limit coefficients: " << join(trace.limit_coefficients) << "\n";
    for (const auto& rec : trace.records) {
      out << "alpha = " << format_rational(rec.alpha) << ": " << join(rec.coefficients) << "\n";
    }
    if (report) out << "decay check: " << (ok ? "passed" : "failed") << "\n";
  }
  return ok ? kExitSuccess : kExitInconclusive;
}

// reproduce-paper --------------------------------------------------------

int cmd_reproduce(const FactConfig& cfg, const Common& common, std::ostream& out) {
  const auto results = run_facts(cfg);
  const bool ok = all_passed(results);
  if (common.json()) {
    json facts = json::array();
    for (const auto& r : results) {
      facts.push_back({{"id", r.id}, {"description", r.description}, {"status", std::string(to_string(r.status))},
                       {"detail", r.detail}, {"seconds", r.seconds}});
    }
    out << json{{"facts", facts}, {"passed", ok}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << to_string(r.status) << "  " << r.id << "  " << r.description << "\n";
      for (const auto& d : r.detail) out << "      " << d << "\n";
    }
    out << (ok ? "all facts reproduced" : "some facts did not reproduce") << "\n";
  }
  return ok ? kExitSuccess : kExitInconclusive;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-arithmetic tools for multiplier sequences over simple sets of polynomials",
               "hypersieve"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--output", common.output, "Output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();

  std::size_t degree = 8;
  std::size_t trials = 500;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string tol = "1/1024";
  std::string seq_arg, basis_arg, poly, out_path, from_arg, to_arg, schedule_arg, grid_arg;
  std::size_t order = 0, n = 0;
  bool allow_multiple = false;

  auto* check = app.add_subcommand("check", "Run the classical multiplier-sequence checks");
  check->add_option("sequence", seq_arg, "Sequence JSON file or inline JSON")->required();
  check->add_option("--degree", degree, "Degree bound")->check(CLI::PositiveNumber)->capture_default_str();

  auto* fals = app.add_subcommand("falsify", "Search for a real-rooted f with a non-real-rooted image");
  fals->add_option("sequence", seq_arg, "Sequence JSON file or inline JSON")->required();
  fals->add_option("--basis", basis_arg, "Basis shorthand (kind[:param]) or JSON descriptor")->required();
  fals->add_option("--degree", degree, "Degree budget")->check(CLI::PositiveNumber)->capture_default_str();
  fals->add_option("--trials", trials, "Random trials")->check(CLI::NonNegativeNumber)->capture_default_str();
  auto* seed_opt = fals->add_option("--seed", seed, "Seed (default: $HYPERSIEVE_SEED or 0)");
  fals->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  fals->add_option("--out", out_path, "Also write the JSON report to this file");

  auto* expand = app.add_subcommand("expand", "Expand a polynomial in a basis, or print an expansion matrix");
  expand->add_option("polynomial", poly, "Polynomial literal, e.g. \"4x^2+4x+1\"");
  expand->add_option("--basis", basis_arg, "Target basis")->required();
  auto* from_opt = expand->add_option("--from", from_arg, "Source basis for the matrix form");
  expand->add_option("--order", order, "Largest index for the matrix form")->needs(from_opt);

  auto* apply = app.add_subcommand("apply", "Apply a sequence to a polynomial in a basis");
  apply->add_option("polynomial", poly, "Polynomial literal")->required();
  apply->add_option("--basis", basis_arg, "Basis")->required();
  apply->add_option("--seq", seq_arg, "Sequence JSON file or inline JSON")->required();

  auto* en = app.add_subcommand("en-bound", "Bracket the largest b with q_n + b q_{n-2} real-rooted");
  en->add_option("--basis", basis_arg, "Basis")->required();
  en->add_option("--n", n, "Index n >= 2")->required();
  en->add_option("--tol", tol, "Bracket width")->capture_default_str();
  en->add_flag("--allow-multiple", allow_multiple, "Accept q_n with repeated zeros");

  auto* conv = app.add_subcommand("converge", "Trace expansions in the alpha-deformed basis");
  conv->add_option("--from", from_arg, "Deformed basis Q")->required();
  conv->add_option("--to", to_arg, "Limit basis B")->required();
  conv->add_option("--poly", poly, "Polynomial literal")->required();
  conv->add_option("--schedule", schedule_arg, "Comma-separated alphas")->default_val("10,100,1000");
  conv->add_option("--seq", seq_arg, "Sequence for the image gap (default constant 1)");
  conv->add_option("--grid", grid_arg, "Comma-separated sample points (default 21 points on [-2,2])");

  auto* repro = app.add_subcommand("reproduce-paper", "Run the regression corpus of known facts");
  repro->add_option("--degree", degree, "Degree budget")->check(CLI::PositiveNumber)->capture_default_str();
  repro->add_option("--trials", trials, "Random trials")->check(CLI::NonNegativeNumber)->capture_default_str();
  auto* repro_seed = repro->add_option("--seed", seed, "Seed (default: $HYPERSIEVE_SEED or 0)");
  repro->add_option("--tol", tol, "Bisection width")->capture_default_str();
  repro->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  for (auto* sub : {check, fals, expand, apply, en, conv, repro}) sub->fallthrough();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (app.got_subcommand(check)) return cmd_check(seq_arg, degree, common, out);
    if (app.got_subcommand(fals)) {
      FalsifyOptions opts;
      opts.degree_budget = degree;
      opts.trials = trials;
      opts.seed = seed_opt->count() ? seed : default_seed();
      opts.jobs = jobs;
      return cmd_falsify(seq_arg, basis_arg, opts, out_path, common, out);
    }
    if (app.got_subcommand(expand)) {
      if (!from_arg.empty()) {
        if (!poly.empty()) throw Error(ErrorCode::InvalidArgument, "give either a polynomial or --from");
        return cmd_expand_matrix(from_arg, basis_arg, order, common, out);
      }
      if (poly.empty()) throw Error(ErrorCode::InvalidArgument, "expand needs a polynomial or --from");
      return cmd_expand_poly(poly, basis_arg, common, out);
    }
    if (app.got_subcommand(apply)) return cmd_apply(poly, basis_arg, seq_arg, common, out);
    if (app.got_subcommand(en)) return cmd_en_bound(basis_arg, n, tol, allow_multiple, common, out);
    if (app.got_subcommand(conv)) {
      return cmd_converge(from_arg, to_arg, poly, schedule_arg, seq_arg, grid_arg, common, out);
    }
    FactConfig cfg;
    cfg.degree_budget = degree;
    cfg.trials = trials;
    cfg.seed = repro_seed->count() ? seed : default_seed();
    cfg.tol = parse_rational(tol);
    cfg.jobs = jobs;
    if (cfg.tol <= 0) throw Error(ErrorCode::InvalidArgument, "--tol must be positive");
    return cmd_reproduce(cfg, common, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hypersieve
