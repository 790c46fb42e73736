#include "wbary/cli/app.hpp"

#include "instance_flags.hpp"
#include "report.hpp"
#include "selftest.hpp"

#include "wbary/error.hpp"
#include "wbary/euler.hpp"
#include "wbary/homotopy.hpp"
#include "wbary/instance_io.hpp"
#include "wbary/oracle.hpp"
#include "wbary/series.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <random>

namespace wbary::cli {

namespace {

struct ClassifyFlags {
  std::string placement;
  std::string chi_a;
  std::string chi_b;
};

HomotopyDescriptor classify_instance(const ValidatedInstance& v, const ClassifyFlags& flags) {
  if (!flags.placement.empty()) {
    if (flags.chi_a.empty() || flags.chi_b.empty()) {
      throw Error(ErrorCode::ParseError, "--placement needs --chi-a and --chi-b");
    }
    const Placement placement = flags.placement == "one-each" ? Placement::OneEach : Placement::BothInFirst;
    return classify_r2_two_components(v, placement, parse_integer(flags.chi_a), parse_integer(flags.chi_b));
  }
  const auto& components = v.space().components;
  if (components.size() > 2) throw Error(ErrorCode::OutOfScope, "at most two components are classified");
  if (components.size() == 2 && v.r() == 2) {
    const auto& c0 = components[0];
    const auto& c1 = components[1];
    if (c0.singular_indices.size() == 1) {
      // p_1 (the lighter point) goes in A1.
      const bool first_has_p1 = c0.singular_indices[0] == 0;
      return classify_r2_two_components(v, Placement::OneEach, first_has_p1 ? c0.chi_c : c1.chi_c,
                                        first_has_p1 ? c1.chi_c : c0.chi_c);
    }
    const bool first_has_both = c0.singular_indices.size() == 2;
    return classify_r2_two_components(v, Placement::BothInFirst, first_has_both ? c0.chi_c : c1.chi_c,
                                      first_has_both ? c1.chi_c : c0.chi_c);
  }
  switch (v.r()) {
    case 0:
      return bary(to_int64(floor_rational(v.rho())), base("X", v.chi_c()));
    case 1:
      return classify_r1(v);
    case 2:
      return classify_r2_connected(v);
    default:
      throw Error(ErrorCode::OutOfScope, "homotopy types are classified only for r <= 2 (got r = " +
                                             std::to_string(v.r()) + ")");
  }
}

int emit(const Report& report, bool json, std::ostream& out) {
  if (json) {
    out << to_json(report).dump() << "\n";
  } else {
    print_text(report, out);
  }
  return report.match() ? kExitMatch : kExitMismatch;
}

int cmd_compute(const InstanceFlags& flags, const std::string& method, bool json, bool breakdown,
                std::istream& in, std::ostream& out) {
  const auto v = validate(build_instance(flags, in));
  Report report("compute", v);
  auto add = [&](const ChiResult& result) {
    report.values.push_back({std::string(to_string(result.method)), result.chi_c});
    if (!report.degree) report.degree = result.degree;
    if (breakdown && !result.terms.empty()) report.breakdown.emplace_back(to_string(result.method), result.terms);
  };
  if (method == "all" || method == "direct") add(chi_c_direct(v));
  if (method == "all" || method == "strata") add(chi_c_strata(v));
  if (method == "all" || method == "series") add(chi_c_series(v));
  report.topological_chi = topological_chi_applicable(v);
  try {
    const auto d = classify_instance(v, {});
    report.descriptor = to_string(d);
    report.descriptor_chi = chi_of_descriptor(d);
  } catch (const Error&) {
    // Outside the classified regimes; the report simply has no descriptor.
  }
  return emit(report, json, out);
}

int cmd_series(const InstanceFlags& flags, const std::string& bound_text, bool json, std::istream& in,
               std::ostream& out) {
  const auto v = validate(build_instance(flags, in));
  std::optional<Rational> bound;
  if (!bound_text.empty()) {
    try {
      bound = parse_rational(bound_text);
    } catch (const Error& e) {
      throw Error(e.code(), std::string("--bound: ") + e.what());
    }
    if (*bound < v.rho()) throw Error(ErrorCode::ParseError, "--bound must be at least rho");
  }
  const auto spec = SeriesSpec::from_instance(v, bound);
  const auto g = chen_lin_series(spec);
  const auto result = chi_c_series(spec);
  const BigInt direct = chi_c_direct(v).chi_c;

  std::vector<BigInt> partial;
  BigInt running = 0;
  for (const auto& [e, c] : g.terms()) {
    if (e == 0 || e > v.rho()) continue;
    running += c;
    partial.push_back(running);
  }

  if (json) {
    nlohmann::json doc;
    doc["command"] = "series";
    doc["instance"] = nlohmann::json::parse(instance_document(v));
    doc["bound"] = to_string(spec.truncation_bound);
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : g.terms()) {
      if (e == 0) continue;
      terms.push_back({{"exponent", to_string(e)}, {"coefficient", json_integer(c)}});
    }
    doc["terms"] = terms;
    nlohmann::json sums = nlohmann::json::array();
    for (const auto& s : partial) sums.push_back(json_integer(s));
    doc["partial_sums"] = sums;
    doc["chi_c"] = {{"direct", json_integer(direct)}, {"series", json_integer(result.chi_c)}};
    doc["degree"] = json_integer(result.degree);
    doc["verdict"] = direct == result.chi_c ? "MATCH" : "MISMATCH";
    out << doc.dump() << "\n";
  } else {
    out << "# g(x) = (1 + x + x^2 + ...)^(" << to_string(BigInt(static_cast<std::int64_t>(v.r())) - v.chi_c())
        << ") * prod (1 - x^w_j), exponents <= " << to_string(spec.truncation_bound) << "\n";
    out << "# chi_c = " << to_string(result.chi_c) << "  d_rho = " << to_string(result.degree) << "\n";
    bool marked = false;
    for (const auto& [e, c] : g.terms()) {
      if (e == 0) continue;
      if (!marked && e > v.rho()) {
        out << "# rho = " << to_string(v.rho()) << "\n";
        marked = true;
      }
      out << to_string(e) << " " << to_string(c) << "\n";
    }
    if (!marked) out << "# rho = " << to_string(v.rho()) << "\n";
    out << "# partial sums:";
    for (const auto& s : partial) out << " " << to_string(s);
    out << "\n" << (direct == result.chi_c ? "MATCH" : "MISMATCH") << "\n";
  }
  return direct == result.chi_c ? kExitMatch : kExitMismatch;
}

int cmd_oracle(std::size_t vertices, const std::string& weights, const std::string& rho_text, bool json,
               std::ostream& out) {
  if (rho_text.empty()) throw Error(ErrorCode::ParseError, "--rho is required");
  const auto listed = parse_weight_list(weights);
  const auto space = FiniteWeightedSpace::with_weights(vertices, listed);
  const Rational rho = parse_rational(rho_text);
  const auto v = validate(as_problem_instance(space, rho));
  Report report("oracle", v);
  report.vertices = vertices;
  report.values.push_back({"oracle", oracle_chi(space, rho)});
  for (const auto& result : {chi_c_direct(v), chi_c_strata(v), chi_c_series(v)}) {
    report.values.push_back({std::string(to_string(result.method)), result.chi_c});
  }
  report.degree = 1 - report.values.front().chi_c;
  return emit(report, json, out);
}

int cmd_classify(const InstanceFlags& flags, const ClassifyFlags& classify, bool json, std::istream& in,
                 std::ostream& out) {
  const auto v = validate(build_instance(flags, in));
  const auto d = classify_instance(v, classify);
  Report report("classify", v);
  report.descriptor = to_string(d);
  report.descriptor_chi = chi_of_descriptor(d);
  report.values.push_back({"descriptor", *report.descriptor_chi});
  const auto direct = chi_c_direct(v);
  report.values.push_back({"direct", direct.chi_c});
  report.degree = direct.degree;
  report.topological_chi = topological_chi_applicable(v);
  return emit(report, json, out);
}

int cmd_selftest(std::size_t cases, std::optional<std::uint64_t> seed, unsigned workers, std::ostream& out) {
  SelftestOptions options;
  options.cases = cases;
  options.seed = seed ? *seed : std::random_device{}();
  options.workers = workers;
  out << "seed " << options.seed << "\n";
  bool ok = true;
  for (const auto& r : run_selftest(options)) {
    out << (r.failures == 0 ? "PASS " : "FAIL ") << r.name << ": " << r.cases - r.failures << "/" << r.cases
        << "\n";
    if (r.failures > 0) {
      out << "  first failure: " << r.first_failure << "\n";
      ok = false;
    }
  }
  return ok ? kExitMatch : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler characteristics of weighted barycenter spaces"};
  app.name("wbary");
  app.require_subcommand(1);

  InstanceFlags compute_flags, series_flags, classify_flags;
  std::string method = "all", bound;
  bool json = false, breakdown = false;

  auto* compute = app.add_subcommand("compute", "chi_c(B_rho) by every method, cross-checked");
  compute_flags.attach(*compute);
  compute->add_option("--method", method, "direct | strata | series | all")
      ->check(CLI::IsMember({"direct", "strata", "series", "all"}));
  compute->add_flag("--breakdown", breakdown, "print the per-subset terms");

  auto* series = app.add_subcommand("series", "dump the truncated generating series");
  series_flags.attach(*series);
  series->add_option("--bound", bound, "truncation bound (default rho)");

  std::size_t vertices = 0;
  std::string oracle_weights, oracle_rho;
  auto* oracle = app.add_subcommand("oracle", "face enumeration on a finite weighted point set");
  oracle->add_option("--vertices", vertices, "number of points")->required();
  oracle->add_option("--weights", oracle_weights, "weights of the first points; the rest weigh 1");
  oracle->add_option("--rho", oracle_rho, "threshold rho");

  ClassifyFlags placement;
  auto* classify = app.add_subcommand("classify", "homotopy type for r <= 2");
  classify_flags.attach(*classify);
  classify->add_option("--placement", placement.placement, "one-each | both-first")
      ->check(CLI::IsMember({"one-each", "both-first"}));
  classify->add_option("--chi-a", placement.chi_a, "chi of the component A1");
  classify->add_option("--chi-b", placement.chi_b, "chi of the component A2");

  std::size_t cases = 1000;
  std::optional<std::uint64_t> seed;
  unsigned workers = 0;
  auto* selftest = app.add_subcommand("selftest", "randomized cross-check corpora");
  selftest->add_option("--cases", cases, "cases per corpus");
  selftest->add_option("--seed", seed, "RNG seed (default: random, printed)");
  selftest->add_option("--workers", workers, "worker threads (default: all cores)");

  for (auto* command : {compute, series, oracle, classify}) command->add_flag("--json", json, "canonical JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*compute) return cmd_compute(compute_flags, method, json, breakdown, in, out);
    if (*series) return cmd_series(series_flags, bound, json, in, out);
    if (*oracle) return cmd_oracle(vertices, oracle_weights, oracle_rho, json, out);
    if (*classify) return cmd_classify(classify_flags, placement, json, in, out);
    if (*selftest) return cmd_selftest(cases, seed, workers, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {
    err << "internal consistency check failed: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitInputError;
}

}  // namespace wbary::cli
