#include "bohr/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bohr/bloch.hpp"
#include "bohr/errors.hpp"
#include "bohr/functionals.hpp"
#include "bohr/poly.hpp"
#include "bohr/radius.hpp"
#include "bohr/schur.hpp"

namespace bohr::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Json record;
  int exit_code = kExitOk;
};

std::string format9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

Json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::strtod(format9(v).c_str(), nullptr);
}

Json num_array(const std::vector<double>& values) {
  Json arr = Json::array();
  for (double v : values) arr.push_back(num(v));
  return arr;
}

PhiSequence parse_phi(const std::string& name) {
  const auto kind = parse_phi_kind(name);
  if (!kind) throw UsageError("unknown phi kind '" + name + "'");
  return PhiSequence::of_kind(*kind);
}

std::optional<DomainSpec> domain_from(const RunConfig& c, bool required) {
  if (c.gamma && c.lambda_h) throw UsageError("--gamma and --lambda-h are mutually exclusive");
  if (c.gamma) return DomainSpec::omega_gamma(*c.gamma);
  if (c.lambda_h) return DomainSpec::general(*c.lambda_h);
  if (required) throw UsageError("this command needs exactly one of --gamma or --lambda-h");
  return std::nullopt;
}

Json domain_params(const DomainSpec& d) {
  Json j;
  if (d.mode() == DomainSpec::Mode::OmegaGamma) {
    j["gamma"] = num(*d.gamma());
  } else {
    j["lambda_h"] = num(d.lambda_h());
  }
  return j;
}

RootOptions root_options(const RunConfig& c) { return RootOptions{c.tol, c.scan_step, false}; }

// ---------------------------------------------------------------- radius

Outcome run_radius(const RunConfig& c) {
  const std::string kind = c.kind.empty() ? "refined" : c.kind;
  RadiusProblem pb;
  pb.phi = parse_phi(c.phi);
  pb.p = c.p;
  pb.m = c.m;
  pb.N = c.N;
  pb.mu = MuFunction::constant(c.mu);
  Json flags = Json::array();
  if (kind == "refined") {
    pb.kind = EquationKind::Refined;
    pb.domain = *domain_from(c, true);
  } else if (kind == "rogosinski") {
    pb.kind = EquationKind::Rogosinski;
    if (domain_from(c, false)) flags.push_back("domain_ignored");
  } else {
    throw UsageError("unknown radius kind '" + kind + "' (refined, rogosinski)");
  }
  pb.validate();

  const RootResult root = solve_radius(pb, root_options(c));

  Json params;
  params["kind"] = kind;
  params["phi"] = c.phi;
  params["p"] = num(pb.p);
  params["m"] = pb.m;
  if (pb.kind == EquationKind::Rogosinski) {
    params["N"] = pb.N;
  } else {
    params.update(domain_params(pb.domain));
  }
  params["mu"] = num(c.mu);
  params["tol"] = num(c.tol);
  params["scan_step"] = num(c.scan_step);

  if (pb.kind == EquationKind::Refined && pb.m == 0 && *parse_phi_kind(c.phi) == PhiKind::Monomial) {
    const double t = pb.p / pb.domain.lambda_h();
    const double closed = t / (t + 2.0);
    flags.push_back(std::abs(closed - root.value) <= 1e-10 ? "closed_form_agrees" : "closed_form_differs");
  }
  const auto diag = improvability_diagnostic(pb, root.value);
  flags.push_back(diag.interval_condition && diag.derivative_condition ? "cannot_be_improved"
                                                                      : "improvability_unverified");

  Json rec;
  rec["command"] = "radius";
  rec["params"] = params;
  rec["radius"] = num(root.value);
  rec["residual"] = num(root.residual);
  rec["flags"] = flags;
  return {rec, kExitOk};
}

// ---------------------------------------------------------------- tables

struct TableOutcome {
  Json rows = Json::array();
  double worst_residual = 0.0;
  int failures = 0;
  Json flags = Json::array();
};

TableOutcome collect_tables(const RunConfig& c) {
  std::vector<int> ids;
  if (c.table_id) {
    if (*c.table_id < 1 || *c.table_id > 4) throw UsageError("--id must be 1, 2, 3 or 4");
    ids.push_back(*c.table_id);
  } else {
    ids = {1, 2, 3, 4};
  }
  TableOutcome out;
  for (int id : ids) {
    const PhiKind phi = table_spec(id).phi;
    const auto rows = reproduce_table(id);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      Json row_flags = Json::array();
      if (r.erratum) row_flags.push_back("erratum");
      if (!r.matches) row_flags.push_back("mismatch");
      Json row;
      row["table"] = id;
      row["row"] = i + 1;
      row["phi"] = std::string(to_string(phi));
      row["p"] = num(r.p);
      row["m"] = r.m;
      row["mu"] = num(r.mu);
      row["R_printed"] = num(r.printed);
      row["R_computed"] = num(r.computed);
      row["delta"] = num(r.delta);
      row["residual"] = num(r.residual);
      row["residual_at_printed"] = num(r.residual_at_printed);
      row["flags"] = row_flags;
      out.rows.push_back(row);
      out.worst_residual = std::max(out.worst_residual, std::abs(r.residual));
      if (!r.matches && !(r.erratum && c.allow_errata)) ++out.failures;
      if (r.erratum) {
        out.flags.push_back("erratum:table" + std::to_string(id) + "_row" + std::to_string(i + 1));
      } else if (!r.matches) {
        out.flags.push_back("mismatch:table" + std::to_string(id) + "_row" + std::to_string(i + 1));
      }
    }
  }
  if (c.allow_errata) out.flags.push_back("errata_allowed");
  return out;
}

Outcome run_tables(const RunConfig& c) {
  auto t = collect_tables(c);
  Json params;
  params["id"] = c.table_id ? Json(*c.table_id) : Json("all");
  params["tol"] = 1e-12;
  params["allow_errata"] = c.allow_errata;
  Json rec;
  rec["command"] = "tables";
  rec["params"] = params;
  rec["rows"] = t.rows;
  rec["residual"] = num(t.worst_residual);
  rec["flags"] = t.flags;
  return {rec, t.failures > 0 ? kExitVerification : kExitOk};
}

// ---------------------------------------------------------------- verify

struct Sweep {
  std::size_t checked = 0;
  std::size_t failures = 0;
  double worst_margin = INFINITY;
  std::optional<double> worst_a;
  std::optional<double> worst_r;

  void add(const FunctionalReport& rep, double a, double r) {
    ++checked;
    if (!rep.satisfied) ++failures;
    if (rep.margin < worst_margin) {
      worst_margin = rep.margin;
      worst_a = a;
      worst_r = r;
    }
  }
};

std::vector<double> sweep_a_grid() {
  std::vector<double> grid;
  for (int k = 1; k <= 9; ++k) grid.push_back(0.1 * k);
  for (double a : default_a_grid()) grid.push_back(a);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(), [](double x, double y) { return std::abs(x - y) < 1e-15; }),
             grid.end());
  return grid;
}

std::vector<double> radii_below(double radius) {
  std::vector<double> rs{0.25 * radius, 0.5 * radius, 0.75 * radius};
  if (radius - 0.01 > 0.0) rs.push_back(radius - 0.01);
  rs.push_back(radius);
  return rs;
}

// Diagonal blends with a common modulus a, independent phases and inner powers.
std::vector<CoeffSeries> random_blends(std::uint64_t seed, std::size_t count, std::vector<double>* moduli) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> dim(1, 8);
  std::uniform_int_distribution<unsigned> power(1, 3);
  std::vector<CoeffSeries> out;
  for (std::size_t i = 0; i < count; ++i) {
    const double a = 0.001 + 0.998 * unit(rng);
    std::vector<MobiusEntry> entries(static_cast<std::size_t>(dim(rng)));
    for (auto& e : entries) {
      e.a = a;
      e.phase = std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
      e.inner_power = power(rng);
    }
    out.push_back(diag_blend_coeffs(MatrixCoeffFn(entries), 600));
    if (moduli) moduli->push_back(a);
  }
  return out;
}

Json sweep_summary(const std::string& family, double radius, const Sweep& s, std::optional<double> probe_r,
                   std::optional<double> witness) {
  Json j;
  j["family"] = family;
  j["radius"] = num(radius);
  j["checked"] = s.checked;
  j["failures"] = s.failures;
  j["worst_margin"] = num(s.worst_margin);
  j["worst_a"] = s.worst_a ? num(*s.worst_a) : Json(nullptr);
  j["probe_r"] = probe_r ? num(*probe_r) : Json(nullptr);
  j["witness_a"] = witness ? num(*witness) : Json(nullptr);
  return j;
}

Outcome run_verify(const RunConfig& c) {
  const std::string& family = c.family;
  Json params;
  params["family"] = family;
  Json flags = Json::array();
  Sweep sweep;
  double radius = 0.0;
  std::optional<double> probe_r;
  std::optional<double> witness;
  const auto a_grid = sweep_a_grid();
  const auto probe_grid = default_a_grid();

  if (family == "tables") {
    auto t = collect_tables(c);
    Json summary;
    summary["family"] = family;
    summary["checked"] = t.rows.size();
    summary["failures"] = t.failures;
    Json rec;
    rec["command"] = "verify";
    rec["params"] = params;
    rec["summary"] = summary;
    rec["residual"] = num(t.worst_residual);
    rec["flags"] = t.flags;
    return {rec, t.failures > 0 ? kExitVerification : kExitOk};
  }

  if (family == "theorem_c" || family == "refined" || family == "rogosinski") {
    RadiusProblem pb;
    if (family == "theorem_c") {
      pb.domain = DomainSpec::omega_gamma(c.gamma.value_or(0.0));
      if (c.lambda_h) throw UsageError("theorem_c takes --gamma only");
      pb.mu = MuFunction::constant(0.0);
      params.update(domain_params(pb.domain));
    } else {
      pb.phi = parse_phi(c.phi);
      pb.p = c.p;
      pb.m = c.m;
      pb.N = c.N;
      pb.mu = MuFunction::constant(c.mu);
      params["phi"] = c.phi;
      params["p"] = num(c.p);
      params["m"] = c.m;
      params["mu"] = num(c.mu);
      if (family == "refined") {
        pb.domain = *domain_from(c, true);
        params.update(domain_params(pb.domain));
      } else {
        pb.kind = EquationKind::Rogosinski;
        params["N"] = c.N;
      }
    }
    pb.validate();
    const auto root = solve_radius(pb, root_options(c));
    radius = root.value;
    const auto functional = problem_functional(pb);
    for (double r : radii_below(radius)) {
      for (double a : a_grid) sweep.add(functional(extremal_coeffs(pb, a), r), a, r);
    }
    probe_r = radius + 0.01;
    if (*probe_r < 1.0) witness = sharpness_probe(pb, functional, *probe_r, probe_grid);
  } else if (family == "thm33" || family == "thm34" || family == "thm35") {
    if (c.gamma) throw UsageError(family + " takes --lambda-h only");
    const double lambda = c.lambda_h.value_or(1.0);
    const DomainSpec domain = DomainSpec::general(lambda);
    params["lambda_h"] = num(lambda);
    if (family == "thm33") params["m_deg"] = c.m_deg;
    if (family == "thm34") {
      if (c.beta > 1.0 / (4.0 * lambda) + 1e-15) flags.push_back("beta_outside_hypothesis");
      params["beta"] = num(c.beta);
    }
    params["seed"] = c.seed;
    radius = closed_form_radius(ClosedFormCase::Thm33Radius, {domain, 1.0}).value;
    auto eval = [&](const CoeffSeries& co, double r) {
      if (family == "thm33") return thm33_functional(co, r, lambda, c.m_deg);
      if (family == "thm34") return thm34_functional(co, r, c.beta);
      return thm35_functional(co, r, lambda);
    };
    RadiusProblem pb;
    pb.domain = domain;
    const bool has_family = domain.gamma().has_value();
    if (has_family) {
      for (double r : radii_below(radius)) {
        for (double a : a_grid) sweep.add(eval(extremal_coeffs(pb, a), r), a, r);
      }
      probe_r = radius + 0.01;
      witness = sharpness_probe(pb, eval, *probe_r, probe_grid);
    } else {
      flags.push_back("no_extremal_family");
    }
    if (lambda == 1.0) {
      std::vector<double> moduli;
      const auto blends = random_blends(c.seed, 100, &moduli);
      for (std::size_t i = 0; i < blends.size(); ++i) sweep.add(eval(blends[i], radius), moduli[i], radius);
      flags.push_back("random_blends:100");
    }
  } else if (family == "lemma36") {
    if (c.lambda_h) throw UsageError("lemma36 takes --gamma only");
    const double gamma = c.gamma.value_or(0.0);
    const PolySpec q = calibrate_q(c.tail);
    params["gamma"] = num(gamma);
    params["tail"] = num_array(c.tail);
    radius = closed_form_radius(ClosedFormCase::RhoGamma, {DomainSpec::omega_gamma(gamma), 1.0}).value;
    for (double a : a_grid) {
      if (a == gamma) continue;
      sweep.add(thm36_functional(mobius_gamma_coeffs(a, gamma, 64), radius, gamma, q), a, radius);
    }
    flags.push_back("s_evaluated_at_r(1-gamma)");
  } else {
    throw UsageError("unknown verify family '" + family +
                     "' (theorem_c, refined, rogosinski, thm33, thm34, thm35, lemma36, tables)");
  }

  if (probe_r && !witness) flags.push_back("no_witness_above_radius");
  Json rec;
  rec["command"] = "verify";
  rec["params"] = params;
  rec["summary"] = sweep_summary(family, radius, sweep, probe_r, witness);
  rec["residual"] = num(sweep.worst_margin);
  rec["flags"] = flags;
  return {rec, sweep.failures > 0 ? kExitVerification : kExitOk};
}

// ---------------------------------------------------------------- calibrate

Outcome run_calibrate(const RunConfig& c) {
  const std::string kind = c.kind.empty() ? "q" : c.kind;
  Json params;
  params["kind"] = kind;
  Json summary;
  double residual = 0.0;
  if (kind == "q") {
    if (c.lambda_h || c.gamma) throw UsageError("calibrate --kind q takes no domain flags");
    const PolySpec q = calibrate_q(c.tail);
    residual = q_constraint_residual(q);
    params["tail"] = num_array(c.tail);
    std::vector<double> ds;
    for (std::size_t s = 2; s <= q.degree(); ++s) ds.push_back(d_s(static_cast<unsigned>(s)));
    summary["coefficients"] = num_array(q.coeffs);
    summary["d_s"] = num_array(ds);
  } else if (kind == "p") {
    if (c.gamma) throw UsageError("calibrate --kind p takes --lambda-h");
    const double lambda = c.lambda_h.value_or(1.0);
    const PolySpec p = p_coeffs(lambda, c.m_deg);
    params["lambda_h"] = num(lambda);
    params["m_deg"] = c.m_deg;
    summary["coefficients"] = num_array(p.coeffs);
  } else {
    throw UsageError("unknown calibrate kind '" + kind + "' (q, p)");
  }
  Json rec;
  rec["command"] = "calibrate";
  rec["params"] = params;
  rec["summary"] = summary;
  rec["residual"] = num(residual);
  rec["flags"] = Json::array();
  return {rec, kExitOk};
}

// ---------------------------------------------------------------- bloch

Outcome run_bloch(const RunConfig& c) {
  Json params;
  params["theorem"] = c.theorem;
  params["domain"] = c.domain;
  params["nu"] = num(c.nu);
  Json flags = Json::array();
  if (c.lambda_h) throw UsageError("bloch takes --gamma, not --lambda-h");

  RootResult root;
  if (c.theorem == "42") {
    if (c.domain != "gamma") throw UsageError("theorem 42 needs --domain gamma");
    const double gamma = c.gamma.value_or(0.0);
    params["gamma"] = num(gamma);
    root = radius_thm42(gamma, c.nu, root_options(c));
    flags.push_back("sign_changes=" + std::to_string(root.sign_changes.value_or(0)));
  } else if (c.theorem == "41" || c.theorem == "43") {
    HyperbolicDensity density = HyperbolicDensity::unit_disk();
    if (c.domain == "gamma") {
      const double gamma = c.gamma.value_or(0.0);
      params["gamma"] = num(gamma);
      density = HyperbolicDensity::omega_gamma(gamma);
    } else if (c.domain != "disk") {
      throw UsageError("unknown domain '" + c.domain + "' (disk, gamma)");
    } else if (c.gamma) {
      throw UsageError("--gamma needs --domain gamma");
    }
    root = c.theorem == "41" ? radius_thm41(density, c.nu, root_options(c))
                             : radius_thm43(density, c.nu, root_options(c));
    flags.push_back("limit_checked_at_1-1e-6");
  } else {
    throw UsageError("unknown theorem '" + c.theorem + "' (41, 42, 43)");
  }
  Json rec;
  rec["command"] = "bloch";
  rec["params"] = params;
  rec["radius"] = num(root.value);
  rec["residual"] = num(root.residual);
  rec["flags"] = flags;
  return {rec, kExitOk};
}

// ---------------------------------------------------------------- bounds

Outcome run_bounds(const RunConfig& c) {
  const DrBounds b = dr_bounds(c.p);
  Json params;
  params["p"] = num(c.p);
  Json summary;
  summary["lower"] = num(b.lower);
  summary["upper"] = num(b.upper);
  summary["argmin"] = num(b.argmin);
  Json flags = Json::array();
  flags.push_back(b.lower <= b.upper ? "ordered" : "unordered");
  Json rec;
  rec["command"] = "bounds";
  rec["params"] = params;
  rec["summary"] = summary;
  rec["residual"] = num(b.upper - b.lower);
  rec["flags"] = flags;
  return {rec, kExitOk};
}

// ---------------------------------------------------------------- output

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_number_float()) return format9(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + scalar_text(v[i]);
    return s;
  }
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void write_csv(const Json& rec, std::ostream& os) {
  std::vector<std::pair<std::string, Json>> prefix{{"command", rec["command"]}};
  for (const auto& [k, v] : rec["params"].items()) prefix.emplace_back(k, v);

  std::vector<Json> lines;
  if (rec.contains("rows")) {
    for (const auto& row : rec["rows"]) lines.push_back(row);
  } else if (rec.contains("summary")) {
    lines.push_back(rec["summary"]);
  } else {
    Json single;
    single["radius"] = rec["radius"];
    lines.push_back(single);
  }

  std::vector<std::string> header;
  for (const auto& [k, v] : prefix) header.push_back(k);
  for (const auto& [k, v] : lines.front().items()) {
    if (k == "flags") continue;
    header.push_back(k);
  }
  if (!rec.contains("rows")) header.push_back("residual");
  header.push_back("flags");
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_field(header[i]);
  os << '\n';

  for (const auto& line : lines) {
    std::vector<std::string> cells;
    for (const auto& [k, v] : prefix) cells.push_back(scalar_text(v));
    for (const auto& [k, v] : line.items()) {
      if (k != "flags") cells.push_back(scalar_text(v));
    }
    if (!rec.contains("rows")) cells.push_back(scalar_text(rec["residual"]));
    cells.push_back(scalar_text(line.contains("flags") ? line["flags"] : rec["flags"]));
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    os << '\n';
  }
}

void write_text(const Json& rec, std::ostream& os) {
  os << rec["command"].get<std::string>();
  for (const auto& [k, v] : rec["params"].items()) os << ' ' << k << '=' << scalar_text(v);
  os << '\n';
  if (rec.contains("radius")) os << "radius   " << scalar_text(rec["radius"]) << '\n';
  if (rec.contains("summary")) {
    for (const auto& [k, v] : rec["summary"].items()) os << k << ' ' << scalar_text(v) << '\n';
  }
  if (rec.contains("rows")) {
    for (const auto& row : rec["rows"]) {
      bool first = true;
      for (const auto& [k, v] : row.items()) {
        os << (first ? "" : "  ") << k << '=' << scalar_text(v);
        first = false;
      }
      os << '\n';
    }
  }
  os << "residual " << scalar_text(rec["residual"]) << '\n';
  os << "flags    " << scalar_text(rec["flags"]) << '\n';
}

void emit(const Json& rec, Format format, std::ostream& os) {
  switch (format) {
    case Format::Json:
      os << rec.dump() << '\n';
      break;
    case Format::Csv:
      write_csv(rec, os);
      break;
    case Format::Text:
      write_text(rec, os);
      break;
  }
}

void validate(const RunConfig& c) {
  if (!(c.tol > 0.0 && c.tol <= 1e-3)) throw UsageError("--tol must lie in (0, 1e-3]");
  if (!(c.scan_step > 0.0 && c.scan_step < 1.0)) throw UsageError("--scan-step must lie in (0, 1)");
}

Outcome dispatch(const RunConfig& c) {
  validate(c);
  switch (c.command) {
    case Command::Radius: return run_radius(c);
    case Command::Tables: return run_tables(c);
    case Command::Verify: return run_verify(c);
    case Command::Calibrate: return run_calibrate(c);
    case Command::Bloch: return run_bloch(c);
    case Command::Bounds: return run_bounds(c);
  }
  throw UsageError("unknown command");
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  static const std::map<std::string, Command> names{{"radius", Command::Radius},       {"tables", Command::Tables},
                                                    {"verify", Command::Verify},       {"calibrate", Command::Calibrate},
                                                    {"bloch", Command::Bloch},         {"bounds", Command::Bounds}};
  const auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::optional<Format> parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  return std::nullopt;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Outcome outcome;
  try {
    outcome = dispatch(config);
  } catch (const UsageError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const InvalidTestFunction& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const SingularIntegrandError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const NoRootError& e) {
    err << "no root: " << one_line(e.what()) << " (function stays "
        << (e.sign() == NoRootError::Sign::Positive ? "positive" : "negative") << ")\n";
    return kExitNoRoot;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << one_line(e.what()) << '\n';
    return kExitNoRoot;
  } catch (const NonConvergenceError& e) {
    err << "no convergence: " << one_line(e.what()) << '\n';
    return kExitNoRoot;
  }

  std::ostringstream buffer;
  emit(outcome.record, config.format, buffer);
  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *config.out_path << " for writing\n";
      return kExitUsage;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  if (outcome.exit_code == kExitVerification) err << "verification failed\n";
  return outcome.exit_code;
}

}  // namespace bohr::cli
