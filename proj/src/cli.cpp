#include "hartogs/cli.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "hartogs/coeff.hpp"
#include "hartogs/error.hpp"
#include "hartogs/geometry.hpp"
#include "hartogs/hereditary.hpp"
#include "hartogs/io.hpp"
#include "hartogs/kernel.hpp"
#include "hartogs/quadrature.hpp"
#include "hartogs/shiftops.hpp"
#include "hartogs/subnormality.hpp"

namespace hartogs {

namespace {

using nlohmann::json;

struct Outcome {
  json report;
  std::string csv;  // filled by commands with a tabular form
  bool verdict_ok = true;
};

struct Context {
  const RunConfig& cfg;
  const json& doc;

  const json& require(const char* key) const {
    if (!doc.contains(key)) {
      throw Error(ErrorKind::InvalidConfig, "command '" + cfg.command + "' needs field '" + key + "'");
    }
    return doc.at(key);
  }
  template <class T>
  T get_or(const char* key, T fallback) const {
    if (!doc.contains(key)) return fallback;
    try {
      return doc.at(key).get<T>();
    } catch (const json::exception&) {
      throw Error(ErrorKind::InvalidConfig, std::string("field '") + key + "' has the wrong type");
    }
  }
  double positive(const char* key, double fallback) const {
    const double v = get_or<double>(key, fallback);
    if (!(v > 0.0)) throw Error(ErrorKind::InvalidConfig, std::string("field '") + key + "' must be positive");
    return v;
  }
  int nonnegative(const char* key, int fallback) const {
    const int v = get_or<int>(key, fallback);
    if (v < 0) throw Error(ErrorKind::InvalidConfig, std::string("field '") + key + "' must be >= 0");
    return v;
  }
  int required_int(const char* key) const {
    require(key);
    return nonnegative(key, 0);
  }

  PolyTuple tuple() const {
    if (doc.contains("tuple")) return parse_poly_tuple(doc.at("tuple"));
    if (doc.contains("pa")) {
      const json& pa = doc.at("pa");
      if (!pa.is_object() || !pa.contains("n") || !pa.at("n").is_number_integer()) {
        throw Error(ErrorKind::InvalidConfig, "'pa' needs an integer 'n'");
      }
      const long n = pa.at("n").get<long>();
      if (n < 1) throw Error(ErrorKind::InvalidConfig, "'pa.n' must be >= 1");
      Rational a(0);
      if (pa.contains("a")) {
        const json& ja = pa.at("a");
        a = ja.is_string() ? parse_rational(ja.get<std::string>()) : Rational(ja.get<long>());
      }
      if (sgn(a) < 0) throw Error(ErrorKind::NegativeCoefficient, "'pa.a' must be >= 0");
      return make_pa(static_cast<std::size_t>(n), a);
    }
    throw Error(ErrorKind::InvalidConfig, "command '" + cfg.command + "' needs 'tuple' or 'pa'");
  }
  MultiIndex index(const char* key, std::size_t n) const {
    MultiIndex a = parse_multi_index(require(key), key);
    if (a.size() != n) {
      throw Error(ErrorKind::InvalidConfig, std::string("field '") + key + "' must have length " + std::to_string(n));
    }
    return a;
  }
  MultiIndex index_or(const char* key, std::size_t n, int fill) const {
    return doc.contains(key) ? index(key, n) : MultiIndex(n, fill);
  }
  std::vector<Point> points(const char* key, std::size_t n) const {
    const json& j = require(key);
    if (!j.is_array()) throw Error(ErrorKind::InvalidConfig, std::string("field '") + key + "' must be a list");
    std::vector<Point> out;
    for (const auto& e : j) {
      Point p = parse_point(e);
      if (p.size() != n) throw Error(ErrorKind::InvalidConfig, "points must have " + std::to_string(n) + " coordinates");
      out.push_back(std::move(p));
    }
    return out;
  }
  // 1-based index in the config, 0-based in the library.
  std::size_t coordinate(const char* key, std::size_t n) const {
    const int j = get_or<int>(key, 1);
    if (j < 1 || static_cast<std::size_t>(j) > n) {
      throw Error(ErrorKind::InvalidConfig, std::string("field '") + key + "' must lie in 1.." + std::to_string(n));
    }
    return static_cast<std::size_t>(j - 1);
  }
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_header(std::size_t n, const char* prefix) {
  std::string s;
  for (std::size_t j = 1; j <= n; ++j) s += std::string(prefix) + std::to_string(j) + ",";
  return s;
}

std::string csv_index(const MultiIndex& a) {
  std::string s;
  for (std::size_t j = 0; j < a.size(); ++j) s += std::to_string(a[j]) + ",";
  return s;
}

json admissibility_json(const PolyTuple& p) {
  const auto adm = admissibility_degree(p);
  json degree = adm.degree.all_degrees ? json("all") : json(adm.degree.value);
  return {{"degree", degree}, {"admissible", adm.admissible}};
}

json univariate_json(const UnivariatePoly& q) {
  json terms = json::array();
  for (const auto& [e, c] : q) terms.push_back({{"exponent", e}, {"coeff", format_rational(c)}});
  return terms;
}

Outcome cmd_validate(const Context& c) {
  const PolyTuple p = c.tuple();
  json tilde = json::array();
  for (const auto& q : tilde_restrictions(p)) tilde.push_back(univariate_json(q));
  Outcome o;
  o.report = {{"valid", true}, {"tuple", to_json(p)}, {"admissibility", admissibility_json(p)},
              {"tilde", tilde}, {"radii", polydisc_radii(p)}};
  return o;
}

Outcome cmd_coeffs(const Context& c) {
  const PolyTuple p = c.tuple();
  const MultiIndex m = c.index("m", p.dim());
  const MultiIndex window = c.index("window", p.dim());
  const std::string method = c.get_or<std::string>("method", "auto");
  const std::map<std::string, CoeffMethod> methods{
      {"auto", CoeffMethod::Auto}, {"convolution", CoeffMethod::Convolution}, {"product", CoeffMethod::Product}};
  if (!methods.contains(method)) throw Error(ErrorKind::InvalidConfig, "unknown method '" + method + "'");
  const CoeffTable table = coeff_function(p, m, window, methods.at(method));
  Outcome o;
  std::ostringstream os;
  write_csv(os, table);
  o.csv = os.str();
  json values = json::array();
  for (std::size_t off = 0; off < table.window().size(); ++off) {
    values.push_back({{"alpha", to_json(table.window().at(off))}, {"value", format_rational(table.values()[off])}});
  }
  o.report = {{"window", to_json(window)}, {"m", to_json(m)}, {"values", values}};
  return o;
}

Outcome cmd_domain(const Context& c) {
  const PolyTuple p = c.tuple();
  const auto pts = c.points("points", p.dim());
  Outcome o;
  o.csv = "index,inside\n";
  json rows = json::array();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const bool inside = triangle_contains(p, pts[i]);
    json row{{"z", to_json(pts[i])}, {"inside", inside}};
    try {
      row["phi"] = to_json(change_of_variables(pts[i], Direction::Forward));
    } catch (const Error&) {
      row["phi"] = nullptr;
    }
    rows.push_back(row);
    o.csv += std::to_string(i) + "," + (inside ? "true" : "false") + "\n";
  }
  o.report = {{"radii", polydisc_radii(p)}, {"points", rows}};
  return o;
}

Outcome cmd_kernel(const Context& c) {
  const PolyTuple p = c.tuple();
  const MultiIndex m = c.index("m", p.dim());
  const int cutoff = c.nonnegative("cutoff", 60);
  const auto pts = c.points("points", p.dim());
  const KernelContext ctx(p, m, MultiIndex(p.dim(), cutoff));
  Outcome o;
  o.csv = "z_index,w_index,closed_re,closed_im,series_re,series_im,abs_err\n";
  json rows = json::array();
  double worst_rel = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i; j < pts.size(); ++j) {
      const auto closed = kernel_eval(ctx, pts[i], pts[j]);
      const auto series = kernel_series_eval(ctx, pts[i], pts[j], cutoff);
      const double err = std::abs(closed - series);
      worst_rel = std::max(worst_rel, err / std::abs(closed));
      rows.push_back({{"z", i}, {"w", j}, {"closed", to_json(closed)}, {"series", to_json(series)}, {"abs_err", err}});
      o.csv += std::to_string(i) + "," + std::to_string(j) + "," + num(closed.real()) + "," + num(closed.imag()) +
               "," + num(series.real()) + "," + num(series.imag()) + "," + num(err) + "\n";
    }
  }
  const GramReport g = gram_psd_check(ctx, pts);
  o.report = {{"cutoff", cutoff},
              {"rows", rows},
              {"max_relative_error", worst_rel},
              {"gram", {{"min_eigenvalue", g.min_eigenvalue},
                        {"max_diagonal", g.max_diagonal},
                        {"hermitian_defect", g.hermitian_defect},
                        {"psd", g.psd()}}}};
  o.verdict_ok = g.psd();
  return o;
}

Outcome cmd_weights(const Context& c) {
  const PolyTuple p = c.tuple();
  const std::size_t n = p.dim();
  const MultiIndex m = c.index("m", n);
  const MultiIndex window = c.index("window", n);
  const WeightTable w = op_weights(p, m, window);
  std::vector<HyponormalityReport> hypo;
  for (std::size_t j = 0; j < n; ++j) hypo.push_back(hyponormality_diagonal(p, m, j, window));
  Outcome o;
  o.csv = csv_header(n, "alpha_") + "j,omega,sigma,hypo_diag\n";
  json rows = json::array();
  for (std::size_t off = 0; off < w.window().size(); ++off) {
    const MultiIndex a = w.window().at(off);
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& h = hypo[j].diagonal[off];
      rows.push_back({{"alpha", to_json(a)},
                      {"j", j + 1},
                      {"omega_sq", format_rational(w.omega_sq(j, a))},
                      {"sigma_sq", format_rational(w.sigma_sq(j, a))},
                      {"hypo_diag", format_rational(h)}});
      o.csv += csv_index(a) + std::to_string(j + 1) + "," + num(w.omega(j, a)) + "," + num(w.sigma(j, a)) + "," +
               format_rational(h) + "\n";
    }
  }
  json hyponormal = json::array();
  for (const auto& h : hypo) hyponormal.push_back(h.nonnegative);
  o.report = {{"window", to_json(window)}, {"rows", rows}, {"separately_hyponormal_on_window", hyponormal}};
  return o;
}

json commutator_json(const CommutatorValue& v) {
  return {{"alpha", to_json(v.alpha)}, {"image", to_json(v.image)}, {"value", v.value()}};
}

Outcome cmd_probes(const Context& c) {
  const PolyTuple p = c.tuple();
  const std::size_t n = p.dim();
  if (n < 2) throw Error(ErrorKind::WrongDimension, "probes need n >= 2");
  const MultiIndex m = c.index("m", n);
  const MultiIndex window = c.index("window", n);
  const double circ_tol = c.positive("circularity_tolerance", 1e-12);
  const int trials = c.nonnegative("theta_trials", 20);
  const int ray = c.nonnegative("ray_length", 10);

  const ProbeReport pr = factorization_and_commutation_probe(p, m, window);
  json probe{{"factorization_exact", pr.factorization_exact},
             {"factorization_cells", pr.factorization_cells},
             {"triangle_cells", pr.triangle_cells},
             {"triangle_nonzero", pr.triangle_nonzero ? commutator_json(*pr.triangle_nonzero) : json(nullptr)},
             {"polydisc_commutators_zero", pr.polydisc_commutators_zero},
             {"polydisc_cells", pr.polydisc_cells},
             {"mult_commute", pr.mult_commute}};
  if (pr.factorization_mismatch) probe["factorization_mismatch"] = to_json(*pr.factorization_mismatch);

  const WeightTable w = op_weights(p, m, window);
  json norms = json::array();
  for (std::size_t j = 0; j < n; ++j) {
    const NormBounds b = norm_bounds(p, m, j);
    norms.push_back({{"j", j + 1},
                     {"upper", b.upper()},
                     {"lower", b.lower() ? json(*b.lower()) : json(nullptr)},
                     {"truncated_norm", std::sqrt(to_double(truncated_norm_sq(w, j)))}});
  }

  json rays = json::array();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto r = essential_normality_ray(p, m, i, ray);
    rays.push_back({{"i", i + 1}, {"infimum", format_rational(r.infimum)}, {"constant", r.constant}});
  }

  std::mt19937_64 rng(c.cfg.seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    std::vector<double> theta(n);
    for (auto& x : theta) x = angle(rng);
    worst = std::max(worst, circularity_check(w, theta));
  }

  json intertwining = nullptr;
  bool inter_ok = true;
  if (admissibility_degree(p).admissible) {
    const auto r = polydisc_intertwining_check(p, m, window);
    inter_ok = r.exact;
    intertwining = {{"exact", r.exact}, {"cells", r.cells}};
  }

  Outcome o;
  o.verdict_ok = pr.factorization_exact && pr.mult_commute && pr.triangle_nonzero.has_value() &&
                 pr.polydisc_commutators_zero && worst <= circ_tol && inter_ok;
  o.report = {{"verdict", o.verdict_ok ? "PASS" : "FAIL"},
              {"probe", probe},
              {"norms", norms},
              {"essential_normality", rays},
              {"circularity", {{"trials", trials}, {"max_deviation", worst}, {"tolerance", circ_tol}}},
              {"intertwining", intertwining}};
  return o;
}

Outcome cmd_dettrace(const Context& c) {
  const PolyTuple p = c.tuple();
  const MultiIndex m = c.index("m", p.dim());
  const int k = c.required_int("truncation");
  const int bound = c.nonnegative("diagonal_bound", 8);
  const DetTraceReport r = det_commutator_and_trace(p, m, k, bound);
  json diag = json::array();
  for (const auto& v : r.diagonal) diag.push_back(format_rational(v));
  Outcome o;
  o.verdict_ok = r.positive;
  o.report = {{"verdict", r.positive ? "positive" : "not positive"},
              {"truncation", r.truncation},
              {"a1_nondecreasing", r.a1_nondecreasing},
              {"a2_nondecreasing", r.a2_nondecreasing},
              {"a1_at_truncation", format_rational(r.a1.back())},
              {"a2_at_truncation", format_rational(r.a2.back())},
              {"partial_trace", format_rational(r.partial_trace)},
              {"partial_trace_value", r.partial_trace_value},
              {"limit_trace_estimate", r.limit_trace_estimate},
              {"diagonal_bound", r.diagonal_bound},
              {"diagonal", diag}};
  return o;
}

Outcome cmd_radius(const Context& c) {
  const PolyTuple p = c.tuple();
  const std::size_t n = p.dim();
  const MultiIndex m = c.index("m", n);
  const int k_max = c.nonnegative("k_max", 50);
  const int n_max = c.nonnegative("n_max", 200);
  const double tol = c.positive("tolerance", 1e-9);
  std::vector<std::size_t> coords;
  if (c.doc.contains("j")) coords.push_back(c.coordinate("j", n));
  else for (std::size_t j = 0; j < n; ++j) coords.push_back(j);
  const auto radii = polydisc_radii(p);
  Outcome o;
  json rows = json::array();
  for (auto j : coords) {
    const RadiusEstimate r = spectral_radius_estimate(p, m, j, k_max, n_max);
    const bool ok = r.estimate <= r.upper_bound + tol;
    o.verdict_ok = o.verdict_ok && ok;
    rows.push_back({{"j", j + 1},
                    {"estimate", r.estimate},
                    {"upper_bound", r.upper_bound},
                    {"polydisc_radius", radii[j]},
                    {"within_upper_bound", ok},
                    {"approximants", r.approximants}});
  }
  o.report = {{"k_max", k_max}, {"n_max", n_max}, {"radii", rows}};
  return o;
}

json monotonicity_json(const MonotonicityReport& r) {
  json wit = json::array();
  for (const auto& w : r.witnesses) {
    wit.push_back({{"beta", to_json(w.beta)}, {"k", to_json(w.k)}, {"value", format_rational(w.value)}});
  }
  return {{"verdict", r.verdict()}, {"pass", r.pass}, {"order", r.order}, {"window", to_json(r.window)},
          {"checked", r.checked}, {"failures", r.failures}, {"witnesses", wit}};
}

Outcome cmd_subnormality(const Context& c) {
  const int order = c.required_int("order");
  Outcome o;
  if (c.get_or<bool>("hartogs", false)) {
    const MultiIndex m = parse_multi_index(c.require("m"), "m");
    const MultiIndex window = c.index("window", m.size());
    const HartogsCertificate cert = hartogs_certify(m, window, order);
    o.verdict_ok = cert.pass;
    o.report = {{"verdict", cert.pass ? "PASS" : "FAIL"}, {"order", order}, {"window", to_json(window)},
                {"sequences", cert.sequences}};
    if (cert.failing_gamma) {
      o.report["failing_gamma"] = to_json(*cert.failing_gamma);
      o.report["failure"] = monotonicity_json(*cert.failure);
    }
    return o;
  }
  const PolyTuple p = c.tuple();
  const std::size_t n = p.dim();
  const MultiIndex m = c.index("m", n);
  const MultiIndex gamma = c.index_or("gamma", n, 0);
  const MultiIndex window = c.index("window", n);
  const std::string variant = c.get_or<std::string>("variant", "general");
  if (variant != "general" && variant != "admissible") {
    throw Error(ErrorKind::InvalidConfig, "variant must be 'general' or 'admissible'");
  }
  MomentSequence seq = moment_sequence(p, m, gamma, variant == "general" ? MomentVariant::General
                                                                         : MomentVariant::Admissible,
                                       window);
  seq.scale = parse_rational(c.get_or<std::string>("scale", "1"));
  const MonotonicityReport r = complete_monotonicity_check(seq, order);
  o.verdict_ok = r.pass;
  o.report = monotonicity_json(r);
  return o;
}

MatrixTuple matrix_tuple(const Context& c) {
  const json& j = c.require("matrices");
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::InvalidConfig, "'matrices' must be a nonempty list");
  std::vector<Matrix> ops;
  for (const auto& e : j) ops.push_back(parse_matrix(e));
  return MatrixTuple(std::move(ops), c.positive("commute_tolerance", 1e-12));
}

json ordering_json(const OrderingReport& r) {
  json eig = json::array();
  for (const auto& p : r.joint_eigenvalues) eig.push_back(to_json(p));
  return {{"chain_min_eigenvalues", r.chain_min_eigenvalues},
          {"chain_holds", r.chain_holds},
          {"spectrum_checkable", r.spectrum_checkable},
          {"joint_eigenvalues", eig},
          {"spectrum_in_triangle",
           r.spectrum_in_triangle ? json(*r.spectrum_in_triangle) : json("unverified hypothesis")}};
}

Outcome cmd_hereditary(const Context& c) {
  MatrixTuple t = matrix_tuple(c);
  PsdTolerance tol;
  tol.psd = c.positive("psd_tolerance", tol.psd);
  tol.isometry = c.positive("isometry_tolerance", tol.isometry);
  const bool lift = c.get_or<bool>("lift", false);
  if (lift) t = toral_lift(t);
  const DefectReport d = triangle_defect_classify(t, tol);
  Outcome o;
  o.report = {{"lifted", lift},
              {"classification", defect_class_name(d.kind)},
              {"defect_min_eigenvalue", d.min_eigenvalue},
              {"defect_norm", d.norm},
              {"defect", to_json(d.defect)},
              {"ordering", ordering_json(ordering_check(t, tol))}};
  // Cross-check the calculus against the recursion on the Hartogs tuple.
  const auto h = hereditary_eval(reciprocal_kernel_polynomial(make_pa(t.dim(), 0), MultiIndex(t.dim(), 1)), t);
  o.report["calculus_vs_recursion"] = (h.value - d.defect).cwiseAbs().maxCoeff();
  if (c.doc.contains("tuple") || c.doc.contains("pa")) {
    const PolyTuple p = c.tuple();
    const MultiIndex m = c.index_or("m", p.dim(), 1);
    const auto v = hereditary_eval(reciprocal_kernel_polynomial(p, m), t);
    const double e = min_eigenvalue(v.value);
    o.report["reciprocal_kernel"] = {{"min_eigenvalue", e}, {"asymmetry", v.asymmetry},
                                     {"norm", spectral_norm(v.value)}};
  }
  o.verdict_ok = d.kind != DefectClass::Neither;
  return o;
}

Outcome cmd_pick(const Context& c) {
  const auto nodes = c.points("nodes", 2);
  const json& jt = c.require("targets");
  if (!jt.is_array()) throw Error(ErrorKind::InvalidConfig, "'targets' must be a list");
  std::vector<std::complex<double>> targets;
  for (const auto& e : jt) targets.push_back(parse_complex(e));
  const PickReport r = pick_verify(nodes, targets, parse_matrix(c.require("a1")), parse_matrix(c.require("a2")));
  Outcome o;
  o.verdict_ok = r.valid;
  o.report = {{"valid", r.valid},
              {"residual", r.residual},
              {"min_eigenvalue_a1", r.min_eigenvalue_a1},
              {"min_eigenvalue_a2", r.min_eigenvalue_a2},
              {"hermitian_defect", r.hermitian_defect}};
  return o;
}

Outcome cmd_quadrature(const Context& c) {
  if (!c.doc.contains("beta") && !c.doc.contains("hardy") && !c.doc.contains("bergman")) {
    throw Error(ErrorKind::InvalidConfig, "quadrature needs 'beta', 'hardy' or 'bergman'");
  }
  Outcome o;
  const int nodes = c.nonnegative("nodes", 8);
  if (c.doc.contains("beta")) {
    const double tol = c.positive("beta_tolerance", 1e-6);
    json rows = json::array();
    for (const auto& e : c.doc.at("beta")) {
      const MultiIndex lk = parse_multi_index(e, "beta[]");
      if (lk.size() != 2) throw Error(ErrorKind::InvalidConfig, "beta entries are [l, k]");
      const auto q = beta_integral_check(lk[0], lk[1], nodes);
      o.verdict_ok = o.verdict_ok && q.error() <= tol;
      rows.push_back({{"l", lk[0]}, {"k", lk[1]}, {"numeric", q.numeric}, {"closed", q.closed}, {"error", q.error()}});
    }
    o.report["beta"] = rows;
  }
  if (c.doc.contains("hardy")) {
    const double tol = c.positive("hardy_tolerance", 1e-6);
    json rows = json::array();
    for (const auto& e : c.doc.at("hardy")) {
      const MultiIndex a = parse_multi_index(e.at("alpha"), "hardy[].alpha");
      const double v = hardy_norm_check(a.size(), a);
      o.verdict_ok = o.verdict_ok && std::abs(v - 1.0) <= tol;
      rows.push_back({{"alpha", to_json(a)}, {"norm_squared", v}, {"error", std::abs(v - 1.0)}});
    }
    o.report["hardy"] = rows;
  }
  if (c.doc.contains("bergman")) {
    const double tol = c.positive("bergman_tolerance", 1e-3);
    json rows = json::array();
    for (const auto& e : c.doc.at("bergman")) {
      const MultiIndex m = parse_multi_index(e.at("m"), "bergman[].m");
      const MultiIndex a = parse_multi_index(e.at("alpha"), "bergman[].alpha");
      if (a.size() != m.size()) throw Error(ErrorKind::InvalidConfig, "bergman m and alpha lengths differ");
      const double v = bergman_norm_check(m, a);
      o.verdict_ok = o.verdict_ok && std::abs(v - 1.0) <= tol;
      rows.push_back({{"m", to_json(m)}, {"alpha", to_json(a)}, {"norm_squared", v}, {"error", std::abs(v - 1.0)}});
    }
    o.report["bergman"] = rows;
  }
  o.report["verdict"] = o.verdict_ok ? "PASS" : "FAIL";
  return o;
}

using Handler = std::function<Outcome(const Context&)>;

const std::map<std::string, std::pair<Handler, bool>>& commands() {
  // name -> (handler, has a CSV form)
  static const std::map<std::string, std::pair<Handler, bool>> table{
      {"validate", {cmd_validate, false}},   {"coeffs", {cmd_coeffs, true}},
      {"domain", {cmd_domain, true}},        {"kernel", {cmd_kernel, true}},
      {"weights", {cmd_weights, true}},      {"probes", {cmd_probes, false}},
      {"dettrace", {cmd_dettrace, false}},   {"radius", {cmd_radius, false}},
      {"subnormality", {cmd_subnormality, false}}, {"hereditary", {cmd_hereditary, false}},
      {"pick-verify", {cmd_pick, false}},    {"quadrature", {cmd_quadrature, false}},
  };
  return table;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out) {
  RunConfig cfg = config;
  try {
    if (!cfg.doc.is_object()) throw Error(ErrorKind::InvalidConfig, "config must be a JSON object");
    if (cfg.command.empty()) {
      if (!cfg.doc.contains("command") || !cfg.doc.at("command").is_string()) {
        throw Error(ErrorKind::InvalidConfig, "no command given");
      }
      cfg.command = cfg.doc.at("command").get<std::string>();
    }
    const auto it = commands().find(cfg.command);
    if (it == commands().end()) throw Error(ErrorKind::UnknownCommand, "'" + cfg.command + "'");
    const auto& [handler, has_csv] = it->second;
    if (cfg.format == OutputFormat::Csv && !has_csv) {
      throw Error(ErrorKind::InvalidConfig, "command '" + cfg.command + "' has no CSV output");
    }
    const Outcome o = handler(Context{cfg, cfg.doc});
    if (cfg.format == OutputFormat::Csv) {
      out << o.csv;
    } else {
      json report = o.report;
      report["command"] = cfg.command;
      out << report.dump(2) << "\n";
    }
    return o.verdict_ok ? kExitOk : kExitVerdict;
  } catch (const Error& e) {
    out << json{{"error", std::string(error_kind_name(e.kind()))}, {"message", e.what()}}.dump(2) << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    out << json{{"error", "InvalidConfig"}, {"message", e.what()}}.dump(2) << "\n";
    return kExitInput;
  }
}

}  // namespace hartogs
