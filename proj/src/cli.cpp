#include "tilt/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tilt/criteria.hpp"
#include "tilt/search.hpp"

namespace tilt::cli {

namespace {

using nlohmann::json;

struct CliError {
  std::string code;
  std::string field;
  std::string message;
};

[[noreturn]] void fail(std::string code, std::string field, std::string message) {
  throw CliError{std::move(code), std::move(field), std::move(message)};
}

const std::set<std::string> kCommands = {"slope",      "charge",    "discriminant", "bmt",
                                         "line-bundle", "two-c",     "ideal-sheaf",  "p3-family",
                                         "search",      "wall"};

const std::set<std::string> kCommonKeys = {"D",      "alpha-sq", "beta",   "lattice",
                                           "format", "jobfile",  "workers"};

const std::map<std::string, std::set<std::string>> kCommandKeys = {
    {"slope", {"v"}},
    {"charge", {"v"}},
    {"discriminant", {"v"}},
    {"bmt", {"v", "form"}},
    {"line-bundle", {"k"}},
    {"two-c", {"v", "mu-max", "mu-max-sq"}},
    {"ideal-sheaf", {"d", "ch3-oc", "genus", "hypersurface"}},
    {"p3-family", {"n", "m"}},
    {"search", {"v", "rank-bound", "ch2-bound", "prune"}},
    {"wall", {"v", "w", "beta-range", "count"}},
};

const char kUsage[] =
    "usage: tiltstab <command> [--key value ...] [--jobfile FILE]\n"
    "\n"
    "commands:\n"
    "  slope         mu and nu_hat of a Chern vector        --v \"a,b,c,d\"\n"
    "  charge        central charge and phase-1 indicator   --v\n"
    "  discriminant  Delta, delta_bar and positivity        --v\n"
    "  bmt           ch3-bound inequality check             --v [--form strong|weak]\n"
    "  line-bundle   thresholds for O(kH)[1], k < 0         --k\n"
    "  two-c         stability criteria at w^2 tch1 = 2c    --v [--mu-max-sq r]\n"
    "  ideal-sheaf   report for L^2 (x) I_C                 --d [--ch3-oc r | --genus g --hypersurface]\n"
    "  p3-family     tilt-unstable rank-3 family on P^3     --n --m\n"
    "  search        numerical destabilizer candidates      --v --rank-bound --ch2-bound\n"
    "  wall          pseudo-wall equation and samples       --v --w [--beta-range \"lo,hi\" --count N]\n"
    "\n"
    "common flags: --D r  --alpha-sq r  --beta r  --lattice \"q0,q1,q2,q3\"\n"
    "              --format json|csv|text  --workers N  --jobfile FILE\n"
    "\n"
    "All numeric inputs are exact rationals \"p/q\" or integers; float\n"
    "literals are rejected. A jobfile holds flat `key = value` lines (same\n"
    "keys as the flags, plus `command = ...`); flags override the jobfile.\n";

// ---- key/value plumbing ----------------------------------------------------

using KvMap = std::map<std::string, std::string>;

KvMap load_jobfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("invalid_argument", "jobfile", "cannot open jobfile: " + path);
  KvMap kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail("invalid_argument", "jobfile",
           path + ":" + std::to_string(lineno) + ": expected `key = value`");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      fail("invalid_argument", "jobfile",
           path + ":" + std::to_string(lineno) + ": empty key");
    kv[key] = value;
  }
  return kv;
}

std::string strip(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

struct Inputs {
  std::string command;
  KvMap values;  // jobfile values overridden by flags

  bool has(const std::string& key) const { return values.count(key) != 0; }

  const std::string& raw(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) fail("invalid_argument", key, "missing required field: " + key);
    return it->second;
  }

  Rational rat(const std::string& key) const {
    auto r = try_parse_rational(strip(raw(key)));
    if (!r)
      fail("invalid_argument", key,
           key + ": expected exact rational \"p/q\" or integer, got \"" + raw(key) + "\"");
    return *r;
  }

  Rational rat_or(const std::string& key, const Rational& fallback) const {
    return has(key) ? rat(key) : fallback;
  }

  std::int64_t integer(const std::string& key) const {
    const Rational r = rat(key);
    if (!is_integer(r)) fail("invalid_argument", key, key + ": expected an integer");
    return static_cast<std::int64_t>(numerator(r));
  }

  bool flag(const std::string& key) const {
    if (!has(key)) return false;
    const std::string& s = values.at(key);
    if (s.empty() || s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    fail("invalid_argument", key, key + ": expected true/false");
  }

  std::vector<Rational> rat_list(const std::string& key, std::size_t n) const {
    std::vector<Rational> out;
    std::stringstream ss(raw(key));
    std::string part;
    while (std::getline(ss, part, ',')) {
      auto r = try_parse_rational(strip(part));
      if (!r)
        fail("invalid_argument", key, key + ": component \"" + part + "\" is not an exact rational");
      out.push_back(*r);
    }
    if (out.size() != n)
      fail("invalid_argument", key,
           key + ": expected " + std::to_string(n) + " comma-separated components");
    return out;
  }

  ChernVector chern(const std::string& key) const {
    auto c = rat_list(key, 4);
    return {c[0], c[1], c[2], c[3]};
  }

  PolarizedGeometry geometry() const {
    std::array<std::int64_t, 4> denoms = {1, 1, 2, 6};
    if (has("lattice")) {
      auto q = rat_list("lattice", 4);
      for (int i = 0; i < 4; ++i) {
        if (!is_integer(q[i]) || q[i] < 1)
          fail("invalid_argument", "lattice", "lattice: denominators must be integers >= 1");
        denoms[i] = static_cast<std::int64_t>(numerator(q[i]));
      }
    }
    const Rational D = rat_or("D", 1);
    if (D <= 0) fail("invalid_argument", "D", "D: must be > 0");
    return PolarizedGeometry(D, denoms);
  }

  TiltParameter parameter() const {
    const Rational a = rat_or("alpha-sq", 1);
    if (a <= 0) fail("invalid_argument", "alpha-sq", "alpha-sq: must be > 0");
    return TiltParameter(a, rat_or("beta", 0));
  }

  int workers() const {
    std::int64_t w = 1;
    if (has("workers")) {
      w = integer("workers");
    } else if (const char* env = std::getenv("TILTSTAB_WORKERS")) {
      auto r = try_parse_rational(env);
      if (r && is_integer(*r)) w = static_cast<std::int64_t>(numerator(*r));
    }
    if (w < 1) fail("invalid_argument", "workers", "workers: must be >= 1");
    return static_cast<int>(w);
  }
};

// ---- serialization ---------------------------------------------------------

json rat_json(const Rational& r) { return rat_str(r); }

json chern_json(const ChernVector& v) {
  return json::array({rat_str(v.v0), rat_str(v.v1), rat_str(v.v2), rat_str(v.v3)});
}

json common_inputs(const PolarizedGeometry& geom, const TiltParameter& p) {
  json j;
  j["D"] = rat_json(geom.degree_D);
  j["alpha_sq"] = rat_json(p.alpha_sq);
  j["beta"] = rat_json(p.beta);
  j["lattice"] = json::array({geom.lattice_denoms[0], geom.lattice_denoms[1],
                              geom.lattice_denoms[2], geom.lattice_denoms[3]});
  return j;
}

struct Report {
  std::string command;
  json inputs;
  json results;
  std::vector<std::string> assumptions;
  std::vector<std::string> warnings;
  // optional tabular view for csv output: header + rows
  std::string csv_header;
  std::vector<std::string> csv_rows;

  json envelope() const {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["assumptions"] = assumptions;
    j["warnings"] = warnings;
    return j;
  }
};

void write_text(const json& j, std::ostream& out, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [k, val] : j.items()) write_text(val, out, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& val : j) write_text(val, out, prefix + "[" + std::to_string(i++) + "]");
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

int emit(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << r.envelope().dump(2) << "\n";
    return 0;
  }
  if (format == "csv") {
    if (r.csv_header.empty())
      fail("invalid_argument", "format",
           "csv output is defined for tabular commands only (p3-family, search, wall)");
    out << r.csv_header << "\n";
    for (const auto& row : r.csv_rows) out << row << "\n";
    return 0;
  }
  if (format == "text") {
    out << "command: " << r.command << "\n";
    write_text(r.results, out, "");
    for (const auto& a : r.assumptions) out << "assumes: " << a << "\n";
    for (const auto& w : r.warnings) out << "warning: " << w << "\n";
    return 0;
  }
  fail("invalid_argument", "format", "format: expected json, csv or text");
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// ---- command handlers ------------------------------------------------------

Report cmd_slope(const Inputs& in) {
  const auto geom = in.geometry();
  const auto p = in.parameter();
  const ChernVector v = in.chern("v");
  Report r;
  r.command = "slope";
  r.inputs = common_inputs(geom, p);
  r.inputs["v"] = chern_json(v);
  r.results["mu"] = slope_mu(v, p, geom).str();
  r.results["nu_hat"] = slope_nu_hat(v, p, geom).str();
  r.assumptions = {"Picard rank 1 reduced model: ch_i(E) = v_i H^i, D = H^3",
                   "nu_hat = alpha * nu (order-isomorphic rationalization)"};
  return r;
}

Report cmd_charge(const Inputs& in) {
  const auto geom = in.geometry();
  const auto p = in.parameter();
  const ChernVector v = in.chern("v");
  const CentralChargeValue z = central_charge(v, p, geom);
  Report r;
  r.command = "charge";
  r.inputs = common_inputs(geom, p);
  r.inputs["v"] = chern_json(v);
  r.results["re"] = rat_json(z.re);
  r.results["im_coef"] = rat_json(z.im_coef);
  r.results["phase_one"] = phase_one_indicator(v, p, geom);
  r.assumptions = {"Im Z = alpha * im_coef with alpha = sqrt(alpha_sq) > 0",
                   "phase 1 means Z on the negative real axis; classes with Im Z < 0 "
                   "are outside the heart and report false"};
  return r;
}

Report cmd_discriminant(const Inputs& in) {
  const auto geom = in.geometry();
  const auto p = in.parameter();
  const ChernVector v = in.chern("v");
  const Rational delta = discriminant_delta(v, p, geom);
  const Rational delta_bar = discriminant_delta_bar(v, p, geom);
  const PositivityResult pos = positivity_check(v, p, geom);
  Report r;
  r.command = "discriminant";
  r.inputs = common_inputs(geom, p);
  r.inputs["v"] = chern_json(v);
  r.results["delta"] = rat_json(delta);
  r.results["delta_bar"] = rat_json(delta_bar);
  r.results["delta_bar_nonneg"] = pos.delta_bar_ok;
  r.results["positivity_value"] = rat_json(pos.value);
  r.assumptions = {"delta is the alpha-free coefficient of omega*Delta",
                   "delta_bar is beta-independent in the rank-1 model",
                   "positivity_value = delta_bar / alpha^4"};
  if (!pos.delta_bar_ok)
    r.warnings.push_back(
        "delta_bar < 0: no nu-semistable object has this character (positivity criterion)");
  return r;
}

Report cmd_bmt(const Inputs& in) {
  const auto geom = in.geometry();
  const auto p = in.parameter();
  const ChernVector v = in.chern("v");
  const std::string form_name = in.has("form") ? in.raw("form") : "strong";
  BmtForm form;
  if (form_name == "strong")
    form = BmtForm::strong;
  else if (form_name == "weak")
    form = BmtForm::weak;
  else
    fail("invalid_argument", "form", "form: expected strong or weak");
  const BmtResult res = bmt_check(v, p, geom, form);
  Report r;
  r.command = "bmt";
  r.inputs = common_inputs(geom, p);
  r.inputs["v"] = chern_json(v);
  r.inputs["form"] = form_name;
  r.results["form"] = form_name;
  r.results["satisfied"] = res.satisfied;
  r.results["margin"] = rat_json(res.margin);
  // the nu = 0 half of the criterion's hypothesis is numerically checkable;
  // tilt-stability itself is not
  if (!v.is_zero()) r.results["nu_hat_at_parameter"] = slope_nu_hat(v, p, geom).str();
  r.assumptions = {"checked numerically: the inequality itself, and nu_hat at this parameter "
                   "(reported); assumed, not checked: tilt-stability of the class"};
  return r;
}

Report cmd_line_bundle(const Inputs& in) {
  const auto geom = in.geometry();
  const auto p = in.parameter();
  const Rational k = in.rat("k");
  const LineBundleThresholds t = line_bundle_thresholds(k, p, geom);
  Report r;
  r.command = "line-bundle";
  r.inputs = common_inputs(geom, p);
  r.inputs["k"] = rat_json(k);
  r.results["m_sq_nu_zero"] = rat_json(t.m_sq_nu_zero);
  r.results["m_sq_stability"] = rat_json(t.m_sq_stability);
  r.results["m_sq_weak_conj"] = rat_json(t.m_sq_weak_conj);
  r.results["stable_at_nu_zero"] = t.stable_at_nu_zero();
  r.assumptions = {"line-bundle-threshold criterion: B = 0 and k < 0",
                   "thresholds are values of m^2 with omega replaced by m*omega"};
  return r;
}

Report cmd_two_c(const Inputs& in) {
  const auto geom = in.geometry();
  const auto p = in.parameter();
  const ChernVector v = in.chern("v");
  TwoCResult res{};
  std::string mu_source;
  if (in.has("mu-max-sq")) {
    res = two_c_stability_check(v, p, geom, in.rat("mu-max-sq"));
    mu_source = "mu_max^2 supplied by caller";
  } else if (in.has("mu-max")) {
    const Rational mu = in.rat("mu-max");
    res = two_c_stability_check(v, p, geom, mu * mu);
    mu_source = "mu_max supplied by caller";
  } else {
    res = two_c_stability_check(v, p, geom);
    mu_source = "rank-1 input: mu_max = mu(v) derived automatically";
  }
  Report r;
  r.command = "two-c";
  r.inputs = common_inputs(geom, p);
  r.inputs["v"] = chern_json(v);
  r.results["criterion1"] = res.criterion1;
  r.results["criterion2"] = res.criterion2;
  r.results["preconditions_ok"] = res.preconditions_ok;
  r.results["c"] = rat_json(compute_c(p, geom));
  r.assumptions = {"two-c stability criteria: verdicts are sufficient conditions only",
                   mu_source,
                   "criterion2 uses the Pic = Z.H reduction (t1 = 1/q for classes with "
                   "w^2 tch1 = c)"};
  if (!res.preconditions_ok)
    r.warnings.push_back("preconditions failed (need rank >= 1, nu_hat = 0, w^2 tch1 = 2c); "
                         "criterion verdicts are not applicable");
  return r;
}

Report cmd_ideal_sheaf(const Inputs& in) {
  const auto geom = in.geometry();
  const bool hyp = in.flag("hypersurface");
  CurveData curve;
  curve.degree_d = in.rat("d");
  if (in.has("genus")) {
    const std::int64_t g = in.integer("genus");
    if (g < 0) fail("invalid_argument", "genus", "genus: must be >= 0");
    curve.genus = g;
  }
  if (in.has("ch3-oc")) {
    curve.ch3_OC = in.rat("ch3-oc");
  } else if (curve.genus && hyp) {
    curve.ch3_OC = genus_to_ch3(curve.degree_d, geom.degree_D, *curve.genus);
  } else {
    fail("invalid_argument", "ch3-oc",
         "ch3-oc: required unless both --genus and --hypersurface are given");
  }
  const IdealTwistReport rep = ideal_sheaf_twist_report(curve, geom, hyp);
  Report r;
  r.command = "ideal-sheaf";
  r.inputs["D"] = rat_json(geom.degree_D);
  r.inputs["d"] = rat_json(curve.degree_d);
  r.inputs["ch3_oc"] = rat_json(curve.ch3_OC);
  r.inputs["hypersurface"] = hyp;
  if (curve.genus) r.inputs["genus"] = *curve.genus;
  r.results["m_sq"] = rat_json(rep.m_sq);
  r.results["nu_zero_feasible"] = rep.nu_zero_feasible;
  r.results["stable"] = rep.stable_flag;
  r.results["stability"] = rep.stable_flag ? "stable" : "unknown";
  if (rep.bmt_flag) r.results["bmt_flag"] = *rep.bmt_flag;
  if (rep.genus_bound) r.results["genus_bound"] = rat_json(*rep.genus_bound);
  if (rep.castelnuovo_bound) r.results["castelnuovo_bound"] = rat_json(*rep.castelnuovo_bound);
  r.results["castelnuovo_applicable"] = rep.castelnuovo_applicable;
  r.assumptions = {"ideal-sheaf-twist criterion for E = L^2 (x) I_C at B = 0",
                   "Pic(X) = Z.H with L = O(H)",
                   "stability verdict is the sufficient condition d < 3D/2; beyond it the "
                   "status is unknown, not refuted"};
  if (hyp) r.assumptions.push_back("X is a degree-D hypersurface in P^4");
  return r;
}

Report cmd_p3_family(const Inputs& in) {
  const std::int64_t n = in.integer("n");
  const std::int64_t m = in.integer("m");
  const FamilyReport rep = p3_family_report(n, m);
  Report r;
  r.command = "p3-family";
  r.inputs["n"] = n;
  r.inputs["m"] = m;
  r.results["n"] = n;
  r.results["m"] = m;
  r.results["c2"] = rep.c2;
  r.results["count"] = rep.members.size();
  r.results["displayed_bound"] = rat_json(rep.displayed_bound);
  r.results["derived_bound"] = rat_json(rep.derived_bound);
  r.results["displayed_member_c3"] = rep.displayed_member_c3;
  r.results["bound_discrepancy"] = rep.bound_discrepancy;
  json members = json::array();
  r.csv_header = "n,m,c2,c3,ch0,ch1,ch2,ch3,nu_zero,bmt_violated";
  for (const auto& mem : rep.members) {
    json jm;
    jm["c3"] = mem.c3;
    jm["ch"] = chern_json(mem.chern_F);
    jm["nu_zero"] = mem.nu_zero_verified;
    jm["bmt_violated"] = mem.bmt_violated;
    members.push_back(jm);
    std::ostringstream row;
    row << mem.n << "," << mem.m << "," << mem.c2 << "," << mem.c3 << ","
        << rat_str(mem.chern_F.v0) << "," << rat_str(mem.chern_F.v1) << ","
        << rat_str(mem.chern_F.v2) << "," << rat_str(mem.chern_F.v3) << ","
        << bool_str(mem.nu_zero_verified) << "," << bool_str(mem.bmt_violated);
    r.csv_rows.push_back(row.str());
  }
  r.results["members"] = members;
  r.assumptions = {"X = P^3: D = 1, beta = 0, alpha^2 = m^2",
                   "members are tilt-unstable: the strong ch3 bound is a proven necessary "
                   "condition for tilt-stable nu = 0 objects on P^3",
                   "rank-3 feasibility box membership is checked numerically; existence of "
                   "the reflexive sheaves is cited, not re-proven"};
  if (rep.bound_discrepancy)
    r.warnings.push_back(
        "closed-form c3 bounds disagree with direct evaluation (sign of the 2nm^2/3 term); "
        "direct inequality evaluation is authoritative");
  return r;
}

Report cmd_search(const Inputs& in) {
  const auto geom = in.geometry();
  const auto p = in.parameter();
  const ChernVector v = in.chern("v");
  SearchBounds bounds{in.integer("rank-bound"), in.rat("ch2-bound")};
  SearchOptions opts;
  opts.use_slope_bound_pruning = in.flag("prune");
  opts.workers = in.workers();
  const auto cands = destabilizer_search(v, p, geom, bounds, opts);
  Report r;
  r.command = "search";
  r.inputs = common_inputs(geom, p);
  r.inputs["v"] = chern_json(v);
  r.inputs["rank_bound"] = bounds.rank_bound;
  r.inputs["ch2_bound"] = rat_json(bounds.ch2_bound);
  r.results["count"] = cands.size();
  json list = json::array();
  r.csv_header =
      "w0,w1,w2,nu_hat,strict,infinite_slope,quotient_infinite,sub_delta_bar,quotient_delta_bar";
  for (const auto& c : cands) {
    json jc;
    jc["w"] = chern_json(c.w);
    jc["nu_hat"] = c.nu_hat_w.str();
    jc["strict"] = c.strict;
    jc["infinite_slope"] = c.infinite_slope;
    jc["quotient_infinite"] = c.quotient_infinite;
    jc["sub_delta_bar"] = rat_json(c.sub_delta_bar);
    jc["quotient_delta_bar"] = rat_json(c.quotient_delta_bar);
    list.push_back(jc);
    std::ostringstream row;
    row << rat_str(c.w.v0) << "," << rat_str(c.w.v1) << "," << rat_str(c.w.v2) << ","
        << c.nu_hat_w.str() << "," << bool_str(c.strict) << "," << bool_str(c.infinite_slope)
        << "," << bool_str(c.quotient_infinite) << "," << rat_str(c.sub_delta_bar) << ","
        << rat_str(c.quotient_delta_bar);
    r.csv_rows.push_back(row.str());
  }
  r.results["candidates"] = list;
  r.assumptions = {"candidates are numerical necessary conditions; existence of actual "
                   "destabilizing subobjects is not claimed",
                   "heart membership is enforced only via 0 <= t1(w) <= t1(v)"};
  return r;
}

Report cmd_wall(const Inputs& in) {
  const auto geom = in.geometry();
  const ChernVector v = in.chern("v");
  const ChernVector w = in.chern("w");
  const WallEquation eq = wall_equation(v, w);
  Report r;
  r.command = "wall";
  r.inputs["D"] = rat_json(geom.degree_D);
  r.inputs["v"] = chern_json(v);
  r.inputs["w"] = chern_json(w);
  json poly;
  poly["A"] = rat_json(eq.a1);
  poly["beta2"] = rat_json(eq.b2);
  poly["beta"] = rat_json(eq.b1);
  poly["const"] = rat_json(eq.b0);
  r.results["polynomial"] = poly;
  r.csv_header = "beta,alpha_sq";
  json samples = json::array();
  if (in.has("beta-range")) {
    const auto range = in.rat_list("beta-range", 2);
    std::int64_t count = in.has("count") ? in.integer("count") : 9;
    for (const auto& s : wall_sample(eq, range[0], range[1], count)) {
      json js;
      js["beta"] = rat_json(s.beta);
      js["alpha_sq"] = rat_json(s.alpha_sq);
      samples.push_back(js);
      r.csv_rows.push_back(rat_str(s.beta) + "," + rat_str(s.alpha_sq));
    }
    r.inputs["beta_range"] = json::array({rat_json(range[0]), rat_json(range[1])});
    r.inputs["count"] = count;
  }
  r.results["samples"] = samples;
  r.assumptions = {"pseudo-wall: equal nu_hat locus in (beta, alpha^2); actual walls of "
                   "any moduli are a subset"};
  return r;
}

// ---- driver ----------------------------------------------------------------

Report dispatch(const Inputs& in) {
  if (in.command == "slope") return cmd_slope(in);
  if (in.command == "charge") return cmd_charge(in);
  if (in.command == "discriminant") return cmd_discriminant(in);
  if (in.command == "bmt") return cmd_bmt(in);
  if (in.command == "line-bundle") return cmd_line_bundle(in);
  if (in.command == "two-c") return cmd_two_c(in);
  if (in.command == "ideal-sheaf") return cmd_ideal_sheaf(in);
  if (in.command == "p3-family") return cmd_p3_family(in);
  if (in.command == "search") return cmd_search(in);
  if (in.command == "wall") return cmd_wall(in);
  fail("usage", "command", "unknown command: " + in.command);
}

Inputs parse_invocation(const std::vector<std::string>& args) {
  Inputs in;
  KvMap flags;
  std::string command_from_argv;
  std::size_t i = 0;
  if (!args.empty() && !args[0].starts_with("-")) {
    command_from_argv = args[0];
    i = 1;
  }
  for (; i < args.size(); ++i) {
    std::string key = args[i];
    if (!key.starts_with("--"))
      fail("usage", key, "expected --key [value], got \"" + key + "\"");
    key = key.substr(2);
    std::string value;
    if (const auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else if (i + 1 < args.size() && (!args[i + 1].starts_with("--") ||
                                       try_parse_rational(args[i + 1]).has_value())) {
      value = args[++i];
    }  // bare --key acts as a boolean flag
    flags[key] = value;
  }

  KvMap merged;
  if (flags.count("jobfile")) merged = load_jobfile(flags.at("jobfile"));
  std::string command = command_from_argv;
  if (command.empty()) {
    auto it = merged.find("command");
    if (it != merged.end()) command = it->second;
  }
  merged.erase("command");
  for (const auto& [k, val] : flags) merged[k] = val;  // flags override the jobfile

  if (command.empty()) fail("usage", "command", "no command given (argv or jobfile `command`)");
  if (!kCommands.count(command)) fail("usage", "command", "unknown command: " + command);

  const auto& specific = kCommandKeys.at(command);
  for (const auto& [k, val] : merged)
    if (!kCommonKeys.count(k) && !specific.count(k))
      fail("invalid_argument", k, "unknown field for command `" + command + "`: " + k);

  in.command = command;
  in.values = std::move(merged);
  return in;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  (void)err;
  if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
    out << kUsage;
    return 0;
  }
  try {
    const Inputs in = parse_invocation(args);
    const std::string format = in.has("format") ? in.raw("format") : "json";
    const Report report = dispatch(in);
    return emit(report, format, out);
  } catch (const CliError& e) {
    json j;
    j["error"] = {{"code", e.code}, {"field", e.field}, {"message", e.message}};
    out << j.dump(2) << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    json j;
    j["error"] = {{"code", "domain_error"}, {"message", e.what()}};
    out << j.dump(2) << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    json j;
    j["error"] = {{"code", "invalid_argument"}, {"message", e.what()}};
    out << j.dump(2) << "\n";
    return 2;
  }
}

}  // namespace tilt::cli
