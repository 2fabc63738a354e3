#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_io.hpp"
#include "snail/verify.hpp"

namespace snail::cli {

enum Exit { kOk = 0, kInvalid = 2, kVerifyFailed = 3, kIoError = 4 };

struct Options {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  std::string format = "json";
  std::string out;
  int samples = 0;
  std::uint64_t seed = 0x5A11;
  double snap_eps = 0.0;
  // bounds
  double radius = 0.5;
  // member
  std::string cls = "st";
  std::string family = "monomial";
  int n = 2;
  double a_re = 0.0;
  double a_im = 0.0;
  bool oracle = true;
  // extremal
  std::string ext_family = "psi";
  std::string k_form = "structural";
  double z_re = 0.5;
  double z_im = 0.0;
  // verify
  std::string grid = "standard";
};

// move each parameter onto the nearest special configuration within eps
inline void snap(double& a, double& b, double eps) {
  if (!(eps > 0.0)) return;
  auto near = [eps](double x, double y) { return std::abs(x - y) <= eps; };
  for (double t : {-1.0, 0.0, 1.0}) {
    if (near(a, t)) a = t;
    if (near(b, t)) b = t;
  }
  if (near(a, b)) b = a;
  else if (near(a, -b)) b = -a;
}

struct Output {
  json doc;
  std::string text;
  bool is_text = false;
  int code = kOk;
};

inline json flags_json(const RegionFlags& f) {
  return {{"in_B1", f.in_B1},
          {"in_B2", f.in_B2},
          {"beta1_of_alpha", opt_num(f.beta1_of_alpha)},
          {"beta2_of_alpha", opt_num(f.beta2_of_alpha)}};
}

inline Output cmd_classify(const SnailParams& p) {
  const DomainClass dc = classify_domain(p);
  json payload = {{"kind", std::string(to_string(dc.kind))},
                  {"shape", std::string(to_string(dc.shape))},
                  {"witness", opt_num(dc.witness)},
                  {"bounded", p.bounded()}};
  return {envelope("classify", params_json(p), std::move(payload), {})};
}

inline Output cmd_curve(const SnailParams& p, const Options& o) {
  const int n = o.samples > 0 ? o.samples : 512;
  const Polyline pl = boundary_polyline(p, n);
  Output out;
  if (o.format == "csv") {
    out.is_text = true;
    out.text = curve_csv(pl);
  } else if (o.format == "svg") {
    out.is_text = true;
    out.text = render_curve_svg(pl);
  } else {
    std::vector<std::string> warnings;
    if (pl.open) warnings.push_back("open curve: the image domain is unbounded");
    out.doc = envelope("curve", params_json(p), curve_json(pl), warnings);
  }
  return out;
}

inline Output cmd_bounds(const SnailParams& p, const Options& o) {
  const int n = o.samples > 0 ? o.samples : 20000;
  const ReExtrema re = re_extrema(p);
  const FunctionHandle f = FunctionHandle::map_L(p);
  const CircleExtremum ex = oracle_extremum_on_circle(f, Functional::RealPart, 1.0, n);
  double gap = 0.0;
  if (re.L0) gap = std::max(gap, std::abs(*re.L0 - ex.min));
  if (re.M0) gap = std::max(gap, std::abs(*re.M0 - ex.max));
  json payload;
  payload["min_re"] = num(re.min_re);
  payload["max_re"] = num(re.max_re);
  payload["L0"] = opt_num(re.L0);
  payload["M0"] = opt_num(re.M0);
  payload["re_branch"] = re.branch;
  payload["re_oracle_gap"] = num(gap);
  if (!(o.radius > 0.0 && o.radius < 1.0)) {
    throw Error(ErrorCode::OutOfRange, "--radius must lie in (0, 1)");
  }
  const ModulusExtrema m = modulus_extrema(p, o.radius);
  const CircleExtremum mx = oracle_extremum_on_circle(f, Functional::Modulus, o.radius, n);
  payload["radius"] = num(o.radius);
  payload["min_mod"] = num(m.min_mod);
  payload["max_mod"] = num(m.max_mod);
  payload["mod_branch"] = m.branch;
  payload["mod_oracle_gap"] =
      num(std::max(std::abs(m.min_mod - mx.min), std::abs(m.max_mod - mx.max)));
  payload["region"] = flags_json(region_flags(p.alpha, p.beta));
  if (p.bounded()) {
    const DiskRadii d = disk_radii(p);
    payload["disk"] = {{"inscribed", num(d.inscribed)},
                       {"circumscribed", num(d.circumscribed)},
                       {"membership_L", num(d.membership_L)}};
  } else {
    payload["disk"] = nullptr;
  }
  const CurveConstants cc = curve_constants(p);
  payload["constants"] = {{"a", opt_num(cc.a)}, {"c", opt_num(cc.c)},
                          {"d", opt_num(cc.d)}, {"e", opt_num(cc.e)},
                          {"snail_a", opt_num(cc.snail_a)}, {"q", opt_num(cc.q)}};
  return {envelope("bounds", params_json(p), std::move(payload), {})};
}

inline Output cmd_orders(const SnailParams& p) {
  const Orders ord = starlike_convex_orders(p);
  json payload = {{"star_order", num(ord.star_order)}, {"convex_order", num(ord.convex_order)}};
  if (p.interior()) {
    const Thresholds t = thresholds(p.alpha, p.beta);
    payload["T0"] = num(t.T0);
    payload["gamma0"] = num(t.gamma0);
    payload["in_B1"] = t.in_B1;
  } else {
    payload["T0"] = nullptr;
    payload["gamma0"] = nullptr;
    payload["in_B1"] = false;
  }
  return {envelope("orders", params_json(p), std::move(payload), {})};
}

inline FunctionHandle member_function(const Options& o) {
  const cplx a(o.a_re, o.a_im);
  if (o.family == "monomial") return FunctionHandle::monomial(o.n, a);
  if (o.family == "koebe") return FunctionHandle::koebe_like(a);
  if (o.family == "inverse-linear") return FunctionHandle::inverse_linear(a);
  if (o.family == "exp-linear") return FunctionHandle::exp_linear(a);
  return FunctionHandle::exp_minus_one(a);
}

inline Output cmd_member(const SnailParams& p, const Options& o) {
  const ClassSpec spec{p, o.cls == "st" ? ClassKind::Starlike : ClassKind::Convex};
  const Admissibility adm = class_admissible(spec);
  json payload;
  payload["class"] = o.cls;
  payload["admissible"] = adm.admissible;
  payload["T0"] = opt_num(adm.T0);
  payload["diagnostic"] = adm.diagnostic;
  std::vector<std::string> warnings;
  if (!adm.admissible) {
    Output out{envelope("member", params_json(p), std::move(payload), warnings)};
    out.code = kInvalid;
    return out;
  }
  const FunctionHandle f = member_function(o);
  const MembershipVerdict v = membership(spec, f);
  payload["family"] = std::string(to_string(f.family()));
  payload["item"] = v.item;
  payload["member"] = v.member;
  payload["value"] = num(v.value);
  payload["bound"] = num(v.bound);
  payload["L"] = num(v.L);
  if (p.bounded() && (p.alpha == 0.0) != (p.beta == 0.0)) {
    warnings.push_back("off-centre disc: L is the circumscribed radius, so the bound overshoots the domain");
  }
  if (v.item == 3 || v.item == 4) {
    warnings.push_back("closed-form bound 2/(2+L) exceeds the subordination threshold L/(2+L)");
  }
  if (o.oracle) {
    SubordinationOptions so;
    if (o.samples > 0) so.theta_samples = o.samples;
    const SubordinationVerdict sv = subordination_check(spec, f, so);
    payload["subordination"] = {{"accepted", sv.accepted},
                                {"worst_margin", num(sv.worst_margin)},
                                {"samples", sv.samples_used},
                                {"analytic_fallback", sv.analytic_fallback}};
  }
  return {envelope("member", params_json(p), std::move(payload), warnings)};
}

inline Output cmd_extremal(const SnailParams& p, const Options& o) {
  ExtremalSpec spec{p, o.n,
                    o.ext_family == "psi" ? ExtremalFamily::Psi : ExtremalFamily::K,
                    o.k_form == "printed" ? KForm::AsPrinted : KForm::Structural};
  const cplx z(o.z_re, o.z_im);
  std::vector<std::string> warnings;
  json payload;
  payload["family"] = o.ext_family;
  payload["n"] = o.n;
  if (spec.family == ExtremalFamily::K) payload["k_form"] = o.k_form;
  const cplx val = extremal_eval(spec, z);
  const cplx d1 = spec.family == ExtremalFamily::Psi ? psi_derivative(spec, z) : k_derivative(spec, z);
  payload["z"] = {num(z.real()), num(z.imag())};
  payload["value"] = {num(val.real()), num(val.imag())};
  payload["derivative"] = {num(d1.real()), num(d1.imag())};
  if (spec.family == ExtremalFamily::Psi) {
    const TaylorHead th = taylor_head(spec);
    payload["taylor_head"] = {{"c_n+1", num(th.c_n1)}, {"c_2n+1", num(th.c_2n1)}};
  }
  if (p.bounded()) {
    const CoveredRadius cr = covered_radius(spec, o.samples);
    payload["covered_radius"] = {{"minus_f_minus_one", num(cr.minus_f_minus_one)},
                                 {"limit_value", num(cr.limit_value)},
                                 {"boundary_min", num(cr.boundary_min)},
                                 {"boundary_argmin", num(cr.boundary_argmin)},
                                 {"discrepancy", cr.discrepancy}};
    if (cr.discrepancy) {
      warnings.push_back("-f(-1) exceeds the minimum modulus on the unit circle");
    }
    if (spec.family == ExtremalFamily::Psi) {
      const BoundaryProfile prof = boundary_modulus_profile(spec);
      json crit = json::array();
      for (std::size_t i = 0; i < prof.critical_angles.size(); ++i) {
        crit.push_back({{"theta", num(prof.critical_angles[i])},
                        {"modulus", num(prof.critical_values[i])},
                        {"label", prof.labels[i]}});
      }
      payload["boundary_profile"] = std::move(crit);
    }
  } else {
    payload["covered_radius"] = nullptr;
  }
  if (spec.family == ExtremalFamily::K && spec.k_form == KForm::AsPrinted && p.alpha != p.beta) {
    warnings.push_back("printed K' form is the reciprocal of the structural one");
  }
  return {envelope("extremal", params_json(p), std::move(payload), warnings)};
}

inline json report_json(const VerificationReport& rep) {
  json records = json::array();
  for (const CheckRecord& r : rep.records) {
    records.push_back({{"check_id", r.check_id},
                       {"criterion", r.criterion},
                       {"params", {num(r.params[0]), num(r.params[1]), num(r.params[2])}},
                       {"formula_value", num(r.formula_value)},
                       {"oracle_value", num(r.oracle_value)},
                       {"abs_gap", num(r.abs_gap)},
                       {"tolerance", num(r.tolerance)},
                       {"pass", r.pass},
                       {"note", r.note}});
  }
  return {{"passed", rep.passed},
          {"failed", rep.failed},
          {"flagged_discrepancies", rep.flagged_discrepancies},
          {"records", std::move(records)}};
}

inline Output cmd_verify(const Options& o) {
  const VerifyGrid g = o.grid == "quick"   ? VerifyGrid::quick()
                       : o.grid == "empty" ? VerifyGrid::empty()
                                           : VerifyGrid::standard();
  const VerificationReport rep = verify_suite(g, o.seed);
  json params = {{"grid", o.grid}, {"seed", o.seed}};
  Output out{envelope("verify", std::move(params), report_json(rep), rep.flagged_discrepancies)};
  out.code = rep.failed > 0 ? kVerifyFailed : kOk;
  return out;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Pascal snail domains: classification, bounds and verification", "snail_cli"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* c, bool params) {
    if (params) {
      c->add_option("--alpha", o.alpha, "alpha in [-1, 1]")->required();
      c->add_option("--beta", o.beta, "beta in [-1, 1]")->required();
      c->add_option("--gamma", o.gamma, "gamma in [0, 1)")->required();
      c->add_option("--snap-eps", o.snap_eps, "snap inputs to special configurations")
          ->check(CLI::NonNegativeNumber);
    }
    c->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "svg"}));
    c->add_option("--out", o.out, "write output to a file");
    c->add_option("--samples", o.samples)->check(CLI::NonNegativeNumber);
    c->add_option("--seed", o.seed);
  };
  auto* classify = app.add_subcommand("classify", "domain kind and shape");
  common(classify, true);
  auto* curve = app.add_subcommand("curve", "boundary curve samples");
  common(curve, true);
  auto* bounds = app.add_subcommand("bounds", "real-part and modulus extrema");
  common(bounds, true);
  bounds->add_option("--radius", o.radius, "radius for the modulus extrema");
  auto* orders = app.add_subcommand("orders", "starlikeness and convexity orders");
  common(orders, true);
  auto* member = app.add_subcommand("member", "closed-form membership and subordination");
  common(member, true);
  member->add_option("--class", o.cls)->check(CLI::IsMember({"st", "cv"}));
  member->add_option("--family", o.family)
      ->check(CLI::IsMember({"monomial", "koebe", "inverse-linear", "exp-linear",
                             "exp-minus-one"}));
  member->add_option("--n", o.n)->check(CLI::Range(2, 64));
  member->add_option("--a", o.a_re);
  member->add_option("--a-imag", o.a_im);
  member->add_flag("!--no-oracle", o.oracle, "skip the subordination oracle");
  auto* extremal = app.add_subcommand("extremal", "extremal functions");
  common(extremal, true);
  extremal->add_option("--family", o.ext_family)->check(CLI::IsMember({"psi", "k"}));
  extremal->add_option("--form", o.k_form)->check(CLI::IsMember({"structural", "printed"}));
  extremal->add_option("--n", o.n)->check(CLI::Range(1, 64));
  extremal->add_option("--z-re", o.z_re);
  extremal->add_option("--z-im", o.z_im);
  auto* verify = app.add_subcommand("verify", "formula-versus-oracle verification report");
  common(verify, false);
  verify->add_option("--grid", o.grid)->check(CLI::IsMember({"standard", "quick", "empty"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  if (o.format != "json" && name != "curve") {
    err << "error: --format " << o.format << " is only available for curve\n";
    return kInvalid;
  }

  Output result;
  try {
    if (name == "verify") {
      result = cmd_verify(o);
    } else {
      double a = o.alpha, b = o.beta;
      snap(a, b, o.snap_eps);
      const SnailParams p = validate_params(a, b, o.gamma);
      if (name == "classify") result = cmd_classify(p);
      else if (name == "curve") result = cmd_curve(p, o);
      else if (name == "bounds") result = cmd_bounds(p, o);
      else if (name == "orders") result = cmd_orders(p);
      else if (name == "member") result = cmd_member(p, o);
      else result = cmd_extremal(p, o);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  const std::string text = result.is_text ? result.text : result.doc.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) {
      err << "error: cannot write " << o.out << "\n";
      return kIoError;
    }
  }
  return result.code;
}

}  // namespace snail::cli
