#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "motfact/bennett.hpp"
#include "motfact/factor.hpp"
#include "motfact/io.hpp"
#include "motfact/linkage.hpp"
#include "motfact/special.hpp"

namespace motfact::cli {

namespace {

using nlohmann::json;

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << text;
  else
    write_file(out_path, text);
}

std::vector<double> parse_number_list(const std::string& s, const std::string& what) {
  std::vector<double> values;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "inf" || item == "+inf")
      values.push_back(std::numeric_limits<double>::infinity());
    else {
      try {
        values.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw Error(Err::InvalidInput, what + ": cannot parse '" + item + "'");
      }
    }
  }
  if (values.empty()) throw Error(Err::InvalidInput, what + ": empty list");
  return values;
}

json factorization_json(const Factorization& f, double residual) {
  json j;
  j["factors"] = json::array();
  for (const auto& h : f.factors) {
    json arr = json::array();
    for (double v : h.to8()) arr.push_back(v);
    j["factors"].push_back(std::move(arr));
  }
  j["norms"] = json::array();
  for (const auto& m : f.norms) j["norms"].push_back({m.a, m.b});
  j["residual"] = residual;
  return j;
}

int cmd_factor(const std::string& motion_path, const std::string& order_spec, bool all,
               const std::string& out_path, std::ostream& out) {
  const MotionPolynomial c = motion_from_json(read_file(motion_path));
  json report;
  if (all) {
    const AllFactorizations af = all_factorizations(c);
    report["count"] = af.factorizations.size();
    report["coincident"] = af.coincident;
    report["factorizations"] = json::array();
    for (const auto& f : af.factorizations)
      report["factorizations"].push_back(factorization_json(f, verify_factorization(c, f)));
    report["attempts"] = json::array();
    for (const auto& at : af.attempts) {
      json ja;
      ja["permutation"] = at.permutation;
      ja["ok"] = at.result.has_value();
      if (!at.error.empty()) ja["error"] = at.error;
      report["attempts"].push_back(std::move(ja));
    }
  } else {
    std::vector<int> perm;
    if (order_spec.empty()) {
      const auto ms = quadratic_factorization(make_monic(c).poly.norm_poly());
      for (size_t i = 0; i < ms.size(); ++i) perm.push_back(static_cast<int>(i));
    } else {
      for (double v : parse_number_list(order_spec, "--order")) perm.push_back(static_cast<int>(v));
    }
    const Factorization f = factor_with_order(c, perm);
    report = factorization_json(f, verify_factorization(c, f));
  }
  emit(report.dump(2) + "\n", out_path, out);
  return 0;
}

int cmd_bennett(const std::string& poses_path, const std::string& out_path,
                const std::string& motion_out, std::ostream& out) {
  const auto poses = poses_from_json(read_file(poses_path));
  const SynthesisOutcome res = synthesize_bennett(poses[0], poses[1], poses[2]);

  if (!motion_out.empty() && res.motion) write_file(motion_out, motion_to_json(*res.motion));

  if (res.linkage) {
    emit(linkage_to_json(*res.linkage), out_path, out);
    json meta;
    meta["diagnosis"] = diagnosis_name(res.diagnosis.kind);
    meta["lambda"] = res.lambda;
    meta["mu"] = res.mu;
    meta["loop_residual"] = res.loop_residual;
    meta["coupler_link"] = res.coupler_link;
    if (!out_path.empty()) out << meta.dump(2) << "\n";
  } else {
    json meta;
    meta["diagnosis"] = diagnosis_name(res.diagnosis.kind);
    meta["detail"] = res.diagnosis.detail;
    if (res.motion) {
      meta["lambda"] = res.lambda;
      meta["mu"] = res.mu;
    }
    meta["factorizations"] = json::array();
    for (const auto& f : res.factorizations)
      meta["factorizations"].push_back(factorization_json(f, 0.0));
    out << meta.dump(2) << "\n";
  }
  return 0;
}

int cmd_flip(const std::string& motion_path, const std::string& p_spec, uint64_t seed,
             const std::string& out_path, std::ostream& out) {
  const MotionPolynomial c = motion_from_json(read_file(motion_path));
  if (c.degree() != 2)
    throw Error(Err::InvalidInput, "flip expects a quadratic motion polynomial");

  const MotionPolynomial cm = make_monic(c).poly;
  const auto ms = quadratic_factorization(cm.norm_poly());
  const Factorization f = detail::factor_with_quadratics(cm, ms, true);
  const DualQuaternion h1 = f.factors[0], h2 = f.factors[1];

  ReplacementLinkage rep;
  json meta;
  if (p_spec == "random") {
    std::mt19937_64 rng(seed);
    rep = build_replacement_linkage(h1, h2, rng);
    meta["seed"] = seed;
  } else {
    const auto nums = parse_number_list(p_spec, "--p");
    if (nums.size() != 8) throw Error(Err::InvalidInput, "--p: expected 8 numbers or 'random'");
    std::array<double, 8> arr{};
    std::copy(nums.begin(), nums.end(), arr.begin());
    rep = build_replacement_linkage(h1, h2, DualQuaternion::from8(arr));
  }
  emit(linkage_to_json(rep.linkage), out_path, out);
  meta["type"] = rep.linkage.type;
  meta["collapsed_to_5r"] = rep.collapsed_to_5r;
  meta["coupler_link"] = rep.coupler_link;
  meta["max_residual"] = rep.max_residual;
  if (!out_path.empty()) out << meta.dump(2) << "\n";
  return 0;
}

int cmd_circular(double a, double lambda, double mu, const std::string& out_path,
                 std::ostream& out) {
  const auto [h1, h2] = circular_translation_factors(a, lambda, mu);
  const MotionPolynomial c = elliptic_translation(TranslationMotionSpec::make(a, a));
  const MotionPolynomial prod =
      MotionPolynomial::linear(h1) * MotionPolynomial::linear(h2);
  Factorization f;
  f.factors = {h1, h2};
  f.norms = {{-2 * h1.p.w, dnorm(h1).re}, {-2 * h2.p.w, dnorm(h2).re}};
  json j = factorization_json(f, coeff_distance(prod, c));
  emit(j.dump(2) + "\n", out_path, out);
  return 0;
}

int cmd_elliptic(double a, double b, bool spatial, bool brace, uint64_t seed,
                 const std::string& out_path, const std::string& brace_out, std::ostream& out,
                 std::ostream& err) {
  const TranslationMotionSpec spec = TranslationMotionSpec::make(a, b);
  if (spec.circular())
    err << "note: a = b describes a circular translation; the closed-form factor family "
           "(subcommand 'circular') is also available\n";
  const Factorization f =
      spatial ? multiplication_trick_spatial(spec) : multiplication_trick_planar(spec);
  const MotionPolynomial qc =
      MotionPolynomial::from_real(RealPoly{1, 0, 1}) * elliptic_translation(spec);
  json j = factorization_json(f, coeff_distance(product_of(f), qc));
  if (brace) j["seed"] = seed;
  emit(j.dump(2) + "\n", out_path, out);

  if (brace) {
    std::mt19937_64 rng(seed);
    const BracedChain chain = brace_chain(f, rng);
    emit(linkage_to_json(chain.linkage), brace_out, out);
    json meta;
    meta["seed"] = seed;
    meta["joints"] = chain.linkage.joints.size();
    meta["links"] = chain.linkage.links.size();
    meta["terminal_link"] = chain.terminal_link;
    meta["max_cell_residual"] = chain.max_cell_residual;
    if (!brace_out.empty()) out << meta.dump(2) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& linkage_path, const std::string& sweep_spec, std::ostream& out) {
  const Linkage l = linkage_from_json(read_file(linkage_path));
  const std::vector<double> ts =
      sweep_spec == "default" ? standard_sweep() : parse_number_list(sweep_spec, "--sweep");
  double worst = 0;
  for (size_t i = 0; i < l.loops.size(); ++i) {
    const double res = loop_residual(l, i, ts);
    out << "loop " << i << ": residual " << res << "\n";
    worst = std::max(worst, res);
  }
  out << "max residual " << worst << " (tolerance " << tolerance() << ")\n";
  return worst < tolerance() ? 0 : 1;
}

int cmd_traj(const std::string& motion_path, const std::string& point_spec,
             const std::string& range_spec, bool include_inf, const std::string& out_path,
             std::ostream& out) {
  const MotionPolynomial c = motion_from_json(read_file(motion_path));
  const auto pt = parse_number_list(point_spec, "--point");
  if (pt.size() != 3) throw Error(Err::InvalidInput, "--point: expected X,Y,Z");

  std::stringstream ss(range_spec);
  std::string tmin_s, tmax_s, n_s;
  if (!std::getline(ss, tmin_s, ':') || !std::getline(ss, tmax_s, ':') || !std::getline(ss, n_s))
    throw Error(Err::InvalidInput, "--range: expected TMIN:TMAX:N");
  const double tmin = std::stod(tmin_s), tmax = std::stod(tmax_s);
  const int n = std::stoi(n_s);
  if (n < 2 || tmax <= tmin) throw Error(Err::InvalidInput, "--range: need N >= 2 and TMAX > TMIN");

  std::vector<double> ts;
  for (int i = 0; i < n; ++i)
    ts.push_back(tmin + (tmax - tmin) * static_cast<double>(i) / (n - 1));
  if (include_inf) ts.push_back(std::numeric_limits<double>::infinity());

  const auto points = trajectory(c, {pt[0], pt[1], pt[2]}, ts);
  std::ostringstream csv;
  write_trajectory_csv(csv, ts, points);
  emit(csv.str(), out_path, out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rational motion factorization and linkage synthesis"};
  app.require_subcommand(1);

  double tol = 1e-9;
  app.add_option("--tol", tol, "global zero tolerance")->capture_default_str();

  // factor
  auto* factor_cmd = app.add_subcommand("factor", "factor a motion polynomial");
  std::string motion_path, order_spec, out_path;
  bool all = false;
  factor_cmd->add_option("motion", motion_path, "motion polynomial JSON file")->required();
  factor_cmd->add_option("--order", order_spec,
                         "comma-separated permutation of norm factor indices");
  factor_cmd->add_flag("--all", all, "enumerate all factorizations");
  factor_cmd->add_option("--out", out_path, "output file (default stdout)");

  // bennett
  auto* bennett_cmd = app.add_subcommand("bennett", "synthesize a Bennett linkage from 3 poses");
  std::string poses_path, bennett_out, motion_out;
  bennett_cmd->add_option("--poses", poses_path, "poses JSON file")->required();
  bennett_cmd->add_option("--out", bennett_out, "linkage output file (default stdout)");
  bennett_cmd->add_option("--emit-motion", motion_out, "write the interpolated motion JSON");

  // flip
  auto* flip_cmd = app.add_subcommand("flip", "build a 6R/5R replacement linkage");
  std::string flip_motion, p_spec = "random", flip_out;
  uint64_t seed = 1;
  flip_cmd->add_option("--motion", flip_motion, "quadratic motion JSON file")->required();
  flip_cmd->add_option("--p", p_spec, "pivot rotation: 8 numbers or 'random'")
      ->capture_default_str();
  flip_cmd->add_option("--seed", seed, "RNG seed for random pivots")->capture_default_str();
  flip_cmd->add_option("--out", flip_out, "linkage output file (default stdout)");

  // circular
  auto* circ_cmd = app.add_subcommand("circular", "factor pair of a circular translation");
  double ca = 1, clambda = 0, cmu = 0;
  std::string circ_out;
  circ_cmd->add_option("--a", ca, "radius parameter")->required();
  circ_cmd->add_option("--lambda", clambda, "family parameter lambda")->capture_default_str();
  circ_cmd->add_option("--mu", cmu, "family parameter mu")->capture_default_str();
  circ_cmd->add_option("--out", circ_out, "output file (default stdout)");

  // elliptic
  auto* ell_cmd = app.add_subcommand("elliptic", "factor an elliptic translation");
  double ea = 2, eb = 1;
  bool spatial = false, brace = false;
  uint64_t eseed = 1;
  std::string ell_out, brace_out;
  ell_cmd->add_option("--a", ea, "major semi-axis")->required();
  ell_cmd->add_option("--b", eb, "minor semi-axis")->required();
  ell_cmd->add_flag("--spatial", spatial, "use the spatial factor list");
  ell_cmd->add_flag("--brace", brace, "also build the braced linkage");
  ell_cmd->add_option("--seed", eseed, "RNG seed for the brace pivot")->capture_default_str();
  ell_cmd->add_option("--out", ell_out, "factorization output file (default stdout)");
  ell_cmd->add_option("--brace-out", brace_out, "braced linkage output file (default stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check loop closure of a linkage file");
  std::string linkage_path, sweep_spec = "default";
  verify_cmd->add_option("linkage", linkage_path, "linkage JSON file")->required();
  verify_cmd->add_option("--sweep", sweep_spec, "'default' or comma-separated t values (inf allowed)")
      ->capture_default_str();

  // traj
  auto* traj_cmd = app.add_subcommand("traj", "sample a trajectory as CSV");
  std::string traj_motion, point_spec = "0,0,0", range_spec = "-1:1:11", traj_out;
  bool include_inf = false;
  traj_cmd->add_option("--motion", traj_motion, "motion polynomial JSON file")->required();
  traj_cmd->add_option("--point", point_spec, "tracked point X,Y,Z")->capture_default_str();
  traj_cmd->add_option("--range", range_spec, "TMIN:TMAX:N sample range")->capture_default_str();
  traj_cmd->add_flag("--inf", include_inf, "append the t = inf sample");
  traj_cmd->add_option("--out", traj_out, "output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    set_tolerance(tol);
    if (factor_cmd->parsed()) return cmd_factor(motion_path, order_spec, all, out_path, out);
    if (bennett_cmd->parsed()) return cmd_bennett(poses_path, bennett_out, motion_out, out);
    if (flip_cmd->parsed()) return cmd_flip(flip_motion, p_spec, seed, flip_out, out);
    if (circ_cmd->parsed()) return cmd_circular(ca, clambda, cmu, circ_out, out);
    if (ell_cmd->parsed())
      return cmd_elliptic(ea, eb, spatial, brace, eseed, ell_out, brace_out, out, err);
    if (verify_cmd->parsed()) return cmd_verify(linkage_path, sweep_spec, out);
    if (traj_cmd->parsed())
      return cmd_traj(traj_motion, point_spec, range_spec, include_inf, traj_out, out);
    err << "usage error: no subcommand\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace motfact::cli
