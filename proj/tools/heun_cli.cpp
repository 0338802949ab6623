#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heun/crosscheck/crosscheck.hpp"
#include "heun/dynamics/boundary.hpp"
#include "heun/dynamics/josephson.hpp"
#include "heun/dynamics/portrait.hpp"
#include "heun/io/json_io.hpp"
#include "heun/io/svg.hpp"
#include "heun/spectral/spectral.hpp"
#include "heun/xi/xi_curve.hpp"

namespace {

using heun::io::Json;
using heun::io::to_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Output {
  std::string emit;
  std::string out;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

heun::xi::Sign parse_xi_sign(const std::string& s) { return s == "+" ? heun::xi::Sign::plus : heun::xi::Sign::minus; }
heun::dynamics::Branch parse_branch(const std::string& s) {
  return s == "+" ? heun::dynamics::Branch::plus : heun::dynamics::Branch::minus;
}

void add_emit(CLI::App* sub, Output& o, const std::vector<std::string>& allowed) {
  o.emit = allowed.front();
  sub->add_option("--emit", o.emit, "Output format")->check(CLI::IsMember(allowed))->capture_default_str();
  sub->add_option("--out", o.out, "Write output to this file instead of stdout");
}

CLI::Option* add_sign(CLI::App* sub, std::string& sign) {
  sign = "+";
  return sub->add_option("--sign", sign, "Branch sign, + or -")->check(CLI::IsMember({"+", "-"}))->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral curves and phase-lock areas of the Josephson / double confluent Heun family"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  // Each subcommand fills `text` and returns an exit code.
  std::map<CLI::App*, std::function<int(std::string&)>> actions;
  std::map<CLI::App*, Output*> outputs;
  std::vector<std::unique_ptr<Output>> owned;
  auto make = [&](const std::string& name, const std::string& desc, const std::vector<std::string>& emits) {
    CLI::App* sub = app.add_subcommand(name, desc);
    owned.push_back(std::make_unique<Output>());
    add_emit(sub, *owned.back(), emits);
    outputs[sub] = owned.back().get();
    return std::pair{sub, owned.back().get()};
  };

  int l = 2;
  double mu = 1.0, tol = 1e-12, B = 0.0, A = 0.0, omega = 1.0;
  std::string sign = "+";

  {
    auto [sub, o] = make("spectral-poly", "Print P_l(λ, v) = det(H_l + λ Id), v = μ²", {"poly", "json"});
    sub->add_option("--l", l, "Degree l >= 1")->required()->check(CLI::PositiveNumber);
    auto q = std::make_shared<bool>(false);
    sub->add_flag("--q", *q, "Print Q(λ, R) = P_l(λ, R - λ) instead");
    actions[sub] = [&, o = o, q](std::string& text) {
      const auto curve = heun::spectral::spectral_polynomial(l);
      const auto& p = *q ? curve.Q : curve.poly;
      if (o->emit == "poly") text = p.to_string() + "\n";
      else text = Json{{"l", l}, {"poly", p.to_string()}}.dump(2) + "\n";
      return kOk;
    };
  }
  {
    auto [sub, o] = make("newton-cert", "Newton-diagram certificate of Q(λ, R)", {"json", "text"});
    sub->add_option("--l", l, "Degree l >= 2")->required();
    actions[sub] = [&, o = o](std::string& text) {
      const auto rep = heun::spectral::newton_certificate(l);
      const bool lead = heun::spectral::leading_form_check(l);
      Json j = to_json(rep);
      j["leading_form"] = lead;
      if (o->emit == "json") text = j.dump(2) + "\n";
      else text = std::string("l=") + std::to_string(l) + " certificate " + (rep.pass() ? "pass" : "FAIL") +
                  ", leading form " + (lead ? "pass" : "FAIL") + "\n";
      return rep.pass() && lead ? kOk : kFailed;
    };
  }
  {
    auto [sub, o] = make("eigen", "Roots λ_1 < ... < λ_l of P_l(λ, μ²)", {"json", "text"});
    sub->add_option("--l", l, "Degree l >= 1")->required();
    sub->add_option("--mu", mu, "μ != 0")->required();
    sub->add_option("--tol", tol, "Relative root width")->check(CLI::PositiveNumber)->capture_default_str();
    actions[sub] = [&, o = o](std::string& text) {
      const auto es = heun::spectral::eigenvalues_at(l, mu, tol);
      const auto curve = heun::spectral::spectral_polynomial(l);
      double worst = 0.0;
      for (double v : es.values) worst = std::max(worst, heun::spectral::curve_residual(curve, v, mu));
      Json j = to_json(es);
      j["max_residual"] = worst;
      if (o->emit == "json") text = j.dump(2) + "\n";
      else {
        std::ostringstream s;
        for (std::size_t k = 0; k < es.values.size(); ++k) s << "lambda_" << k + 1 << " = " << fmt(es.values[k]) << "\n";
        s << "min_gap = " << fmt(es.min_gap) << "\nmax_residual = " << fmt(worst) << "\n";
        text = s.str();
      }
      return worst < heun::spectral::kCurveGate ? kOk : kFailed;
    };
  }
  {
    auto [sub, o] = make("intersections", "Generalized simple intersections Π_j at a given μ", {"csv", "json"});
    sub->add_option("--l", l, "Degree l >= 1")->required();
    sub->add_option("--mu", mu, "μ > 0")->required();
    actions[sub] = [&, o = o](std::string& text) {
      const auto pts = heun::spectral::simple_intersections(l, mu);
      if (o->emit == "json") {
        Json arr = Json::array();
        for (const auto& p : pts) arr.push_back(to_json(p));
        text = arr.dump(2) + "\n";
      } else {
        text = "j,mu,lambda_j,R_j,omega_j,B,A,s\n";
        for (const auto& p : pts)
          text += std::to_string(p.j) + "," + fmt(p.mu) + "," + fmt(p.lambda_j) + "," + fmt(p.R_j) + "," +
                  fmt(p.omega_j) + "," + fmt(p.B) + "," + fmt(p.A) + "," + std::to_string(p.s) + "\n";
      }
      return kOk;
    };
  }
  {
    auto [sub, o] = make("xi", "Print Ξ_l^± = det(𝒢_l ± r Id) in (μ, r)", {"poly", "json"});
    sub->add_option("--l", l, "Degree l >= 1")->required();
    add_sign(sub, sign);
    actions[sub] = [&, o = o](std::string& text) {
      const auto c = heun::xi::xi_polynomial(l, parse_xi_sign(sign));
      if (o->emit == "poly") text = c.poly.to_string() + "\n";
      else text = Json{{"l", l}, {"sign", sign}, {"poly", c.poly.to_string()}}.dump(2) + "\n";
      return kOk;
    };
  }
  {
    auto [sub, o] = make("factor-check", "P_l(r²-μ², μ²)(-1)^l = Ξ_l^+ Ξ_l^- and the μ = 0 forms", {"json", "text"});
    sub->add_option("--l", l, "Degree l >= 1")->required();
    actions[sub] = [&, o = o](std::string& text) {
      const bool f = heun::xi::factorization_check(l);
      const auto zp = heun::xi::mu_zero_check(l, heun::xi::Sign::plus);
      const auto zm = heun::xi::mu_zero_check(l, heun::xi::Sign::minus);
      const bool ok = f && zp.matches_closed_form && zm.matches_closed_form && zp.distinct_roots && zm.distinct_roots;
      if (o->emit == "json")
        text = Json{{"l", l},
                    {"factorization", f},
                    {"mu_zero_plus", zp.matches_closed_form},
                    {"mu_zero_minus", zm.matches_closed_form},
                    {"distinct_roots", zp.distinct_roots && zm.distinct_roots},
                    {"pass", ok}}
                   .dump(2) +
               "\n";
      else text = std::string("l=") + std::to_string(l) + " factorization " + (f ? "pass" : "FAIL") +
                  ", mu=0 forms " + (zp.matches_closed_form && zm.matches_closed_form ? "pass" : "FAIL") + "\n";
      return ok ? kOk : kFailed;
    };
  }
  {
    auto [sub, o] = make("genus", "Conjectured genus and bidegree of Ξ_l^+", {"json", "text"});
    sub->add_option("--l", l, "Degree l >= 1")->required();
    auto certify = std::make_shared<bool>(false);
    sub->add_flag("--certify", *certify, "Also run the smoothness certificate");
    actions[sub] = [&, o = o, certify](std::string& text) {
      const auto g = heun::xi::genus_bound(l, *certify);
      if (o->emit == "json") text = to_json(g).dump(2) + "\n";
      else text = "l=" + std::to_string(l) + " conjectured_genus=" + std::to_string(g.conjectured_genus) +
                  " bidegree=(" + std::to_string(g.bidegree.first) + "," + std::to_string(g.bidegree.second) + ")\n";
      return g.bound_consistent && (!*certify || g.certified) ? kOk : kFailed;
    };
  }
  {
    auto [sub, o] = make("smooth-cert", "Resultant certificate that Ξ_l^± is smooth in C²", {"json", "text"});
    sub->add_option("--l", l, "Degree l >= 2")->required();
    add_sign(sub, sign);
    actions[sub] = [&, o = o](std::string& text) {
      const auto c = heun::xi::smoothness_certificate(l, parse_xi_sign(sign));
      if (o->emit == "json") text = to_json(c).dump(2) + "\n";
      else text = c.notes + "smooth: " + (c.smooth ? (*c.smooth ? "yes" : "no") : "undecided") + "\n";
      return c.smooth.value_or(false) ? kOk : kFailed;
    };
  }
  {
    auto [sub, o] = make("rotnum", "Rotation number ρ(B, A; ω)", {"json", "text"});
    sub->add_option("--B", B, "Abscissa B")->required();
    sub->add_option("--A", A, "Ordinate A")->required();
    sub->add_option("--omega", omega, "ω > 0")->required();
    auto t = std::make_shared<double>(1e-8);
    sub->add_option("--tol", *t, "Target error")->check(CLI::PositiveNumber)->capture_default_str();
    actions[sub] = [&, o = o, t](std::string& text) {
      const heun::dynamics::JosephsonParams p{B, A, omega};
      const auto r = heun::dynamics::rotation_number(p, *t);
      Json j = to_json(r);
      j["monodromy"] = to_json(heun::dynamics::monodromy(p, 1e-12));
      if (o->emit == "json") text = j.dump(2) + "\n";
      else text = "rho = " + fmt(r.rho) + "\n";
      return kOk;
    };
  }
  {
    auto [sub, o] = make("boundary", "Boundary point B = g_{s,±}(A) of the phase-lock area L_s", {"csv", "json"});
    auto s = std::make_shared<int>(0);
    sub->add_option("--s", *s, "Rotation number s >= 0")->required()->check(CLI::NonNegativeNumber);
    add_sign(sub, sign);
    sub->add_option("--A", A, "Ordinate A")->required();
    sub->add_option("--omega", omega, "ω > 0")->required();
    auto t = std::make_shared<double>(1e-10);
    sub->add_option("--tol", *t, "Tolerance in B")->check(CLI::PositiveNumber)->capture_default_str();
    actions[sub] = [&, o = o, s, t](std::string& text) {
      const auto bp = heun::dynamics::boundary_point(*s, parse_branch(sign), A, omega, *t);
      if (o->emit == "json") text = to_json(bp).dump(2) + "\n";
      else text = "s,sign,A,omega,B,residual\n" + std::to_string(bp.s) + "," + sign + "," + fmt(bp.A) + "," +
                  fmt(bp.omega) + "," + fmt(bp.B) + "," + fmt(bp.residual) + "\n";
      return kOk;
    };
  }
  {
    auto [sub, o] = make("portrait", "Rotation-number raster over a (B, A) box", {"csv", "svg", "json"});
    auto spec = std::make_shared<heun::dynamics::PortraitSpec>();
    sub->add_option("--omega", spec->omega, "ω > 0")->capture_default_str();
    sub->add_option("--bmin", spec->b_min)->capture_default_str();
    sub->add_option("--bmax", spec->b_max)->capture_default_str();
    sub->add_option("--amin", spec->a_min)->capture_default_str();
    sub->add_option("--amax", spec->a_max)->capture_default_str();
    sub->add_option("--nx", spec->nx)->check(CLI::Range(2, 100000))->capture_default_str();
    sub->add_option("--ny", spec->ny)->check(CLI::Range(2, 100000))->capture_default_str();
    sub->add_option("--tol", spec->tol)->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--threads", spec->threads, "Worker threads (0: HEUN_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    actions[sub] = [o = o, spec](std::string& text) {
      const auto p = heun::dynamics::portrait_scan(*spec);
      if (o->emit == "csv") text = heun::dynamics::portrait_csv(p);
      else if (o->emit == "svg") text = heun::io::portrait_svg(p);
      else
        text = Json{{"omega", spec->omega},
                    {"nx", spec->nx},
                    {"ny", spec->ny},
                    {"fractional_fraction", heun::dynamics::fractional_fraction(p)},
                    {"rho", p.rho}}
                   .dump() +
               "\n";
      return kOk;
    };
  }
  {
    auto [sub, o] = make("constrictions", "Constrictions of L_s on the axis B = sω", {"csv", "json"});
    auto s = std::make_shared<int>(1);
    auto amin = std::make_shared<double>(0.0), amax = std::make_shared<double>(10.0), t = std::make_shared<double>(1e-6);
    auto nscan = std::make_shared<int>(400);
    sub->add_option("--s", *s, "s >= 1")->required()->check(CLI::PositiveNumber);
    sub->add_option("--omega", omega, "ω > 0")->required();
    sub->add_option("--amin", *amin)->capture_default_str();
    sub->add_option("--amax", *amax)->capture_default_str();
    sub->add_option("--tol", *t)->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--n-scan", *nscan)->check(CLI::Range(3, 1000000))->capture_default_str();
    actions[sub] = [&, o = o, s, amin, amax, t, nscan](std::string& text) {
      const auto cs = heun::dynamics::constriction_search(*s, omega, *amin, *amax, *t, *nscan);
      if (o->emit == "json") {
        Json arr = Json::array();
        for (const auto& c : cs) arr.push_back(to_json(c));
        text = arr.dump(2) + "\n";
      } else {
        // Both boundary branches pass through a constriction.
        text = "s,sign,A,omega,B,residual\n";
        for (const auto& c : cs)
          text += std::to_string(c.s) + ",+-," + fmt(c.A) + "," + fmt(c.omega) + "," + fmt(c.B) + "," +
                  fmt(c.return_error) + "\n";
      }
      return kOk;
    };
  }
  {
    auto [sub, o] = make("crosscheck", "Match spectral-curve points with phase-lock boundaries", {"json", "text"});
    auto mode = std::make_shared<std::string>("points");
    auto grid = std::make_shared<std::vector<double>>(std::vector<double>{1.5, 2.0, 2.5});
    auto t = std::make_shared<double>(heun::crosscheck::kMatchTol);
    sub->add_option("--mode", *mode, "points | count | symmetries | ordering")
        ->check(CLI::IsMember({"points", "count", "symmetries", "ordering"}))
        ->capture_default_str();
    sub->add_option("--l", l, "Degree l >= 1")->capture_default_str();
    sub->add_option("--mu", mu, "μ > 0 (points)")->capture_default_str();
    sub->add_option("--omega", omega, "ω > 0 (count)")->capture_default_str();
    sub->add_option("--mu-grid", *grid, "μ values (ordering)")->delimiter(',');
    sub->add_option("--tol", *t, "Angle tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    actions[sub] = [&, o = o, mode, grid, t](std::string& text) {
      Json j;
      bool pass = false;
      if (*mode == "points") {
        const auto r = heun::crosscheck::verify_simple_intersections(l, mu, *t);
        j = to_json(r);
        pass = r.pass;
      } else if (*mode == "count") {
        const auto r = heun::crosscheck::verify_count(l, omega, *t);
        j = to_json(r);
        pass = r.pass;
      } else if (*mode == "symmetries") {
        const auto r = heun::crosscheck::verify_symmetries(heun::crosscheck::default_symmetry_samples(), *t);
        j = to_json(r);
        pass = r.pass;
      } else {
        const auto r = heun::crosscheck::verify_ordering(l, *grid, *t);
        j = to_json(r);
        pass = r.pass;
      }
      if (o->emit == "json") text = j.dump(2) + "\n";
      else text = std::string("crosscheck ") + *mode + ": " + (pass ? "pass" : "FAIL") + "\n";
      return pass ? kOk : kFailed;
    };
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  for (auto& [sub, action] : actions) {
    if (!sub->parsed()) continue;
    std::string text;
    int rc;
    try {
      rc = action(text);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kFailed;
    }
    const Output& o = *outputs[sub];
    if (o.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot open " << o.out << "\n";
        return kFailed;
      }
      f << text;
    }
    return rc;
  }
  return kUsage;
}
