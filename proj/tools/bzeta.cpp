#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bzeta/verify.hpp"

using namespace bzeta;
using verify::json;

namespace {

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

cplx parse_cplx(const std::string& s) {
  // "re" or "re,im"
  std::istringstream in(s);
  double re = 0, im = 0;
  char comma = 0;
  if (!(in >> re)) throw std::invalid_argument("bad complex number '" + s + "'");
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) throw std::invalid_argument("bad complex number '" + s + "'");
  }
  return {re, im};
}

json envelope(std::uint64_t seed) { return {{"schema", "1"}, {"seed", seed}}; }

LocalRep build_rep(RepType t, bool symbolic, bool trivial_central, const std::string& a, const std::string& b,
                   const std::string& g) {
  if (trivial_central) return LocalRep::symbolic_trivial_central(t);
  if (symbolic) return LocalRep::symbolic(t);
  switch (t) {
    case RepType::I: return LocalRep::type_I(parse(a), parse(b), parse(g));
    case RepType::IIb: return LocalRep::type_IIb(parse(a), parse(g));
    case RepType::IIIa: return LocalRep::type_IIIa(parse(a), parse(g));
    case RepType::VIb: return LocalRep::type_VIb(parse(g));
  }
  throw std::logic_error("bad RepType");
}

int emit(const json& j) {
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bzeta: local zeta integrals, character sums, class groups and global constants"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // verify
  auto* v = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  unsigned jobs = 1;
  v->add_option("--suite", suite, "all, criteria, properties, or a suite name");
  v->add_option("--jobs", jobs, "parallel suites")->check(CLI::Range(1u, 64u));

  // lfactor
  auto* lf = app.add_subcommand("lfactor", "spinor / standard L-factor and epsilon");
  std::string type = "I", alpha = "A", beta = "B", gamma = "G", u_expr = "1", eps_case;
  bool symbolic = false, trivial_central = false;
  lf->add_option("--type", type, "I, IIb, IIIa or VIb")->required();
  lf->add_flag("--symbolic", symbolic, "free symbols A, B, G");
  lf->add_flag("--trivial-central", trivial_central, "impose trivial central character");
  lf->add_option("--alpha", alpha);
  lf->add_option("--beta", beta);
  lf->add_option("--gamma", gamma);
  lf->add_option("--u", u_expr, "mu(varpi) as an expression");
  lf->add_option("--eps", eps_case, "ramified_spherical, IIIa, VIb or old_I_IIb");

  // zeta-local
  auto* zl = app.add_subcommand("zeta-local", "local zeta integral: closed form vs series");
  std::string zcase = "1", ztype = "I";
  std::size_t basis = 1;
  zl->add_option("--case", zcase, "1, 4, 5 or 6")->check(CLI::IsMember({"1", "4", "5", "6"}));
  zl->add_option("--type", ztype, "I or IIb (cases 1, 4)");
  zl->add_option("--basis", basis, "basis index, 1-based (cases 4-6)")->check(CLI::PositiveNumber);

  // period
  auto* pe = app.add_subcommand("period", "local period from components and closed form");
  std::string ptype = "VIb";
  pe->add_option("--type", ptype, "I, IIb, IIIa or VIb");

  // gauss
  auto* ga = app.add_subcommand("gauss", "character-sum lemmas over residue rings");
  i64 gp = 3, gchar = -1, gu = 1, gv = 0;
  int ge = 1;
  std::string gcheck = "gauss", gpi = "1", gS = "1,0,1";
  ga->add_option("--p", gp, "odd prime");
  ga->add_option("--e", ge, "exponent")->check(CLI::Range(1, 6));
  ga->add_option("--char-index", gchar, "character index m (default: first primitive)");
  ga->add_option("--pi", gpi, "mu(varpi) as re[,im]");
  ga->add_option("--check", gcheck)->check(CLI::IsMember({"gauss", "split", "normsum", "smith"}));
  ga->add_option("--u", gu, "unit u for normsum; first eta coordinate for smith");
  ga->add_option("--v", gv, "second eta coordinate for smith");
  ga->add_option("--S", gS, "Bessel form a,b,c for smith");

  // classgroup
  auto* cg = app.add_subcommand("classgroup", "class group of a negative fundamental discriminant");
  i64 D = -23;
  cg->add_option("--D", D, "discriminant")->required()->allow_extra_args(false);

  // average
  auto* av = app.add_subcommand("average", "global constants: arch factor, epsilon, spectral-average prefactor");
  std::string config;
  av->add_option("--config", config, "JSON {D, l1, l2, N, M, chi, s}")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return 2;
  }

  try {
    const std::uint64_t seed = verify::seed_from_env();
    json out = envelope(seed);

    if (*v) {
      std::vector<std::string> names;
      for (const auto& s : verify::suites()) {
        const bool crit = s.criterion > 0;
        if (suite == "all" || (suite == "criteria" && crit) || (suite == "properties" && !crit) || suite == s.name)
          names.push_back(s.name);
      }
      if (names.empty()) {
        std::cerr << "error: unknown suite '" << suite << "'\n\n" << v->help();
        return 2;
      }
      const auto reps = verify::run_suites(names, seed, jobs);
      bool ok = true;
      std::size_t total = 0, passed = 0;
      out["suites"] = json::array();
      for (const auto& r : reps) {
        ok = ok && r.ok();
        total += r.cases.size();
        passed += r.passed();
        out["suites"].push_back(r.to_json());
      }
      out["summary"] = {{"suites", reps.size()}, {"cases", total}, {"passed", passed}, {"ok", ok}};
      emit(out);
      return ok ? 0 : 1;
    }

    if (*lf) {
      const LocalRep rep = build_rep(parse_rep_type(type), symbolic, trivial_central, alpha, beta, gamma);
      const TwistData tw = TwistData::unramified(parse(u_expr));
      out["type"] = to_string(rep.tag());
      out["inputs"] = {{"satake", json::object()}, {"u", tw.u.str()}};
      for (const auto& [var, val] : rep.satake_binding()) out["inputs"]["satake"][var.name()] = val.str();
      out["variables"] = {{"T", "q^-s"}, {"Q", "q^(1/2)"}};
      out["spinor"] = spinor_lfactor(rep, tw).str();
      out["central_character"] = rep.central_character().str();
      const auto [k, k0] = dims(rep);
      out["dims"] = {{"K", k}, {"K0", k0}};
      if (rep.tag() == RepType::I || rep.tag() == RepType::IIb) out["standard"] = std_lfactor(rep).str();
      if (!eps_case.empty()) out["epsilon"] = local_epsilon(rep, TwistData::symbolic(), parse_eps_case(eps_case)).str();
      return emit(out);
    }

    if (*zl) {
      const std::size_t j = basis - 1;
      RatFunc closed, series;
      json in;
      if (zcase == "1" || zcase == "4") {
        const RepType t = parse_rep_type(ztype);
        const LocalRep rep = LocalRep::symbolic_trivial_central(t);
        const TwistData tw = TwistData::unramified(RatFunc(sym::U));
        in = {{"type", ztype}, {"u", "U"}, {"lambda", "1"}, {"central", "trivial"}};
        if (zcase == "1") {
          closed = shift_half(spinor_lfactor(rep, tw));
          series = zeta_case1(rep, tw);
        } else {
          in["basis"] = basis;
          const ZetaPair z = zeta_case4(rep, tw, j);
          closed = z.closed_form;
          series = z.series_form;
        }
      } else {
        const RepType t = zcase == "5" ? RepType::IIIa : RepType::VIb;
        const LocalRep rep = LocalRep::symbolic_trivial_central(t);
        const TwistData tw = TwistData::unramified(RatFunc(sym::U));
        in = {{"type", to_string(t)}, {"u", "U"}, {"lambda", "1"}, {"basis", basis}, {"central", "trivial"}};
        closed = zeta_case5_6(rep, tw, j);
        series = zeta_case5_6_series(rep, tw, j);
      }
      out["case"] = zcase;
      out["inputs"] = in;
      out["closed_form"] = closed.str();
      out["series_form"] = series.str();
      out["match"] = closed == series;
      return emit(out);
    }

    if (*pe) {
      const RepType t = parse_rep_type(ptype);
      const bool spherical = t == RepType::I || t == RepType::IIb;
      const LocalRep rep = spherical ? LocalRep::symbolic_trivial_central(t) : LocalRep::symbolic(t);
      const TwistData tw = spherical ? TwistData::unramified(RatFunc(sym::U)) : TwistData::symbolic();
      const PeriodPair p = local_period(rep, tw);
      out["type"] = ptype;
      out["from_components"] = p.from_components.str();
      out["closed_form"] = p.closed_form.str();
      out["match"] = p.match();
      return emit(out);
    }

    if (*ga) {
      json in = {{"p", gp}, {"e", ge}, {"check", gcheck}};
      cplx lhs, rhs;
      if (gcheck == "smith") {
        BesselS S{};
        char c1 = 0, c2 = 0;
        std::istringstream ss(gS);
        if (!(ss >> S.a >> c1 >> S.b >> c2 >> S.c) || c1 != ',' || c2 != ',')
          throw std::invalid_argument("--S expects a,b,c");
        const YEtaReport y = y_eta_check(S, gu, gv, gp, ge);
        in["S"] = {S.a, S.b, S.c};
        in["eta"] = {gu, gv};
        out["inputs"] = in;
        out["field"] = y.field;
        out["j"] = y.j;
        out["det"] = {{"lhs", y.det.get_str()}, {"rhs", y.det_expected.get_str()}, {"pass", y.det_ok}};
        out["trace"] = {{"lhs", y.trace.get_str()}, {"rhs", y.trace_expected.get_str()}, {"pass", y.trace_ok}};
        out["smith"] = {{"d1", y.smith.d1.get_str()}, {"d2", y.smith.d2.get_str()}, {"ord_d1", y.ord_d1},
                        {"ord_d2", y.ord_d2}, {"pass", y.smith_ok}};
        out["pass"] = y.ok();
        emit(out);
        return y.ok() ? 0 : 1;
      }
      auto R = std::make_shared<const ResidueRing>(gp, ge);
      if (gchar < 0) gchar = primitive_char_indices(R).front();
      const MultChar mu(R, gchar, parse_cplx(gpi));
      in["char_index"] = gchar;
      in["mu_varpi"] = cjson(mu.at_uniformizer());
      const double sgn = ge % 2 ? -1.0 : 1.0;
      if (gcheck == "gauss") {
        lhs = unit_integral(mu, -ge);
        rhs = gauss_lemma_value(mu);
        double off = 0;
        for (int n = -ge - 3; n <= -ge + 3; ++n)
          if (n != -ge) off = std::max(off, std::abs(unit_integral(mu, n)));
        out["W_F"] = cjson(gauss_sum_F(mu));
        out["max_abs_off_conductor"] = off;
      } else if (gcheck == "split") {
        const GaloisRing L = GaloisRing::standard(R);
        const cplx W = gauss_sum_F(mu);
        lhs = gauss_sum_L(mu, L);
        rhs = sgn * W * W;
      } else {
        const GaloisRing L = GaloisRing::standard(R);
        in["u"] = gu;
        lhs = norm_char_sum(L, mu, mod(gu, R->size()));
        rhs = sgn * std::pow(double(gp), ge) * mu(mod(gu, R->size()));
      }
      const double err = std::abs(lhs - rhs);
      out["inputs"] = in;
      out["lhs"] = cjson(lhs);
      out["rhs"] = cjson(rhs);
      out["abs_err"] = err;
      out["pass"] = err <= 1e-9;
      emit(out);
      return err <= 1e-9 ? 0 : 1;
    }

    if (*cg) {
      const ClassGroup G(D);
      out["D"] = D;
      out["h"] = G.h();
      out["w"] = G.w();
      out["structure"] = G.structure();
      out["forms"] = json::array();
      for (std::size_t i = 0; i < G.h(); ++i)
        out["forms"].push_back({{"index", i},
                                {"form", {G.form(i).a, G.form(i).b, G.form(i).c}},
                                {"order", G.element_order(i)},
                                {"conjugate", G.conjugate(i)}});
      out["characters"] = json::array();
      for (const auto& chi : G.characters()) {
        json row = json::array();
        for (std::size_t i = 0; i < G.h(); ++i) row.push_back(cjson(chi(i)));
        out["characters"].push_back({{"order", chi.order}, {"values", row}});
      }
      return emit(out);
    }

    if (*av) {
      GlobalParams g;
      cplx s = 0.5;
      double vnorm = 1.0;
      if (!config.empty()) {
        std::ifstream f(config);
        const json c = json::parse(f);
        g.D = c.value("D", g.D);
        g.l1 = c.value("l1", g.l1);
        g.l2 = c.value("l2", g.l2);
        g.N = c.value("N", g.N);
        g.M = c.value("M", g.M);
        g.chi = c.contains("chi") ? DirichletChar(g.M, c["chi"].get<std::vector<i64>>()) : DirichletChar(g.M, {});
        if (c.contains("s")) s = {c["s"].at(0).get<double>(), c["s"].at(1).get<double>()};
        vnorm = c.value("vnorm", 1.0);
      }
      g.validate();
      out["inputs"] = {{"D", g.D}, {"l1", g.l1}, {"l2", g.l2}, {"N", g.N}, {"M", g.M}, {"s", cjson(s)}, {"vnorm", vnorm}};
      out["constants"] = json::array();
      auto add = [&](const char* name, json value, const char* formula) {
        out["constants"].push_back({{"name", name}, {"value", value}, {"formula", formula}});
      };
      add("w_D", w_D(g.D), "number of units of the quadratic order");
      add("siegel_index", siegel_index(g.N), "prod_{p|N} (p+1)(p^2+1)");
      add("gauss_sum", cjson(gauss_sum_dirichlet(g.chi)), "sum_a chi(a) e(a/M)");
      add("arch_lfactor", cjson(arch_lfactor(s, g.l1, g.l2)), "Gamma_C(s+(l1-l2)/2+1/2) Gamma_C(s+(l1+l2)/2-3/2), Gamma_C(s)=2(2pi)^-s Gamma(s)");
      add("epsilon", cjson(global_epsilon(s, g, g.N)), "(-1)^l2 chi(N^2) (G/sqrt M)^4 (M^4 N^2)^(1/2-s)");
      add("average_prefactor", cjson(average_prefactor(s, g, vnorm)),
          "2^-2 |D|^((3-(l1+l2)/2)/2) e^(-2pi sqrt|D|) / (w_D^2 [K:K0(N)]) * M-part * N^(s-1) chi^-1(N) prod (1+p^-2)^-1 * vnorm^2");
      return emit(out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
