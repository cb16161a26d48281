// charp-autos: suites, gallery builders, plane tools and text round trips.
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "charp/error.hpp"
#include "charp/expo.hpp"
#include "charp/gallery.hpp"
#include "charp/plane.hpp"
#include "charp/suites.hpp"

using namespace charp;

namespace {

VarTablePtr plane_table(unsigned p) { return VarTable::make(p, {"x1", "x2"}); }

VarTablePtr xn_table(unsigned p, int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return VarTable::make(p, names);
}

bool usage_error(Errc c) {
  return c == Errc::ParseError || c == Errc::BadParameters || c == Errc::UnknownSuite || c == Errc::UnsupportedPrime ||
         c == Errc::UnsupportedP || c == Errc::BadH;
}

int report_exit(const StarReport& rep) {
  std::cout << rep.to_json() << "\n";
  return rep.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"charp-autos: order-p automorphisms and G_a-actions in characteristic p"};
  app.require_subcommand(1);
  unsigned p = 2;

  // suite
  auto* suite = app.add_subcommand("suite", "verification suites");
  suite->require_subcommand(1);
  auto* suite_list = suite->add_subcommand("list", "list registered suites");
  auto* suite_run = suite->add_subcommand("run", "run one suite");
  std::string suite_name;
  SuiteParams sp;
  bool json = false, timing = false;
  suite_run->add_option("name", suite_name, "suite name")->required();
  suite_run->add_option("--p", sp.p, "characteristic");
  suite_run->add_option("--seed", sp.seed, "generator seed");
  suite_run->add_option("--count", sp.count, "number of random instances");
  suite_run->add_option("--d", sp.d);
  suite_run->add_option("--l", sp.l);
  suite_run->add_option("--m", sp.m);
  suite_run->add_option("--n", sp.n);
  suite_run->add_option("--r", sp.r);
  suite_run->add_flag("--json", json, "JSON report");
  suite_run->add_flag("--timing", timing, "include per-case time");

  // gallery
  auto* gallery = app.add_subcommand("gallery", "explicit constructions with checked reports");
  std::string gname, htext, gtext;
  int gd = 3, gl = 1, gm = 1, gn = 4, gr = 3;
  bool materialize = false;
  gallery->add_option("name", gname, "triangular | nonexp | f-family | rank-r | rank3 | eps")->required();
  gallery->add_option("--p", p);
  gallery->add_option("--d", gd);
  gallery->add_option("--l", gl);
  gallery->add_option("--m", gm);
  gallery->add_option("--n", gn);
  gallery->add_option("--r", gr);
  gallery->add_option("--hpoly", htext, "h on (f, x3, ..., xn) for f-family");
  gallery->add_option("--g", gtext, "g on (w, z1, ..., zl) for nonexp");
  gallery->add_flag("--materialize", materialize, "nonexp: build E^g in full");

  // plane
  auto* plane = app.add_subcommand("plane", "automorphisms of k[x1, x2]");
  plane->require_subcommand(1);
  std::string map_text, t_text = "1", f_text;
  auto* factor = plane->add_subcommand("factor", "tame factorization");
  factor->add_option("map", map_text)->required();
  factor->add_option("--p", p);
  auto* centralize = plane->add_subcommand("centralize", "decompose in the centralizer of (x1 + t, x2)");
  centralize->add_option("map", map_text)->required();
  centralize->add_option("--p", p);
  centralize->add_option("--t", t_text);
  auto* fixed = plane->add_subcommand("fixed", "fixed-point element test against (x1 + f(x2), x2)");
  fixed->add_option("map", map_text)->required();
  fixed->add_option("--f", f_text)->required();
  fixed->add_option("--p", p);
  auto* fpf = plane->add_subcommand("fpf", "restriction verdict for a word over H(f), f a constant");
  std::string word_text, coords_text;
  fpf->add_option("word", word_text)->required();
  fpf->add_option("--f", f_text)->required();
  fpf->add_option("--coords", coords_text);
  fpf->add_option("--p", p);

  // expo
  auto* expo = app.add_subcommand("expo", "exponentialize a triangular order-p map (n = 2 over F_p[u], n = 3 over F_p)");
  bool maubach = false;
  expo->add_option("map", map_text)->required();
  expo->add_option("--p", p);
  expo->add_flag("--maubach", maubach, "print the conjugator only");

  // criteria
  auto* criteria = app.add_subcommand("criteria", "non-exponentiality criteria");
  criteria->require_subcommand(1);
  auto* certify = criteria->add_subcommand("certify", "certificate for the non-exponential family");
  certify->add_option("--p", p);
  certify->add_option("--d", gd);
  certify->add_option("--l", gl);
  certify->add_option("--g", gtext);

  // parse
  auto* parse = app.add_subcommand("parse", "parse and print canonically");
  std::string entity, text;
  parse->add_option("entity", entity, "poly | map | action | word")->required();
  parse->add_option("text", text)->required();
  parse->add_option("--p", p);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (suite_list->parsed()) {
      for (const auto& n : suite_names()) std::cout << n << "  " << suite_description(n) << "\n";
      return 0;
    }
    if (suite_run->parsed()) {
      const SuiteResult r = run_suite(suite_name, sp);
      std::cout << (json ? r.to_json(timing) + "\n" : r.to_text(timing));
      return r.all_pass() ? 0 : 1;
    }
    if (gallery->parsed()) {
      if (gname == "triangular") {
        const auto ex = build_example_triangular(p);
        std::cout << "E = " << ex.action.to_string() << "\n";
        return report_exit(ex.report);
      }
      if (gname == "nonexp") {
        const MultiPoly g = gtext.empty() ? nonexp_default_g(p, gl) : parse_poly(gtext, nonexp_g_table(p, gl));
        const auto r = build_nonexp_family(p, gd, gl, g, materialize);
        std::cout << "E(y) = " << r.fam.Ey.to_string() << "\npolar part of E(x) = " << r.fam.Ex_polar.to_string() << "\n";
        return report_exit(r.report);
      }
      if (gname == "f-family") {
        const auto ft = fh_table(gn, p);
        const MultiPoly h = htext.empty() ? MultiPoly::var(ft, 0) : parse_poly(htext, ft);
        const auto r = build_F_and_Fh(gn, p, h);
        std::cout << "F = " << r.F.to_string() << "\n";
        if (r.Fh) std::cout << "F_h = " << r.Fh->to_string() << "\n";
        return report_exit(r.report);
      }
      if (gname == "rank-r") {
        const auto r = build_rank_r_action(gn, gr, p);
        std::cout << "E = " << r.action.to_string() << "\n" << r.rank.to_string() << "\n";
        return report_exit(r.report);
      }
      if (gname == "rank3") {
        const auto r = build_rank3_family(p, gl, gm);
        std::cout << "class " << to_string(r.cls) << "\n";
        return report_exit(r.report);
      }
      if (gname == "eps") {
        const auto inv = epsilon_invariants(gn, p);
        for (const auto& g : inv.gens) std::cout << g.to_string() << "\n";
        std::cout << inv.c0.schema() << "\n";
        return 0;
      }
      fail(Errc::BadParameters, "unknown gallery entry " + gname);
    }
    if (factor->parsed()) {
      std::cout << jvdk_factor(parse_map(map_text, plane_table(p))).to_string() << "\n";
      return 0;
    }
    if (centralize->parsed()) {
      const Coefficient t = parse_coefficient(t_text, p);
      std::cout << centralizer_decompose(parse_map(map_text, plane_table(p)), t).to_string() << "\n";
      return 0;
    }
    if (fixed->parsed()) {
      const auto vt = plane_table(p);
      const auto r = fixed_point_elem_centralizer(parse_map(map_text, vt), parse_poly(f_text, vt));
      nlohmann::ordered_json j;
      j["member"] = r.has_value();
      if (r) {
        j["a"] = r->a.to_string();
        j["b"] = r->b.to_string();
        j["c"] = r->c.to_string();
        j["g"] = r->g.to_string();
      }
      std::cout << j.dump() << "\n";
      return r ? 0 : 1;
    }
    if (fpf->parsed()) {
      const auto vt = plane_table(p);
      const Coefficient f = parse_coefficient(f_text, p);
      const PolyMap coords = coords_text.empty() ? PolyMap::identity(vt) : parse_map(coords_text, vt);
      std::cout << fpf_witness_check(coords, f, parse_centralizer_word(word_text, vt, f)).to_json() << "\n";
      return 0;
    }
    if (expo->parsed()) {
      const auto n = static_cast<int>(split_tuple(map_text).size());
      const PolyMap sigma = parse_map(map_text, xn_table(p, n));
      if (maubach) {
        std::cout << maubach_conjugator(sigma).to_string() << "\n";
        return 0;
      }
      const auto r = n == 2 ? exponentialize_triangular_n2(sigma) : exponentialize_field_n3(sigma);
      std::cout << r.to_json() << "\n";
      return 0;
    }
    if (certify->parsed()) {
      const MultiPoly g = gtext.empty() ? nonexp_default_g(p, gl) : parse_poly(gtext, nonexp_g_table(p, gl));
      const auto r = build_nonexp_family(p, gd, gl, g);
      const Certificate c = non_exponentiality_certificate(r.fam.data);
      std::cout << c.to_json() << "\n";
      return c.kind == Certificate::Kind::not_exponential ? 0 : 1;
    }
    if (parse->parsed()) {
      std::cout << parse_print(entity, text, p) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return usage_error(e.code()) ? 2 : 1;
  }
  return 2;
}
