// conifold: verify / emit / classify for the glued mirror fibration.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "conifold/aside.hpp"
#include "conifold/mirror.hpp"
#include "conifold/verify.hpp"

namespace {

using conifold::BasePoint;
using conifold::BrokenLine;
using conifold::ChartAtlas;
using conifold::Rational;
using conifold::Scalar;
using conifold::Vec3;
using conifold::Vec5;
using Json = nlohmann::json;

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw conifold::DomainError("cannot open output file: " + path);
  f << text << "\n";
}

Json scalar_json(const Scalar& s) {
  if (s.is_exact()) return Json(conifold::rational_str(s.rat()));
  return Json(s.as_double());
}

Json vec3_json(const Vec3& v) { return Json::array({scalar_json(v[0]), scalar_json(v[1]), scalar_json(v[2])}); }

Json vec5_json(const Vec5& v) {
  Json j = Json::array();
  for (const auto& s : v) j.push_back(scalar_json(s));
  return j;
}

struct CommonFlags {
  conifold::verify::RunConfig cfg;
  std::string w1 = "1", w2 = "0", delta = "1/4", trunc = "12";
  std::string out;

  void attach(CLI::App* app) {
    app->add_option("-o,--output", out, "write output to file instead of stdout");
    app->add_option("--w1", w1, "wall height w1 (rational)");
    app->add_option("--w2", w2, "wall height w2 (rational)");
    app->add_option("--delta", delta, "tube half-width (rational)");
    app->add_option("--psi-model", cfg.psi_model, "rational | exp");
    app->add_option("--mode", cfg.mode, "exact | float");
    app->add_option("--trunc", trunc, "series truncation order");
    app->add_option("--samples", cfg.samples, "samples per check");
    app->add_option("--seed", cfg.seed, "RNG seed");
  }

  conifold::verify::RunConfig resolve() {
    cfg.w1 = conifold::parse_rational(w1);
    cfg.w2 = conifold::parse_rational(w2);
    cfg.delta = conifold::parse_rational(delta);
    cfg.trunc_order = conifold::parse_rational(trunc);
    cfg.validate();
    return cfg;
  }
};

int cmd_verify(const std::string& suite, conifold::verify::RunConfig cfg,
               const std::string& out) {
  Json report;
  if (suite == "all") {
    report = conifold::verify::run_all(cfg);
  } else {
    report = conifold::verify::run_suite(suite, cfg);
  }
  write_out(out, report.dump(2));
  return conifold::verify::report_ok(report) ? 0 : 1;
}

int cmd_emit(const std::string& target, conifold::verify::RunConfig cfg,
             const std::string& q1s, const std::string& q2s, const std::string& qcsv,
             long n, const std::string& out) {
  ChartAtlas atlas = cfg.make_atlas();
  if (target == "broken-line") {
    Scalar q1(conifold::parse_rational(q1s)), q2(conifold::parse_rational(q2s));
    BrokenLine bl = atlas.broken_line(q1, q2);
    Json j;
    j["q1"] = scalar_json(q1);
    j["q2"] = scalar_json(q2);
    j["corners"] = {{"A", vec3_json(bl.corner_A())}, {"Aprime", vec3_json(bl.corner_Aprime())}};
    Json pts = Json::array();
    Scalar tmax = atlas.P1() + Scalar(2);
    for (Scalar t = Scalar(1, 4); t <= tmax; t = t + Scalar(1, 4))
      pts.push_back({{"t", scalar_json(t)}, {"r", vec3_json(bl.eval(t))}});
    j["points"] = pts;
    write_out(out, j.dump(2));
    return 0;
  }
  if (target == "locus") {
    Json j;
    j["delta1"] = {{"q1", "0"}, {"q3", scalar_json(atlas.walls().w1)}};
    j["delta2"] = {{"q2", "0"}, {"q3", scalar_json(atlas.walls().w2)}};
    Json s1 = Json::array(), s2 = Json::array();
    for (long k = -n / 2; k <= n / 2; ++k) {
      Scalar s = Scalar(Rational(k, 4));
      s1.push_back(vec3_json({Scalar(0), s, atlas.walls().w1}));
      s2.push_back(vec3_json({s, Scalar(0), atlas.walls().w2}));
    }
    j["delta1"]["samples"] = s1;
    j["delta2"]["samples"] = s2;
    write_out(out, j.dump(2));
    return 0;
  }
  if (target == "walls") {
    Json j;
    j["w1"] = scalar_json(atlas.walls().w1);
    j["w2"] = scalar_json(atlas.walls().w2);
    j["delta"] = scalar_json(atlas.walls().delta);
    j["P1"] = scalar_json(atlas.P1());
    j["P2"] = scalar_json(atlas.P2());
    j["walls"] = Json::array({{{"name", "H1+"}, {"q3", scalar_json(atlas.walls().w1)}, {"side", "q1 > 0"}},
                              {{"name", "H1-"}, {"q3", scalar_json(atlas.walls().w1)}, {"side", "q1 < 0"}},
                              {{"name", "H2+"}, {"q3", scalar_json(atlas.walls().w2)}, {"side", "q2 > 0"}},
                              {{"name", "H2-"}, {"q3", scalar_json(atlas.walls().w2)}, {"side", "q2 < 0"}}});
    write_out(out, j.dump(2));
    return 0;
  }
  if (target == "f-image") {
    conifold::mirror::Sampler sampler(cfg.seed, cfg.trunc_order);
    Json rows = Json::array();
    for (long i = 0; i < n; ++i) {
      BasePoint q{sampler.grid(-12, 12), sampler.grid(-12, 12), sampler.grid(-12, 12)};
      rows.push_back({{"q", vec3_json({q.q1, q.q2, q.q3})}, {"j", vec5_json(atlas.j_embed(q))}});
    }
    Json j;
    j["columns"] = {"q = (q1,q2,q3)", "j = (F1,F2,G,q1,q2)"};
    j["rows"] = rows;
    write_out(out, j.dump(2));
    return 0;
  }
  if (target == "fiber") {
    std::array<double, 3> q{0, 0, 0};
    {
      std::istringstream in(qcsv);
      std::string tok;
      for (int i = 0; i < 3; ++i) {
        if (!std::getline(in, tok, ',')) throw conifold::DomainError("--q expects a,b,c");
        q[i] = conifold::parse_rational(tok).convert_to<double>();
      }
    }
    conifold::aside::ASide as(atlas.walls());
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    std::ostringstream csv;
    csv << "u1_re,u1_im,v1_re,v1_im,u2_re,u2_im,v2_re,v2_im,z_re,z_im,residual\n";
    csv.precision(17);
    for (long i = 0; i < n; ++i) {
      conifold::aside::XPoint p = as.fiber_point(q, angle(rng), angle(rng), angle(rng));
      csv << p.u1.real() << ',' << p.u1.imag() << ',' << p.v1.real() << ',' << p.v1.imag()
          << ',' << p.u2.real() << ',' << p.u2.imag() << ',' << p.v2.real() << ','
          << p.v2.imag() << ',' << p.z.real() << ',' << p.z.imag() << ','
          << as.residual(p) << '\n';
    }
    std::string text = csv.str();
    text.pop_back();
    write_out(out, text);
    return 0;
  }
  throw conifold::DomainError("unknown emit target: " + target);
}

int cmd_classify(const std::vector<std::string>& coords, conifold::verify::RunConfig cfg,
                 const std::string& out) {
  if (coords.size() != 5) throw conifold::DomainError("classify expects 5 coordinates");
  ChartAtlas atlas = cfg.make_atlas();
  conifold::mirror::BSide bside(atlas, cfg.trunc_order);
  Vec5 p;
  for (int i = 0; i < 5; ++i) p[i] = Scalar(conifold::parse_rational(coords[i]));
  std::string verdict;
  try {
    BasePoint q = atlas.j_inverse(p);
    if (!(atlas.j_embed(q) == p)) throw conifold::DomainError("not in image");
    verdict = bside.classify_smooth(p) == conifold::mirror::Smoothness::Singular
                  ? "singular"
                  : "smooth";
  } catch (const conifold::DomainError&) {
    verdict = "not-in-image";
  }
  write_out(out, verdict);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PL mirror fibration toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  std::string suites_help = "all";
  for (const auto& s : conifold::verify::suite_names()) suites_help += " | " + s;
  verify->add_option("suite", suite, suites_help);
  flags.attach(verify);

  auto* emit = app.add_subcommand("emit", "emit geometric data");
  std::string target, q1s = "0", q2s = "0", qcsv = "0,0,0";
  long n = 64;
  emit->add_option("target", target, "broken-line | locus | walls | f-image | fiber")
      ->required();
  emit->add_option("--q1", q1s, "broken-line: q1");
  emit->add_option("--q2", q2s, "broken-line: q2");
  emit->add_option("--q", qcsv, "fiber: base point a,b,c");
  emit->add_option("--n", n, "number of rows/samples");
  flags.attach(emit);

  auto* classify = app.add_subcommand("classify", "classify a 5-coordinate image point");
  std::vector<std::string> coords;
  classify->add_option("coords", coords, "F1 F2 G q1 q2 (rationals or decimals)");
  flags.attach(classify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    conifold::verify::RunConfig cfg = flags.resolve();
    if (app.got_subcommand(verify)) return cmd_verify(suite, cfg, flags.out);
    if (app.got_subcommand(emit))
      return cmd_emit(target, cfg, q1s, q2s, qcsv, n, flags.out);
    if (app.got_subcommand(classify)) return cmd_classify(coords, cfg, flags.out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
