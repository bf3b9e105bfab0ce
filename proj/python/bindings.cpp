// pyconifold: python bindings for the main operations.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "conifold/mirror.hpp"
#include "conifold/verify.hpp"

namespace py = pybind11;
using namespace conifold;

namespace {

Scalar to_scalar(const std::string& s) { return Scalar(parse_rational(s)); }

std::vector<std::string> vec5_str(const Vec5& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

std::vector<std::string> vec3_str(const Vec3& v) {
  return {v[0].str(), v[1].str(), v[2].str()};
}

ChartAtlas make_atlas(const std::string& w1, const std::string& w2,
                      const std::string& delta, const std::string& psi_model) {
  std::shared_ptr<const PsiModel> model;
  if (psi_model == "exp")
    model = std::make_shared<ExpPsiModel>();
  else if (psi_model == "rational")
    model = std::make_shared<RationalPsiModel>();
  else
    throw DomainError("psi_model must be rational or exp");
  return ChartAtlas(WallConfig{to_scalar(w1), to_scalar(w2), to_scalar(delta)}, model);
}

verify::RunConfig make_config(const std::string& w1, const std::string& w2,
                              const std::string& delta, const std::string& psi_model,
                              const std::string& mode, long samples,
                              std::uint64_t seed) {
  verify::RunConfig cfg;
  cfg.w1 = parse_rational(w1);
  cfg.w2 = parse_rational(w2);
  cfg.delta = parse_rational(delta);
  cfg.psi_model = psi_model;
  cfg.mode = mode;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.validate();
  return cfg;
}

}  // namespace

PYBIND11_MODULE(pyconifold, mod) {
  mod.doc() = "PL mirror fibration toolkit";

  py::register_exception<DomainError>(mod, "DomainError");
  py::register_exception<IndeterminateForm>(mod, "IndeterminateForm");
  py::register_exception<IndeterminateValuation>(mod, "IndeterminateValuation");

  py::class_<NovikovNum>(mod, "Novikov")
      .def_static("monomial",
                  [](const std::string& coeff, const std::string& expo) {
                    return NovikovNum::monomial(GaussianRational(parse_rational(coeff)),
                                                to_scalar(expo));
                  },
                  py::arg("coeff"), py::arg("expo"))
      .def("__add__", &NovikovNum::operator+)
      .def("__sub__",
           [](const NovikovNum& a, const NovikovNum& b) { return a - b; })
      .def("__mul__", &NovikovNum::operator*)
      .def("inv",
           [](const NovikovNum& a, const std::string& order) {
             return a.inv(ExtScalar(to_scalar(order)));
           },
           py::arg("order"))
      .def("val",
           [](const NovikovNum& a) {
             ExtScalar v = a.val();
             return v.is_pos_inf() ? std::string("+inf") : v.finite().str();
           })
      .def("equal_upto_common_trunc", &NovikovNum::equal_upto_common_trunc)
      .def("__str__", &NovikovNum::str)
      .def("__repr__", &NovikovNum::str);

  py::class_<ChartAtlas>(mod, "Atlas")
      .def(py::init([](const std::string& w1, const std::string& w2,
                       const std::string& delta, const std::string& psi_model) {
             return make_atlas(w1, w2, delta, psi_model);
           }),
           py::arg("w1") = "1", py::arg("w2") = "0", py::arg("delta") = "1/4",
           py::arg("psi_model") = "rational")
      .def("psi",
           [](const ChartAtlas& a, const std::string& q1, const std::string& q2,
              const std::string& q3) {
             return a.psi({to_scalar(q1), to_scalar(q2), to_scalar(q3)}).str();
           })
      .def("j_embed",
           [](const ChartAtlas& a, const std::string& q1, const std::string& q2,
              const std::string& q3) {
             return vec5_str(a.j_embed({to_scalar(q1), to_scalar(q2), to_scalar(q3)}));
           })
      .def("j_inverse",
           [](const ChartAtlas& a, const std::vector<std::string>& p) {
             if (p.size() != 5) throw DomainError("j_inverse expects 5 coordinates");
             Vec5 v;
             for (int i = 0; i < 5; ++i) v[i] = to_scalar(p[i]);
             BasePoint q = a.j_inverse(v);
             return std::vector<std::string>{q.q1.str(), q.q2.str(), q.q3.str()};
           })
      .def("broken_line_eval",
           [](const ChartAtlas& a, const std::string& q1, const std::string& q2,
              const std::string& t) {
             return vec3_str(a.broken_line_eval(to_scalar(q1), to_scalar(q2), to_scalar(t)));
           })
      .def("chart_contains",
           [](const ChartAtlas& a, int k, const std::string& q1, const std::string& q2,
              const std::string& q3) {
             return a.chart_contains(k, {to_scalar(q1), to_scalar(q2), to_scalar(q3)});
           });

  mod.def("classify",
          [](const std::vector<std::string>& coords) {
            if (coords.size() != 5) throw DomainError("classify expects 5 coordinates");
            ChartAtlas atlas = make_atlas("1", "0", "1/4", "rational");
            mirror::BSide bside(atlas);
            Vec5 p;
            for (int i = 0; i < 5; ++i) p[i] = to_scalar(coords[i]);
            try {
              BasePoint q = atlas.j_inverse(p);
              bool same = true;
              Vec5 back = atlas.j_embed(q);
              for (int i = 0; i < 5; ++i) same = same && back[i] == p[i];
              if (!same) return std::string("not-in-image");
              return std::string(bside.classify_smooth(p) ==
                                         mirror::Smoothness::Singular
                                     ? "singular"
                                     : "smooth");
            } catch (const DomainError&) {
              return std::string("not-in-image");
            }
          },
          "classify a 5-coordinate image point as smooth/singular/not-in-image");

  mod.def("verify_suite",
          [](const std::string& suite, const std::string& w1, const std::string& w2,
             const std::string& delta, const std::string& psi_model,
             const std::string& mode, long samples, std::uint64_t seed) {
            verify::RunConfig cfg =
                make_config(w1, w2, delta, psi_model, mode, samples, seed);
            return verify::run_suite(suite, cfg).dump();
          },
          py::arg("suite"), py::arg("w1") = "1", py::arg("w2") = "0",
          py::arg("delta") = "1/4", py::arg("psi_model") = "rational",
          py::arg("mode") = "exact", py::arg("samples") = 200, py::arg("seed") = 1,
          "run one verification suite; returns the JSON report as a string");

  mod.def("suite_names", [] { return verify::suite_names(); });
}
