#include "recenters/baxterize.hpp"
#include "recenters/birank.hpp"
#include "recenters/param.hpp"
#include "recenters/rs.hpp"
#include "recenters/symmetry.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace recenters;

namespace {

Flavor flavor_from(const std::string& name) {
    if (name == "rational") return Flavor::Rational;
    if (name == "trig" || name == "trigonometric") return Flavor::Trigonometric;
    throw std::invalid_argument("flavor must be 'rational' or 'trig'");
}

AlgebraSpec spec_from(const Braiding& b, const std::string& flavor, const std::string& charge) {
    const Flavor f = flavor_from(flavor);
    const Scalar c = charge == "critical" ? critical_charge(b, f) : Scalar::parse(charge);
    return AlgebraSpec::rs_type(b, f, c);
}

}  // namespace

PYBIND11_MODULE(recenters, m) {
    m.doc() = "Exact verification of centers in generalized reflection-equation algebras";

    py::class_<Braiding>(m, "Braiding")
        .def_property_readonly("name", &Braiding::name)
        .def_property_readonly("dim", &Braiding::dim)
        .def_property_readonly("kind", [](const Braiding& b) { return kind_name(b.kind()); })
        .def_property_readonly("q", [](const Braiding& b) { return b.q().str(); })
        .def("birank",
             [](const Braiding& b) {
                 const BiRank& br = birank_of(b);
                 return std::make_pair(br.m, br.n);
             })
        .def("lambda_dims", [](const Braiding& b, int kmax) { return lambda_dims(b, kmax); },
             py::arg("kmax") = 4)
        .def("alpha", [](const Braiding& b) { return braiding_alpha(b).str(); })
        .def("__repr__", [](const Braiding& b) { return "<Braiding " + b.name() + ">"; });

    m.def("flip", &make_flip, py::arg("n"));
    m.def("super_flip", &make_super_flip, py::arg("m"), py::arg("n"));
    m.def("dj", [](int n, const std::string& q) { return make_dj(n, Scalar::parse(q)); },
          py::arg("n"), py::arg("q"));
    m.def("q_super",
          [](int mm, int nn, const std::string& q) { return make_q_super(mm, nn, Scalar::parse(q)); },
          py::arg("m"), py::arg("n"), py::arg("q"));
    m.def("by_name", &make_by_name, py::arg("name"));
    m.def("from_file",
          [](const std::string& path, const std::string& kind, const std::string& q) {
              const BraidKind k = kind == "involutive" ? BraidKind::Involutive : BraidKind::Hecke;
              return braiding_from_file(path, k, Scalar::parse(q));
          },
          py::arg("path"), py::arg("kind"), py::arg("q") = "1");

    m.def("symmetry_suite_zero",
          [](const Braiding& b) {
              const BiRank& br = birank_of(b);
              const Scalar alpha = b.q().pow(br.n - br.m) * q_int(br.m - br.n, b.q());
              return check_braid(b.r()).is_zero() && check_kind(b.r(), b.kind(), b.q()).is_zero() &&
                     partial_trace_weighted(b.r(), 2, b.skew().c) == TensorOp::identity(1, b.dim()) &&
                     r_trace(b, DenseMat::identity(b.dim())) == alpha &&
                     b.skew().b * b.skew().c ==
                         TensorOp::identity(1, b.dim()).scaled(b.q().pow(2L * (br.n - br.m))) &&
                     verify_ogievetsky(b).zero();
          },
          py::arg("braiding"), "Braid, minimal polynomial, R-trace, B.C and Ogievetsky checks");

    m.def("critical_charge",
          [](const Braiding& b, const std::string& flavor) {
              return critical_charge(b, flavor_from(flavor)).str();
          },
          py::arg("braiding"), py::arg("flavor"));

    m.def("qybe_zero",
          [](const Braiding& b, const std::string& flavor, int samples, std::uint64_t seed) {
              const CurrentR cr(b, flavor_from(flavor));
              std::vector<std::array<Scalar, 3>> triples;
              for (int i = 0; i < samples; ++i) {
                  const auto v = sample_values(3, seed + static_cast<std::uint64_t>(i));
                  triples.push_back({v[0], v[1], v[2]});
              }
              return check_qybe(cr, triples).zero;
          },
          py::arg("braiding"), py::arg("flavor"), py::arg("samples") = 5, py::arg("seed") = 12345);

    m.def("centrality_condition",
          [](const Braiding& b, const std::string& flavor, const std::string& charge,
             const std::string& u, const std::string& v) {
              const auto [c1, c2] =
                  centrality_condition(spec_from(b, flavor, charge), Scalar::parse(u), Scalar::parse(v));
              return std::make_pair(c1.str(), c2.str());
          },
          py::arg("braiding"), py::arg("flavor"), py::arg("charge"), py::arg("u"), py::arg("v"));

    m.def("first_central_zero",
          [](const Braiding& b, const std::string& flavor, const std::string& charge,
             const std::string& u, const std::string& v) {
              return check_first_central(spec_from(b, flavor, charge), Scalar::parse(u), Scalar::parse(v))
                  .zero;
          },
          py::arg("braiding"), py::arg("flavor"), py::arg("charge"), py::arg("u"), py::arg("v"));

    m.def("higher_central_zero",
          [](const Braiding& b, const std::string& flavor, const std::string& charge, int k,
             const std::string& u, const std::string& v) {
              return check_higher_central(spec_from(b, flavor, charge), k, Scalar::parse(u),
                                          Scalar::parse(v))
                  .zero;
          },
          py::arg("braiding"), py::arg("flavor"), py::arg("charge"), py::arg("k"), py::arg("u"),
          py::arg("v"));

    m.def("push_through_zero",
          [](const Braiding& b, const std::string& flavor, const std::string& charge, int k,
             const std::string& u, const std::string& v) {
              return check_push_through(spec_from(b, flavor, charge), k, Scalar::parse(u),
                                        Scalar::parse(v))
                  .zero;
          },
          py::arg("braiding"), py::arg("flavor"), py::arg("charge"), py::arg("k"), py::arg("u"),
          py::arg("v"));

    m.def("commutator_identity",
          [](const Braiding& b, int k, const std::string& u, const std::string& v) {
              const auto res = check_commutator_identity(
                  AlgebraSpec::rs_type(b, Flavor::Trigonometric, Scalar(1)), k, Scalar::parse(u),
                  Scalar::parse(v));
              return py::make_tuple(res.identity.zero, res.commutator_zero);
          },
          py::arg("braiding"), py::arg("k"), py::arg("u"), py::arg("v"),
          "Returns (identity_holds, power_sums_central) at charge 1");

    py::register_exception<PoleError>(m, "PoleError");
    py::register_exception<SpecialParamsError>(m, "SpecialParamsError");
}
