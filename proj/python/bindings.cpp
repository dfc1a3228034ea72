#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pmskit/lie.hpp"
#include "pmskit/numerics.hpp"
#include "pmskit/qsym.hpp"
#include "pmskit/relations.hpp"

namespace py = pybind11;
using namespace pmskit;

namespace {

Composition comp_from_obj(const py::object& obj) {
    if (py::isinstance<Composition>(obj))
        return obj.cast<Composition>();
    if (py::isinstance<py::str>(obj)) {
        auto parsed = parse_word(obj.cast<std::string>());
        if (std::holds_alternative<Composition>(parsed))
            return std::get<Composition>(parsed);
        return to_composition(std::get<XYWord>(parsed));
    }
    return Composition(obj.cast<std::vector<int>>());
}

LinComb lincomb_from_obj(const py::object& obj) {
    if (py::isinstance<LinComb>(obj))
        return obj.cast<LinComb>();
    return LinComb(comp_from_obj(obj));
}

py::list lincomb_terms(const LinComb& u) {
    py::list out;
    for (const auto& [w, c] : u.terms())
        out.append(py::make_tuple(w.parts(), to_string(c)));
    return out;
}

py::dict estimate_dict(const ComplexEstimate& e) {
    py::dict d;
    d["value"] = e.value;
    d["error_bound"] = e.error_bound;
    return d;
}

NumericOptions options_from_kwargs(long long trunc_n, double quad_tol, int order_m) {
    NumericOptions opt;
    opt.trunc_n = trunc_n;
    opt.quad_tol = quad_tol;
    opt.order_m = order_m;
    return opt;
}

} // namespace

PYBIND11_MODULE(_pmskit, m) {
    m.doc() = "quasi-shuffle algebra toolkit: harmonic products, kernel "
              "certificates and parametrized multiple series";

    py::class_<Composition>(m, "Composition")
        .def(py::init<std::vector<int>>())
        .def_property_readonly("parts", &Composition::parts)
        .def_property_readonly("weight", &Composition::weight)
        .def_property_readonly("depth", &Composition::depth)
        .def_property_readonly("admissible", &Composition::admissible)
        .def("__repr__", [](const Composition& c) { return "Composition(" + c.to_string() + ")"; })
        .def("__eq__", [](const Composition& a, const Composition& b) { return a == b; })
        .def("__lt__", [](const Composition& a, const Composition& b) { return a < b; });

    py::class_<LinComb>(m, "LinComb")
        .def(py::init<>())
        .def(py::init([](const py::object& w) { return lincomb_from_obj(w); }))
        .def("terms", &lincomb_terms)
        .def("is_zero", &LinComb::is_zero)
        .def("coefficient",
             [](const LinComb& u, const py::object& w) {
                 return to_string(u.coefficient(comp_from_obj(w)));
             })
        .def("__add__", [](const LinComb& a, const LinComb& b) { return a + b; })
        .def("__sub__", [](const LinComb& a, const LinComb& b) { return a - b; })
        .def("__rmul__",
             [](const LinComb& a, long s) {
                 LinComb r = a;
                 r *= make_rational(s);
                 return r;
             })
        .def("__eq__", [](const LinComb& a, const LinComb& b) { return a == b; })
        .def("__repr__", [](const LinComb& u) { return u.to_string(); });

    m.def("word", [](const py::object& w) { return comp_from_obj(w); },
          "parse a word from a list of parts, '1,2' or 'yxx'");
    m.def("enumerate_words", [](int weight, const std::string& space) {
        WordSpace s = space == "yH" ? WordSpace::yH : space == "yHx" ? WordSpace::yHx : WordSpace::H1;
        return enumerate_words(weight, s);
    });

    m.def("stuffle",
          [](const py::object& a, const py::object& b) {
              return stuffle(lincomb_from_obj(a), lincomb_from_obj(b));
          });
    m.def("tshuffle",
          [](const py::object& a, const py::object& b) {
              return tshuffle(lincomb_from_obj(a), lincomb_from_obj(b));
          });
    m.def("sigma", [](int order, const py::object& u) { return sigma_map(order, lincomb_from_obj(u)); });
    m.def("psi", [](const py::object& u) { return psi_map(lincomb_from_obj(u)); });
    m.def("psi_bar", [](const py::object& u) { return psi_bar_map(lincomb_from_obj(u)); });
    m.def("rho", [](const py::object& u) { return rho_map(lincomb_from_obj(u)); });
    m.def("S", [](const py::object& u) { return head_fixed_map(HeadMapName::S, lincomb_from_obj(u)); });
    m.def("beta", [](const py::object& u) { return head_fixed_map(HeadMapName::beta, lincomb_from_obj(u)); });
    m.def("S_tilde",
          [](const py::object& u) { return head_fixed_map(HeadMapName::Stilde, lincomb_from_obj(u)); });
    m.def("iota",
          [](const py::object& u, bool prime) {
              return iota_map(prime ? IotaVariant::prime : IotaVariant::paper, lincomb_from_obj(u));
          },
          py::arg("u"), py::arg("prime") = false);
    m.def("harmonic_regularize", [](const py::object& u) {
        RegDecomposition reg = harmonic_regularize(lincomb_from_obj(u));
        py::list out;
        for (const auto& [j, comb] : reg.parts)
            out.append(py::make_tuple(j, comb));
        return out;
    });

    m.def("kernel_dim", [](const std::string& map, int weight) {
        KernelMap km = map == "psi" ? KernelMap::psi : map == "psibar" ? KernelMap::psi_bar : KernelMap::rho;
        return kernel_of(km, weight).dim();
    });
    m.def("kernel_basis", [](const std::string& map, int weight) {
        KernelMap km = map == "psi" ? KernelMap::psi : map == "psibar" ? KernelMap::psi_bar : KernelMap::rho;
        Subspace<Composition> s = kernel_of(km, weight);
        py::list out;
        for (size_t r = 0; r < s.dim(); ++r)
            out.append(s.element(r));
        return out;
    });
    m.def("verify_kernel_equality", [](int weight) {
        KernelEqualityReport rep = verify_kernel_equality(weight);
        py::dict d;
        d["weight"] = rep.weight;
        d["dim_kernel"] = rep.dim_kernel;
        d["dim_span"] = rep.dim_span;
        d["equal"] = rep.equal;
        return d;
    });
    m.def("decompose_kernel_element", [](const py::object& u) {
        DecompositionCertificate cert = decompose_kernel_element(lincomb_from_obj(u));
        py::list levels;
        for (const DecompositionLevel& level : cert.levels) {
            py::list pairs;
            for (const auto& [a, b, c] : level.pairs)
                pairs.append(py::make_tuple(a, b, to_string(c)));
            levels.append(pairs);
        }
        py::dict d;
        d["levels"] = levels;
        d["replay_matches"] = replay(cert) == cert.input;
        return d;
    });

    m.def("eval_pms",
          [](const py::object& k, std::complex<double> alpha, long long trunc_n, double quad_tol,
             int order_m) {
              return estimate_dict(
                  eval_pms(comp_from_obj(k), alpha, options_from_kwargs(trunc_n, quad_tol, order_m)));
          },
          py::arg("k"), py::arg("alpha") = std::complex<double>(0.0, 0.0),
          py::arg("trunc_n") = 1000000, py::arg("quad_tol") = 1e-9, py::arg("order_m") = 8);
    m.def("eval_hurwitz",
          [](const py::object& k, std::complex<double> alpha, const std::string& variant,
             long long trunc_n) {
              return estimate_dict(eval_hurwitz(
                  comp_from_obj(k), alpha,
                  variant == "weak" ? HurwitzVariant::weak : HurwitzVariant::strict,
                  options_from_kwargs(trunc_n, 1e-9, 8)));
          },
          py::arg("k"), py::arg("alpha") = std::complex<double>(0.0, 0.0),
          py::arg("variant") = "strict", py::arg("trunc_n") = 1000000);
    m.def("z_y",
          [](std::complex<double> alpha, long long trunc_n) {
              return estimate_dict(z_y(alpha, options_from_kwargs(trunc_n, 1e-9, 8)));
          },
          py::arg("alpha"), py::arg("trunc_n") = 1000000);
    m.def("eval_zstar_reg",
          [](const py::object& u, std::complex<double> alpha, long long trunc_n) {
              return estimate_dict(
                  eval_zstar_reg(lincomb_from_obj(u), alpha, options_from_kwargs(trunc_n, 1e-9, 8)));
          },
          py::arg("u"), py::arg("alpha") = std::complex<double>(0.0, 0.0),
          py::arg("trunc_n") = 1000000);
    m.def("eval_K",
          [](const py::object& w, std::complex<double> alpha, const std::string& method,
             long long trunc_n, double quad_tol) {
              return estimate_dict(eval_K(lincomb_from_obj(w), alpha,
                                          method == "quadrature" ? KMethod::quadrature
                                                                 : KMethod::lemma_key,
                                          options_from_kwargs(trunc_n, quad_tol, 8)));
          },
          py::arg("w"), py::arg("alpha"), py::arg("method") = "lemma_key",
          py::arg("trunc_n") = 1000000, py::arg("quad_tol") = 1e-9);
    m.def("eval_L_quadrature",
          [](const py::object& k, std::complex<double> alpha, double quad_tol) {
              return estimate_dict(
                  eval_L_quadrature(comp_from_obj(k), alpha, options_from_kwargs(1000000, quad_tol, 8)));
          },
          py::arg("k"), py::arg("alpha"), py::arg("quad_tol") = 1e-9);
    m.def("zeta", &zeta_int, py::arg("s"));

    m.attr("__version__") = "0.1.0";
}
