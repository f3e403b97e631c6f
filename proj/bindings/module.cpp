#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "npoly/errors.hpp"
#include "npoly/gnp.hpp"
#include "npoly/hodge.hpp"
#include "npoly/lfunction.hpp"
#include "npoly/polygon.hpp"
#include "npoly/polytope.hpp"
#include "npoly/verify.hpp"

namespace py = pybind11;
using namespace npoly;

namespace {

Rat rat_of(const std::string& s) { return parse_rat(s); }

TwistVector twist_of(const std::vector<std::string>& fracs) {
    std::vector<Rat> v;
    for (const auto& f : fracs) v.push_back(rat_of(f));
    return TwistVector(std::move(v));
}

std::vector<std::pair<std::string, long>> runs_of(const ConvexPolygon& p) {
    std::vector<std::pair<std::string, long>> out;
    for (const auto& [s, m] : p.runs()) out.emplace_back(rat_str(s), m);
    return out;
}

DirectSumPolytope polytope_of(const std::vector<std::vector<long>>& basis,
                              const std::vector<std::pair<long, long>>& segments) {
    std::vector<std::vector<Int>> cols;
    for (const auto& c : basis) cols.emplace_back(c.begin(), c.end());
    std::vector<Segment1D> segs;
    for (const auto& [d, dp] : segments) segs.push_back({d, dp});
    return DirectSumPolytope(std::move(cols), std::move(segs));
}

LaurentPolynomial laurent_of(long p, int n,
                             const std::vector<std::pair<std::vector<long>, long>>& terms) {
    std::map<std::vector<long>, long> m;
    for (const auto& [e, c] : terms) m[e] = c;
    return LaurentPolynomial(p, n, std::move(m));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Hodge, Hodge-Stickelberger and generic Newton polygons of "
              "exponential-sum L-functions";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<MathError>(m, "MathError", PyExc_ArithmeticError);
    py::register_exception<DegenerateError>(m, "DegenerateError", PyExc_ArithmeticError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<ConvexPolygon>(m, "ConvexPolygon")
        .def_static("from_slopes",
                    [](const std::vector<std::string>& slopes) {
                        std::vector<Rat> v;
                        for (const auto& s : slopes) v.push_back(rat_of(s));
                        return ConvexPolygon::from_slopes(std::move(v));
                    },
                    py::arg("slopes"))
        .def("runs", &runs_of)
        .def("slopes",
             [](const ConvexPolygon& p) {
                 std::vector<std::string> out;
                 for (const auto& s : p.slopes()) out.push_back(rat_str(s));
                 return out;
             })
        .def("vertices",
             [](const ConvexPolygon& p) {
                 std::vector<std::pair<long, std::string>> out;
                 for (const auto& [x, y] : p.vertices()) out.emplace_back(x, rat_str(y));
                 return out;
             })
        .def("length", &ConvexPolygon::length)
        .def("__eq__", [](const ConvexPolygon& a, const ConvexPolygon& b) { return a == b; })
        .def("__repr__", [](const ConvexPolygon& p) { return polygon_str(p); });

    m.def("product", &product);
    m.def("juxtapose", &juxtapose);
    m.def("average", &average);
    m.def("dominates", &dominates);
    m.def("max_deviation",
          [](const ConvexPolygon& a, const ConvexPolygon& b) { return rat_str(max_deviation(a, b)); });

    py::class_<DirectSumPolytope>(m, "Polytope")
        .def(py::init(&polytope_of), py::arg("basis"), py::arg("segments"))
        .def_static("standard",
                    [](const std::vector<std::pair<long, long>>& segments) {
                        std::vector<Segment1D> segs;
                        for (const auto& [d, dp] : segments) segs.push_back({d, dp});
                        return DirectSumPolytope::standard(std::move(segs));
                    },
                    py::arg("segments"))
        .def("n", &DirectSumPolytope::n)
        .def("lattice_volume",
             [](const DirectSumPolytope& P) { return lattice_volume(P).convert_to<long long>(); })
        .def("weight",
             [](const DirectSumPolytope& P, const std::vector<std::string>& u) -> py::object {
                 std::vector<Rat> v;
                 for (const auto& s : u) v.push_back(rat_of(s));
                 auto w = weight(P, v);
                 if (!w) return py::none();
                 return py::cast(rat_str(*w));
             })
        .def("denominator",
             [](const DirectSumPolytope& P, const std::vector<std::string>& twist) {
                 return denominator(P, twist.empty() ? TwistVector::zero(P.n()) : twist_of(twist));
             },
             py::arg("twist") = std::vector<std::string>{})
        .def("epsilon_set",
             [](const DirectSumPolytope& P) { return epsilon_set(P.basis_columns()); })
        .def("half_points", [](const DirectSumPolytope& P) {
            std::vector<std::vector<long long>> out;
            for (const auto& pt : half_points(P.basis_columns(), epsilon_set(P.basis_columns()))) {
                std::vector<long long> row;
                for (const auto& c : pt) row.push_back(c.convert_to<long long>());
                out.push_back(row);
            }
            return out;
        });

    m.def("direct_sum", &direct_sum);
    m.def(
        "hodge_polygon",
        [](const DirectSumPolytope& P, const std::vector<std::string>& twist) {
            return hodge_polygon(P, twist.empty() ? TwistVector::zero(P.n()) : twist_of(twist));
        },
        py::arg("polytope"), py::arg("twist") = std::vector<std::string>{});
    m.def("poincare_polynomial",
          [](const DirectSumPolytope& P, const std::vector<std::string>& twist) {
              auto pp = poincare_polynomial(
                  P, twist.empty() ? TwistVector::zero(P.n()) : twist_of(twist));
              std::vector<long long> coeffs;
              for (const auto& c : pp.coeffs) coeffs.push_back(c.convert_to<long long>());
              return py::make_tuple(pp.D, coeffs);
          },
          py::arg("polytope"), py::arg("twist") = std::vector<std::string>{});
    m.def("hs_polygon",
          [](const DirectSumPolytope& P, const std::vector<std::string>& rs, long nu) {
              return hs_polygon(P, twist_of(rs), nu);
          },
          py::arg("polytope"), py::arg("rs"), py::arg("nu"));
    m.def("hs_1d_closed_form", &hs_1d_closed_form, py::arg("d"), py::arg("dp"), py::arg("r"),
          py::arg("s"), py::arg("nu"));
    m.def("lambda_stickelberger",
          [](long r, long s, long nu) { return rat_str(lambda_stickelberger(r, s, nu)); });
    m.def("dec_h_decomposition", &dec_h_decomposition);

    m.def("hp_1d", &hp_1d, py::arg("d"), py::arg("dp"));
    m.def("y_values", &y_values, py::arg("d"), py::arg("dp"), py::arg("p"));
    m.def("gnp_1d", &gnp_1d, py::arg("d"), py::arg("dp"), py::arg("p"));
    m.def("convergence_table", [](long d, long dp, long pmax) {
        std::vector<std::pair<long, std::string>> out;
        for (const auto& row : convergence_table(d, dp, pmax))
            out.emplace_back(row.p, rat_str(row.deviation));
        return out;
    });

    m.def(
        "newton_polygon",
        [](long p, int n, const std::vector<std::pair<std::vector<long>, long>>& terms,
           const std::vector<std::string>& chi, long long budget) {
            auto f = laurent_of(p, n, terms);
            CharacterSpec spec =
                chi.empty() ? CharacterSpec::trivial(n) : CharacterSpec{twist_of(chi)};
            auto res = newton_polygon_L(f, spec, budget);
            py::dict out;
            out["np"] = res.np;
            out["hodge_bound"] = res.hodge_bound;
            out["dominates_bound"] = res.dominates_bound;
            out["degree"] = res.degree;
            py::list vals;
            for (const auto& v : res.valuations)
                vals.append(v ? py::object(py::cast(rat_str(*v))) : py::none());
            out["valuations"] = vals;
            return out;
        },
        py::arg("p"), py::arg("n"), py::arg("terms"),
        py::arg("chi") = std::vector<std::string>{}, py::arg("budget") = 10000000LL);

    m.def(
        "run_suite",
        [](const std::string& name, std::uint64_t seed, long long budget) {
            auto rep = verify::run_suite(name, seed, budget);
            py::list checks;
            for (const auto& c : rep.checks)
                checks.append(py::make_tuple(c.name, c.pass, c.detail));
            py::dict out;
            out["suite"] = rep.suite;
            out["all_pass"] = rep.all_pass();
            out["checks"] = checks;
            return out;
        },
        py::arg("suite"), py::arg("seed") = 0, py::arg("budget") = 10000000LL);
    m.def("suite_names", &verify::suite_names);
}
