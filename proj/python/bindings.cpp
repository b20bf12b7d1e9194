#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qident/bivariate.hpp"
#include "qident/classes.hpp"
#include "qident/conjugation.hpp"
#include "qident/identities.hpp"
#include "qident/json_io.hpp"
#include "qident/partitions.hpp"
#include "qident/series.hpp"
#include "qident/summation.hpp"

namespace py = pybind11;
using namespace qident;

namespace {

py::object int_to_py(const Int& v) {
    // route through the decimal string so arbitrary-precision values survive
    PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

SignedMonomial monomial_from(int sign, std::int64_t expo) {
    if (sign == 0) return SignedMonomial::zero();
    return SignedMonomial::q_power(sign, expo);
}

std::vector<int> parts_of(const Partition& p) { return p.parts(); }

py::dict report_to_dict(const VerificationReport& rep) {
    py::dict d;
    d["identity"] = rep.name;
    d["order"] = rep.order;
    d["verdict"] = rep.verdict();
    if (rep.divergence) {
        py::dict div;
        div["exponent"] = rep.divergence->exponent;
        if (rep.divergence->z_degree >= 0) div["z_degree"] = rep.divergence->z_degree;
        div["lhs"] = rep.divergence->lhs;
        div["rhs"] = rep.divergence->rhs;
        d["first_divergence"] = div;
    }
    if (!rep.detail.empty()) d["detail"] = rep.detail;
    return d;
}

SumVariant variant_from(int lemma) {
    switch (lemma) {
        case 1: return SumVariant::L1;
        case 2: return SumVariant::L2;
        case 3: return SumVariant::L3;
        default: throw Error("lemma must be 1, 2 or 3");
    }
}

} // namespace

PYBIND11_MODULE(_qident, m) {
    m.doc() = "exact q-series and partition-class verification engine";

    py::register_exception<Error>(m, "QidentError");

    py::class_<SignedMonomial>(m, "SignedMonomial")
        .def_static("zero", &SignedMonomial::zero)
        .def_static("q_power", &SignedMonomial::q_power, py::arg("sign"), py::arg("expo"))
        .def_property_readonly("is_zero", &SignedMonomial::is_zero)
        .def_property_readonly("sign", &SignedMonomial::sign)
        .def_property_readonly("expo", &SignedMonomial::expo)
        .def("__repr__", &SignedMonomial::to_string);

    py::class_<QSeries>(m, "QSeries")
        .def_static("zero", &QSeries::zero, py::arg("order"))
        .def_static("one", &QSeries::one, py::arg("order"))
        .def_property_readonly("order", &QSeries::order)
        .def("coeff", [](const QSeries& s, std::int64_t e) { return int_to_py(s.coeff(e)); })
        .def("coeffs",
             [](const QSeries& s) {
                 py::dict d;
                 for (const auto& [e, c] : s.terms()) d[py::int_(e)] = int_to_py(c);
                 return d;
             })
        .def("__add__", [](const QSeries& a, const QSeries& b) { return a + b; })
        .def("__sub__", [](const QSeries& a, const QSeries& b) { return a - b; })
        .def("__mul__", [](const QSeries& a, const QSeries& b) { return a * b; })
        .def("inverse", [](const QSeries& a) { return series_invert(a); })
        .def("eq_upto", &series_eq, py::arg("other"), py::arg("upto"))
        .def("__repr__", [](const QSeries& s) { return to_string(s); });

    m.def(
        "monomial",
        [](int sign, std::int64_t expo) { return monomial_from(sign, expo); },
        py::arg("sign"), py::arg("expo"), "signed monomial sign*q^expo; sign 0 gives the zero value");
    m.def("poch_finite", &poch_finite, py::arg("x"), py::arg("step"), py::arg("n"),
          py::arg("order"));
    m.def("poch_infinite", &poch_infinite, py::arg("x"), py::arg("step"), py::arg("order"));

    m.def(
        "enumerate_partitions",
        [](std::int64_t mm) {
            std::vector<std::vector<int>> out;
            for_each_partition(mm, [&](const Partition& p) { out.push_back(p.parts()); });
            return out;
        },
        py::arg("m"));
    m.def("partition_count", [](std::int64_t mm) {
        std::int64_t c = 0;
        for_each_partition(mm, [&](const Partition&) { ++c; });
        return c;
    });

    m.def(
        "class_count",
        [](const std::string& tag, std::int64_t mm, int n, int r, int s, int k) {
            ClassSpec spec = ClassSpec::from_name(tag, n, r, s, k);
            spec.validate();
            return class_count(spec, mm);
        },
        py::arg("tag"), py::arg("m"), py::arg("n") = 0, py::arg("r") = 0, py::arg("s") = 0,
        py::arg("k") = 0);
    m.def(
        "class_members",
        [](const std::string& tag, std::int64_t mm, int n, int r, int s, int k) -> py::object {
            ClassSpec spec = ClassSpec::from_name(tag, n, r, s, k);
            spec.validate();
            if (spec.is_bipartition_class()) {
                py::list out;
                for (const auto& bp : class_members_pairs(spec, mm))
                    out.append(py::make_tuple(bp.pi.parts(), bp.lambda.parts()));
                return out;
            }
            py::list out;
            for (const auto& p : class_members(spec, mm)) out.append(parts_of(p));
            return out;
        },
        py::arg("tag"), py::arg("m"), py::arg("n") = 0, py::arg("r") = 0, py::arg("s") = 0,
        py::arg("k") = 0);
    m.def(
        "class_gf",
        [](const std::string& tag, std::int64_t order, int n, int r, int s, int k) {
            ClassSpec spec = ClassSpec::from_name(tag, n, r, s, k);
            spec.validate();
            return class_gf(spec, order);
        },
        py::arg("tag"), py::arg("order"), py::arg("n") = 0, py::arg("r") = 0, py::arg("s") = 0,
        py::arg("k") = 0);

    m.def(
        "k_block_conjugate",
        [](const std::vector<int>& parts, int k) {
            return parts_of(k_block_conjugate(Partition(parts), k));
        },
        py::arg("parts"), py::arg("k"));
    m.def(
        "lemma1_forward",
        [](const std::vector<int>& parts, int k, int r, int n) {
            return parts_of(lemma1_forward(Partition(parts), {k, r, n}));
        },
        py::arg("parts"), py::arg("k"), py::arg("r"), py::arg("n"));
    m.def(
        "lemma1_inverse",
        [](const std::vector<int>& parts, int k, int r, int n) {
            return parts_of(lemma1_inverse(Partition(parts), {k, r, n}));
        },
        py::arg("parts"), py::arg("k"), py::arg("r"), py::arg("n"));

    m.def(
        "nested_sum",
        [](int lemma, std::int64_t n, std::int64_t mm, int b_sign, std::int64_t b_exp,
           std::int64_t order, std::int64_t base) {
            SumOptions opts;
            opts.base = base;
            return nested_sum(variant_from(lemma), n, mm, monomial_from(b_sign, b_exp), order,
                              opts);
        },
        py::arg("lemma"), py::arg("n"), py::arg("m"), py::arg("b_sign"), py::arg("b_exp"),
        py::arg("order"), py::arg("base") = 1);
    m.def(
        "telescope_eval",
        [](int lemma, std::int64_t n, std::int64_t mm, int b_sign, std::int64_t b_exp,
           std::int64_t order, std::int64_t base) {
            return telescope_eval(variant_from(lemma), n, mm, monomial_from(b_sign, b_exp), order,
                                  base);
        },
        py::arg("lemma"), py::arg("n"), py::arg("m"), py::arg("b_sign"), py::arg("b_exp"),
        py::arg("order"), py::arg("base") = 1);
    m.def(
        "summation_rhs",
        [](std::int64_t n, std::int64_t mm, int b_sign, std::int64_t b_exp, std::int64_t order,
           std::int64_t base) {
            return summation_rhs(n, mm, monomial_from(b_sign, b_exp), order, base);
        },
        py::arg("n"), py::arg("m"), py::arg("b_sign"), py::arg("b_exp"), py::arg("order"),
        py::arg("base") = 1);

    m.def("identity_names", [] { return identity_names(); });
    m.def("theorem_names", [] { return theorem_names(); });
    m.def(
        "verify_identity",
        [](const std::string& tag, std::int64_t order, int r, int s, int k, int a_sign,
           std::int64_t a_exp, int b_sign, std::int64_t b_exp, std::int64_t z_order) {
            IdentityId id{IdentityId::tag_from_name(tag)};
            id.r = r;
            id.s = s;
            id.k = k;
            id.a = monomial_from(a_sign, a_exp);
            id.b = monomial_from(b_sign, b_exp);
            id.z_order = z_order;
            if (order <= 0) order = default_order(id.tag);
            return report_to_dict(verify_identity(id, order));
        },
        py::arg("tag"), py::arg("order") = 0, py::arg("r") = 0, py::arg("s") = 0, py::arg("k") = 0,
        py::arg("a_sign") = 0, py::arg("a_exp") = 0, py::arg("b_sign") = 0, py::arg("b_exp") = 0,
        py::arg("z_order") = 12);
    m.def(
        "verify_identity_grid",
        [](const std::string& tag, std::int64_t order) {
            IdentityTag t = IdentityId::tag_from_name(tag);
            if (order <= 0) order = default_order(t);
            py::list out;
            for (const auto& id : default_grid(t))
                out.append(report_to_dict(verify_identity(id, order)));
            return out;
        },
        py::arg("tag"), py::arg("order") = 0);
    m.def(
        "verify_partition_theorem",
        [](const std::string& tag, std::int64_t m_max) {
            return report_to_dict(verify_partition_theorem(theorem_from_name(tag), m_max));
        },
        py::arg("tag"), py::arg("m_max"));
}
