// pybind11 bindings over the exact core. Rationals cross the boundary as
// canonical "p/q" strings so no exactness is lost.

#include "svir/checks.hpp"
#include "svir/chiral.hpp"
#include "svir/classification.hpp"
#include "svir/fusion.hpp"
#include "svir/jsonio.hpp"
#include "svir/module.hpp"
#include "svir/superalgebra.hpp"
#include "svir/unitarity.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace svir;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& item : j)
                out.append(json_to_py(item));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

SectorType type_from_string(const std::string& s) {
    if (s == "NS" || s == "ns")
        return SectorType::NS;
    if (s == "R" || s == "r")
        return SectorType::R;
    throw std::invalid_argument("sector type must be 'NS' or 'R'");
}

std::tuple<std::string, std::string, std::string> chq_tuple(const CHQ& w) {
    return {w.c.str(), w.h.str(), w.q.str()};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact N=2 super-Virasoro discrete-series computations";
    m.attr("__version__") = "0.1.0";

    // -- scalars ---------------------------------------------------------
    m.def("rational", [](const std::string& s) { return Rational::parse(s).str(); },
          "normalize a rational string p/q");
    m.def("phase_from_exponent",
          [](const std::string& x) { return phase_from_exponent(Rational::parse(x)).exponent().str(); },
          "reduce an exponent mod 1; result is the exponent of exp(2*pi*i*x)");
    m.def("phase_is_one",
          [](const std::string& x) { return phase_from_exponent(Rational::parse(x)).is_one(); });

    // -- superalgebra ------------------------------------------------------
    m.def(
        "bracket",
        [](const std::string& fam_a, const std::string& idx_a, const std::string& fam_b,
           const std::string& idx_b, const std::string& t) {
            GeneratorId a{family_from_tag(fam_a), Rational::parse(idx_a)};
            GeneratorId b{family_from_tag(fam_b), Rational::parse(idx_b)};
            return json_to_py(to_json(bracket(a, b, Rational::parse(t))));
        },
        py::arg("fam_a"), py::arg("idx_a"), py::arg("fam_b"), py::arg("idx_b"),
        py::arg("t") = "0",
        "super-bracket of two generators of SVir^{N=2,t}");
    m.def(
        "flow_generator",
        [](const std::string& t, const std::string& fam, const std::string& idx) {
            return json_to_py(to_json(flow(Rational::parse(t),
                                           {family_from_tag(fam), Rational::parse(idx)})));
        },
        "spectral flow eta_t of a generator");

    // -- unitarity ----------------------------------------------------------
    m.def("discrete_c", [](long n) { return discrete_c(n).str(); });
    m.def("hq_ns", [](long n, long l, long mm) { return chq_tuple(hq_ns({n, l, mm})); });
    m.def("hq_r", [](long n, long l, long mm) { return chq_tuple(hq_r({n, l, mm})); });
    m.def("enumerate_labels", [](long n, const std::string& type) {
        std::vector<std::pair<long, long>> out;
        for (const auto& lab : enumerate_labels(n, type_from_string(type)))
            out.emplace_back(lab.l, lab.m);
        return out;
    });
    m.def("region_check", [](const std::string& type, const std::string& c, const std::string& h,
                             const std::string& q) {
        auto res = region_check(type_from_string(type), Rational::parse(c), Rational::parse(h),
                                Rational::parse(q));
        py::dict out;
        out["region"] = region_tag(res.region);
        out["sufficient"] = res.sufficient;
        py::list labels;
        for (const auto& lab : res.labels)
            labels.append(py::make_tuple(lab.l, lab.m));
        out["labels"] = labels;
        return out;
    });

    // -- modules -------------------------------------------------------------
    m.def(
        "module_summary",
        [](const std::string& c, const std::string& h, const std::string& q,
           const std::string& type, const std::string& cutoff) {
            HighestWeight hw{Rational::parse(c), Rational::parse(h), Rational::parse(q),
                             type_from_string(type)};
            ModuleHandle mod(hw, Rational::parse(cutoff));
            return json_to_py(module_summary_json(mod));
        },
        py::arg("c"), py::arg("h"), py::arg("q"), py::arg("type") = "NS",
        py::arg("cutoff") = "2");

    // -- fusion ----------------------------------------------------------------
    m.def("canonical_sector", [](long n, long l, long mm, long s) {
        CosetSector x = canonical(n, l, mm, s);
        return py::make_tuple(x.l, x.m, x.s);
    });
    m.def("fuse", [](long n, std::tuple<long, long, long> a, std::tuple<long, long, long> b) {
        auto [la, ma, sa] = a;
        auto [lb, mb, sb] = b;
        FusionVector prod = fuse(canonical(n, la, ma, sa), canonical(n, lb, mb, sb));
        py::list out;
        for (const auto& [sec, mult] : prod)
            out.append(py::make_tuple(py::make_tuple(sec.l, sec.m, sec.s), mult));
        return out;
    });
    m.def("fuse_ns", [](long n, std::pair<long, long> a, std::pair<long, long> b) {
        NSFusionVector prod = fuse_ns(canonical_ns(n, a.first, a.second),
                                      canonical_ns(n, b.first, b.second));
        py::list out;
        for (const auto& [sec, mult] : prod)
            out.append(py::make_tuple(py::make_tuple(sec.l, sec.m), mult));
        return out;
    });
    m.def("statistics_phase", [](long n, long l, long mm, long s) {
        return statistics_phase(canonical(n, l, mm, s)).exponent().str();
    });
    m.def("is_dim_one", [](long n, long l, long mm, long s) {
        return is_dim_one(canonical(n, l, mm, s));
    });
    m.def("quantum_dimension", [](long n, long l, long mm, long s) {
        return quantum_dimension_float(canonical(n, l, mm, s));
    });
    m.def("sector_order", [](long n, long l, long mm, long s) {
        return order_of(canonical(n, l, mm, s));
    });

    // -- classification -----------------------------------------------------------
    m.def("dim1_group", [](long n) { return json_to_py(to_json(dim1_group(n))); });
    m.def("phase_one_maximal_subgroups", [](long n) {
        py::list out;
        for (const auto& g : phase_one_maximal_subgroups(n))
            out.append(json_to_py(to_json(g)));
        return out;
    });
    m.def("case_formula_prediction",
          [](long n) { return json_to_py(to_json(case_formula_prediction(n))); });
    m.def("classify", [](long n) {
        py::list out;
        for (const auto& rec : classify(n))
            out.append(json_to_py(to_json(rec)));
        return out;
    });

    // -- chiral / flow / index -------------------------------------------------
    m.def("chiral_labels", [](long n) {
        std::vector<std::pair<long, long>> out;
        for (const auto& lab : chiral_labels(n))
            out.emplace_back(lab.l, lab.m);
        return out;
    });
    m.def("ramond_vacuum_sectors", [](long n) {
        std::vector<std::pair<long, long>> out;
        for (const auto& lab : ramond_vacuum_sectors(n))
            out.emplace_back(lab.l, lab.m);
        return out;
    });
    m.def("chiral_product", [](long n, std::map<long, long> x, std::map<long, long> y) {
        return chiral_product(x, y, n);
    });
    m.def(
        "flow_lowest_vector",
        [](const std::string& c, const std::string& h, const std::string& q,
           const std::string& t) {
            auto [h2, q2] = flow_lowest_vector(Rational::parse(c), Rational::parse(h),
                                               Rational::parse(q), Rational::parse(t));
            return py::make_tuple(h2.str(), q2.str());
        });
    m.def(
        "flow_discrete_label",
        [](long n, std::pair<long, long> label, const std::string& type, const std::string& t) {
            DiscreteLabel lab{n, label.first, label.second};
            auto out = flow_discrete_label(n, lab, type_from_string(type), Rational::parse(t));
            return py::make_tuple(out.l, out.m);
        },
        py::arg("n"), py::arg("label"), py::arg("type") = "NS", py::arg("t") = "-1/2");
    m.def(
        "index_pairing_matrix",
        [](long n, const std::string& cutoff) {
            return index_pairing_matrix(n, Rational::parse(cutoff));
        },
        py::arg("n"), py::arg("cutoff") = "2");

    // -- verification ------------------------------------------------------------
    m.def(
        "verify_all",
        [](long max_n) {
            CheckOptions opts;
            opts.max_n = max_n;
            py::list out;
            for (const auto& r : run_all_checks(opts))
                out.append(json_to_py(to_json(r)));
            return out;
        },
        py::arg("max_n") = 0);
}
