// Python bindings for the main operations.  Structured values cross the
// boundary as the same canonical JSON the CLI speaks; matrices and simple
// results use native Python types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "abstorus/errors.hpp"
#include "abstorus/fox.hpp"
#include "abstorus/json_io.hpp"
#include "abstorus/version.hpp"

namespace py = pybind11;
using namespace abstorus;
using io::json;

namespace {

IntMatrix matrix_from_rows(const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<Int>> conv;
    for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
    return IntMatrix::from_rows(conv);
}

std::vector<std::vector<long long>> matrix_to_rows(const IntMatrix& m) {
    std::vector<std::vector<long long>> rows(m.rows(), std::vector<long long>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) rows[i][j] = static_cast<long long>(m.at(i, j));
    return rows;
}

AbsoluteSet set_arg(const std::string& text) { return io::set_from_json(io::parse_text(text)); }

std::string dump(const json& j) { return io::dump_canonical(j); }

LaurentChainComplex complex_arg(const std::string& text) {
    return io::complex_from_json(io::parse_text(text));
}

std::vector<CyclotomicNumber> cyclotomic_point(
    long long level, const std::vector<std::vector<std::string>>& coords) {
    std::vector<CyclotomicNumber> pt;
    for (const auto& c : coords) {
        std::vector<Rational> coeffs;
        for (const auto& s : c) coeffs.push_back(rational_from_string(s));
        pt.push_back(CyclotomicNumber::from_coeffs(level, coeffs));
    }
    return pt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact torsion-coset algebra and cohomology jump loci";
    m.attr("__version__") = kVersion;

    py::register_exception<RankMismatchError>(m, "RankMismatchError", PyExc_ValueError);
    py::register_exception<LevelError>(m, "LevelError", PyExc_ValueError);
    py::register_exception<IrrationalDirectionError>(m, "IrrationalDirectionError",
                                                     PyExc_ValueError);
    py::register_exception<BudgetExceededError>(m, "BudgetExceededError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def(
        "snf",
        [](const std::vector<std::vector<long long>>& rows) {
            auto s = snf(matrix_from_rows(rows));
            return py::make_tuple(matrix_to_rows(s.left), matrix_to_rows(s.diag),
                                  matrix_to_rows(s.right));
        },
        py::arg("matrix"),
        "Smith normal form: returns (left, diag, right) with left*matrix*right = diag");

    m.def(
        "hnf",
        [](const std::vector<std::vector<long long>>& rows) {
            return matrix_to_rows(hnf(matrix_from_rows(rows)));
        },
        py::arg("matrix"), "canonical row Hermite normal form, zero rows dropped");

    m.def(
        "set_op",
        [](const std::string& op, const std::string& a, const std::string& b) {
            AbsoluteSet sa = set_arg(a);
            if (op == "complement") return dump(io::to_json(set_complement(sa)));
            if (op == "closure") return dump(io::to_json(closure(sa)));
            AbsoluteSet sb = set_arg(b);
            if (op == "union") return dump(io::to_json(set_union(sa, sb)));
            if (op == "intersect") return dump(io::to_json(set_intersect(sa, sb)));
            if (op == "difference") return dump(io::to_json(set_difference(sa, sb)));
            throw std::invalid_argument("unknown set op '" + op + "'");
        },
        py::arg("op"), py::arg("a"), py::arg("b") = std::string(),
        "boolean algebra on set JSON strings");

    m.def(
        "set_equal",
        [](const std::string& a, const std::string& b) { return is_equal(set_arg(a), set_arg(b)); },
        py::arg("a"), py::arg("b"));

    m.def(
        "components",
        [](const std::string& s, bool closed_required) {
            std::vector<std::string> out;
            for (const auto& c : irreducible_components(set_arg(s), closed_required))
                out.push_back(dump(io::coset_to_json(c, true)));
            return out;
        },
        py::arg("set"), py::arg("closed_required") = false);

    m.def(
        "galois_orbit",
        [](const std::string& s, long long level) {
            AbsoluteSet sa = set_arg(s);
            std::vector<std::pair<long long, std::string>> orbit;
            for (Int u = 1; u < level; ++u) {
                if (gcd(u, Int(level)) != 1) continue;
                orbit.emplace_back(static_cast<long long>(u),
                                   dump(io::to_json(galois_apply(GaloisElement(Int(level), u), sa))));
            }
            return orbit;
        },
        py::arg("set"), py::arg("level"));

    m.def(
        "galois_invariant",
        [](const std::string& s, long long level) { return galois_invariant(set_arg(s), Int(level)); },
        py::arg("set"), py::arg("level"));

    m.def(
        "invert_set",
        [](const std::string& s) { return dump(io::to_json(invert(set_arg(s)))); },
        py::arg("set"));

    m.def(
        "grid_points",
        [](const std::string& s, long long level) {
            std::vector<std::vector<std::string>> pts;
            for (const auto& p : grid_oracle(set_arg(s), level)) {
                std::vector<std::string> coords;
                for (const auto& c : p.coords) coords.push_back(c.str());
                pts.push_back(std::move(coords));
            }
            return pts;
        },
        py::arg("set"), py::arg("level"));

    m.def(
        "to_dr",
        [](const std::string& coset) {
            return dump(io::to_json(dr_of_betti(io::coset_from_json(io::parse_text(coset)))));
        },
        py::arg("coset"), "torsion coset -> rational affine subspace family");

    m.def(
        "to_betti",
        [](const std::string& subspace) {
            return dump(io::coset_to_json(
                betti_of_dr(io::subspace_from_json(io::parse_text(subspace))), true));
        },
        py::arg("subspace"), "rational affine subspace family -> torsion coset");

    m.def(
        "fox",
        [](const std::string& presentation, long long component) {
            FoxComplex fx = fox_complex(GroupPresentation::parse(presentation));
            json out{{"free_rank", fx.free_rank()},
                     {"torsion", fx.torsion()},
                     {"component_count", fx.component_count()},
                     {"component", component}};
            LaurentChainComplex c = fx.component_by_index(component);
            if (!c.has_rational_coefficients())
                throw LevelError("component has irrational coefficients; use jump_locus on the "
                                 "presentation instead");
            out["complex"] = io::to_json(c);
            return dump(out);
        },
        py::arg("presentation"), py::arg("component") = 0,
        "presentation text -> chain complex JSON plus H_1 data");

    m.def(
        "jump_locus",
        [](const std::string& input, long i, long long k, long long level, long long component,
           unsigned long long grid_ceiling) {
            std::optional<LaurentChainComplex> c;
            if (!input.empty() && input.front() == '{') {
                c = complex_arg(input);
            } else {
                c = fox_complex(GroupPresentation::parse(input)).component_by_index(component);
            }
            return dump(io::to_json(jump_locus_reconstruct(*c, i, k, level, grid_ceiling)));
        },
        py::arg("complex_json_or_presentation"), py::arg("i"), py::arg("k"), py::arg("level"),
        py::arg("component") = 0, py::arg("grid_ceiling") = kDefaultGridCeiling,
        "reconstruct and certify V^i_k up to the search level");

    m.def(
        "verify_locus",
        [](const std::string& complex_json, long i, long long k, const std::string& claimed,
           long long level) {
            Verdict v = verify_absolute(complex_arg(complex_json), i, k, set_arg(claimed), level);
            json out{{"pass", v.pass}, {"detail", v.detail}};
            if (v.witness_point) out["witness_point"] = io::to_json(*v.witness_point);
            if (v.witness_coset) out["witness_coset"] = io::coset_to_json(*v.witness_coset, true);
            return dump(out);
        },
        py::arg("complex_json"), py::arg("i"), py::arg("k"), py::arg("claimed"), py::arg("level"));

    m.def(
        "cohomology_dims",
        [](const std::string& complex_json, const std::vector<std::string>& point) {
            std::vector<QmodZ> coords;
            for (const auto& s : point) coords.push_back(QmodZ::parse(s));
            return cohomology_dims(complex_arg(complex_json), TorsionPoint(std::move(coords)));
        },
        py::arg("complex_json"), py::arg("torsion_point"),
        "dim H^i at a torsion point given by 'a/b' coordinate strings");

    m.def(
        "non_torsion_probe",
        [](const std::string& complex_json, long i, long long k, long long cyclotomic_level,
           const std::vector<std::vector<std::string>>& coords) {
            return non_torsion_probe(complex_arg(complex_json), i, k,
                                     cyclotomic_point(cyclotomic_level, coords));
        },
        py::arg("complex_json"), py::arg("i"), py::arg("k"), py::arg("cyclotomic_level"),
        py::arg("coords"),
        "dim H^i >= k at a general cyclotomic point; coords are coefficient vectors in "
        "Q(zeta_level)");

    m.def(
        "symmetry_check",
        [](const std::string& complex_json, long i, long long k, long long level) {
            Verdict v = symmetry_check(complex_arg(complex_json), i, k, level);
            return py::make_tuple(v.pass, v.detail);
        },
        py::arg("complex_json"), py::arg("i"), py::arg("k"), py::arg("level"));

    m.def(
        "semicontinuity_check",
        [](const std::string& complex_json, long i, size_t samples, long long level) {
            Verdict v = semicontinuity_check(complex_arg(complex_json), i, samples, level);
            return py::make_tuple(v.pass, v.detail);
        },
        py::arg("complex_json"), py::arg("i"), py::arg("samples"), py::arg("level"));
}
