#include "abstorus/json_io.hpp"

#include <limits>

#include "abstorus/errors.hpp"

namespace abstorus::io {

namespace {

json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return static_cast<long long>(v);
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError("not an integer: '" + j.get<std::string>() + "'");
        }
    }
    throw ParseError("expected an integer (number or string), got " + std::string(j.type_name()));
}

QmodZ qmodz_from_json(const json& j) {
    if (j.is_number_integer()) return QmodZ(Rational(j.get<long long>()));
    if (j.is_string()) {
        try {
            return QmodZ::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("expected a rational \"a/b\" string");
}

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<std::vector<Int>> int_rows_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of integer rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw ParseError("expected an integer row");
        std::vector<Int> row;
        for (const auto& x : r) row.push_back(int_from_json(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

json int_rows_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

json to_json(const IntMatrix& m) {
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", int_rows_to_json(m)}};
}

IntMatrix matrix_from_json(const json& j) {
    size_t rows = require(j, "rows").get<size_t>();
    size_t cols = require(j, "cols").get<size_t>();
    auto entries = int_rows_from_json(require(j, "entries"));
    if (entries.size() != rows) throw ParseError("entry row count does not match 'rows'");
    IntMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) throw ParseError("entry row width does not match 'cols'");
        for (size_t c = 0; c < cols; ++c) m.at(i, c) = entries[i][c];
    }
    return m;
}

json to_json(const SnfDecomposition& s) {
    return json{{"left", to_json(s.left)}, {"diag", to_json(s.diag)}, {"right", to_json(s.right)}};
}

json to_json(const TorsionPoint& p) {
    json coords = json::array();
    for (const auto& c : p.coords) coords.push_back(c.str());
    return json{{"coords", coords}};
}

TorsionPoint point_from_json(const json& j) {
    std::vector<QmodZ> coords;
    for (const auto& c : require(j, "coords")) coords.push_back(qmodz_from_json(c));
    return TorsionPoint(std::move(coords));
}

json coset_to_json(const TorsionCoset& c, bool with_ambient) {
    json phi = json::array();
    for (const auto& v : c.phi) phi.push_back(v.str());
    json out{{"lattice", int_rows_to_json(c.lattice.basis())}, {"phi", phi}};
    if (with_ambient) out["ambient_rank"] = c.ambient_rank();
    return out;
}

TorsionCoset coset_from_json(const json& j, size_t ambient_rank) {
    auto rows = int_rows_from_json(require(j, "lattice"));
    const json& phi_json = require(j, "phi");
    if (!phi_json.is_array() || phi_json.size() != rows.size())
        throw ParseError("coset needs one phi value per lattice row");
    std::vector<std::pair<std::vector<Int>, QmodZ>> chars;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != ambient_rank)
            throw ParseError("lattice row width does not match the ambient rank");
        chars.emplace_back(rows[i], qmodz_from_json(phi_json[i]));
    }
    auto cosets = cosets_from_characters(ambient_rank, chars);
    if (cosets.empty()) throw ParseError("coset character system is inconsistent (empty set)");
    if (cosets.size() > 1)
        throw ParseError("character system cuts out " + std::to_string(cosets.size()) +
                         " cosets; a single irreducible coset (saturated lattice) is required");
    return cosets[0];
}

TorsionCoset coset_from_json(const json& j) {
    return coset_from_json(j, require(j, "ambient_rank").get<size_t>());
}

json to_json(const AbsoluteSet& s) {
    json cells = json::array();
    for (const auto& c : s.cells()) {
        json excl = json::array();
        for (const auto& d : c.excluded) excl.push_back(coset_to_json(d, false));
        cells.push_back(json{{"positive", coset_to_json(c.positive, false)}, {"excluded", excl}});
    }
    return json{{"ambient_rank", s.ambient_rank()}, {"cells", cells}};
}

AbsoluteSet set_from_json(const json& j) {
    size_t n = require(j, "ambient_rank").get<size_t>();
    std::vector<Cell> cells;
    for (const auto& cj : require(j, "cells")) {
        TorsionCoset pos = coset_from_json(require(cj, "positive"), n);
        std::vector<TorsionCoset> excl;
        if (cj.contains("excluded"))
            for (const auto& dj : cj.at("excluded")) excl.push_back(coset_from_json(dj, n));
        try {
            cells.emplace_back(std::move(pos), std::move(excl));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    return AbsoluteSet(n, std::move(cells));
}

json to_json(const RationalAffineSubspace& v) {
    json trans = json::array();
    for (const auto& t : v.translate) trans.push_back(rational_to_string(t));
    return json{{"ambient_rank", v.ambient_rank},
                {"translate", trans},
                {"direction", int_rows_to_json(v.direction.basis())}};
}

RationalAffineSubspace subspace_from_json(const json& j) {
    size_t b = require(j, "ambient_rank").get<size_t>();
    std::vector<Rational> translate;
    for (const auto& t : require(j, "translate")) {
        if (t.is_number_integer())
            translate.push_back(Rational(t.get<long long>()));
        else if (t.is_string())
            translate.push_back(rational_from_string(t.get<std::string>()));
        else
            throw ParseError("translate entries must be integers or \"a/b\" strings");
    }
    const json& dir = require(j, "direction");
    if (!dir.is_array()) throw ParseError("direction must be an array of rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& rj : dir) {
        if (!rj.is_array()) throw ParseError("direction rows must be arrays");
        std::vector<Rational> raw;
        for (const auto& x : rj) {
            if (x.is_number_integer())
                raw.push_back(Rational(x.get<long long>()));
            else if (x.is_string())
                raw.push_back(parse_direction_entry(x.get<std::string>()));
            else
                throw ParseError("direction entries must be integers or strings");
        }
        Int den = 1;
        for (const auto& r : raw) den = lcm(den, denominator(r));
        std::vector<Int> row;
        for (const auto& r : raw) row.push_back(numerator(r * Rational(den)));
        rows.push_back(std::move(row));
    }
    IntMatrix dm = rows.empty() ? IntMatrix(0, b) : IntMatrix::from_rows(rows);
    try {
        return make_subspace(b, translate, dm);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

json to_json(const LaurentChainComplex& c) {
    if (!c.has_rational_coefficients())
        throw std::invalid_argument(
            "complex serialization requires rational coefficients; torsion-component twists are "
            "in-memory only");
    json diffs = json::array();
    for (const auto& d : c.differentials()) {
        json entries = json::array();
        for (size_t r = 0; r < d.rows; ++r)
            for (size_t col = 0; col < d.cols; ++col) {
                const CycLaurent& p = d.at(r, col);
                if (p.is_zero()) continue;
                json terms = json::array();
                for (const auto& [e, coef] : p.terms()) {
                    json exps = json::array();
                    for (long long x : e) exps.push_back(x);
                    Rational rc = coef.rational_value();
                    json cj = denominator(rc) == 1 ? int_to_json(numerator(rc))
                                                   : json(rational_to_string(rc));
                    terms.push_back(json::array({exps, cj}));
                }
                entries.push_back(json::array({r, col, terms}));
            }
        diffs.push_back(json{{"rows", d.rows}, {"cols", d.cols}, {"entries", entries}});
    }
    return json{{"vars", c.vars()}, {"ranks", c.ranks()}, {"differentials", diffs}};
}

LaurentChainComplex complex_from_json(const json& j) {
    int vars = require(j, "vars").get<int>();
    std::vector<size_t> ranks = require(j, "ranks").get<std::vector<size_t>>();
    std::vector<Mat<RatLaurent>> diffs;
    for (const auto& dj : require(j, "differentials")) {
        size_t rows = require(dj, "rows").get<size_t>();
        size_t cols = require(dj, "cols").get<size_t>();
        Mat<RatLaurent> m(rows, cols, RatLaurent(vars));
        for (const auto& ej : require(dj, "entries")) {
            if (!ej.is_array() || ej.size() != 3) throw ParseError("entry must be [row, col, terms]");
            size_t r = ej[0].get<size_t>(), c = ej[1].get<size_t>();
            if (r >= rows || c >= cols) throw ParseError("entry position out of range");
            RatLaurent p(vars);
            for (const auto& tj : ej[2]) {
                if (!tj.is_array() || tj.size() != 2)
                    throw ParseError("term must be [exponents, coefficient]");
                std::vector<long long> e = tj[0].get<std::vector<long long>>();
                if (e.size() != static_cast<size_t>(vars))
                    throw ParseError("exponent vector length does not match 'vars'");
                Rational coef;
                if (tj[1].is_number_integer())
                    coef = Rational(tj[1].get<long long>());
                else if (tj[1].is_string())
                    coef = rational_from_string(tj[1].get<std::string>());
                else
                    throw ParseError("coefficient must be an integer or \"a/b\" string");
                p.add_term(e, coef);
            }
            m.at(r, c) = std::move(p);
        }
        diffs.push_back(std::move(m));
    }
    try {
        return make_complex(vars, ranks, diffs);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

json to_json(const JumpLocusReport& r) {
    json certs = json::array();
    for (const auto& c : r.certificates) {
        certs.push_back(json{{"coset", coset_to_json(c.coset, false)},
                             {"rank_d_i", c.rank_d_i},
                             {"rank_d_prev", c.rank_d_prev},
                             {"generic_dim", c.generic_dim}});
    }
    return json{{"i", r.i},
                {"k", r.k},
                {"search_level", r.search_level},
                {"locus", to_json(r.locus)},
                {"certificates", certs},
                {"completeness_note", r.completeness_note}};
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        int line = 1, col = 1;
        for (size_t i = 0; i < byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("invalid JSON: " + std::string(e.what()), line, col);
    }
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace abstorus::io
