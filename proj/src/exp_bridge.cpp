#include "abstorus/exp_bridge.hpp"

#include <algorithm>

#include "abstorus/errors.hpp"

namespace abstorus {

namespace {

std::vector<QmodZ> phi_of_translate(const Lattice& characters,
                                    const std::vector<Rational>& translate) {
    std::vector<QmodZ> phi(characters.rank());
    for (size_t i = 0; i < characters.rank(); ++i)
        phi[i] = QmodZ(dot(characters.basis().row(i), translate));
    return phi;
}

std::vector<Rational> canonical_translate(const Lattice& characters,
                                          const std::vector<QmodZ>& phi) {
    std::vector<QmodZ> q = solve_congruence(characters, phi);
    std::vector<Rational> out(q.size());
    for (size_t i = 0; i < q.size(); ++i) out[i] = q[i].value();
    return out;
}

}  // namespace

RationalAffineSubspace make_subspace(size_t b, const std::vector<Rational>& translate,
                                     const IntMatrix& direction_rows) {
    if (translate.size() != b)
        throw RankMismatchError("make_subspace: translate length must equal ambient rank");
    if (direction_rows.rows() > 0 && direction_rows.cols() != b)
        throw RankMismatchError("make_subspace: direction row width must equal ambient rank");
    Lattice dir = saturate(Lattice::from_rows(b, direction_rows));
    Lattice characters = Lattice(b, kernel_rows(dir.basis()));
    std::vector<QmodZ> phi = phi_of_translate(characters, translate);
    return {b, canonical_translate(characters, phi), dir};
}

TorsionCoset betti_of_dr(const RationalAffineSubspace& v) {
    Lattice characters = Lattice(v.ambient_rank, kernel_rows(v.direction.basis()));
    return {characters, phi_of_translate(characters, v.translate)};
}

RationalAffineSubspace dr_of_betti(const TorsionCoset& c) {
    Lattice dir = Lattice(c.ambient_rank(), kernel_rows(c.lattice.basis()));
    return {c.ambient_rank(), canonical_translate(c.lattice, c.phi), dir};
}

Rational parse_direction_entry(const std::string& token) {
    // Recognized irrationality witnesses, rejected with a structured error.
    if (token == "pi" || token == "e")
        throw IrrationalDirectionError(token);
    if (token.rfind("sqrt(", 0) == 0 && token.back() == ')') {
        std::string inner = token.substr(5, token.size() - 6);
        Int k;
        try {
            k = Int(inner);
        } catch (const std::exception&) {
            throw ParseError("malformed sqrt() direction entry: '" + token + "'");
        }
        if (k < 0) throw IrrationalDirectionError(token);
        Int root = boost::multiprecision::sqrt(k);
        if (root * root != k) throw IrrationalDirectionError(token);
        return Rational(root);
    }
    try {
        return rational_from_string(token);
    } catch (const std::exception&) {
        throw ParseError("not a rational direction entry: '" + token + "'");
    }
}

}  // namespace abstorus
