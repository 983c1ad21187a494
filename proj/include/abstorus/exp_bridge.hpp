#pragma once

#include <vector>

#include "abstorus/torus.hpp"

namespace abstorus {

/// The family alpha + V_C + Z^b of parallel affine subspaces of C^b, with V
/// defined over Q; exactly the data that descends through the coordinate-wise
/// exponential exp(2*pi*i*.) to one torsion coset.  Stored canonically: the
/// direction as the saturated lattice spanning V over Z, the translate as the
/// deterministic congruence-solving representative with coordinates in [0,1).
struct RationalAffineSubspace {
    size_t ambient_rank;
    std::vector<Rational> translate;
    Lattice direction;

    RationalAffineSubspace(size_t b, std::vector<Rational> trans, Lattice dir)
        : ambient_rank(b), translate(std::move(trans)), direction(std::move(dir)) {}

    size_t dim() const { return direction.rank(); }
    bool operator==(const RationalAffineSubspace& o) const {
        return ambient_rank == o.ambient_rank && translate == o.translate &&
               direction == o.direction;
    }
};

/// Canonicalizing constructor from raw data: saturates the direction span and
/// reduces the translate modulo direction + Z^b.
RationalAffineSubspace make_subspace(size_t b, const std::vector<Rational>& translate,
                                     const IntMatrix& direction_rows);

/// Exp(alpha + V): the coset with character lattice the (saturated) integer
/// orthogonal of the direction and phi(l) = l . alpha mod 1.
TorsionCoset betti_of_dr(const RationalAffineSubspace& v);

/// Inverse direction; satisfies betti_of_dr(dr_of_betti(c)) == c.
RationalAffineSubspace dr_of_betti(const TorsionCoset& c);

/// Parses a single direction-row entry.  Exact rationals (integers, "a/b")
/// are accepted; recognized irrational declarations ("sqrt(k)" for
/// non-square k, "pi", "e") raise IrrationalDirectionError; anything else is
/// a ParseError.
Rational parse_direction_entry(const std::string& token);

}  // namespace abstorus
