#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "abstorus/lattice.hpp"

namespace abstorus {

/// A point of (C*)^n with all coordinates roots of unity, stored as the
/// exponents a/b of exp(2*pi*i*a/b).
struct TorsionPoint {
    std::vector<QmodZ> coords;

    TorsionPoint() = default;
    explicit TorsionPoint(std::vector<QmodZ> c) : coords(std::move(c)) {}

    size_t ambient_rank() const { return coords.size(); }
    TorsionPoint inverse() const;
    Int order() const;  // lcm of coordinate orders

    bool operator==(const TorsionPoint& o) const { return coords == o.coords; }
    bool operator<(const TorsionPoint& o) const;
};

/// An irreducible torsion-translated affine subtorus of (C*)^n: the solution
/// set {x : x^l = exp(2*pi*i*phi(l)) for all l in the lattice}, with the
/// character lattice saturated (hence the set irreducible of dimension
/// n - rank) and phi recorded on the canonical HNF basis rows.  Saturation +
/// HNF + reduced phi make equality structural.
struct TorsionCoset {
    Lattice lattice;
    std::vector<QmodZ> phi;

    TorsionCoset(Lattice l, std::vector<QmodZ> values);

    static TorsionCoset full_torus(size_t n) { return {Lattice::zero(n), {}}; }
    static TorsionCoset point(const TorsionPoint& p);

    size_t ambient_rank() const { return lattice.ambient_rank(); }
    size_t dim() const { return ambient_rank() - lattice.rank(); }
    bool is_full_torus() const { return lattice.rank() == 0; }

    /// Value of the coset character on a lattice vector (must lie in the
    /// lattice).
    QmodZ value_on(const std::vector<Int>& v) const;

    /// lcm of the torsion orders of the phi values.
    Int torsion_level() const;

    TorsionCoset inverted() const;

    bool operator==(const TorsionCoset& o) const {
        return lattice == o.lattice && phi == o.phi;
    }
    bool operator!=(const TorsionCoset& o) const { return !(*this == o); }
    bool operator<(const TorsionCoset& o) const;
};

bool coset_member(const TorsionPoint& p, const TorsionCoset& c);
/// True iff the outer coset contains the inner one as sets.
bool coset_contains(const TorsionCoset& outer, const TorsionCoset& inner);

/// Normalizes an arbitrary finite character system {(l_i, v_i)} into the
/// finite union of irreducible cosets it cuts out (all sharing the saturated
/// span of the l_i as lattice), or an empty list if the conditions are
/// inconsistent.  This is the workhorse behind intersections and monomial
/// pullbacks.
std::vector<TorsionCoset> cosets_from_characters(
    size_t ambient_rank, const std::vector<std::pair<std::vector<Int>, QmodZ>>& characters);

/// A locally closed piece: positive coset minus finitely many strictly
/// smaller cosets.  Never empty, by irreducibility of the positive part.
struct Cell {
    TorsionCoset positive;
    std::vector<TorsionCoset> excluded;

    Cell(TorsionCoset pos, std::vector<TorsionCoset> excl);

    bool is_closed() const { return excluded.empty(); }
    bool operator==(const Cell& o) const {
        return positive == o.positive && excluded == o.excluded;
    }
    bool operator<(const Cell& o) const;
};

/// A finite union of cells; the constructible sets generated by torsion
/// cosets under union, intersection and complement.
class AbsoluteSet {
public:
    explicit AbsoluteSet(size_t ambient_rank) : ambient_(ambient_rank) {}
    AbsoluteSet(size_t ambient_rank, std::vector<Cell> cells);

    static AbsoluteSet empty(size_t n) { return AbsoluteSet(n); }
    static AbsoluteSet full_torus(size_t n);
    static AbsoluteSet from_coset(const TorsionCoset& c);
    static AbsoluteSet from_cosets(size_t n, const std::vector<TorsionCoset>& cs);

    size_t ambient_rank() const { return ambient_; }
    const std::vector<Cell>& cells() const { return cells_; }
    bool is_empty() const { return cells_.empty(); }

    /// lcm of all torsion orders appearing in the cells.
    Int torsion_level() const;

    bool operator==(const AbsoluteSet& o) const {
        return ambient_ == o.ambient_ && cells_ == o.cells_;
    }

private:
    size_t ambient_;
    std::vector<Cell> cells_;
};

bool set_member(const TorsionPoint& p, const AbsoluteSet& s);

AbsoluteSet coset_intersect(const TorsionCoset& a, const TorsionCoset& b);

AbsoluteSet set_union(const AbsoluteSet& a, const AbsoluteSet& b);
AbsoluteSet set_intersect(const AbsoluteSet& a, const AbsoluteSet& b);
AbsoluteSet set_complement(const AbsoluteSet& a);
AbsoluteSet set_difference(const AbsoluteSet& a, const AbsoluteSet& b);

/// Zariski closure: positive parts of all cells, exclusions dropped.
AbsoluteSet closure(const AbsoluteSet& s);

/// Maximal cosets among the closure cells, canonically ordered.  With
/// closed_required set, throws NotClosedError when s is not closed, naming a
/// witness cell.
std::vector<TorsionCoset> irreducible_components(const AbsoluteSet& s, bool closed_required);

bool is_subset(const AbsoluteSet& a, const AbsoluteSet& b);
bool is_equal(const AbsoluteSet& a, const AbsoluteSet& b);

/// An element of Gal(Qbar/Q) seen through its action on N-th roots of unity:
/// zeta -> zeta^unit.
struct GaloisElement {
    Int level;
    Int unit;
    GaloisElement(Int level, Int unit);
};

TorsionCoset galois_apply(const GaloisElement& g, const TorsionCoset& c);
AbsoluteSet galois_apply(const GaloisElement& g, const AbsoluteSet& s);
/// True iff the set is fixed by every unit mod level (units enumerated
/// exactly).
bool galois_invariant(const AbsoluteSet& s, const Int& level);
/// First unit that moves the set, if any.
std::optional<Int> galois_moving_unit(const AbsoluteSet& s, const Int& level);

/// The involution L -> L^{-1}: phi -> -phi on every coset.
AbsoluteSet invert(const AbsoluteSet& s);

/// Pullback along the monomial map x -> (prod_j x_j^{a_ij})_i given by the
/// m x n matrix a, from rank-m sets to rank-n sets.
AbsoluteSet preimage(const IntMatrix& a, const AbsoluteSet& s);
/// Forward image of an irreducible coset under the same map (images of cosets
/// are closed, so no closure step is needed).
TorsionCoset image(const IntMatrix& a, const TorsionCoset& c);

/// Exact list of the points of order dividing level that lie in s, by
/// exhaustive evaluation over the level^n grid; lexicographic order.
std::vector<TorsionPoint> grid_oracle(const AbsoluteSet& s, long long level);

/// Membership bitmap over the level^n grid in lexicographic numerator order;
/// the comparison form used by tests and the CLI oracle flag.
std::vector<char> grid_bitmap(const AbsoluteSet& s, long long level);

}  // namespace abstorus
