#pragma once

// Shared deterministic generators for randomized tests.

#include <random>

#include "abstorus/exp_bridge.hpp"
#include "abstorus/torus.hpp"

namespace abstorus::testgen {

using Rng = std::mt19937_64;

inline Int rand_int(Rng& rng, long long lo, long long hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    return Int(d(rng));
}

inline IntMatrix rand_matrix(Rng& rng, size_t rows, size_t cols, long long bound) {
    IntMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rand_int(rng, -bound, bound);
    return m;
}

/// Random unimodular matrix: a product of elementary row operations on the
/// identity.
inline IntMatrix rand_unimodular(Rng& rng, size_t n, int ops = 12) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2) return u;
    std::uniform_int_distribution<size_t> row(0, n - 1);
    for (int t = 0; t < ops; ++t) {
        size_t i = row(rng), j = row(rng);
        if (i == j) continue;
        u.add_row_multiple(i, j, rand_int(rng, -3, 3));
    }
    return u;
}

inline Lattice rand_lattice(Rng& rng, size_t n, long long bound = 3) {
    std::uniform_int_distribution<size_t> rows(0, n);
    return Lattice::from_rows(n, rand_matrix(rng, rows(rng), n, bound));
}

/// Torsion value with order dividing `max_order`.
inline QmodZ rand_torsion(Rng& rng, long long max_order) {
    std::uniform_int_distribution<long long> num(0, max_order - 1);
    return QmodZ(num(rng), max_order);
}

inline TorsionPoint rand_point(Rng& rng, size_t n, long long max_order) {
    std::vector<QmodZ> coords(n);
    for (size_t i = 0; i < n; ++i) coords[i] = rand_torsion(rng, max_order);
    return TorsionPoint(std::move(coords));
}

/// Random irreducible coset with torsion orders dividing `max_order`: phi is
/// drawn on the saturated basis directly, so no extension enlarges the
/// denominators.
inline TorsionCoset rand_coset(Rng& rng, size_t n, long long max_order, long long bound = 2) {
    Lattice l = saturate(rand_lattice(rng, n, bound));
    std::vector<QmodZ> phi(l.rank());
    for (auto& v : phi) v = rand_torsion(rng, max_order);
    return TorsionCoset(std::move(l), std::move(phi));
}

/// Random absolute set: up to `max_cells` cells, each with up to two
/// exclusions carved out of the positive coset.
inline AbsoluteSet rand_set(Rng& rng, size_t n, long long max_order, size_t max_cells = 2) {
    std::uniform_int_distribution<size_t> ncells(0, max_cells);
    std::vector<Cell> cells;
    size_t want = ncells(rng);
    for (size_t c = 0; c < want; ++c) {
        TorsionCoset pos = rand_coset(rng, n, max_order);
        std::vector<TorsionCoset> excl;
        std::uniform_int_distribution<size_t> nexcl(0, 2);
        size_t ex = nexcl(rng);
        for (size_t e = 0; e < ex && pos.dim() > 0; ++e) {
            // exclusions must live strictly inside the positive coset and
            // keep torsion orders within the promised bound
            TorsionCoset other = rand_coset(rng, n, max_order);
            AbsoluteSet inside = coset_intersect(pos, other);
            for (const auto& cell : inside.cells()) {
                if (cell.positive == pos) continue;
                if (Int(max_order) % cell.positive.torsion_level() != 0) continue;
                excl.push_back(cell.positive);
                break;
            }
        }
        cells.emplace_back(std::move(pos), std::move(excl));
    }
    return AbsoluteSet(n, std::move(cells));
}

/// Smallest level whose units act on every torsion value of the given sets,
/// together with a nontrivial unit pair for group-law checks.
inline Int combined_torsion_level(std::initializer_list<const AbsoluteSet*> sets) {
    Int l = 1;
    for (const AbsoluteSet* s : sets) l = lcm(l, s->torsion_level());
    return l;
}

inline std::vector<Int> some_units(const Int& level) {
    std::vector<Int> units;
    for (Int u = 2; u < level && units.size() < 2; ++u)
        if (gcd(u, level) == 1) units.push_back(u);
    if (level > 1) units.push_back(level - 1);
    if (units.empty()) units.push_back(Int(0));  // level 1: the trivial unit
    return units;
}

inline RationalAffineSubspace rand_subspace(Rng& rng, size_t b, long long max_order) {
    std::vector<Rational> translate(b);
    for (size_t i = 0; i < b; ++i) translate[i] = rand_torsion(rng, max_order).value();
    std::uniform_int_distribution<size_t> rows(0, b);
    return make_subspace(b, translate, rand_matrix(rng, rows(rng), b, 3));
}

}  // namespace abstorus::testgen
