#include "abstorus/torus.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "abstorus/errors.hpp"

namespace abstorus {

namespace {

bool rational_vec_less(const std::vector<QmodZ>& a, const std::vector<QmodZ>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool matrix_lex_less(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    if (a.cols() != b.cols()) return a.cols() < b.cols();
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) != b.at(i, j)) return a.at(i, j) < b.at(i, j);
        }
    return false;
}

void check_same_rank(size_t a, size_t b, const char* what) {
    if (a != b)
        throw RankMismatchError(std::string(what) + ": ambient rank mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace

TorsionPoint TorsionPoint::inverse() const {
    TorsionPoint q;
    q.coords.reserve(coords.size());
    for (const auto& c : coords) q.coords.push_back(-c);
    return q;
}

Int TorsionPoint::order() const {
    Int l = 1;
    for (const auto& c : coords) l = lcm(l, c.order());
    return l;
}

bool TorsionPoint::operator<(const TorsionPoint& o) const {
    return rational_vec_less(coords, o.coords);
}

TorsionCoset::TorsionCoset(Lattice l, std::vector<QmodZ> values)
    : lattice(std::move(l)), phi(std::move(values)) {
    if (phi.size() != lattice.rank())
        throw std::invalid_argument("TorsionCoset: one phi value per basis row required");
    if (saturate(lattice) != lattice)
        throw std::invalid_argument("TorsionCoset: character lattice must be saturated");
}

TorsionCoset TorsionCoset::point(const TorsionPoint& p) {
    size_t n = p.ambient_rank();
    return {Lattice::full(n), p.coords};
}

QmodZ TorsionCoset::value_on(const std::vector<Int>& v) const {
    auto coords = lattice.coordinates_of(v);
    if (!coords) throw std::invalid_argument("value_on: vector not in the character lattice");
    QmodZ acc;
    for (size_t i = 0; i < coords->size(); ++i) acc = acc + phi[i] * (*coords)[i];
    return acc;
}

Int TorsionCoset::torsion_level() const {
    Int l = 1;
    for (const auto& v : phi) l = lcm(l, v.order());
    return l;
}

TorsionCoset TorsionCoset::inverted() const {
    std::vector<QmodZ> neg;
    neg.reserve(phi.size());
    for (const auto& v : phi) neg.push_back(-v);
    return {lattice, neg};
}

bool TorsionCoset::operator<(const TorsionCoset& o) const {
    if (lattice.rank() != o.lattice.rank()) return lattice.rank() < o.lattice.rank();
    if (lattice.basis() != o.lattice.basis()) return matrix_lex_less(lattice.basis(), o.lattice.basis());
    return rational_vec_less(phi, o.phi);
}

bool coset_member(const TorsionPoint& p, const TorsionCoset& c) {
    check_same_rank(p.ambient_rank(), c.ambient_rank(), "coset_member");
    for (size_t i = 0; i < c.lattice.rank(); ++i) {
        if (dot_mod1(c.lattice.basis().row(i), p.coords) != c.phi[i]) return false;
    }
    return true;
}

bool coset_contains(const TorsionCoset& outer, const TorsionCoset& inner) {
    check_same_rank(outer.ambient_rank(), inner.ambient_rank(), "coset_contains");
    for (size_t i = 0; i < outer.lattice.rank(); ++i) {
        auto row = outer.lattice.basis().row(i);
        auto coords = inner.lattice.coordinates_of(row);
        if (!coords) return false;
        QmodZ val;
        for (size_t j = 0; j < coords->size(); ++j) val = val + inner.phi[j] * (*coords)[j];
        if (val != outer.phi[i]) return false;
    }
    return true;
}

std::vector<TorsionCoset> cosets_from_characters(
    size_t n, const std::vector<std::pair<std::vector<Int>, QmodZ>>& characters) {
    if (characters.empty()) return {TorsionCoset::full_torus(n)};

    IntMatrix rows(characters.size(), n);
    for (size_t i = 0; i < characters.size(); ++i) {
        if (characters[i].first.size() != n)
            throw RankMismatchError("cosets_from_characters: character length mismatch");
        rows.set_row(i, characters[i].first);
    }
    auto [h, t] = hnf_with_transform(rows);
    Lattice span = Lattice(n, h);

    // Values of the merged character on the HNF basis rows.
    std::vector<QmodZ> psi(h.rows());
    for (size_t i = 0; i < h.rows(); ++i) {
        QmodZ acc;
        for (size_t j = 0; j < characters.size(); ++j)
            acc = acc + characters[j].second * t.at(i, j);
        psi[i] = acc;
    }

    // Consistency: the assignment extends to a homomorphism on the span iff
    // every input character reproduces its value through the basis.
    for (const auto& [vec, val] : characters) {
        auto coords = span.coordinates_of(vec);
        QmodZ acc;
        for (size_t i = 0; i < coords->size(); ++i) acc = acc + psi[i] * (*coords)[i];
        if (acc != val) return {};
    }

    Lattice sat = saturate(span);
    if (sat == span) return {TorsionCoset(sat, psi)};

    // Express the span basis in the saturated basis and enumerate all
    // extensions of psi to the saturation; there are exactly [sat : span].
    size_t r = span.rank();
    IntMatrix expr(r, r);
    for (size_t i = 0; i < r; ++i) {
        auto coords = sat.coordinates_of(span.basis().row(i));
        expr.set_row(i, *coords);
    }
    SnfDecomposition s = snf(expr);
    // expr x = psi (mod 1)  <=>  x = right z,  z_i = ((left psi)_i + k_i)/d_i.
    std::vector<Rational> lifted(r);
    for (size_t i = 0; i < r; ++i) {
        Rational acc = 0;
        for (size_t j = 0; j < r; ++j) acc += Rational(s.left.at(i, j)) * psi[j].value();
        lifted[i] = acc;
    }
    std::vector<Int> d(r);
    for (size_t i = 0; i < r; ++i) d[i] = s.diag.at(i, i);

    std::vector<TorsionCoset> out;
    std::vector<Int> counter(r, Int(0));
    while (true) {
        std::vector<Rational> z(r);
        for (size_t i = 0; i < r; ++i) z[i] = (lifted[i] + Rational(counter[i])) / Rational(d[i]);
        std::vector<QmodZ> x(r);
        for (size_t i = 0; i < r; ++i) {
            Rational acc = 0;
            for (size_t j = 0; j < r; ++j) acc += Rational(s.right.at(i, j)) * z[j];
            x[i] = QmodZ(acc);
        }
        out.emplace_back(sat, x);
        size_t pos = 0;
        while (pos < r) {
            counter[pos] += 1;
            if (counter[pos] < d[pos]) break;
            counter[pos] = 0;
            ++pos;
        }
        if (pos == r) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

AbsoluteSet coset_intersect(const TorsionCoset& a, const TorsionCoset& b) {
    check_same_rank(a.ambient_rank(), b.ambient_rank(), "coset_intersect");
    std::vector<std::pair<std::vector<Int>, QmodZ>> chars;
    for (size_t i = 0; i < a.lattice.rank(); ++i)
        chars.emplace_back(a.lattice.basis().row(i), a.phi[i]);
    for (size_t i = 0; i < b.lattice.rank(); ++i)
        chars.emplace_back(b.lattice.basis().row(i), b.phi[i]);
    return AbsoluteSet::from_cosets(a.ambient_rank(),
                                    cosets_from_characters(a.ambient_rank(), chars));
}

Cell::Cell(TorsionCoset pos, std::vector<TorsionCoset> excl)
    : positive(std::move(pos)), excluded(std::move(excl)) {
    for (const auto& d : excluded) {
        if (d == positive || !coset_contains(positive, d))
            throw std::invalid_argument("Cell: exclusions must be strictly contained cosets");
    }
    // Keep only maximal exclusions, deduplicated, in canonical order.
    std::sort(excluded.begin(), excluded.end());
    excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
    std::vector<TorsionCoset> maximal;
    for (size_t i = 0; i < excluded.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < excluded.size() && !dominated; ++j)
            if (i != j && excluded[i] != excluded[j] && coset_contains(excluded[j], excluded[i]))
                dominated = true;
        if (!dominated) maximal.push_back(excluded[i]);
    }
    excluded = std::move(maximal);
}

bool Cell::operator<(const Cell& o) const {
    if (!(positive == o.positive)) return positive < o.positive;
    return std::lexicographical_compare(excluded.begin(), excluded.end(), o.excluded.begin(),
                                        o.excluded.end());
}

AbsoluteSet::AbsoluteSet(size_t ambient_rank, std::vector<Cell> cells)
    : ambient_(ambient_rank), cells_(std::move(cells)) {
    for (const auto& c : cells_)
        check_same_rank(ambient_, c.positive.ambient_rank(), "AbsoluteSet");
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    // Drop cells swallowed by a closed cell.
    std::vector<Cell> kept;
    for (size_t i = 0; i < cells_.size(); ++i) {
        bool swallowed = false;
        for (size_t j = 0; j < cells_.size() && !swallowed; ++j) {
            if (i == j || !cells_[j].is_closed()) continue;
            if (cells_[i] == cells_[j]) continue;
            if (coset_contains(cells_[j].positive, cells_[i].positive)) swallowed = true;
        }
        if (!swallowed) kept.push_back(cells_[i]);
    }
    cells_ = std::move(kept);
}

AbsoluteSet AbsoluteSet::full_torus(size_t n) { return from_coset(TorsionCoset::full_torus(n)); }

AbsoluteSet AbsoluteSet::from_coset(const TorsionCoset& c) {
    return AbsoluteSet(c.ambient_rank(), {Cell(c, {})});
}

AbsoluteSet AbsoluteSet::from_cosets(size_t n, const std::vector<TorsionCoset>& cs) {
    std::vector<Cell> cells;
    cells.reserve(cs.size());
    for (const auto& c : cs) cells.emplace_back(c, std::vector<TorsionCoset>{});
    return AbsoluteSet(n, std::move(cells));
}

Int AbsoluteSet::torsion_level() const {
    Int l = 1;
    for (const auto& c : cells_) {
        l = lcm(l, c.positive.torsion_level());
        for (const auto& d : c.excluded) l = lcm(l, d.torsion_level());
    }
    return l;
}

bool set_member(const TorsionPoint& p, const AbsoluteSet& s) {
    check_same_rank(p.ambient_rank(), s.ambient_rank(), "set_member");
    for (const auto& cell : s.cells()) {
        if (!coset_member(p, cell.positive)) continue;
        bool excluded = false;
        for (const auto& d : cell.excluded)
            if (coset_member(p, d)) {
                excluded = true;
                break;
            }
        if (!excluded) return true;
    }
    return false;
}

namespace {

// (A \ Ds) cap (B \ Es): decompose A cap B into cosets; each component keeps
// the pieces of the exclusions that fall inside it.  A component entirely
// covered by an exclusion is dropped.
void intersect_cells_into(const Cell& a, const Cell& b, std::vector<Cell>& out) {
    AbsoluteSet meet = coset_intersect(a.positive, b.positive);
    if (meet.is_empty()) return;
    std::vector<TorsionCoset> all_excl = a.excluded;
    all_excl.insert(all_excl.end(), b.excluded.begin(), b.excluded.end());
    for (const auto& comp : meet.cells()) {
        const TorsionCoset& e = comp.positive;
        bool empty = false;
        std::vector<TorsionCoset> excl;
        for (const auto& d : all_excl) {
            AbsoluteSet part = coset_intersect(d, e);
            for (const auto& f : part.cells()) {
                if (f.positive == e) {
                    empty = true;
                    break;
                }
                excl.push_back(f.positive);
            }
            if (empty) break;
        }
        if (!empty) out.emplace_back(e, std::move(excl));
    }
}

}  // namespace

AbsoluteSet set_union(const AbsoluteSet& a, const AbsoluteSet& b) {
    check_same_rank(a.ambient_rank(), b.ambient_rank(), "set_union");
    std::vector<Cell> cells = a.cells();
    cells.insert(cells.end(), b.cells().begin(), b.cells().end());
    return AbsoluteSet(a.ambient_rank(), std::move(cells));
}

AbsoluteSet set_intersect(const AbsoluteSet& a, const AbsoluteSet& b) {
    check_same_rank(a.ambient_rank(), b.ambient_rank(), "set_intersect");
    std::vector<Cell> cells;
    for (const auto& ca : a.cells())
        for (const auto& cb : b.cells()) intersect_cells_into(ca, cb, cells);
    return AbsoluteSet(a.ambient_rank(), std::move(cells));
}

AbsoluteSet set_complement(const AbsoluteSet& a) {
    size_t n = a.ambient_rank();
    AbsoluteSet result = AbsoluteSet::full_torus(n);
    for (const auto& cell : a.cells()) {
        // not(C \ union D_j) = not(C) union D_1 ... union D_m
        std::vector<Cell> pieces;
        if (!cell.positive.is_full_torus())
            pieces.emplace_back(TorsionCoset::full_torus(n),
                                std::vector<TorsionCoset>{cell.positive});
        for (const auto& d : cell.excluded) pieces.emplace_back(d, std::vector<TorsionCoset>{});
        result = set_intersect(result, AbsoluteSet(n, std::move(pieces)));
        if (result.is_empty()) break;
    }
    return result;
}

AbsoluteSet set_difference(const AbsoluteSet& a, const AbsoluteSet& b) {
    check_same_rank(a.ambient_rank(), b.ambient_rank(), "set_difference");
    return set_intersect(a, set_complement(b));
}

AbsoluteSet closure(const AbsoluteSet& s) {
    std::vector<TorsionCoset> tops;
    tops.reserve(s.cells().size());
    for (const auto& c : s.cells()) tops.push_back(c.positive);
    return AbsoluteSet::from_cosets(s.ambient_rank(), tops);
}

std::vector<TorsionCoset> irreducible_components(const AbsoluteSet& s, bool closed_required) {
    if (closed_required && !is_equal(s, closure(s))) {
        const Cell* witness = nullptr;
        for (const auto& c : s.cells())
            if (!c.is_closed()) {
                witness = &c;
                break;
            }
        throw NotClosedError(witness ? "positive coset of rank " +
                                           std::to_string(witness->positive.lattice.rank()) +
                                           " with " + std::to_string(witness->excluded.size()) +
                                           " exclusion(s)"
                                     : "(no open cell found)");
    }
    AbsoluteSet closed = closure(s);
    std::vector<TorsionCoset> out;
    for (const auto& c : closed.cells()) out.push_back(c.positive);
    return out;  // from_cosets already kept only maximal cosets, sorted
}

bool is_subset(const AbsoluteSet& a, const AbsoluteSet& b) {
    check_same_rank(a.ambient_rank(), b.ambient_rank(), "is_subset");
    return set_difference(a, b).is_empty();
}

bool is_equal(const AbsoluteSet& a, const AbsoluteSet& b) {
    return is_subset(a, b) && is_subset(b, a);
}

GaloisElement::GaloisElement(Int lv, Int u) : level(std::move(lv)), unit(std::move(u)) {
    if (level < 1) throw LevelError("GaloisElement: level must be >= 1");
    unit = mod_floor(unit, level);
    if (gcd(unit, level) != 1) throw LevelError("GaloisElement: unit must be coprime to level");
}

TorsionCoset galois_apply(const GaloisElement& g, const TorsionCoset& c) {
    if (g.level % c.torsion_level() != 0)
        throw LevelError("galois_apply: coset torsion order does not divide the level");
    std::vector<QmodZ> scaled;
    scaled.reserve(c.phi.size());
    for (const auto& v : c.phi) scaled.push_back(v * g.unit);
    return {c.lattice, scaled};
}

AbsoluteSet galois_apply(const GaloisElement& g, const AbsoluteSet& s) {
    std::vector<Cell> cells;
    cells.reserve(s.cells().size());
    for (const auto& c : s.cells()) {
        std::vector<TorsionCoset> excl;
        excl.reserve(c.excluded.size());
        for (const auto& d : c.excluded) excl.push_back(galois_apply(g, d));
        cells.emplace_back(galois_apply(g, c.positive), std::move(excl));
    }
    return AbsoluteSet(s.ambient_rank(), std::move(cells));
}

std::optional<Int> galois_moving_unit(const AbsoluteSet& s, const Int& level) {
    if (level < 1) throw LevelError("galois_invariant: level must be >= 1");
    if (level % s.torsion_level() != 0)
        throw LevelError("galois_invariant: set torsion orders must divide the level");
    for (Int u = 1; u < level; ++u) {
        if (gcd(u, level) != 1) continue;
        if (!is_equal(galois_apply(GaloisElement(level, u), s), s)) return u;
    }
    return std::nullopt;
}

bool galois_invariant(const AbsoluteSet& s, const Int& level) {
    return !galois_moving_unit(s, level).has_value();
}

AbsoluteSet invert(const AbsoluteSet& s) {
    std::vector<Cell> cells;
    cells.reserve(s.cells().size());
    for (const auto& c : s.cells()) {
        std::vector<TorsionCoset> excl;
        excl.reserve(c.excluded.size());
        for (const auto& d : c.excluded) excl.push_back(d.inverted());
        cells.emplace_back(c.positive.inverted(), std::move(excl));
    }
    return AbsoluteSet(s.ambient_rank(), std::move(cells));
}

namespace {

std::vector<Int> pullback_character(const IntMatrix& a, const std::vector<Int>& lambda) {
    // transpose(a) * lambda
    std::vector<Int> out(a.cols(), Int(0));
    for (size_t j = 0; j < a.cols(); ++j)
        for (size_t i = 0; i < a.rows(); ++i) out[j] += a.at(i, j) * lambda[i];
    return out;
}

AbsoluteSet preimage_coset(const IntMatrix& a, const TorsionCoset& c) {
    std::vector<std::pair<std::vector<Int>, QmodZ>> chars;
    for (size_t i = 0; i < c.lattice.rank(); ++i)
        chars.emplace_back(pullback_character(a, c.lattice.basis().row(i)), c.phi[i]);
    return AbsoluteSet::from_cosets(a.cols(), cosets_from_characters(a.cols(), chars));
}

}  // namespace

AbsoluteSet preimage(const IntMatrix& a, const AbsoluteSet& s) {
    if (a.rows() != s.ambient_rank())
        throw RankMismatchError("preimage: map target rank does not match set rank");
    size_t n = a.cols();
    AbsoluteSet result = AbsoluteSet::empty(n);
    for (const auto& cell : s.cells()) {
        AbsoluteSet piece = preimage_coset(a, cell.positive);
        for (const auto& d : cell.excluded) {
            if (piece.is_empty()) break;
            piece = set_difference(piece, preimage_coset(a, d));
        }
        result = set_union(result, piece);
    }
    return result;
}

TorsionCoset image(const IntMatrix& a, const TorsionCoset& c) {
    if (a.cols() != c.ambient_rank())
        throw RankMismatchError("image: map source rank does not match coset rank");
    size_t m = a.rows(), n = a.cols(), r = c.lattice.rank();
    // mu in Z^m with transpose(a) mu in the character lattice: the joint
    // kernel of [transpose(a) | -transpose(B)] projected to the mu block.
    IntMatrix at = a.transpose();  // n x m
    IntMatrix bt = c.lattice.basis().transpose();  // n x r
    IntMatrix joint(n, m + r);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < m; ++j) joint.at(i, j) = at.at(i, j);
        for (size_t j = 0; j < r; ++j) joint.at(i, m + j) = -bt.at(i, j);
    }
    IntMatrix ker = kernel_rows(joint);
    IntMatrix mu_rows(ker.rows(), m);
    for (size_t i = 0; i < ker.rows(); ++i)
        for (size_t j = 0; j < m; ++j) mu_rows.at(i, j) = ker.at(i, j);
    Lattice lat = Lattice::from_rows(m, mu_rows);  // saturated: k*mu works iff mu does

    std::vector<QmodZ> vals(lat.rank());
    for (size_t i = 0; i < lat.rank(); ++i) {
        auto mu = lat.basis().row(i);
        vals[i] = c.value_on(pullback_character(a, mu));
    }
    return {lat, vals};
}

namespace {

// Fast exact membership over a grid: with x the numerator vector of a point
// p = x/M, the condition l.p = c/d (mod 1) is the integer congruence
// d*(l.x) = c*M (mod d*M).  Coefficients are reduced below d*M, so the test
// runs in machine words; cosets whose modulus overflows fall back to exact
// rationals.
struct CosetGridTester {
    bool fast = true;
    const TorsionCoset* coset = nullptr;
    std::vector<std::vector<long long>> coeff;
    std::vector<long long> target;
    std::vector<long long> modulus;

    CosetGridTester(const TorsionCoset& c, long long level) : coset(&c) {
        const Int cap = Int(1) << 31;
        for (size_t i = 0; i < c.lattice.rank(); ++i) {
            Int d = c.phi[i].den();
            Int md = d * level;
            if (md >= cap) {
                fast = false;
                return;
            }
            long long mod = static_cast<long long>(md);
            std::vector<long long> row(c.ambient_rank());
            for (size_t j = 0; j < c.ambient_rank(); ++j)
                row[j] = static_cast<long long>(mod_floor(d * c.lattice.basis().at(i, j), md));
            coeff.push_back(std::move(row));
            target.push_back(static_cast<long long>(mod_floor(c.phi[i].num() * level, md)));
            modulus.push_back(mod);
        }
    }

    bool test(const std::vector<long long>& x, long long level) const {
        if (!fast) {
            std::vector<QmodZ> coords(x.size());
            for (size_t j = 0; j < x.size(); ++j) coords[j] = QmodZ(x[j], level);
            return coset_member(TorsionPoint(std::move(coords)), *coset);
        }
        for (size_t i = 0; i < coeff.size(); ++i) {
            long long acc = 0;
            for (size_t j = 0; j < x.size(); ++j) acc += coeff[i][j] * x[j];
            if (acc % modulus[i] != target[i]) return false;
        }
        return true;
    }
};

struct CellGridTester {
    CosetGridTester positive;
    std::vector<CosetGridTester> excluded;

    CellGridTester(const Cell& c, long long level) : positive(c.positive, level) {
        excluded.reserve(c.excluded.size());
        for (const auto& d : c.excluded) excluded.emplace_back(d, level);
    }

    bool test(const std::vector<long long>& x, long long level) const {
        if (!positive.test(x, level)) return false;
        for (const auto& d : excluded)
            if (d.test(x, level)) return false;
        return true;
    }
};

}  // namespace

std::vector<char> grid_bitmap(const AbsoluteSet& s, long long level) {
    if (level < 1) throw std::invalid_argument("grid level must be >= 1");
    size_t n = s.ambient_rank();
    unsigned long long total = 1;
    for (size_t i = 0; i < n; ++i) {
        if (total > (1ull << 40) / static_cast<unsigned long long>(level))
            throw BudgetExceededError("grid_bitmap: grid size exceeds the hard safety bound");
        total *= static_cast<unsigned long long>(level);
    }
    std::vector<CellGridTester> testers;
    testers.reserve(s.cells().size());
    for (const auto& c : s.cells()) testers.emplace_back(c, level);

    std::vector<char> bits(total, 0);
    std::vector<long long> x(n, 0);
    for (unsigned long long idx = 0; idx < total; ++idx) {
        for (const auto& t : testers)
            if (t.test(x, level)) {
                bits[idx] = 1;
                break;
            }
        // odometer, last coordinate fastest
        for (size_t pos = n; pos-- > 0;) {
            if (++x[pos] < level) break;
            x[pos] = 0;
        }
    }
    return bits;
}

std::vector<TorsionPoint> grid_oracle(const AbsoluteSet& s, long long level) {
    std::vector<char> bits = grid_bitmap(s, level);
    size_t n = s.ambient_rank();
    std::vector<TorsionPoint> out;
    std::vector<long long> x(n, 0);
    for (unsigned long long idx = 0; idx < bits.size(); ++idx) {
        if (bits[idx]) {
            std::vector<QmodZ> coords(n);
            for (size_t j = 0; j < n; ++j) coords[j] = QmodZ(x[j], level);
            out.emplace_back(std::move(coords));
        }
        for (size_t pos = n; pos-- > 0;) {
            if (++x[pos] < level) break;
            x[pos] = 0;
        }
    }
    return out;
}

}  // namespace abstorus
