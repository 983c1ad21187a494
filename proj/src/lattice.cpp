#include "abstorus/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "abstorus/errors.hpp"

namespace abstorus {

size_t SnfDecomposition::rank() const {
    size_t r = 0;
    size_t n = std::min(diag.rows(), diag.cols());
    for (size_t i = 0; i < n; ++i)
        if (diag.at(i, i) != 0) ++r;
    return r;
}

std::vector<Int> SnfDecomposition::diagonal() const {
    size_t n = std::min(diag.rows(), diag.cols());
    std::vector<Int> d(n);
    for (size_t i = 0; i < n; ++i) d[i] = diag.at(i, i);
    return d;
}

namespace {

// Echelon reduction shared by hnf and hnf_with_transform.  Returns the number
// of nonzero rows; h is left in canonical form with zero rows at the bottom,
// and the same row operations are mirrored on t when present.
size_t hnf_in_place(IntMatrix& h, IntMatrix* t) {
    const size_t m = h.rows(), n = h.cols();
    size_t r = 0;
    for (size_t col = 0; col < n && r < m; ++col) {
        // Euclidean descent on the column until at most one nonzero remains
        // at or below row r.
        while (true) {
            size_t pivot = m;
            for (size_t i = r; i < m; ++i) {
                if (h.at(i, col) == 0) continue;
                if (pivot == m || boost::multiprecision::abs(h.at(i, col)) <
                                      boost::multiprecision::abs(h.at(pivot, col)))
                    pivot = i;
            }
            if (pivot == m) break;
            h.swap_rows(r, pivot);
            if (t) t->swap_rows(r, pivot);
            bool clean = true;
            for (size_t i = r + 1; i < m; ++i) {
                if (h.at(i, col) == 0) continue;
                Int q = floor_div(h.at(i, col), h.at(r, col));
                h.add_row_multiple(i, r, -q);
                if (t) t->add_row_multiple(i, r, -q);
                if (h.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(r, col) == 0) continue;
        if (h.at(r, col) < 0) {
            h.negate_row(r);
            if (t) t->negate_row(r);
        }
        for (size_t i = 0; i < r; ++i) {
            Int q = floor_div(h.at(i, col), h.at(r, col));
            h.add_row_multiple(i, r, -q);
            if (t) t->add_row_multiple(i, r, -q);
        }
        ++r;
    }
    return r;
}

IntMatrix take_rows(const IntMatrix& m, size_t count) {
    IntMatrix out(count, m.cols());
    for (size_t i = 0; i < count; ++i)
        for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    return out;
}

}  // namespace

IntMatrix hnf(const IntMatrix& a) {
    IntMatrix h = a;
    size_t r = hnf_in_place(h, nullptr);
    return take_rows(h, r);
}

std::pair<IntMatrix, IntMatrix> hnf_with_transform(const IntMatrix& a) {
    IntMatrix h = a;
    IntMatrix t = IntMatrix::identity(a.rows());
    size_t r = hnf_in_place(h, &t);
    return {take_rows(h, r), take_rows(t, r)};
}

SnfDecomposition snf(const IntMatrix& a) {
    const size_t m = a.rows(), n = a.cols();
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    size_t bound = std::min(m, n);
    for (size_t k = 0; k < bound; ++k) {
        while (true) {
            // Smallest-|value| nonzero pivot in the trailing submatrix, ties
            // by row-major position.
            size_t pi = m, pj = n;
            for (size_t i = k; i < m; ++i)
                for (size_t j = k; j < n; ++j) {
                    if (d.at(i, j) == 0) continue;
                    if (pi == m || boost::multiprecision::abs(d.at(i, j)) <
                                       boost::multiprecision::abs(d.at(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m) return {u, d, v};  // trailing block is zero
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            bool clean = true;
            for (size_t i = k + 1; i < m; ++i) {
                if (d.at(i, k) == 0) continue;
                Int q = floor_div(d.at(i, k), d.at(k, k));
                d.add_row_multiple(i, k, -q);
                u.add_row_multiple(i, k, -q);
                if (d.at(i, k) != 0) clean = false;
            }
            for (size_t j = k + 1; j < n; ++j) {
                if (d.at(k, j) == 0) continue;
                Int q = floor_div(d.at(k, j), d.at(k, k));
                d.add_col_multiple(j, k, -q);
                v.add_col_multiple(j, k, -q);
                if (d.at(k, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: pivot must divide every remaining entry.
            bool fixed = false;
            for (size_t i = k + 1; i < m && !fixed; ++i)
                for (size_t j = k + 1; j < n && !fixed; ++j)
                    if (d.at(i, j) % d.at(k, k) != 0) {
                        d.add_row_multiple(k, i, Int(1));
                        u.add_row_multiple(k, i, Int(1));
                        fixed = true;
                    }
            if (fixed) continue;

            if (d.at(k, k) < 0) {
                d.negate_row(k);
                u.negate_row(k);
            }
            break;
        }
    }
    return {u, d, v};
}

IntMatrix kernel_rows(const IntMatrix& a) {
    if (a.cols() == 0) return IntMatrix(0, 0);
    if (a.rows() == 0) return IntMatrix::identity(a.cols());
    SnfDecomposition s = snf(a);
    size_t r = s.rank();
    size_t n = a.cols();
    IntMatrix k(n - r, n);
    for (size_t idx = r; idx < n; ++idx)
        for (size_t j = 0; j < n; ++j) k.at(idx - r, j) = s.right.at(j, idx);
    return hnf(k);
}

Lattice::Lattice(size_t ambient_rank, IntMatrix basis_hnf)
    : ambient_(ambient_rank), basis_(std::move(basis_hnf)) {
    if (basis_.rows() > 0 && basis_.cols() != ambient_)
        throw std::invalid_argument("Lattice: basis width does not match ambient rank");
    if (basis_.rows() == 0) basis_ = IntMatrix(0, ambient_);
    if (basis_ != hnf(basis_))
        throw std::invalid_argument("Lattice: basis is not in canonical Hermite normal form");
}

Lattice Lattice::from_rows(size_t ambient_rank, const IntMatrix& rows) {
    if (rows.rows() > 0 && rows.cols() != ambient_rank)
        throw std::invalid_argument("Lattice::from_rows: row width does not match ambient rank");
    Lattice l(ambient_rank);
    l.basis_ = rows.rows() == 0 ? IntMatrix(0, ambient_rank) : hnf(rows);
    return l;
}

std::optional<std::vector<Int>> Lattice::coordinates_of(const std::vector<Int>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("coordinates_of: wrong length");
    std::vector<Int> rem = v;
    std::vector<Int> coeff(rank(), Int(0));
    size_t col = 0;
    for (size_t k = 0; k < rank(); ++k) {
        // pivot column of row k
        while (col < ambient_ && basis_.at(k, col) == 0) {
            if (rem[col] != 0) return std::nullopt;
            ++col;
        }
        if (col == ambient_) return std::nullopt;  // unreachable for valid HNF
        if (rem[col] % basis_.at(k, col) != 0) return std::nullopt;
        coeff[k] = rem[col] / basis_.at(k, col);
        if (coeff[k] != 0)
            for (size_t j = col; j < ambient_; ++j) rem[j] -= coeff[k] * basis_.at(k, j);
        ++col;
    }
    for (size_t j = 0; j < ambient_; ++j)
        if (rem[j] != 0) return std::nullopt;
    return coeff;
}

bool Lattice::contains_lattice(const Lattice& o) const {
    if (ambient_ != o.ambient_) throw RankMismatchError("contains_lattice: ambient rank mismatch");
    for (size_t i = 0; i < o.rank(); ++i)
        if (!contains_vector(o.basis().row(i))) return false;
    return true;
}

Lattice saturate(const Lattice& l) {
    if (l.rank() == 0) return l;
    return Lattice(l.ambient_rank(), kernel_rows(kernel_rows(l.basis())));
}

Int saturation_index(const Lattice& l) {
    if (l.rank() == 0) return Int(1);
    SnfDecomposition s = snf(l.basis());
    Int idx = 1;
    for (const auto& d : s.diagonal())
        if (d != 0) idx *= d;
    return idx;
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw RankMismatchError("lattice_sum: ambient rank mismatch");
    return Lattice::from_rows(a.ambient_rank(), a.basis().stack(b.basis()));
}

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw RankMismatchError("lattice_intersect: ambient rank mismatch");
    if (a.rank() == 0 || b.rank() == 0) return Lattice::zero(a.ambient_rank());
    // x = y A = z B  <=>  (y, z) in the left kernel of [A; -B].
    IntMatrix stacked = a.basis().stack(-b.basis());
    IntMatrix left_kernel = kernel_rows(stacked.transpose());
    IntMatrix rows(left_kernel.rows(), a.ambient_rank());
    for (size_t i = 0; i < left_kernel.rows(); ++i)
        for (size_t j = 0; j < a.ambient_rank(); ++j) {
            Int acc = 0;
            for (size_t k = 0; k < a.rank(); ++k) acc += left_kernel.at(i, k) * a.basis().at(k, j);
            rows.at(i, j) = acc;
        }
    return Lattice::from_rows(a.ambient_rank(), rows);
}

std::vector<QmodZ> solve_congruence(const Lattice& l, const std::vector<QmodZ>& phi) {
    if (phi.size() != l.rank())
        throw std::invalid_argument("solve_congruence: phi length must match basis rank");
    size_t n = l.ambient_rank();
    std::vector<QmodZ> q(n);
    if (l.rank() == 0) return q;

    SnfDecomposition s = snf(l.basis());
    size_t r = l.rank();  // full row rank: all diagonal entries positive
    // B q = phi (mod Z^r)  <=>  D y = U phi (mod Z^r) with q = V y.
    std::vector<Rational> u_phi(r, Rational(0));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) u_phi[i] += Rational(s.left.at(i, j)) * phi[j].value();
    std::vector<Rational> y(n, Rational(0));
    for (size_t i = 0; i < r; ++i) y[i] = u_phi[i] / Rational(s.diag.at(i, i));
    for (size_t i = 0; i < n; ++i) {
        Rational acc = 0;
        for (size_t j = 0; j < n; ++j)
            if (y[j] != 0) acc += Rational(s.right.at(i, j)) * y[j];
        q[i] = QmodZ(acc);
    }
    return q;
}

}  // namespace abstorus
