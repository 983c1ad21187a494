#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "abstorus/int_matrix.hpp"

namespace abstorus {

/// Smith normal form data: left * a * right = diag, with left/right unimodular
/// and the diagonal entries nonnegative, each dividing the next.
struct SnfDecomposition {
    IntMatrix left;
    IntMatrix diag;
    IntMatrix right;

    size_t rank() const;
    std::vector<Int> diagonal() const;
};

SnfDecomposition snf(const IntMatrix& a);

/// Canonical row Hermite normal form, zero rows dropped: pivots positive with
/// strictly increasing pivot columns, entries above each pivot reduced into
/// [0, pivot).  Two matrices have equal row spans iff their HNFs are identical.
IntMatrix hnf(const IntMatrix& a);

/// HNF together with the selecting transform: returns (h, t) with t * a = h,
/// where t consists of the rows of a unimodular matrix matching the nonzero
/// rows of the echelon form.  t expresses every HNF row as an integer
/// combination of the input rows.
std::pair<IntMatrix, IntMatrix> hnf_with_transform(const IntMatrix& a);

/// Basis (canonical HNF rows) of the integer kernel {x : a x = 0}.  The kernel
/// of an integer matrix is always a saturated sublattice.
IntMatrix kernel_rows(const IntMatrix& a);

/// A subgroup of Z^n held by its canonical HNF basis; value type with
/// structural equality.
class Lattice {
public:
    explicit Lattice(size_t ambient_rank) : ambient_(ambient_rank), basis_(0, ambient_rank) {}
    Lattice(size_t ambient_rank, IntMatrix basis_hnf);

    /// Canonicalize arbitrary spanning rows.
    static Lattice from_rows(size_t ambient_rank, const IntMatrix& rows);
    static Lattice zero(size_t ambient_rank) { return Lattice(ambient_rank); }
    static Lattice full(size_t ambient_rank) {
        return Lattice(ambient_rank, IntMatrix::identity(ambient_rank));
    }

    size_t ambient_rank() const { return ambient_; }
    size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }
    bool is_full() const { return rank() == ambient_; }

    bool operator==(const Lattice& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

    /// Integer coordinates of v in the HNF basis, or nullopt if v is not in
    /// the lattice.
    std::optional<std::vector<Int>> coordinates_of(const std::vector<Int>& v) const;
    bool contains_vector(const std::vector<Int>& v) const { return coordinates_of(v).has_value(); }
    bool contains_lattice(const Lattice& o) const;

private:
    size_t ambient_;
    IntMatrix basis_;
};

/// Saturation {v : m v in L for some m >= 1}; contains the input with finite
/// index and is idempotent.
Lattice saturate(const Lattice& l);

/// Index [saturate(l) : l]; requires only the SNF diagonal of the basis.
Int saturation_index(const Lattice& l);

Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice lattice_intersect(const Lattice& a, const Lattice& b);

/// Deterministic q in (Q/Z)^n with b_i . q = phi_i mod 1 for every basis row
/// b_i.  Always solvable: Q/Z is divisible.
std::vector<QmodZ> solve_congruence(const Lattice& l, const std::vector<QmodZ>& phi);

}  // namespace abstorus
