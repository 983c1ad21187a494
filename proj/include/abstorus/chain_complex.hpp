#pragma once

#include <vector>

#include "abstorus/laurent.hpp"

namespace abstorus {

/// A bounded cochain complex of free modules over the Laurent ring in a fixed
/// number of variables, differentials d^i : rank_i -> rank_{i+1} stored as
/// (rank_{i+1} x rank_i) matrices acting on column vectors.  d^{i+1} d^i = 0
/// is verified exactly at construction.  Coefficients are cyclotomic so the
/// same type carries integer complexes and their root-of-unity twists; JSON
/// round-trips are restricted to rational (level-1) coefficients.
class LaurentChainComplex {
public:
    LaurentChainComplex(int vars, std::vector<size_t> ranks, std::vector<Mat<CycLaurent>> diffs);

    int vars() const { return vars_; }
    /// Number of cochain degrees (length of ranks).
    size_t length() const { return ranks_.size(); }
    const std::vector<size_t>& ranks() const { return ranks_; }
    size_t rank(size_t i) const { return i < ranks_.size() ? ranks_[i] : 0; }
    const std::vector<Mat<CycLaurent>>& differentials() const { return diffs_; }
    /// d^i, or an empty matrix when i is out of range.
    const Mat<CycLaurent>* differential(long i) const;

    /// lcm of the cyclotomic levels of all coefficients (1 = rational).
    long long coefficient_level() const;
    bool has_rational_coefficients() const { return coefficient_level() == 1; }

    /// Euler characteristic sum (-1)^i rank_i; equals the alternating sum of
    /// cohomology dimensions at every invertible point.
    long long euler_characteristic() const;

    bool operator==(const LaurentChainComplex& o) const {
        return vars_ == o.vars_ && ranks_ == o.ranks_ && diffs_ == o.diffs_;
    }

private:
    int vars_;
    std::vector<size_t> ranks_;
    std::vector<Mat<CycLaurent>> diffs_;
};

/// Convenience builder from rational-coefficient matrices.
LaurentChainComplex make_complex(int vars, const std::vector<size_t>& ranks,
                                 const std::vector<Mat<RatLaurent>>& diffs);

Mat<CycLaurent> to_cyc_matrix(const Mat<RatLaurent>& m);

}  // namespace abstorus
