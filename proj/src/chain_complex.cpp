#include "abstorus/chain_complex.hpp"

#include <numeric>
#include <stdexcept>

namespace abstorus {

LaurentChainComplex::LaurentChainComplex(int vars, std::vector<size_t> ranks,
                                         std::vector<Mat<CycLaurent>> diffs)
    : vars_(vars), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
    if (ranks_.empty()) throw std::invalid_argument("LaurentChainComplex: empty rank list");
    if (diffs_.size() + 1 != ranks_.size())
        throw std::invalid_argument("LaurentChainComplex: need one differential per adjacent pair");
    for (size_t i = 0; i < diffs_.size(); ++i) {
        if (diffs_[i].rows != ranks_[i + 1] || diffs_[i].cols != ranks_[i])
            throw std::invalid_argument("LaurentChainComplex: differential " + std::to_string(i) +
                                        " has wrong shape");
        for (const auto& entry : diffs_[i].e)
            if (!entry.is_zero() && entry.vars() != vars_)
                throw std::invalid_argument("LaurentChainComplex: entry variable count mismatch");
        // normalize zero entries to the right variable count
    }
    for (auto& d : diffs_)
        for (auto& entry : d.e)
            if (entry.is_zero()) entry = CycLaurent(vars_);
    for (size_t i = 0; i + 1 < diffs_.size(); ++i) {
        Mat<CycLaurent> prod = mat_mul(diffs_[i + 1], diffs_[i]);
        for (const auto& entry : prod.e)
            if (!entry.is_zero())
                throw std::invalid_argument(
                    "LaurentChainComplex: d^{i+1} d^i != 0 at i = " + std::to_string(i));
    }
}

const Mat<CycLaurent>* LaurentChainComplex::differential(long i) const {
    if (i < 0 || static_cast<size_t>(i) >= diffs_.size()) return nullptr;
    return &diffs_[i];
}

long long LaurentChainComplex::coefficient_level() const {
    long long l = 1;
    for (const auto& d : diffs_)
        for (const auto& entry : d.e)
            for (const auto& [e, c] : entry.terms()) l = std::lcm(l, c.level());
    return l;
}

long long LaurentChainComplex::euler_characteristic() const {
    long long chi = 0;
    int sign = 1;
    for (size_t i = 0; i < ranks_.size(); ++i) {
        chi += sign * static_cast<long long>(ranks_[i]);
        sign = -sign;
    }
    return chi;
}

Mat<CycLaurent> to_cyc_matrix(const Mat<RatLaurent>& m) {
    Mat<CycLaurent> out(m.rows, m.cols);
    for (size_t i = 0; i < m.e.size(); ++i) {
        const RatLaurent& p = m.e[i];
        CycLaurent q(p.vars());
        for (const auto& [e, c] : p.terms()) q.add_term(e, CyclotomicNumber::from_rational(c));
        out.e[i] = q;
    }
    return out;
}

LaurentChainComplex make_complex(int vars, const std::vector<size_t>& ranks,
                                 const std::vector<Mat<RatLaurent>>& diffs) {
    std::vector<Mat<CycLaurent>> cyc;
    cyc.reserve(diffs.size());
    for (const auto& d : diffs) cyc.push_back(to_cyc_matrix(d));
    return LaurentChainComplex(vars, ranks, std::move(cyc));
}

}  // namespace abstorus
