#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "abstorus/cyclotomic.hpp"

namespace abstorus {

// Coefficient-ring glue used by LaurentPoly and the fraction-free
// elimination below.
inline bool coef_is_zero(const Rational& c) { return c == 0; }
inline bool coef_is_zero(const CyclotomicNumber& c) { return c.is_zero(); }
inline Rational coef_div(const Rational& a, const Rational& b) { return a / b; }
inline CyclotomicNumber coef_div(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a / b;
}

/// Sparse Laurent polynomial in a fixed number of variables: a map from
/// exponent vectors in Z^n to nonzero coefficients, kept in lexicographic
/// term order.
template <class C>
class LaurentPoly {
public:
    using Exp = std::vector<long long>;
    using Terms = std::map<Exp, C>;

    explicit LaurentPoly(int vars = 0) : vars_(vars) {}

    static LaurentPoly constant(int vars, const C& c) {
        LaurentPoly p(vars);
        if (!coef_is_zero(c)) p.terms_.emplace(Exp(vars, 0), c);
        return p;
    }
    static LaurentPoly monomial(int vars, const Exp& e, const C& c) {
        if (static_cast<int>(e.size()) != vars)
            throw std::invalid_argument("LaurentPoly: exponent length mismatch");
        LaurentPoly p(vars);
        if (!coef_is_zero(c)) p.terms_.emplace(e, c);
        return p;
    }

    int vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Exp& e, const C& c) {
        if (coef_is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (coef_is_zero(it->second)) terms_.erase(it);
        }
    }

    // The zero polynomial acts as a universal element: it combines with any
    // variable count (matrix code default-constructs zeros).
    LaurentPoly operator+(const LaurentPoly& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        check_vars(o);
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, C() - c);
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }
    LaurentPoly operator*(const LaurentPoly& o) const {
        if (is_zero()) return *this;
        if (o.is_zero()) return o;
        check_vars(o);
        LaurentPoly r(vars_);
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) {
                Exp e(vars_);
                for (int i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Exact division in the Laurent ring; throws if the division is not
    /// exact.  Laurent units are monomials, so both operands are first
    /// shifted to honest polynomials with per-variable minimum exponent zero.
    LaurentPoly exact_div(const LaurentPoly& den) const;

private:
    int vars_;
    Terms terms_;

    void check_vars(const LaurentPoly& o) const {
        if (vars_ != o.vars_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
    }

    Exp min_exponents() const {
        Exp m(vars_, 0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            for (int i = 0; i < vars_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
            first = false;
        }
        return m;
    }

    LaurentPoly shifted(const Exp& by) const {
        LaurentPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            Exp f(vars_);
            for (int i = 0; i < vars_; ++i) f[i] = e[i] + by[i];
            r.terms_.emplace(f, c);
        }
        return r;
    }
};

template <class C>
LaurentPoly<C> LaurentPoly<C>::exact_div(const LaurentPoly& den) const {
    if (den.is_zero()) throw std::invalid_argument("LaurentPoly: division by zero");
    if (is_zero()) return LaurentPoly(vars_);
    // Normalize both to polynomial range; per-variable minima are additive in
    // an integral domain, so exactness is preserved and the quotient is the
    // polynomial quotient shifted back.
    Exp mn = min_exponents(), md = den.min_exponents();
    Exp up_n(vars_), up_d(vars_), back(vars_);
    for (int i = 0; i < vars_; ++i) {
        up_n[i] = -mn[i];
        up_d[i] = -md[i];
        back[i] = mn[i] - md[i];
    }
    LaurentPoly num = shifted(up_n);
    LaurentPoly div = den.shifted(up_d);

    LaurentPoly quot(vars_);
    const auto& dlead = *div.terms_.rbegin();
    while (!num.is_zero()) {
        const auto& nlead = *num.terms_.rbegin();
        Exp qe(vars_);
        for (int i = 0; i < vars_; ++i) {
            qe[i] = nlead.first[i] - dlead.first[i];
            if (qe[i] < 0) throw std::invalid_argument("LaurentPoly: division not exact");
        }
        C qc = coef_div(nlead.second, dlead.second);
        LaurentPoly qterm = monomial(vars_, qe, qc);
        quot = quot + qterm;
        num = num - qterm * div;
    }
    return quot.shifted(back);
}

using RatLaurent = LaurentPoly<Rational>;
using CycLaurent = LaurentPoly<CyclotomicNumber>;

/// Minimal dense matrix over an arbitrary ring.
template <class T>
struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<T> e;

    Mat() = default;
    Mat(size_t r, size_t c, const T& fill = T()) : rows(r), cols(c), e(r * c, fill) {}
    const T& at(size_t i, size_t j) const { return e[i * cols + j]; }
    T& at(size_t i, size_t j) { return e[i * cols + j]; }
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
};

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat<T> p(a.rows, b.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t k = 0; k < a.cols; ++k)
            for (size_t j = 0; j < b.cols; ++j)
                p.at(i, j) = p.at(i, j) + a.at(i, k) * b.at(k, j);
    return p;
}

inline bool ring_is_zero(const Rational& x) { return x == 0; }
inline bool ring_is_zero(const CyclotomicNumber& x) { return x.is_zero(); }
template <class C>
bool ring_is_zero(const LaurentPoly<C>& x) {
    return x.is_zero();
}
inline size_t ring_term_count(const Rational& x) { return x == 0 ? 0 : 1; }
inline size_t ring_term_count(const CyclotomicNumber& x) { return x.term_count(); }
template <class C>
size_t ring_term_count(const LaurentPoly<C>& x) {
    return x.term_count();
}
inline Rational ring_exact_div(const Rational& a, const Rational& b) { return a / b; }
inline CyclotomicNumber ring_exact_div(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a / b;
}
template <class C>
LaurentPoly<C> ring_exact_div(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
    return a.exact_div(b);
}

/// Rank by fraction-free (Bareiss) elimination with full pivoting over any
/// integral domain with exact division.  Pivots are chosen with the fewest
/// terms, ties broken by row-major position, for determinism.
template <class T>
size_t exact_rank(Mat<T> m) {
    size_t rank = 0;
    T prev{};  // treated as 1 on the first step
    bool have_prev = false;
    size_t steps = std::min(m.rows, m.cols);
    for (size_t k = 0; k < steps; ++k) {
        size_t pi = m.rows, pj = m.cols;
        size_t best = 0;
        for (size_t i = k; i < m.rows; ++i)
            for (size_t j = k; j < m.cols; ++j) {
                if (ring_is_zero(m.at(i, j))) continue;
                size_t tc = ring_term_count(m.at(i, j));
                if (pi == m.rows || tc < best) {
                    pi = i;
                    pj = j;
                    best = tc;
                }
            }
        if (pi == m.rows) break;
        for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(k, j), m.at(pi, j));
        for (size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, k), m.at(i, pj));
        for (size_t i = k + 1; i < m.rows; ++i)
            for (size_t j = k + 1; j < m.cols; ++j) {
                T num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = have_prev ? ring_exact_div(num, prev) : num;
            }
        prev = m.at(k, k);
        have_prev = true;
        ++rank;
    }
    return rank;
}

}  // namespace abstorus
