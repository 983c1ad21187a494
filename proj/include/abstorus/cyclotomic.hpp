#pragma once

#include <vector>

#include "abstorus/numeric.hpp"

namespace abstorus {

/// Coefficients (ascending) of the N-th cyclotomic polynomial, computed once
/// and cached.
const std::vector<Int>& cyclotomic_polynomial(long long n);

long long euler_phi(long long n);

/// An exact element of Q(zeta_N), stored as the reduced residue in
/// Q[x]/Phi_N(x).  Mixed-level arithmetic lifts both operands into the
/// compositum Q(zeta_lcm).
class CyclotomicNumber {
public:
    CyclotomicNumber() : level_(1) {}

    static CyclotomicNumber from_rational(const Rational& r);
    static CyclotomicNumber from_int(long long v) { return from_rational(Rational(v)); }
    /// exp(2*pi*i*q) at level q.den().
    static CyclotomicNumber root_of_unity(const QmodZ& q);
    static CyclotomicNumber from_coeffs(long long level, std::vector<Rational> coeffs);

    long long level() const { return level_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return c_.size() <= 1; }
    Rational rational_value() const;  // requires is_rational()

    /// Same number represented at a multiple of the current level.
    CyclotomicNumber lifted_to(long long level) const;

    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-() const;
    CyclotomicNumber inverse() const;  // throws on zero
    CyclotomicNumber operator/(const CyclotomicNumber& o) const { return *this * o.inverse(); }
    CyclotomicNumber pow(long long e) const;

    bool operator==(const CyclotomicNumber& o) const;
    bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }

    size_t term_count() const { return c_.size(); }

    std::string str() const;

private:
    long long level_;
    std::vector<Rational> c_;  // degree < deg Phi_level, no trailing zeros

    void trim();
    /// trim, then drop the level tag to 1 when the residue is a constant
    /// (rational values have the constant as their unique representative at
    /// every level).
    void finalize();
    static void reduce_mod_phi(std::vector<Rational>& poly, long long level);
};

}  // namespace abstorus
