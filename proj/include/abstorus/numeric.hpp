#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace abstorus {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// Floor division: the unique q with a = q*b + r, 0 <= r < |b|.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational frac_part(const Rational& r) {
    Int q = floor_div(numerator(r), denominator(r));
    return r - Rational(q);
}

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

/// A rational residue mod 1, stored as the reduced representative a/b with
/// 0 <= a < b.  Torsion data on cosets and points lives here.
class QmodZ {
public:
    QmodZ() : v_(0) {}
    explicit QmodZ(const Rational& r) : v_(frac_part(r)) {}
    QmodZ(long long num, long long den) : v_(frac_part(Rational(num, den))) {}

    const Rational& value() const { return v_; }
    Int num() const { return numerator(v_); }
    Int den() const { return denominator(v_); }
    /// Multiplicative order of exp(2*pi*i * v) — the reduced denominator.
    Int order() const { return den(); }
    bool is_zero() const { return v_ == 0; }

    QmodZ operator+(const QmodZ& o) const { return QmodZ(v_ + o.v_); }
    QmodZ operator-(const QmodZ& o) const { return QmodZ(v_ - o.v_); }
    QmodZ operator-() const { return QmodZ(-v_); }
    QmodZ operator*(const Int& k) const { return QmodZ(v_ * Rational(k)); }

    bool operator==(const QmodZ& o) const { return v_ == o.v_; }
    bool operator!=(const QmodZ& o) const { return v_ != o.v_; }
    bool operator<(const QmodZ& o) const { return v_ < o.v_; }

    std::string str() const { return rational_to_string(v_); }
    static QmodZ parse(const std::string& s) { return QmodZ(rational_from_string(s)); }

private:
    Rational v_;
};

inline QmodZ dot_mod1(const std::vector<Int>& a, const std::vector<QmodZ>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot_mod1: length mismatch");
    Rational acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += Rational(a[i]) * b[i].value();
    return QmodZ(acc);
}

inline Rational dot(const std::vector<Int>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += Rational(a[i]) * b[i];
    return acc;
}

}  // namespace abstorus
