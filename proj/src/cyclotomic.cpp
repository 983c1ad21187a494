#include "abstorus/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "abstorus/errors.hpp"

namespace abstorus {

namespace {

std::mutex cache_mutex;
std::map<long long, std::vector<Int>> phi_cache;
// x^k mod Phi_N for 0 <= k < N, rational coefficients.
std::map<long long, std::vector<std::vector<Rational>>> power_cache;

// Exact division of integer polynomials, remainder known to vanish.
std::vector<Int> exact_poly_div(const std::vector<Int>& num, const std::vector<Int>& den) {
    std::vector<Int> rem = num;
    std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
    for (size_t i = quot.size(); i-- > 0;) {
        Int c = rem[i + den.size() - 1] / den.back();
        quot[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
    }
    return quot;
}

const std::vector<Int>& cyclotomic_locked(long long n) {
    auto it = phi_cache.find(n);
    if (it != phi_cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Int> num(n + 1, Int(0));
    num[0] = -1;
    num[n] = 1;
    for (long long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = exact_poly_div(num, cyclotomic_locked(d));
    }
    return phi_cache.emplace(n, std::move(num)).first->second;
}

const std::vector<std::vector<Rational>>& powers_locked(long long n) {
    auto it = power_cache.find(n);
    if (it != power_cache.end()) return it->second;
    const std::vector<Int>& phi = cyclotomic_locked(n);
    size_t deg = phi.size() - 1;
    std::vector<std::vector<Rational>> pows(n);
    std::vector<Rational> cur(deg, Rational(0));
    if (deg > 0) cur[0] = 1;
    for (long long k = 0; k < n; ++k) {
        pows[k] = cur;
        // multiply by x, reduce by Phi (monic)
        std::vector<Rational> next(deg, Rational(0));
        Rational top = deg > 0 ? cur[deg - 1] : Rational(0);
        for (size_t i = deg; i-- > 1;) next[i] = cur[i - 1];
        if (top != 0)
            for (size_t i = 0; i < deg; ++i) next[i] -= top * Rational(phi[i]);
        cur = std::move(next);
    }
    return power_cache.emplace(n, std::move(pows)).first->second;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cyclotomic_locked(n);
}

long long euler_phi(long long n) {
    return static_cast<long long>(cyclotomic_polynomial(n).size()) - 1;
}

void CyclotomicNumber::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void CyclotomicNumber::finalize() {
    trim();
    if (c_.size() <= 1) level_ = 1;
}

void CyclotomicNumber::reduce_mod_phi(std::vector<Rational>& poly, long long level) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    const std::vector<Int>& phi = cyclotomic_locked(level);
    size_t deg = phi.size() - 1;
    for (size_t i = poly.size(); i-- > deg;) {
        Rational c = poly[i];
        if (c == 0) continue;
        poly[i] = 0;
        for (size_t j = 0; j < deg; ++j) poly[i - deg + j] -= c * Rational(phi[j]);
    }
    poly.resize(std::min(poly.size(), deg));
}

CyclotomicNumber CyclotomicNumber::from_rational(const Rational& r) {
    CyclotomicNumber x;
    if (r != 0) x.c_.push_back(r);
    return x;
}

CyclotomicNumber CyclotomicNumber::root_of_unity(const QmodZ& q) {
    Int den = q.den();
    if (den > 1000000) throw LevelError("root_of_unity: torsion order too large");
    CyclotomicNumber x;
    x.level_ = static_cast<long long>(den);
    size_t k = static_cast<size_t>(q.num());
    std::vector<Rational> poly(k + 1, Rational(0));
    poly[k] = 1;
    reduce_mod_phi(poly, x.level_);
    x.c_ = std::move(poly);
    x.finalize();
    return x;
}

CyclotomicNumber CyclotomicNumber::from_coeffs(long long level, std::vector<Rational> coeffs) {
    if (level < 1) throw std::invalid_argument("from_coeffs: level must be >= 1");
    CyclotomicNumber x;
    x.level_ = level;
    reduce_mod_phi(coeffs, level);
    x.c_ = std::move(coeffs);
    x.finalize();
    return x;
}

Rational CyclotomicNumber::rational_value() const {
    if (!is_rational()) throw std::invalid_argument("rational_value: number is not rational");
    return c_.empty() ? Rational(0) : c_[0];
}

CyclotomicNumber CyclotomicNumber::lifted_to(long long level) const {
    if (level == level_) return *this;
    if (level % level_ != 0)
        throw LevelError("lifted_to: target level must be a multiple of the current one");
    CyclotomicNumber x;
    x.level_ = level;
    long long stride = level / level_;
    std::vector<Rational> poly;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        const auto& pows = powers_locked(level);
        size_t deg = pows.empty() ? 0 : pows[0].size();
        poly.assign(deg, Rational(0));
        for (size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            const auto& pw = pows[static_cast<size_t>(k) * stride];
            for (size_t j = 0; j < deg; ++j) poly[j] += c_[k] * pw[j];
        }
    }
    x.c_ = std::move(poly);
    x.trim();
    return x;
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
    long long l = std::lcm(level_, o.level_);
    CyclotomicNumber a = lifted_to(l), b = o.lifted_to(l);
    if (a.c_.size() < b.c_.size()) a.c_.resize(b.c_.size(), Rational(0));
    for (size_t i = 0; i < b.c_.size(); ++i) a.c_[i] += b.c_[i];
    a.finalize();
    return a;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
    return *this + (-o);
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber x = *this;
    for (auto& c : x.c_) c = -c;
    return x;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
    long long l = std::lcm(level_, o.level_);
    CyclotomicNumber x;
    if (is_zero() || o.is_zero()) return x;
    CyclotomicNumber a = lifted_to(l), b = o.lifted_to(l);
    x.level_ = l;
    std::vector<Rational> conv(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) conv[i + j] += a.c_[i] * b.c_[j];
    }
    reduce_mod_phi(conv, l);
    x.c_ = std::move(conv);
    x.finalize();
    return x;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw NonInvertibleError("cyclotomic inverse of zero");
    if (is_rational()) {
        CyclotomicNumber x;
        x.level_ = level_;
        x.c_.push_back(Rational(1) / c_[0]);
        return x;
    }
    // Extended Euclid in Q[x] against Phi_level, which is irreducible over Q,
    // so the gcd is a nonzero constant.
    std::vector<Rational> r0, r1 = c_;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        const auto& phi = cyclotomic_locked(level_);
        r0.assign(phi.begin(), phi.end());
    }
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coefficients of c_
    auto degree = [](const std::vector<Rational>& p) {
        size_t d = p.size();
        while (d > 0 && p[d - 1] == 0) --d;
        return d;  // 0 means zero polynomial
    };
    while (degree(r1) > 1) {
        size_t d0 = degree(r0), d1 = degree(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        // r0 -= q * r1 with q the single-term leading quotient
        Rational q = r0[d0 - 1] / r1[d1 - 1];
        size_t shift = d0 - d1;
        for (size_t i = 0; i < d1; ++i) r0[i + shift] -= q * r1[i];
        if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift, Rational(0));
        for (size_t i = 0; i < s1.size(); ++i) s0[i + shift] -= q * s1[i];
        if (degree(r0) < degree(r1)) {
            std::swap(r0, r1);
            std::swap(s0, s1);
        }
    }
    // r1 is a nonzero constant: inverse = s1 / r1.
    if (r1.empty() || r1[0] == 0)
        throw std::logic_error("cyclotomic inverse: gcd degenerated, Phi not irreducible?");
    Rational unit = r1[0];
    std::vector<Rational> inv = s1;
    for (auto& c : inv) c /= unit;
    return from_coeffs(level_, std::move(inv));
}

CyclotomicNumber CyclotomicNumber::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    CyclotomicNumber acc = from_rational(Rational(1));
    CyclotomicNumber base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
    if (level_ == o.level_) return c_ == o.c_;
    long long l = std::lcm(level_, o.level_);
    return lifted_to(l).c_ == o.lifted_to(l).c_;
}

std::string CyclotomicNumber::str() const {
    std::ostringstream os;
    if (is_zero()) return "0";
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        os << rational_to_string(c_[k]);
        if (k > 0) os << "*z" << level_ << "^" << k;
        first = false;
    }
    return os.str();
}

}  // namespace abstorus
