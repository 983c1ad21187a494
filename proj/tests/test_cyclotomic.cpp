#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "abstorus/cyclotomic.hpp"
#include "abstorus/errors.hpp"

using namespace abstorus;

namespace {

std::vector<Int> poly(std::vector<long long> c) { return std::vector<Int>(c.begin(), c.end()); }

// schoolbook product, independent of the library reduction paths
std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

CyclotomicNumber cyc(long long level, std::vector<long long> coeffs) {
    std::vector<Rational> c(coeffs.begin(), coeffs.end());
    return CyclotomicNumber::from_coeffs(level, c);
}

}  // namespace

TEST_CASE("small cyclotomic polynomials match the known table") {
    CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == poly({1, 1}));
    CHECK(cyclotomic_polynomial(3) == poly({1, 1, 1}));
    CHECK(cyclotomic_polynomial(4) == poly({1, 0, 1}));
    CHECK(cyclotomic_polynomial(5) == poly({1, 1, 1, 1, 1}));
    CHECK(cyclotomic_polynomial(6) == poly({1, -1, 1}));
    CHECK(cyclotomic_polynomial(8) == poly({1, 0, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(9) == poly({1, 0, 0, 1, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(60) == 16);
}

TEST_CASE("product over divisors reconstructs x^n - 1") {
    for (long long n = 1; n <= 30; ++n) {
        std::vector<Int> prod{Int(1)};
        for (long long d = 1; d <= n; ++d)
            if (n % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
        std::vector<Int> expect(n + 1, Int(0));
        expect[0] = -1;
        expect[n] = 1;
        CHECK(prod == expect);
    }
}

TEST_CASE("arithmetic basics") {
    auto z5 = CyclotomicNumber::root_of_unity(QmodZ(1, 5));
    CyclotomicNumber sum;
    for (int k = 1; k <= 4; ++k) sum = sum + z5.pow(k);
    CHECK(sum == CyclotomicNumber::from_int(-1));
    CHECK(z5.pow(5) == CyclotomicNumber::from_int(1));
    CHECK((z5 - z5).is_zero());
    CHECK(CyclotomicNumber::root_of_unity(QmodZ(1, 2)) == CyclotomicNumber::from_int(-1));
}

TEST_CASE("cross-level arithmetic lifts to the compositum") {
    auto z6 = CyclotomicNumber::root_of_unity(QmodZ(1, 6));
    auto z4 = CyclotomicNumber::root_of_unity(QmodZ(1, 4));
    CHECK(z6 * z4 == CyclotomicNumber::root_of_unity(QmodZ(5, 12)));
    CHECK(z6 + z4 - z4 == z6);
    CHECK(cyc(2, {-1}) == CyclotomicNumber::from_int(-1));  // Q(zeta_2) = Q
}

TEST_CASE("golden-ratio point in the fifth cyclotomic field") {
    // sqrt(5) = zeta - zeta^2 - zeta^3 + zeta^4 = -1 - 2 zeta^2 - 2 zeta^3
    auto sqrt5 = cyc(5, {-1, 0, -2, -2});
    CHECK(sqrt5 * sqrt5 == CyclotomicNumber::from_int(5));
    auto t = cyc(5, {1, 0, -1, -1});  // (3 + sqrt 5)/2
    CHECK(t + t == CyclotomicNumber::from_int(3) + sqrt5);
    CHECK((t * t - CyclotomicNumber::from_int(3) * t + CyclotomicNumber::from_int(1)).is_zero());
}

TEST_CASE("inverses multiply back to one") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long long> coeff(-4, 4);
    for (long long level : {1, 2, 3, 4, 5, 6, 8, 12}) {
        for (int t = 0; t < 20; ++t) {
            std::vector<Rational> c(euler_phi(level));
            for (auto& x : c) x = coeff(rng);
            auto v = CyclotomicNumber::from_coeffs(level, c);
            if (v.is_zero()) continue;
            CHECK(v * v.inverse() == CyclotomicNumber::from_int(1));
        }
    }
    CHECK_THROWS_AS(CyclotomicNumber().inverse(), NonInvertibleError);
}

TEST_CASE("rationality detection") {
    CHECK(CyclotomicNumber::from_rational(Rational(7, 3)).is_rational());
    CHECK(CyclotomicNumber::from_rational(Rational(7, 3)).rational_value() == Rational(7, 3));
    auto z3 = CyclotomicNumber::root_of_unity(QmodZ(1, 3));
    CHECK_FALSE(z3.is_rational());
    CHECK((z3 + z3.pow(2)).is_rational());  // = -1
}
