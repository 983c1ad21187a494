#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abstorus/errors.hpp"
#include "abstorus/exp_bridge.hpp"
#include "support.hpp"

using namespace abstorus;

namespace {

IntMatrix mat(std::vector<std::vector<long long>> rows) {
    std::vector<std::vector<Int>> conv;
    for (auto& r : rows) conv.emplace_back(r.begin(), r.end());
    return IntMatrix::from_rows(conv);
}

}  // namespace

TEST_CASE("betti_of_dr examples") {
    // alpha = (1/6, 0), direction span{(0,1)}: the family maps onto {x = z6}
    auto v = make_subspace(2, {Rational(1, 6), Rational(0)}, mat({{0, 1}}));
    TorsionCoset c = betti_of_dr(v);
    CHECK(c.lattice == Lattice::from_rows(2, mat({{1, 0}})));
    CHECK(c.phi == std::vector<QmodZ>{QmodZ(1, 6)});

    // alpha = 0, direction everything: the full torus
    auto full = make_subspace(3, {Rational(0), Rational(0), Rational(0)},
                              IntMatrix::identity(3));
    CHECK(betti_of_dr(full).is_full_torus());

    // alpha = (1/2), direction 0 in rank one: the point -1
    auto pt = make_subspace(1, {Rational(1, 2)}, IntMatrix(0, 1));
    CHECK(betti_of_dr(pt) == TorsionCoset::point(TorsionPoint({QmodZ(1, 2)})));
}

TEST_CASE("dr_of_betti examples") {
    auto full = dr_of_betti(TorsionCoset::full_torus(2));
    CHECK(full.dim() == 2);
    for (const auto& t : full.translate) CHECK(t == 0);

    std::vector<std::pair<std::vector<Int>, QmodZ>> chars{
        {{Int(1), Int(0)}, QmodZ(1, 6)}};
    TorsionCoset xz6 = cosets_from_characters(2, chars)[0];
    auto v = dr_of_betti(xz6);
    CHECK(v.translate == std::vector<Rational>{Rational(1, 6), Rational(0)});
    CHECK(v.direction == Lattice::from_rows(2, mat({{0, 1}})));

    auto pt = dr_of_betti(TorsionCoset::point(TorsionPoint({QmodZ(1, 4), QmodZ(3, 4)})));
    CHECK(pt.translate == std::vector<Rational>{Rational(1, 4), Rational(3, 4)});
    CHECK(pt.dim() == 0);
}

TEST_CASE("round trip is the identity on randomized cosets") {
    testgen::Rng rng(909);
    for (int t = 0; t < 200; ++t) {
        size_t n = 1 + t % 4;
        TorsionCoset c = testgen::rand_coset(rng, n, 24, 3);
        RationalAffineSubspace v = dr_of_betti(c);
        CHECK(betti_of_dr(v) == c);
        CHECK(v.dim() == c.dim());
        // canonical translate: coordinates already reduced into [0,1)
        for (const auto& x : v.translate) {
            CHECK(x >= 0);
            CHECK(x < 1);
        }
        // idempotent canonical form
        CHECK(dr_of_betti(betti_of_dr(v)) == v);
    }
}

TEST_CASE("inversion on the coset negates the translate class") {
    testgen::Rng rng(910);
    for (int t = 0; t < 60; ++t) {
        TorsionCoset c = testgen::rand_coset(rng, 3, 12);
        RationalAffineSubspace v = dr_of_betti(c);
        std::vector<Rational> neg(v.translate.size());
        for (size_t i = 0; i < neg.size(); ++i) neg[i] = -v.translate[i];
        // -alpha with the same direction maps onto the inverted coset
        CHECK(betti_of_dr(make_subspace(3, neg, v.direction.basis())) == c.inverted());
    }
}

TEST_CASE("bridge is functorial for monomial pullback") {
    testgen::Rng rng(911);
    for (int t = 0; t < 40; ++t) {
        IntMatrix a = testgen::rand_matrix(rng, 2, 3, 2);  // map (C*)^3 -> (C*)^2
        TorsionCoset c = testgen::rand_coset(rng, 2, 12);
        RationalAffineSubspace v = dr_of_betti(c);
        AbsoluteSet pre = preimage(a, AbsoluteSet::from_coset(c));
        for (const auto& cell : pre.cells()) {
            RationalAffineSubspace w = dr_of_betti(cell.positive);
            // the linear image A . w lies back in the original family:
            // direction maps into the direction, translate into the
            // translate class
            for (size_t r = 0; r < w.direction.rank(); ++r) {
                std::vector<Int> img(2, Int(0));
                for (size_t i = 0; i < 2; ++i)
                    for (size_t j = 0; j < 3; ++j)
                        img[i] += a.at(i, j) * w.direction.basis().at(r, j);
                CHECK(saturate(v.direction).contains_vector(img));
            }
            std::vector<Rational> img_t(2, Rational(0));
            for (size_t i = 0; i < 2; ++i)
                for (size_t j = 0; j < 3; ++j)
                    img_t[i] += Rational(a.at(i, j)) * w.translate[j];
            // lambda . (A alpha') = phi(lambda) for every character of c
            for (size_t r = 0; r < c.lattice.rank(); ++r)
                CHECK(QmodZ(dot(c.lattice.basis().row(r), img_t)) == c.phi[r]);
        }
    }
}

TEST_CASE("direction entries: rationals clear denominators, irrationals are rejected") {
    CHECK(parse_direction_entry("3") == Rational(3));
    CHECK(parse_direction_entry("1/2") == Rational(1, 2));
    CHECK(parse_direction_entry("sqrt(9)") == Rational(3));
    CHECK_THROWS_AS(parse_direction_entry("sqrt(2)"), IrrationalDirectionError);
    CHECK_THROWS_AS(parse_direction_entry("pi"), IrrationalDirectionError);
    CHECK_THROWS_AS(parse_direction_entry("e"), IrrationalDirectionError);
    CHECK_THROWS_AS(parse_direction_entry("wat"), ParseError);
}
