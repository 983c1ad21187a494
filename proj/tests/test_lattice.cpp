#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abstorus/errors.hpp"
#include "abstorus/lattice.hpp"
#include "support.hpp"

using namespace abstorus;

namespace {

IntMatrix mat(std::vector<std::vector<long long>> rows) {
    std::vector<std::vector<Int>> conv;
    for (auto& r : rows) conv.emplace_back(r.begin(), r.end());
    return IntMatrix::from_rows(conv);
}

Lattice span(size_t n, std::vector<std::vector<long long>> rows) {
    return Lattice::from_rows(n, rows.empty() ? IntMatrix(0, n) : mat(rows));
}

bool is_unimodular(const IntMatrix& m) {
    Int d = determinant(m);
    return d == 1 || d == -1;
}

// Solve v = sum c_k h_k against an echelon matrix by back-substitution;
// independent of Lattice::coordinates_of.
bool in_row_span(const IntMatrix& h, std::vector<Int> v) {
    for (size_t k = 0; k < h.rows(); ++k) {
        size_t p = 0;
        while (p < h.cols() && h.at(k, p) == 0) ++p;
        if (p == h.cols()) continue;
        if (v[p] % h.at(k, p) != 0) return false;
        Int c = v[p] / h.at(k, p);
        for (size_t j = 0; j < h.cols(); ++j) v[j] -= c * h.at(k, j);
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("snf identity") {
    auto s = snf(IntMatrix::identity(2));
    CHECK(s.diag == IntMatrix::identity(2));
}

TEST_CASE("snf 2x2 example against gcd/determinant oracle") {
    IntMatrix a = mat({{2, 4}, {6, 8}});
    // Independent route: d1 = gcd of all entries, d1*d2 = |det|.
    Int g = gcd(gcd(Int(2), Int(4)), gcd(Int(6), Int(8)));
    Int det = determinant(a);
    CHECK(g == 2);
    CHECK(det == -8);
    auto s = snf(a);
    CHECK(s.diag.at(0, 0) == g);
    CHECK(s.diag.at(1, 1) == boost::multiprecision::abs(det) / g);
    CHECK(s.left * a * s.right == s.diag);
    CHECK(is_unimodular(s.left));
    CHECK(is_unimodular(s.right));
}

TEST_CASE("snf zero matrix") {
    auto s = snf(IntMatrix(2, 2));
    CHECK(s.diag.is_zero());
    CHECK(s.left == IntMatrix::identity(2));
    CHECK(s.right == IntMatrix::identity(2));
}

TEST_CASE("snf round trip on random matrices") {
    testgen::Rng rng(42);
    std::uniform_int_distribution<size_t> dim(1, 8);
    for (int t = 0; t < 60; ++t) {
        IntMatrix a = testgen::rand_matrix(rng, dim(rng), dim(rng), 50);
        auto s = snf(a);
        CHECK(s.left * a * s.right == s.diag);
        CHECK(is_unimodular(s.left));
        CHECK(is_unimodular(s.right));
        auto d = s.diagonal();
        for (size_t i = 0; i + 1 < d.size(); ++i) {
            CHECK(d[i] >= 0);
            if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
        }
    }
}

TEST_CASE("hnf canonical examples") {
    CHECK(hnf(mat({{2, 0}, {0, 3}})) == mat({{2, 0}, {0, 3}}));
    CHECK(hnf(mat({{1, 2}, {2, 4}})) == mat({{1, 2}}));
    CHECK(hnf(IntMatrix()).rows() == 0);
}

TEST_CASE("hnf is idempotent and span-invariant") {
    testgen::Rng rng(7);
    std::uniform_int_distribution<size_t> dim(1, 5);
    for (int t = 0; t < 80; ++t) {
        size_t r = dim(rng), n = dim(rng);
        IntMatrix a = testgen::rand_matrix(rng, r, n, 9);
        IntMatrix h = hnf(a);
        CHECK(hnf(h) == h);
        // same row span after an arbitrary unimodular change of generators
        IntMatrix u = testgen::rand_unimodular(rng, r);
        CHECK(hnf(u * a) == h);
        // both inclusions, via the transform and by back-substitution
        auto [h2, tr] = hnf_with_transform(a);
        CHECK(h2 == h);
        CHECK(tr * a == h2);
        for (size_t i = 0; i < a.rows(); ++i) CHECK(in_row_span(h, a.row(i)));
    }
}

TEST_CASE("saturate examples") {
    CHECK(saturate(span(2, {{2, 4}})) == span(2, {{1, 2}}));
    CHECK(saturate(span(2, {{1, 0}})) == span(2, {{1, 0}}));
    CHECK(saturate(Lattice::full(3)) == Lattice::full(3));
    CHECK(saturation_index(span(2, {{2, 4}})) == 2);
}

TEST_CASE("saturate is idempotent with finite index") {
    testgen::Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        Lattice l = testgen::rand_lattice(rng, 4, 6);
        Lattice s = saturate(l);
        CHECK(saturate(s) == s);
        CHECK(s.rank() == l.rank());
        CHECK(s.contains_lattice(l));
        CHECK(saturation_index(l) >= 1);
        CHECK(saturation_index(s) == 1);
    }
    // index oracle on scaled primitive rows: k * primitive has index k
    for (int t = 0; t < 20; ++t) {
        IntMatrix row = testgen::rand_matrix(rng, 1, 3, 5);
        Int g = gcd(gcd(row.at(0, 0), row.at(0, 1)), row.at(0, 2));
        if (g == 0) continue;
        for (size_t j = 0; j < 3; ++j) row.at(0, j) /= g;
        Int k = testgen::rand_int(rng, 1, 7);
        IntMatrix scaled = row;
        for (size_t j = 0; j < 3; ++j) scaled.at(0, j) *= k;
        Lattice l = Lattice::from_rows(3, scaled);
        CHECK(saturate(l) == Lattice::from_rows(3, row));
        CHECK(saturation_index(l) == k);
    }
}

TEST_CASE("sum and intersection examples") {
    CHECK(lattice_sum(span(2, {{1, 0}}), span(2, {{0, 1}})) == Lattice::full(2));
    // 1-dimensional intersection is the lcm sublattice
    CHECK(lattice_intersect(span(2, {{2, 0}}), span(2, {{3, 0}})) ==
          span(2, {{static_cast<long long>(boost::multiprecision::lcm(Int(2), Int(3))), 0}}));
    Lattice l = span(2, {{1, 2}});
    CHECK(lattice_intersect(l, Lattice::full(2)) == l);
}

TEST_CASE("rank modularity for random lattice pairs") {
    testgen::Rng rng(13);
    for (int t = 0; t < 80; ++t) {
        Lattice a = testgen::rand_lattice(rng, 4, 4);
        Lattice b = testgen::rand_lattice(rng, 4, 4);
        CHECK(a.rank() + b.rank() ==
              lattice_sum(a, b).rank() + lattice_intersect(a, b).rank());
    }
}

TEST_CASE("lattice ops reject mismatched ambient ranks") {
    CHECK_THROWS_AS(lattice_sum(span(2, {{1, 0}}), span(3, {{1, 0, 0}})), RankMismatchError);
    CHECK_THROWS_AS(lattice_intersect(span(2, {{1, 0}}), span(3, {{1, 0, 0}})),
                    RankMismatchError);
}

TEST_CASE("solve_congruence examples") {
    auto q = solve_congruence(span(2, {{1, 0}}), {QmodZ(1, 4)});
    CHECK(q[0] == QmodZ(1, 4));
    CHECK(q[1] == QmodZ());
    q = solve_congruence(span(2, {{2, 0}}), {QmodZ(1, 2)});
    CHECK(q[0] == QmodZ(1, 4));
    CHECK(q[1] == QmodZ());
    q = solve_congruence(Lattice::full(2), {QmodZ(), QmodZ()});
    CHECK(q == std::vector<QmodZ>{QmodZ(), QmodZ()});
}

TEST_CASE("solve_congruence satisfies every basis congruence exactly") {
    testgen::Rng rng(17);
    for (int t = 0; t < 120; ++t) {
        Lattice l = testgen::rand_lattice(rng, 4, 5);
        std::vector<QmodZ> phi(l.rank());
        for (auto& v : phi) v = testgen::rand_torsion(rng, 24);
        auto q = solve_congruence(l, phi);
        for (size_t i = 0; i < l.rank(); ++i) CHECK(dot_mod1(l.basis().row(i), q) == phi[i]);
        for (const auto& c : q) {
            CHECK(c.value() >= 0);
            CHECK(c.value() < 1);
        }
    }
}
