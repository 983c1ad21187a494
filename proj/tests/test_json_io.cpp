#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abstorus/errors.hpp"
#include "abstorus/fox.hpp"
#include "abstorus/json_io.hpp"
#include "support.hpp"

using namespace abstorus;
namespace io = abstorus::io;

TEST_CASE("matrix round trip, including big integers") {
    IntMatrix m(2, 2);
    m.at(0, 0) = Int("123456789012345678901234567890");
    m.at(1, 1) = -7;
    auto j = io::to_json(m);
    CHECK(io::matrix_from_json(j) == m);
    CHECK(j["entries"][0][0].is_string());  // too big for a JSON number
    CHECK(j["entries"][1][1].is_number_integer());
}

TEST_CASE("set round trip is canonical and exact") {
    testgen::Rng rng(12321);
    for (int t = 0; t < 30; ++t) {
        AbsoluteSet s = testgen::rand_set(rng, 1 + t % 3, 12);
        auto j = io::to_json(s);
        AbsoluteSet back = io::set_from_json(j);
        CHECK(back == s);
        CHECK(io::dump_canonical(io::to_json(back)) == io::dump_canonical(j));
    }
}

TEST_CASE("coset parsing validates the character system") {
    // reducible: a non-saturated system cuts out two cosets
    auto reducible = io::parse_text(R"({"ambient_rank": 1, "lattice": [[2]], "phi": ["0/1"]})");
    CHECK_THROWS_AS(io::coset_from_json(reducible), ParseError);
    // inconsistent: 2*lambda and lambda with clashing values
    auto inconsistent = io::parse_text(
        R"({"ambient_rank": 1, "lattice": [[1], [2]], "phi": ["1/2", "1/2"]})");
    CHECK_THROWS_AS(io::coset_from_json(inconsistent), ParseError);
    // a consistent redundant system is normalized
    auto fine = io::parse_text(
        R"({"ambient_rank": 1, "lattice": [[1], [2]], "phi": ["1/2", "0/1"]})");
    CHECK(io::coset_from_json(fine) == TorsionCoset::point(TorsionPoint({QmodZ(1, 2)})));
}

TEST_CASE("subspace parsing clears denominators and rejects irrationals") {
    auto half = io::parse_text(
        R"({"ambient_rank": 2, "translate": ["1/6", "0/1"], "direction": [["1", "1/2"]]})");
    RationalAffineSubspace v = io::subspace_from_json(half);
    CHECK(v.direction == Lattice::from_rows(
                             2, IntMatrix::from_rows({{Int(2), Int(1)}})));
    auto bad = io::parse_text(
        R"j({"ambient_rank": 2, "translate": ["0/1", "0/1"], "direction": [["1", "sqrt(2)"]]})j");
    CHECK_THROWS_AS(io::subspace_from_json(bad), IrrationalDirectionError);
}

TEST_CASE("complex round trip") {
    auto fx = fox_complex(GroupPresentation::parse("gens: a b\nrel: a b a b^-1 a^-1 b^-1\n"));
    LaurentChainComplex c = fx.identity_component();
    auto j = io::to_json(c);
    LaurentChainComplex back = io::complex_from_json(j);
    CHECK(back == c);
    // broken composition is rejected at the parse boundary
    io::json broken = j;
    broken["differentials"][1]["entries"][0][2][0][1] = 5;
    CHECK_THROWS_AS(io::complex_from_json(broken), ParseError);
}

TEST_CASE("parse errors carry line and column") {
    try {
        io::parse_text("{\n  \"rows\": 2,\n  oops\n}");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("report serialization carries locus, certificates and the note") {
    auto fx = fox_complex(GroupPresentation::parse("gens: a b\nrel: a b a b^-1 a^-1 b^-1\n"));
    auto rep = jump_locus_reconstruct(fx.identity_component(), 1, 1, 12);
    auto j = io::to_json(rep);
    CHECK(j["search_level"] == 12);
    CHECK(j["locus"]["cells"].size() == 3);
    CHECK(j["certificates"].size() == 3);
    CHECK(j["completeness_note"].get<std::string>().find("level 12") != std::string::npos);
    CHECK(io::set_from_json(j["locus"]) == rep.locus);
}
