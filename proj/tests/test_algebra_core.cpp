// Rational arithmetic, Smith normal form, and abelian-group/homology kernels.
//
// The SNF property block is one leg of the randomized-contract budget: the
// transforms are verified directly (U*A*V = D, tracked inverses multiply to the
// identity, divisor chain), and the divisors are cross-checked against the
// independent minor-gcd oracle in test_util.hpp.

#include <catch2/catch_amalgamated.hpp>

#include "shadowcalc/abelian.hpp"
#include "shadowcalc/matrix.hpp"
#include "shadowcalc/rational.hpp"
#include "test_util.hpp"

using namespace shadowcalc;

TEST_CASE("rational arithmetic and normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) - Rational(3, 2) == Rational(-1));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parse and format") {
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("0") == Rational(0));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(to_string(Rational(1, 2)) == "1/2");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(Rational(-1, 2)) == "-1/2");
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
}

namespace {

IntMat make(int r, int c, std::initializer_list<i64> vals) {
    IntMat m(r, c);
    int k = 0;
    for (const i64 v : vals) m.a[k++] = v;
    return m;
}

void check_snf_contract(const IntMat& a) {
    const SnfResult s = snf(a);
    // U*A*V = D
    CHECK(s.u * to_big(a) * s.v == to_big(s.d));
    // Tracked inverses really invert (integer inverse <=> unimodular).
    CHECK(s.u * s.u_inv == BigMat::identity(a.rows));
    CHECK(s.v * s.v_inv == BigMat::identity(a.cols));
    // D diagonal, nonnegative, divisor chain.
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
    for (int i = 0; i < s.rank; ++i) {
        CHECK(s.d.at(i, i) > 0);
        if (i + 1 < s.rank) CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
    }
    for (int i = s.rank; i < std::min(a.rows, a.cols); ++i) CHECK(s.d.at(i, i) == 0);
}

} // namespace

TEST_CASE("snf pinned examples") {
    SECTION("already diagonal") {
        const SnfResult s = snf(make(2, 2, {1, 0, 0, 6}));
        CHECK(s.divisors == std::vector<i64>{1, 6});
    }
    SECTION("2x2 with gcd 2 and determinant -8") {
        const SnfResult s = snf(make(2, 2, {2, 4, 6, 8}));
        CHECK(s.divisors == std::vector<i64>{2, 4});
        check_snf_contract(make(2, 2, {2, 4, 6, 8}));
    }
    SECTION("zero matrix") {
        const SnfResult s = snf(IntMat(3, 2));
        CHECK(s.rank == 0);
        CHECK(s.divisors.empty());
    }
}

TEST_CASE("snf randomized contract with minor-gcd oracle") {
    auto& gen = testutil::rng(101);
    // Full oracle comparison on 600 matrices up to 8x8 (the minor enumeration
    // is the expensive part), then a larger contract-only sweep.
    for (int iter = 0; iter < 600; ++iter) {
        const IntMat a = testutil::random_matrix(gen, 8, 9);
        check_snf_contract(a);
        CHECK(snf(a).divisors == testutil::oracle_divisors(a));
    }
    for (int iter = 0; iter < 3000; ++iter) {
        const IntMat a = testutil::random_matrix(gen, 8, 9);
        check_snf_contract(a);
    }
    // Larger entries: small matrices with full oracle, then full-size contract.
    for (int iter = 0; iter < 500; ++iter) {
        const IntMat a = testutil::random_matrix(gen, 4, 5000);
        check_snf_contract(a);
        CHECK(snf(a).divisors == testutil::oracle_divisors(a));
    }
    for (int iter = 0; iter < 500; ++iter) {
        const IntMat a = testutil::random_matrix(gen, 8, 60);
        check_snf_contract(a);
        CHECK(snf(a).divisors == testutil::oracle_divisors(a));
    }
}

TEST_CASE("kernel basis") {
    // d1 of a segment-with-two-vertices: kernel empty.
    const IntMat seg = make(2, 1, {-1, 1});
    CHECK(kernel_basis(seg).cols == 0);
    // A rank-1 2x2 matrix has a 1-dimensional kernel.
    const IntMat r1 = make(2, 2, {1, 2, 2, 4});
    const IntMat k = kernel_basis(r1);
    REQUIRE(k.cols == 1);
    const IntMat prod = r1 * k;
    for (const i64 v : prod.a) CHECK(v == 0);
}

TEST_CASE("abelian group formatting") {
    CHECK(to_string(AbelianGroup{}) == "0");
    CHECK(to_string(AbelianGroup{1, {}}) == "Z");
    CHECK(to_string(AbelianGroup{2, {3}}) == "Z^2 + Z/3");
    CHECK(to_string(AbelianGroup{0, {2, 4}}) == "Z/2 + Z/4");
}

TEST_CASE("homology of pinned small complexes") {
    SECTION("circle: one vertex, one edge, no 2-cells") {
        const IntMat d1(1, 1); // the loop edge has zero boundary
        const IntMat d2(1, 0);
        const HomologyTriple h = homology_from_boundaries(d1, d2);
        CHECK(h.h0 == AbelianGroup{1, {}});
        CHECK(h.h1 == AbelianGroup{1, {}});
        CHECK(h.h2 == AbelianGroup{});
    }
    SECTION("disk attached to a circle with winding 3") {
        const IntMat d1(1, 1);
        const IntMat d2 = make(1, 1, {3});
        const HomologyTriple h = homology_from_boundaries(d1, d2);
        CHECK(h.h0 == AbelianGroup{1, {}});
        CHECK(h.h1 == AbelianGroup{0, {3}});
        CHECK(h.h2 == AbelianGroup{});
    }
    SECTION("projective plane") {
        const IntMat d1(1, 1);
        const IntMat d2 = make(1, 1, {2});
        const HomologyTriple h = homology_from_boundaries(d1, d2);
        CHECK(h.h1 == AbelianGroup{0, {2}});
        CHECK(h.h2 == AbelianGroup{});
    }
    SECTION("torus: standard one-vertex CW structure") {
        const IntMat d1(1, 2);
        const IntMat d2(2, 1); // attaching word aba^-1b^-1 abelianizes to 0
        const HomologyTriple h = homology_from_boundaries(d1, d2);
        CHECK(h.h0 == AbelianGroup{1, {}});
        CHECK(h.h1 == AbelianGroup{2, {}});
        CHECK(h.h2 == AbelianGroup{1, {}});
    }
    SECTION("rejects non-complexes") {
        const IntMat d1 = make(1, 1, {1});
        const IntMat d2 = make(1, 1, {1});
        CHECK_THROWS_AS(homology_from_boundaries(d1, d2), std::invalid_argument);
    }
}
