#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "outf3/exact_linear.hpp"

using namespace outf3;
using namespace outf3::exactlin;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                             int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        RationalMatrix m = random_matrix(rng, n, n, -3, 3);
        if (m.determinant() != 0) return m;
    }
}

}  // namespace

TEST_CASE("rational string round trip") {
    CHECK(rational_to_string(rational_from_string("-4/6")) == "-2/3");
    CHECK(rational_to_string(rational_from_string("7")) == "7");
    CHECK(rational_from_string("1/2") + rational_from_string("1/3") == Rational(5, 6));
    CHECK_THROWS_AS(rational_from_string("abc"), ParseError);
}

TEST_CASE("kernel basics") {
    CHECK(kernel(RationalMatrix::identity(3)).dimension() == 0);
    CHECK(kernel(RationalMatrix(2, 2)) == Subspace::full(2));

    RationalMatrix ones = RationalMatrix::from_int_rows({{1, 1}, {1, 1}});
    Subspace k = kernel(ones);
    REQUIRE(k.dimension() == 1);
    CHECK(k.contains(Vector{Rational(1), Rational(-1)}));
}

TEST_CASE("intersection basics") {
    Subspace full = Subspace::full(3);
    Subspace e1 = Subspace::span_of_vectors({{Rational(1), Rational(0), Rational(0)}}, 3);
    Subspace e2 = Subspace::span_of_vectors({{Rational(0), Rational(1), Rational(0)}}, 3);
    Subspace e12 = sum(e1, e2);
    Subspace e23 = Subspace::span_of_vectors({{Rational(0), Rational(1), Rational(0)},
                                              {Rational(0), Rational(0), Rational(1)}}, 3);

    CHECK(intersect(e12, full) == e12);
    CHECK(intersect(e1, e2).dimension() == 0);
    CHECK(intersect(e12, e23) == e2);
    CHECK_THROWS_AS(intersect(e1, Subspace::full(4)), PreconditionError);
}

TEST_CASE("echelon canonicalization: row-equivalent inputs give identical bases") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        RationalMatrix m = random_matrix(rng, 4, 5);
        // Row-equivalent variant: invertible transform on the left.
        RationalMatrix t = random_invertible(rng, 4);
        Subspace a = Subspace::span_of_rows(m);
        Subspace b = Subspace::span_of_rows(t * m);
        CHECK(a == b);
        CHECK(a.basis() == b.basis());
    }
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t rows = size(rng), cols = size(rng);
        RationalMatrix m = random_matrix(rng, rows, cols);
        EchelonForm ef = reduced_row_echelon(m);
        CHECK(kernel(m).dimension() + ef.pivots.size() == cols);
    }
}

TEST_CASE("Grassmann dimension identity on random subspace pairs") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::size_t> size(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
        Subspace a = Subspace::span_of_rows(random_matrix(rng, size(rng), 5));
        Subspace b = Subspace::span_of_rows(random_matrix(rng, size(rng), 5));
        CHECK(a.dimension() + b.dimension() ==
              sum(a, b).dimension() + intersect(a, b).dimension());
    }
}

TEST_CASE("matrix inverse and determinant") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        RationalMatrix m = random_invertible(rng, 4);
        auto inv = m.inverse();
        REQUIRE(inv.has_value());
        CHECK((m * *inv).is_identity());
        CHECK(m.determinant() * inv->determinant() == 1);
    }
    RationalMatrix singular = RationalMatrix::from_int_rows({{1, 2}, {2, 4}});
    CHECK(!singular.inverse().has_value());
    CHECK(singular.determinant() == 0);
}

TEST_CASE("sym2 monomial ordering for n=3") {
    // (11, 12, 13, 22, 23, 33)
    CHECK(sym2_dimension(3) == 6);
    CHECK(sym2_index(3, 0, 0) == 0);
    CHECK(sym2_index(3, 0, 1) == 1);
    CHECK(sym2_index(3, 0, 2) == 2);
    CHECK(sym2_index(3, 1, 1) == 3);
    CHECK(sym2_index(3, 1, 2) == 4);
    CHECK(sym2_index(3, 2, 2) == 5);
    for (std::size_t idx = 0; idx < 6; ++idx) {
        auto [a, b] = sym2_monomial(3, idx);
        CHECK(sym2_index(3, a, b) == idx);
    }
}

TEST_CASE("sym2_map on identity and sign matrices") {
    CHECK(sym2_map(RationalMatrix::identity(3)) == RationalMatrix::identity(6));

    RationalMatrix flip = RationalMatrix::from_int_rows({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    RationalMatrix expected = RationalMatrix::from_int_rows({
        {1, 0, 0, 0, 0, 0},
        {0, -1, 0, 0, 0, 0},
        {0, 0, -1, 0, 0, 0},
        {0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 1},
    });
    CHECK(sym2_map(flip) == expected);
}

TEST_CASE("sym2_map of a transvection expands (e2+e1)(e2+e1)") {
    // a2 -> a2 a1 abelianizes to I + E_12; column of monomial 22 must read
    // (e2+e1)(e2+e1) = e1e1 + 2 e1e2 + e2e2.
    RationalMatrix m = RationalMatrix::from_int_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    RationalMatrix s = sym2_map(m);
    std::size_t col = sym2_index(3, 1, 1);
    CHECK(s.at(sym2_index(3, 0, 0), col) == 1);
    CHECK(s.at(sym2_index(3, 0, 1), col) == 2);
    CHECK(s.at(sym2_index(3, 1, 1), col) == 1);
    CHECK(s.at(sym2_index(3, 0, 2), col) == 0);
    CHECK(s.at(sym2_index(3, 1, 2), col) == 0);
    CHECK(s.at(sym2_index(3, 2, 2), col) == 0);
}

TEST_CASE("sym2_map functoriality on random invertible pairs") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        RationalMatrix a = random_invertible(rng, 3);
        RationalMatrix b = random_invertible(rng, 3);
        CHECK(sym2_map(a * b) == sym2_map(a) * sym2_map(b));
    }
    CHECK_THROWS_AS(sym2_map(RationalMatrix(2, 3)), PreconditionError);
}

TEST_CASE("subspace membership and coordinates") {
    Subspace s = Subspace::span_of_vectors(
        {{Rational(1), Rational(0), Rational(1)}, {Rational(0), Rational(1), Rational(1)}}, 3);
    Vector v{Rational(2), Rational(3), Rational(5)};
    auto coords = s.coordinates(v);
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == 2);
    CHECK((*coords)[1] == 3);
    CHECK(!s.contains(Vector{Rational(1), Rational(0), Rational(0)}));
}

TEST_CASE("matrix JSON round trip uses exact strings") {
    RationalMatrix m(2, 2);
    m.at(0, 0) = Rational(1, 3);
    m.at(0, 1) = Rational(-7);
    m.at(1, 0) = Rational(0);
    m.at(1, 1) = Rational(22, 7);
    nlohmann::json j = m.to_json();
    CHECK(j[0][0] == "1/3");
    CHECK(RationalMatrix::from_json(j) == m);
}
