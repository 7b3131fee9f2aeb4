#include <doctest.h>

#include "qbetti/catalog.hpp"
#include "support/naive.hpp"

using namespace qbetti;

namespace {

PowerSeries fromInts(Field f, std::initializer_list<long long> coeffs, int cap) {
    PowerSeries s(f, cap);
    int d = 0;
    for (long long c : coeffs) s.set(d++, Rational(c));
    return s;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("classifying space expansions match pinned values") {
    CHECK(poincareBU(1).expand(6) == fromInts(Field::Rationals, {1, 0, 1, 0, 1, 0, 1}, 6));
    CHECK(poincareBU(2).expand(4) == fromInts(Field::Rationals, {1, 0, 1, 0, 2}, 4));
    CHECK(poincareBU(0).expand(3) == fromInts(Field::Rationals, {1, 0, 0, 0}, 3));
    CHECK(poincareBOmod2(1).expand(4) == fromInts(Field::GF2, {1, 1, 1, 1, 1}, 4));
    CHECK(poincareBOmod2(2).expand(3) == fromInts(Field::GF2, {1, 1, 2, 2}, 3));
    CHECK(poincareBT(2).expand(4) == fromInts(Field::Rationals, {1, 0, 2, 0, 3}, 4));
    CHECK(poincareBE2(1).expand(3) == fromInts(Field::GF2, {1, 1, 1, 1}, 3));
    CHECK(poincareBE2(0).expand(2) == fromInts(Field::GF2, {1, 0, 0}, 2));
    // BSO(2) is a circle's classifying space: one degree-2 generator.
    CHECK(poincareBSO(2).expand(4) == fromInts(Field::GF2, {1, 0, 1, 0, 1}, 4));
}

TEST_CASE("classifying space factor lists") {
    CHECK(poincareBU(3).factors() == std::vector<int>{2, 4, 6});
    CHECK(poincareBOmod2(3).factors() == std::vector<int>{1, 2, 3});
    CHECK(poincareBSO(3).factors() == std::vector<int>{2, 3});
    CHECK(poincareBT(2).factors() == std::vector<int>{2, 2});
    CHECK(poincareBE2(2).factors() == std::vector<int>{1, 1});
}

TEST_CASE("grassmannian polynomials match pinned values") {
    CHECK(grassC(2, 1) == fromInts(Field::Rationals, {1, 0, 1}, 2));
    CHECK(grassC(2, 1).cap() == 2);
    CHECK(grassC(4, 2) == fromInts(Field::Rationals, {1, 0, 1, 0, 2, 0, 1, 0, 1}, 8));
    CHECK(grassC(3, 0) == fromInts(Field::Rationals, {1}, 0));
    CHECK(grassRmod2(2, 1) == fromInts(Field::GF2, {1, 1}, 1));
    CHECK(grassRmod2(4, 2) == fromInts(Field::GF2, {1, 1, 2, 1, 1}, 4));
    CHECK(grassRmod2(3, 3) == fromInts(Field::GF2, {1}, 0));
}

TEST_CASE("grassmannians agree with the Pascal recurrence oracle") {
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            naive::Poly viaPascalC = naive::gaussianBinomial(n, k, 2);
            naive::Poly viaPascalR = naive::gaussianBinomial(n, k, 1);
            CHECK(grassC(n, k) ==
                  naive::toSeries(Field::Rationals, viaPascalC, 2 * k * (n - k)));
            CHECK(grassRmod2(n, k) ==
                  naive::toSeries(Field::GF2, viaPascalR, k * (n - k)));
        }
    }
}

TEST_CASE("gaussian symmetry, degree, palindromicity, halving") {
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            PowerSeries c = grassC(n, k);
            PowerSeries r = grassRmod2(n, k);
            CHECK(c == grassC(n, n - k));
            CHECK(r == grassRmod2(n, n - k));
            CHECK(c.degree() == 2 * k * (n - k));
            CHECK(r.degree() == k * (n - k));
            CHECK(halveExponents(c) == r);
            for (int d = 0; d <= c.degree(); ++d) {
                CHECK(c.coeff(d) == c.coeff(c.degree() - d));
                CHECK(c.coeff(d) >= 0);
                CHECK(denominator(c.coeff(d)) == 1);
            }
            for (int d = 0; d <= r.degree(); ++d) {
                CHECK(r.coeff(d) == r.coeff(r.degree() - d));
            }
        }
    }
}

TEST_CASE("BO is BU with exponents halved, same for the tori") {
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        int cap = 14;
        CHECK(poincareBOmod2(n).expand(cap) ==
              halveExponents(poincareBU(n).expand(2 * cap)));
        CHECK(poincareBE2(n).expand(cap) ==
              halveExponents(poincareBT(n).expand(2 * cap)));
        // Same identity phrased through substitution.
        CHECK(substituteTPower(poincareBOmod2(n).expand(2 * cap), 2) ==
              poincareBU(n).expand(2 * cap));
    }
}

TEST_CASE("space ids parse and render both ways") {
    for (const char* name : {"BU(3)", "BO(5)", "BSO(4)", "BT(2)", "BE2(1)",
                             "GrassC(4,2)", "GrassR(5,0)", "Point"}) {
        CHECK(spaceName(parseSpaceId(name)) == name);
    }
    CHECK(catalogForm(parseSpaceId("BU(2)")).factors() == std::vector<int>{2, 4});
    CHECK(catalogForm(parseSpaceId("GrassC(2,1)")).expand(2) ==
          fromInts(Field::Rationals, {1, 0, 1}, 2));
    CHECK(catalogForm(parseSpaceId("Point")).expand(3).degree() == 0);
    CHECK_THROWS_AS(parseSpaceId("BX(2)"), DomainError);
    CHECK_THROWS_AS(parseSpaceId("BU(2,1)"), DomainError);
    CHECK_THROWS_AS(parseSpaceId("GrassC(2)"), DomainError);
    CHECK_THROWS_AS(parseSpaceId("GrassC(2,3)"), DomainError);
    CHECK_THROWS_AS(parseSpaceId("BU(x)"), DomainError);
    CHECK_THROWS_AS(parseSpaceId("BU(2)x"), DomainError);
}

TEST_CASE("out-of-range parameters are rejected") {
    CHECK_THROWS_AS(grassC(4, 5), DomainError);
    CHECK_THROWS_AS(grassC(-1, 0), DomainError);
    CHECK_THROWS_AS(poincareBU(-2), DomainError);
    CHECK_THROWS_AS(grassC(40, 3), DomainError);
}

}  // TEST_SUITE
