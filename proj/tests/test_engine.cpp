#include <doctest.h>

#include <string>
#include <vector>

#include "qbetti/catalog.hpp"
#include "qbetti/engine.hpp"
#include "qbetti/errors.hpp"
#include "qbetti/render.hpp"
#include "support/naive.hpp"

using namespace qbetti;

namespace {

PowerSeries geometricSeries(Field field, int step, int cap) {
    return naive::toSeries(field, naive::geometric(step, cap), cap);
}

PowerSeries catalogGrass(int n, int k, Flavor flavor, int cap) {
    PowerSeries g = flavor == Flavor::Complex ? grassC(n, k) : grassRmod2(n, k);
    return g.cap() >= cap ? g.truncated(cap) : g.paddedTo(cap);
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("rank-1 systems reduce to the circle classifying space") {
    for (std::vector<int> weights : {std::vector<int>{1}, {0}, {1, 1, 0, 1}}) {
        CHECK(equivariantSeriesComplex({1, weights}, 20) ==
              geometricSeries(Field::Rationals, 2, 20));
        CHECK(equivariantSeriesReal({1, weights}, 20) ==
              geometricSeries(Field::GF2, 1, 20));
    }
}

TEST_CASE("single proper weight gives the zero series") {
    CHECK(equivariantSeriesComplex({2, {1}}, 30).isZero());
    CHECK(equivariantSeriesReal({2, {1}}, 30).isZero());
    CHECK(equivariantSeriesComplex({3, {2}}, 24).isZero());
    CHECK(equivariantSeriesReal({3, {2}}, 24).isZero());
}

TEST_CASE("three unit weights on a rank-2 system") {
    CHECK(equivariantSeriesComplex({2, {1, 1, 1}}, 40) ==
          geometricSeries(Field::Rationals, 2, 40));
    CHECK(equivariantSeriesReal({2, {1, 1, 1}}, 40) ==
          geometricSeries(Field::GF2, 1, 40));
}

TEST_CASE("formal systems multiply out to the classifying space alone") {
    SUBCASE("weights equal to the rank") {
        CHECK(equivariantSeriesComplex({2, {2, 2}}, 24) == poincareBU(2).expand(24));
        CHECK(equivariantSeriesReal({3, {3, 3, 3}}, 18) ==
              poincareBOmod2(3).expand(18));
    }
    SUBCASE("zero weights") {
        CHECK(equivariantSeriesComplex({3, {0, 0}}, 18) == poincareBU(3).expand(18));
        CHECK(equivariantSeriesReal({2, {0}}, 18) == poincareBOmod2(2).expand(18));
    }
    SUBCASE("mixed zero and full weights") {
        CHECK(equivariantSeriesComplex({2, {2, 0, 2}}, 24) ==
              poincareBU(2).expand(24));
    }
}

TEST_CASE("weight order and zero columns do not change the series") {
    for (Flavor flavor : {Flavor::Complex, Flavor::Real}) {
        PowerSeries canonical =
            Engine::global().equivariant({3, {2, 1, 1}, flavor}, 24);
        CHECK(Engine::global().equivariant({3, {1, 2, 1}, flavor}, 24) == canonical);
        CHECK(Engine::global().equivariant({3, {1, 2, 0, 1}, flavor}, 24) ==
              canonical);
        CHECK(Engine::global().equivariant({3, {0, 1, 1, 2, 0}, flavor}, 24) ==
              canonical);
    }
}

TEST_CASE("matrix recursion reproduces the Grassmannian catalog") {
    const int cap = 40;
    for (int n = 0; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(matrixGrassComplex(n, k, cap) ==
                  catalogGrass(n, k, Flavor::Complex, cap));
            CHECK(matrixGrassReal(n, k, cap) ==
                  catalogGrass(n, k, Flavor::Real, cap));
        }
    }
}

TEST_CASE("matrix recursion rejects out-of-range arguments") {
    CHECK_THROWS_AS(matrixGrassComplex(3, 4, 10), DomainError);
    CHECK_THROWS_AS(matrixGrassComplex(-1, 0, 10), DomainError);
    CHECK_THROWS_AS(matrixGrassReal(17, 2, 10), DomainError);
    CHECK_THROWS_AS(matrixGrassReal(3, 1, -1), DomainError);
}

TEST_CASE("rigid three-point quotient") {
    QuotientReport report = quotientComplex({2, {1, 1, 1}});
    REQUIRE(report.polynomial.has_value());
    CHECK(report.polynomial->degree() == 0);
    CHECK(report.polynomial->coeff(0) == 1);
    CHECK(report.dimension == 0);
    CHECK(report.gcdFree);
    CHECK(report.obstruction == Obstruction::None);
    for (const CheckResult& check : report.checks) {
        CAPTURE(check.name);
        CHECK(check.pass);
    }
}

TEST_CASE("five-point quotient polynomial") {
    QuotientReport report = quotientComplex({2, {1, 1, 1, 1, 1}});
    REQUIRE(report.polynomial.has_value());
    CHECK(report.dimension == 4);
    CHECK(seriesToPlain(*report.polynomial) == "1 + 5*t^2 + t^4");
    for (const CheckResult& check : report.checks) {
        CAPTURE(check.name);
        CHECK(check.pass);
    }
    SUBCASE("explicit report cap stretches the series, not the polynomial") {
        QuotientReport wide = quotientComplex({2, {1, 1, 1, 1, 1}}, 20);
        CHECK(wide.equivariant.cap() == 20);
        CHECK(*wide.polynomial == *report.polynomial);
        CHECK(wide.equivariant.truncated(report.equivariant.cap()) ==
              report.equivariant);
    }
}

TEST_CASE("real four-point quotient on rank 3") {
    QuotientReport report = quotientReal({3, {1, 1, 1, 1}});
    REQUIRE(report.polynomial.has_value());
    CHECK(report.dimension == 0);
    CHECK(report.polynomial->degree() == 0);
    CHECK(report.polynomial->coeff(0) == 1);
    CHECK(report.nOdd);
    for (const CheckResult& check : report.checks) {
        CAPTURE(check.name);
        CHECK(check.pass);
    }
    bool sawHalving = false;
    for (const CheckResult& check : report.checks)
        sawHalving = sawHalving || check.name == "halving";
    CHECK(sawHalving);
}

TEST_CASE("empty quotient reports a zero polynomial and negative dimension") {
    QuotientReport report = quotientComplex({2, {1}});
    REQUIRE(report.polynomial.has_value());
    CHECK(report.polynomial->isZero());
    CHECK(report.dimension == -4);
    CHECK(report.gcdFree);
    for (const CheckResult& check : report.checks) {
        CAPTURE(check.name);
        CHECK(check.pass);
    }
}

TEST_CASE("shared-factor systems stop at the gcd obstruction") {
    for (SystemSpec spec : {SystemSpec{2, {1, 1}}, SystemSpec{3, {1, 1, 1}},
                            SystemSpec{2, {1, 1, 1, 1}}}) {
        CAPTURE(spec.n);
        QuotientReport report = quotientComplex(spec);
        CHECK(report.obstruction == Obstruction::Gcd);
        CHECK_FALSE(report.gcdFree);
        CHECK_FALSE(report.polynomial.has_value());
        CHECK(report.checks.empty());
    }
}

TEST_CASE("even-rank real systems stop at the parity obstruction") {
    QuotientReport report = quotientReal({2, {1, 1, 1}});
    CHECK(report.obstruction == Obstruction::Parity);
    CHECK(report.gcdFree);
    CHECK_FALSE(report.nOdd);
    CHECK_FALSE(report.polynomial.has_value());
    CHECK(report.equivariant == geometricSeries(Field::GF2, 1, report.equivariant.cap()));
}

TEST_CASE("halving check passes on coprime odd-rank systems") {
    CHECK(checkHalving(3, {1, 1, 1, 1}).pass);
    CHECK(checkHalving(3, {1, 1, 2, 1}).pass);
    CHECK(checkHalving(3, {2, 2, 1, 2, 1}).pass);
}

TEST_CASE("halving check surfaces obstructions as errors") {
    CHECK_THROWS_AS(checkHalving(3, {1, 1, 1}), GcdObstructionError);
    CHECK_THROWS_AS(checkHalving(2, {1, 1, 1}), ParityObstructionError);
}

TEST_CASE("negative-codimension strata are dropped only when empty") {
    Engine engine;
    std::vector<std::string> diagnostics;
    engine.setDiagnosticSink(
        [&diagnostics](const std::string& line) { diagnostics.push_back(line); });
    PowerSeries series = engine.equivariant({3, {1}}, 20);
    CHECK(series.isZero());
    REQUIRE(diagnostics.size() == 1);
    CHECK(diagnostics[0].find("negative codimension") != std::string::npos);
    CHECK(diagnostics[0].find("(1,2)") != std::string::npos);
}

TEST_CASE("fresh engines agree with the shared one") {
    Engine cold;
    SystemSpec spec{2, {1, 1, 1, 1, 1}};
    PowerSeries first = cold.equivariant(spec, 24);
    PowerSeries second = cold.equivariant(spec, 24);
    CHECK(first == second);
    CHECK(first == Engine::global().equivariant(spec, 24));
}

TEST_CASE("quotient dimensions") {
    CHECK(quotientDimensionComplex(2, {1, 1, 1}) == 0);
    CHECK(quotientDimensionComplex(2, {1, 1, 1, 1, 1}) == 4);
    CHECK(quotientDimensionComplex(2, {1}) == -4);
    CHECK(quotientDimensionReal(2, {1, 1, 1, 1, 1}) == 2);
    CHECK(quotientDimensionReal(3, {1, 1, 1, 1}) == 0);
    CHECK(quotientDimensionReal(2, {1}) == -2);
}

TEST_CASE("obstruction names") {
    CHECK(obstructionName(Obstruction::None) == "none");
    CHECK(obstructionName(Obstruction::Gcd) == "Gcd");
    CHECK(obstructionName(Obstruction::Parity) == "Parity");
}

}
