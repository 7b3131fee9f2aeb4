#pragma once

#include <vector>

#include "qbetti/engine.hpp"
#include "qbetti/series.hpp"

namespace qbetti {

// Arithmetic in F_p for an odd prime p <= 97; all operations exact.
class PrimeField {
public:
    explicit PrimeField(int p);

    int p() const { return p_; }
    int reduce(long long a) const;
    int add(int a, int b) const;
    int sub(int a, int b) const;
    int mul(int a, int b) const;
    int neg(int a) const;
    int inv(int a) const;    // DomainError on 0

private:
    int p_;
};

// Homogeneous pair normalized to (a : 1) or (1 : 0); the projective line
// over F_p has exactly p + 1 of these.
struct ProjLinePoint {
    int a = 0;
    int b = 1;
    friend bool operator==(const ProjLinePoint&, const ProjLinePoint&) = default;
};

ProjLinePoint normalizePoint(const PrimeField& field, int a, int b);
std::vector<ProjLinePoint> projectiveLine(const PrimeField& field);

// Exhaustive count of ordered r-tuples on the projective line over F_p in
// which every point occurs with multiplicity < r/2. Odd r only (for even r
// the strictly semistable locus is nonempty and the count proves nothing);
// 3 <= r <= 7 and p <= 13 keep the (p+1)^r enumeration desk-scale.
long long countStableTuples(int p, int r);

// countStableTuples / (p^3 - p), the order of the Moebius group acting
// freely on stable tuples. InexactDivision signals a counting bug.
long long quotientPointCount(int p, int r);

// Single polynomial in p of degree r - 3 matching p -> quotientPointCount
// across the given primes; consistent is false when no one polynomial fits.
struct InterpolatedCount {
    std::vector<Rational> coeffs;    // dense, ascending degree
    bool consistent = false;
};
InterpolatedCount interpolateQuotientCounts(int r, const std::vector<int>& primes);

struct OracleRow {
    int prime = 0;
    long long stableCount = 0;
    long long orbitCount = 0;
    Rational predicted;
    bool pass = false;
};

// Per-prime comparison of quotientPointCount with the quotient polynomial
// evaluated at t^2 = p. Only defined for complex rank-2 reports with an odd
// number of unit weights, the regime where stability is elementary and the
// action is free.
std::vector<OracleRow> compareWithPoincare(const QuotientReport& report,
                                           const std::vector<int>& primes);

}  // namespace qbetti
