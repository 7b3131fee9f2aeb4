#include "qbetti/ffcount.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "qbetti/errors.hpp"

namespace qbetti {

namespace {

bool isPrime(int p) {
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

void validateTupleLength(int r) {
    if (r % 2 == 0)
        throw DomainError("tuple length " + std::to_string(r) +
                          " is even: strictly semistable tuples exist and the "
                          "stable count proves nothing");
    if (r < 3 || r > 7)
        throw DomainError("tuple length must be odd and within 3..7, got " +
                          std::to_string(r));
}

long long countFrom(int slots, int pointCount, int maxMult, std::vector<int>& counts) {
    if (slots == 0)
        return 1;
    long long total = 0;
    for (int id = 0; id < pointCount; ++id) {
        if (counts[id] == maxMult)
            continue;
        ++counts[id];
        total += countFrom(slots - 1, pointCount, maxMult, counts);
        --counts[id];
    }
    return total;
}

// poly *= (x - root), dense ascending coefficients.
void mulLinear(std::vector<Rational>& poly, const Rational& root) {
    poly.push_back(0);
    for (std::size_t d = poly.size() - 1; d > 0; --d)
        poly[d] = poly[d - 1] - root * poly[d];
    poly[0] = -root * poly[0];
}

Rational evalPoly(const std::vector<Rational>& poly, const Rational& x) {
    Rational acc = 0;
    for (std::size_t d = poly.size(); d > 0; --d)
        acc = acc * x + poly[d - 1];
    return acc;
}

}  // namespace

PrimeField::PrimeField(int p) : p_(p) {
    if (!isPrime(p) || p == 2)
        throw DomainError("field order must be an odd prime, got " + std::to_string(p));
    if (p > 97)
        throw DomainError("field order capped at 97, got " + std::to_string(p));
}

int PrimeField::reduce(long long a) const {
    long long r = a % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
}

int PrimeField::add(int a, int b) const { return reduce(static_cast<long long>(a) + b); }
int PrimeField::sub(int a, int b) const { return reduce(static_cast<long long>(a) - b); }
int PrimeField::mul(int a, int b) const { return reduce(static_cast<long long>(a) * b); }
int PrimeField::neg(int a) const { return reduce(-static_cast<long long>(a)); }

int PrimeField::inv(int a) const {
    a = reduce(a);
    if (a == 0)
        throw DomainError("zero has no inverse");
    int result = 1;
    int base = a;
    int e = p_ - 2;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

ProjLinePoint normalizePoint(const PrimeField& field, int a, int b) {
    a = field.reduce(a);
    b = field.reduce(b);
    if (a == 0 && b == 0)
        throw DomainError("(0 : 0) is not a projective point");
    if (b != 0)
        return {field.mul(a, field.inv(b)), 1};
    return {1, 0};
}

std::vector<ProjLinePoint> projectiveLine(const PrimeField& field) {
    std::vector<ProjLinePoint> points;
    points.reserve(field.p() + 1);
    for (int a = 0; a < field.p(); ++a)
        points.push_back({a, 1});
    points.push_back({1, 0});
    return points;
}

long long countStableTuples(int p, int r) {
    validateTupleLength(r);
    PrimeField field(p);
    if (p > 13)
        throw DomainError("enumeration is capped at p = 13, got " + std::to_string(p));

    static std::map<std::pair<int, int>, long long> cache;
    static std::mutex cacheMutex;
    const std::pair<int, int> key{p, r};
    {
        std::lock_guard<std::mutex> lock(cacheMutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }

    const int pointCount = static_cast<int>(projectiveLine(field).size());
    const int maxMult = (r - 1) / 2;    // multiplicity < r/2 for odd r
    std::vector<int> counts(pointCount, 0);
    const long long total = countFrom(r, pointCount, maxMult, counts);

    std::lock_guard<std::mutex> lock(cacheMutex);
    cache.emplace(key, total);
    return total;
}

long long quotientPointCount(int p, int r) {
    const long long stable = countStableTuples(p, r);
    const long long group = static_cast<long long>(p) * p * p - p;
    if (stable % group != 0)
        throw InexactDivision("stable count " + std::to_string(stable) +
                              " is not divisible by the group order " +
                              std::to_string(group) +
                              ": the action cannot be free");
    return stable / group;
}

InterpolatedCount interpolateQuotientCounts(int r, const std::vector<int>& primes) {
    validateTupleLength(r);
    std::vector<int> nodes = primes;
    std::sort(nodes.begin(), nodes.end());
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
        throw DomainError("interpolation primes must be distinct");
    const std::size_t needed = static_cast<std::size_t>(r) - 2;
    if (nodes.size() < needed)
        throw DomainError("degree " + std::to_string(r - 3) +
                          " interpolation needs at least " + std::to_string(needed) +
                          " primes, got " + std::to_string(nodes.size()));

    std::vector<Rational> coeffs(needed, 0);
    for (std::size_t i = 0; i < needed; ++i) {
        std::vector<Rational> basis{1};
        Rational scale = quotientPointCount(nodes[i], r);
        for (std::size_t j = 0; j < needed; ++j) {
            if (j == i)
                continue;
            mulLinear(basis, nodes[j]);
            scale /= Rational(nodes[i] - nodes[j]);
        }
        for (std::size_t d = 0; d < basis.size(); ++d)
            coeffs[d] += scale * basis[d];
    }

    InterpolatedCount result{coeffs, true};
    for (int p : nodes)
        result.consistent =
            result.consistent && evalPoly(coeffs, p) == quotientPointCount(p, r);
    return result;
}

std::vector<OracleRow> compareWithPoincare(const QuotientReport& report,
                                           const std::vector<int>& primes) {
    if (report.spec.flavor != Flavor::Complex)
        throw DomainError("oracle compares complex-flavor reports only");
    if (report.spec.n != 2)
        throw DomainError("oracle is defined for rank 2 only");
    for (int l : report.spec.weights)
        if (l != 1)
            throw DomainError("oracle is defined for unit weights only");
    const int r = static_cast<int>(report.spec.weights.size());
    validateTupleLength(r);
    if (!report.polynomial)
        throw DomainError("oracle needs an extracted quotient polynomial");

    const PowerSeries halved = halveExponents(*report.polynomial);
    std::vector<OracleRow> rows;
    rows.reserve(primes.size());
    for (int p : primes) {
        OracleRow row;
        row.prime = p;
        row.stableCount = countStableTuples(p, r);
        row.orbitCount = quotientPointCount(p, r);
        Rational predicted = 0;
        for (int d = halved.cap(); d >= 0; --d)
            predicted = predicted * p + halved.coeff(d);
        row.predicted = predicted;
        row.pass = predicted == Rational(row.orbitCount);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qbetti
