#include "qbetti/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <utility>

#include "qbetti/catalog.hpp"
#include "qbetti/render.hpp"

namespace qbetti {

namespace {

Field fieldOf(Flavor flavor) {
    return flavor == Flavor::Complex ? Field::Rationals : Field::GF2;
}

// Weight lists are invariant under permutation and under dropping zero
// columns (a zero column contributes a rank-0 Grassmannian factor and a
// forced-zero matrix column), so the memo keys the sorted nonzero list.
std::vector<int> canonicalWeights(const std::vector<int>& weights) {
    std::vector<int> out;
    out.reserve(weights.size());
    for (int l : weights)
        if (l != 0) out.push_back(l);
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

PowerSeries atCap(const PowerSeries& s, int cap) {
    return s.cap() >= cap ? s.truncated(cap) : s.paddedTo(cap);
}

CyclotomicProductForm classifyingForm(int n, Flavor flavor) {
    return flavor == Flavor::Complex ? poincareBU(n) : poincareBOmod2(n);
}

std::string weightsToString(const std::vector<int>& weights) {
    std::string out = "(";
    for (std::size_t j = 0; j < weights.size(); ++j) {
        if (j) out += ",";
        out += std::to_string(weights[j]);
    }
    return out + ")";
}

std::string systemToString(int n, const std::vector<int>& weights, Flavor flavor) {
    return std::string(flavorName(flavor)) + " system n=" + std::to_string(n) +
           " weights " + weightsToString(weights);
}

CheckResult palindromeCheck(const PowerSeries& poly, int dim) {
    if (poly.isZero())
        return {"palindrome", true, "zero polynomial (empty quotient)"};
    for (int d = 0; d <= dim; ++d) {
        if (poly.coeff(d) != poly.coeff(dim - d))
            return {"palindrome", false,
                    "coefficient " + rationalToString(poly.coeff(d)) + " at t^" +
                        std::to_string(d) + " differs from " +
                        rationalToString(poly.coeff(dim - d)) + " at t^" +
                        std::to_string(dim - d)};
    }
    return {"palindrome", true,
            "coefficients symmetric about degree " + std::to_string(dim) + "/2"};
}

CheckResult nonNegativityCheck(const PowerSeries& poly) {
    for (int d = 0; d <= poly.cap(); ++d) {
        const Rational& c = poly.coeff(d);
        if (c < 0 || boost::multiprecision::denominator(c) != 1)
            return {"non-negativity", false,
                    "coefficient " + rationalToString(c) + " at t^" +
                        std::to_string(d) + " is not a non-negative integer"};
    }
    return {"non-negativity", true, "all coefficients are non-negative integers"};
}

CheckResult degreeCheck(const PowerSeries& poly, int dim) {
    if (poly.isZero())
        return {"degree", true, "zero polynomial (empty quotient)"};
    if (poly.degree() != dim)
        return {"degree", false,
                "degree " + std::to_string(poly.degree()) +
                    " does not match the quotient dimension " + std::to_string(dim)};
    if (poly.coeff(0) != 1)
        return {"degree", false,
                "constant term " + rationalToString(poly.coeff(0)) + " is not 1"};
    return {"degree", true,
            "degree " + std::to_string(dim) +
                " matches the quotient dimension; constant term 1"};
}

CheckResult halvingRow(const PowerSeries& realPoly, const PowerSeries& complexPoly) {
    PowerSeries halved = halveExponents(complexPoly);
    bool pass = halved == realPoly && halved.degree() == realPoly.degree();
    std::string detail = pass
        ? "real polynomial " + seriesToPlain(realPoly) +
              " equals the complex polynomial with exponents halved"
        : "real polynomial " + seriesToPlain(realPoly) +
              " differs from the halved complex polynomial " + seriesToPlain(halved);
    return {"halving", pass, detail};
}

}  // namespace

std::string obstructionName(Obstruction o) {
    switch (o) {
        case Obstruction::None: return "none";
        case Obstruction::Gcd: return "Gcd";
        case Obstruction::Parity: return "Parity";
    }
    throw DomainError("unknown obstruction");
}

void Engine::setDiagnosticSink(DiagnosticSink sink) { sink_ = std::move(sink); }

void Engine::emitDiagnostic(const std::string& line) const {
    if (sink_)
        sink_(line);
    else
        std::fprintf(stderr, "%s\n", line.c_str());
}

Engine& Engine::global() {
    static Engine instance;
    return instance;
}

PowerSeries Engine::equivariant(const SystemSpec& spec, int cap) {
    validateSpec(spec);
    if (cap < 0)
        throw DomainError("series cap must be non-negative");
    return equivariantCanonical(spec.n, canonicalWeights(spec.weights), spec.flavor, cap);
}

PowerSeries Engine::equivariantCanonical(int n, const std::vector<int>& weights,
                                         Flavor flavor, int cap) {
    SeriesKey key{n, weights, static_cast<int>(flavor), cap};
    {
        std::lock_guard<std::mutex> lock(memoMutex_);
        auto it = seriesMemo_.find(key);
        if (it != seriesMemo_.end())
            return it->second;
    }

    const Field field = fieldOf(flavor);
    PowerSeries result = classifyingForm(n, flavor).expand(cap);
    for (int l : weights) {
        const PowerSeries& g = flavor == Flavor::Complex ? grassC(n, l) : grassRmod2(n, l);
        result = mul(result, atCap(g, cap));
    }

    if (!weights.empty()) {
        SystemSpec spec{n, weights, flavor};
        for (const StratumIndex& idx : enumerateIndices(spec)) {
            if (isMinimal(idx))
                continue;
            StratumData data = codims(idx, n, NegativePolicy::Allow);
            PowerSeries contribution = PowerSeries::one(field, cap);
            for (int i = 0; i < idx.s() && !contribution.isZero(); ++i) {
                SystemSpec child = subsystemSpec(idx, i, flavor);
                contribution = mul(contribution,
                    equivariantCanonical(child.n, canonicalWeights(child.weights),
                                         flavor, cap));
            }
            const int codim =
                flavor == Flavor::Complex ? data.codimComplex : data.codimReal;
            if (codim < 0) {
                // A negatively graded stratum must be empty; the recursion is
                // consistent only if its contribution vanishes, in which case
                // the index is dropped.
                if (!contribution.isZero())
                    throw NegativeCodimension(
                        systemToString(n, weights, flavor) + " index " +
                        renderIndex(idx) + ": negative codimension " +
                        std::to_string(codim) + " with nonzero contribution");
                emitDiagnostic("dropping empty stratum of negative codimension " +
                               std::to_string(codim) + ": " +
                               systemToString(n, weights, flavor) + " index " +
                               renderIndex(idx));
                continue;
            }
            result = qbetti::sub(result, timesMonomial(contribution, codim));
        }
    }

    std::lock_guard<std::mutex> lock(memoMutex_);
    auto [it, inserted] = seriesMemo_.emplace(key, result);
    return it->second;
}

PowerSeries Engine::matrixGrassmannian(int n, int k, Flavor flavor, int cap) {
    if (n < 0 || k < 0 || k > n)
        throw DomainError("matrix Grassmannian needs 0 <= k <= n");
    if (n > 16)
        throw DomainError("matrix Grassmannian rank capped at 16");
    if (cap < 0)
        throw DomainError("series cap must be non-negative");
    GrassKey key{n, k, static_cast<int>(flavor), cap};
    {
        std::lock_guard<std::mutex> lock(memoMutex_);
        auto it = grassMemo_.find(key);
        if (it != grassMemo_.end())
            return it->second;
    }

    const Field field = fieldOf(flavor);
    PowerSeries result = PowerSeries::one(field, cap);
    if (k > 0) {
        result = classifyingForm(k, flavor).expand(cap);
        const int scale = flavor == Flavor::Complex ? 2 : 1;
        for (int i = 1; i <= k; ++i) {
            const int codim = scale * i * (n - k + i);
            PowerSeries term = mul(matrixGrassmannian(n, k - i, flavor, cap),
                                   classifyingForm(i, flavor).expand(cap));
            result = qbetti::sub(result, timesMonomial(term, codim));
        }
    }

    std::lock_guard<std::mutex> lock(memoMutex_);
    auto [it, inserted] = grassMemo_.emplace(key, result);
    return it->second;
}

QuotientReport Engine::quotient(const SystemSpec& spec, std::optional<int> reportCap) {
    validateSpec(spec);
    const bool complex = spec.flavor == Flavor::Complex;
    const int totalWeight = std::accumulate(spec.weights.begin(), spec.weights.end(), 0);
    const int dim = complex ? quotientDimensionComplex(spec.n, spec.weights)
                            : quotientDimensionReal(spec.n, spec.weights);

    // The polynomiality scan needs headroom past the expected top degree;
    // the series is computed out to the scan window even when the caller
    // asked for a shorter report.
    const int scanCap = std::max(dim, 0) + 8;
    const int cap = reportCap.value_or(scanCap);
    if (cap < 0)
        throw DomainError("series cap must be non-negative");
    const int workCap = std::max(cap, scanCap);
    PowerSeries series = equivariant(spec, workCap);

    QuotientReport report{spec,
                          series.truncated(cap),
                          std::nullopt,
                          dim,
                          std::gcd(spec.n, totalWeight) == 1,
                          spec.n % 2 == 1,
                          Obstruction::None,
                          "",
                          {}};

    if (!report.gcdFree) {
        report.obstruction = Obstruction::Gcd;
        report.obstructionDetail =
            "gcd(" + std::to_string(spec.n) + ", " + std::to_string(totalWeight) +
            ") > 1: the series does not factor through a free circle action";
        return report;
    }
    if (!complex && !report.nOdd) {
        report.obstruction = Obstruction::Parity;
        report.obstructionDetail =
            "rank " + std::to_string(spec.n) +
            " is even: real extraction is defined for odd rank only; "
            "equivariant series reported as is";
        return report;
    }

    const int scale = complex ? 2 : 1;
    PowerSeries oneMinus(series.field(), workCap);
    oneMinus.set(0, 1);
    oneMinus.set(scale, -1);
    PowerSeries product = mul(series, oneMinus);
    for (int d = std::max(dim + 1, 0); d <= workCap; ++d) {
        if (product.coeff(d) != 0)
            throw NotPolynomial(
                systemToString(spec.n, spec.weights, spec.flavor) +
                ": coefficient " + rationalToString(product.coeff(d)) +
                " at t^" + std::to_string(d) + " survives past the quotient dimension " +
                std::to_string(dim));
    }
    PowerSeries poly = product.truncated(std::max(dim, 0));
    report.polynomial = poly;
    report.checks.push_back(palindromeCheck(poly, dim));
    report.checks.push_back(nonNegativityCheck(poly));
    report.checks.push_back(degreeCheck(poly, dim));
    if (!complex) {
        QuotientReport twin = quotient({spec.n, spec.weights, Flavor::Complex});
        report.checks.push_back(halvingRow(poly, *twin.polynomial));
    }
    return report;
}

CheckResult Engine::halvingCheck(int n, const std::vector<int>& weights) {
    QuotientReport realSide = quotient({n, weights, Flavor::Real});
    if (realSide.obstruction == Obstruction::Gcd)
        throw GcdObstructionError(realSide.obstructionDetail);
    if (realSide.obstruction == Obstruction::Parity)
        throw ParityObstructionError(realSide.obstructionDetail);
    for (const CheckResult& check : realSide.checks)
        if (check.name == "halving")
            return check;
    throw InvariantViolation("real quotient report is missing its halving check");
}

PowerSeries equivariantSeriesComplex(SystemSpec spec, int cap) {
    spec.flavor = Flavor::Complex;
    return Engine::global().equivariant(spec, cap);
}

PowerSeries equivariantSeriesReal(SystemSpec spec, int cap) {
    spec.flavor = Flavor::Real;
    return Engine::global().equivariant(spec, cap);
}

PowerSeries matrixGrassComplex(int n, int k, int cap) {
    return Engine::global().matrixGrassmannian(n, k, Flavor::Complex, cap);
}

PowerSeries matrixGrassReal(int n, int k, int cap) {
    return Engine::global().matrixGrassmannian(n, k, Flavor::Real, cap);
}

QuotientReport quotientComplex(SystemSpec spec, std::optional<int> reportCap) {
    spec.flavor = Flavor::Complex;
    return Engine::global().quotient(spec, reportCap);
}

QuotientReport quotientReal(SystemSpec spec, std::optional<int> reportCap) {
    spec.flavor = Flavor::Real;
    return Engine::global().quotient(spec, reportCap);
}

CheckResult checkHalving(int n, const std::vector<int>& weights) {
    return Engine::global().halvingCheck(n, weights);
}

int quotientDimensionComplex(int n, const std::vector<int>& weights) {
    int acc = 0;
    for (int l : weights)
        acc += 2 * l * (n - l);
    return acc - 2 * (n * n - 1);
}

int quotientDimensionReal(int n, const std::vector<int>& weights) {
    int acc = 0;
    for (int l : weights)
        acc += l * (n - l);
    return acc - (n * n - 1);
}

}  // namespace qbetti
