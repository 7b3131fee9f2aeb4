#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qbetti/series.hpp"
#include "qbetti/strata.hpp"

namespace qbetti {

// Outcome of one structural check on an extracted quotient polynomial.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

enum class Obstruction { None, Gcd, Parity };

std::string obstructionName(Obstruction o);

// Full result of a quotient computation.  The equivariant series is always
// present; the polynomial is present exactly when no obstruction applies.
// Obstructions travel here as data, not as exceptions: callers that need a
// hard failure (checkHalving, the CLI exit path) inspect `obstruction`.
struct QuotientReport {
    SystemSpec spec;
    PowerSeries equivariant;
    std::optional<PowerSeries> polynomial;
    int dimension = 0;
    bool gcdFree = false;
    bool nOdd = false;
    Obstruction obstruction = Obstruction::None;
    std::string obstructionDetail;
    std::vector<CheckResult> checks;
};

// Recursive evaluator for equivariant Poincare series of weighted
// Grassmannian product systems.  All methods are pure up to memoization;
// the memo admits concurrent readers with serialized insertion, so results
// are bitwise identical whether the cache is cold or warm and whether
// calls run serially or in parallel.
class Engine {
public:
    // Called once per stratum dropped for having negative codimension with a
    // zero contribution.  Defaults to a line on stderr.
    using DiagnosticSink = std::function<void(const std::string&)>;

    Engine() = default;

    void setDiagnosticSink(DiagnosticSink sink);

    // Equivariant Poincare series of the system truncated at degree cap.
    // Rank-1 systems need no special casing: their index set is minimal-only,
    // so the series reduces to the classifying-space factor times the ambient
    // projective-space polynomials.
    PowerSeries equivariant(const SystemSpec& spec, int cap);

    // Grassmannian Poincare series recomputed through the one-column matrix
    // recursion instead of the closed form; must agree with the catalog.
    PowerSeries matrixGrassmannian(int n, int k, Flavor flavor, int cap);

    // Quotient extraction.  reportCap bounds the reported equivariant series;
    // when absent it defaults to the polynomial scan window
    // max(dimension, 0) + 8.  Internally the series is always computed out to
    // that window so the polynomiality scan has room.
    QuotientReport quotient(const SystemSpec& spec,
                            std::optional<int> reportCap = std::nullopt);

    // Compares the real quotient polynomial with the exponent-halved complex
    // one.  Throws GcdObstructionError / ParityObstructionError when either
    // side fails to extract.
    CheckResult halvingCheck(int n, const std::vector<int>& weights);

    static Engine& global();

private:
    using SeriesKey = std::tuple<int, std::vector<int>, int, int>;
    using GrassKey = std::tuple<int, int, int, int>;

    PowerSeries equivariantCanonical(int n, const std::vector<int>& weights,
                                     Flavor flavor, int cap);
    void emitDiagnostic(const std::string& line) const;

    std::map<SeriesKey, PowerSeries> seriesMemo_;
    std::map<GrassKey, PowerSeries> grassMemo_;
    std::mutex memoMutex_;
    DiagnosticSink sink_;
};

// Convenience wrappers over the shared global engine.  The flavor field of
// the given spec is overridden to match the function name.
PowerSeries equivariantSeriesComplex(SystemSpec spec, int cap);
PowerSeries equivariantSeriesReal(SystemSpec spec, int cap);
PowerSeries matrixGrassComplex(int n, int k, int cap);
PowerSeries matrixGrassReal(int n, int k, int cap);
QuotientReport quotientComplex(SystemSpec spec,
                               std::optional<int> reportCap = std::nullopt);
QuotientReport quotientReal(SystemSpec spec,
                            std::optional<int> reportCap = std::nullopt);
CheckResult checkHalving(int n, const std::vector<int>& weights);

// Complex and real quotient dimensions; negative for empty quotients.
int quotientDimensionComplex(int n, const std::vector<int>& weights);
int quotientDimensionReal(int n, const std::vector<int>& weights);

}  // namespace qbetti
