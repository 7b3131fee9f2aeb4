#pragma once

#include <string>

#include "qbetti/engine.hpp"
#include "qbetti/series.hpp"

namespace qbetti {

// "1 + 5*t^2 + t^4"; zero terms omitted, unit coefficients folded into the
// monomial, non-integer coefficients as "p/q". The zero series is "0".
std::string seriesToPlain(const PowerSeries& s, const std::string& var = "t");

// "N(t)/((1-t^2)*(1-t^4)^2)" with the numerator omitted when it is 1 and
// repeated factors grouped into powers.
std::string formToPlain(const CyclotomicProductForm& form);

// "(1,1,1,1,1)"
std::string weightsToPlain(const std::vector<int>& weights);

// Multi-line human-readable quotient report.
std::string reportToPlain(const QuotientReport& report);

// Canonical JSON rendering; parsing the output and dumping it again is
// byte-identical. Integer coefficients appear as JSON numbers, non-integer
// rationals as "p/q" strings, never floats.
std::string reportToJsonText(const QuotientReport& report);

// "degree,coefficient" header plus one row per nonzero term.
std::string seriesToCsv(const PowerSeries& s);

// CSV of the quotient polynomial when present, of the equivariant series
// otherwise.
std::string reportToCsv(const QuotientReport& report);

}  // namespace qbetti
