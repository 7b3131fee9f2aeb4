#include "qbetti/render.hpp"

#include <cstdint>
#include <json.hpp>

namespace qbetti {

namespace {

std::string monomialText(int degree, const std::string& var = "t") {
    if (degree == 0)
        return "";
    if (degree == 1)
        return var;
    return var + "^" + std::to_string(degree);
}

// JSON value for one exact coefficient: a number when it is an integer in
// int64 range, a "p/q" string otherwise. Never a float.
nlohmann::ordered_json coefficientJson(const Rational& c) {
    const Int num = boost::multiprecision::numerator(c);
    const Int den = boost::multiprecision::denominator(c);
    if (den == 1 && num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(num);
    return rationalToString(c);
}

nlohmann::ordered_json seriesCoeffsJson(const PowerSeries& s) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (int d = 0; d <= s.cap(); ++d)
        coeffs.push_back(coefficientJson(s.coeff(d)));
    return coeffs;
}

}  // namespace

std::string seriesToPlain(const PowerSeries& s, const std::string& var) {
    if (s.isZero())
        return "0";
    std::string out;
    for (int d = 0; d <= s.cap(); ++d) {
        const Rational& c = s.coeff(d);
        if (c == 0)
            continue;
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative)
                out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (d == 0)
            out += rationalToString(magnitude);
        else if (magnitude == 1)
            out += monomialText(d, var);
        else
            out += rationalToString(magnitude) + "*" + monomialText(d, var);
    }
    return out;
}

std::string formToPlain(const CyclotomicProductForm& form) {
    PowerSeries numerator(form.field(),
                          static_cast<int>(form.numerator().size()) - 1);
    for (std::size_t d = 0; d < form.numerator().size(); ++d)
        numerator.set(static_cast<int>(d), form.numerator()[d]);
    const bool unitNumerator = numerator.degree() == 0 && numerator.coeff(0) == 1;
    std::string numeratorText = seriesToPlain(numerator);
    if (!unitNumerator && numerator.degree() > 0)
        numeratorText = "(" + numeratorText + ")";

    if (form.factors().empty())
        return numeratorText;

    std::string denominator;
    const auto& factors = form.factors();
    for (std::size_t i = 0; i < factors.size();) {
        std::size_t j = i;
        while (j < factors.size() && factors[j] == factors[i])
            ++j;
        if (!denominator.empty())
            denominator += "*";
        denominator += "(1-" + monomialText(factors[i]) + ")";
        if (j - i > 1)
            denominator += "^" + std::to_string(j - i);
        i = j;
    }
    return numeratorText + "/(" + denominator + ")";
}

std::string weightsToPlain(const std::vector<int>& weights) {
    std::string out = "(";
    for (std::size_t j = 0; j < weights.size(); ++j) {
        if (j)
            out += ",";
        out += std::to_string(weights[j]);
    }
    return out + ")";
}

std::string reportToPlain(const QuotientReport& report) {
    std::string out;
    out += "system: " + std::string(flavorName(report.spec.flavor)) +
           " n=" + std::to_string(report.spec.n) + " weights " +
           weightsToPlain(report.spec.weights) + "\n";
    out += "equivariant series (cap " + std::to_string(report.equivariant.cap()) +
           "): " + seriesToPlain(report.equivariant) + "\n";
    out += "flags: gcdFree=" + std::string(report.gcdFree ? "yes" : "no") +
           " nOdd=" + std::string(report.nOdd ? "yes" : "no") + "\n";
    if (report.obstruction != Obstruction::None) {
        out += "obstruction: " + obstructionName(report.obstruction) + " (" +
               report.obstructionDetail + ")\n";
        return out;
    }
    out += "quotient dimension: " + std::to_string(report.dimension) + "\n";
    out += "quotient polynomial: " + seriesToPlain(*report.polynomial) + "\n";
    out += "checks:\n";
    for (const CheckResult& check : report.checks)
        out += "  " + check.name + ": " + (check.pass ? "pass" : "FAIL") + " (" +
               check.detail + ")\n";
    return out;
}

std::string reportToJsonText(const QuotientReport& report) {
    nlohmann::ordered_json doc;
    doc["system"] = {{"n", report.spec.n},
                     {"weights", report.spec.weights},
                     {"flavor", flavorName(report.spec.flavor)}};
    doc["equivariant"] = {{"cap", report.equivariant.cap()},
                          {"coeffs", seriesCoeffsJson(report.equivariant)}};
    nlohmann::ordered_json quotient;
    quotient["present"] = report.polynomial.has_value();
    quotient["coeffs"] = report.polynomial ? seriesCoeffsJson(*report.polynomial)
                                           : nlohmann::ordered_json::array();
    quotient["dimension"] = report.dimension;
    doc["quotient"] = quotient;
    doc["flags"] = {{"gcdFree", report.gcdFree}, {"nOdd", report.nOdd}};
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckResult& check : report.checks)
        checks.push_back({{"name", check.name},
                          {"pass", check.pass},
                          {"detail", check.detail}});
    doc["checks"] = checks;
    return doc.dump(2) + "\n";
}

std::string seriesToCsv(const PowerSeries& s) {
    std::string out = "degree,coefficient\n";
    for (int d = 0; d <= s.cap(); ++d) {
        if (s.coeff(d) == 0)
            continue;
        out += std::to_string(d) + "," + rationalToString(s.coeff(d)) + "\n";
    }
    return out;
}

std::string reportToCsv(const QuotientReport& report) {
    return seriesToCsv(report.polynomial ? *report.polynomial : report.equivariant);
}

}  // namespace qbetti
