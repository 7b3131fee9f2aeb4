#pragma once

// Truncated formal power series with exact coefficients.
//
// A PowerSeries is the coefficient vector c[0..cap] of a series known to be
// correct up to and including degree cap. Arithmetic never extends a cap:
// the result of a binary operation carries min of the operand caps, so a
// coefficient is either exact or absent, never fabricated.
//
// Every series carries a Field tag naming the coefficient field of the
// cohomology it came from (Q for complex-type spaces, Z/2 for real-type
// ones). The tag is a mixing guard, not an arithmetic mode: coefficients are
// exact rationals in both cases, because a Poincare series records dimension
// counts and reducing a count mod 2 would destroy it. A GF2-tagged series
// with coefficient 2 is therefore legal and common. Equality compares
// coefficients up to the smaller cap and ignores the tag; several identities
// in this project equate a GF2-tagged series with an exponent-halved
// Rationals-tagged one.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qbetti/errors.hpp"

namespace qbetti {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Field { Rationals, GF2 };

const char* fieldName(Field f);

// "5", "-3", "5/3". Lowest terms come free with cpp_rational.
std::string rationalToString(const Rational& value);

class PowerSeries {
public:
    // The zero series with the given truncation degree. cap >= 0.
    PowerSeries(Field field, int cap);

    static PowerSeries constant(Field field, const Rational& value, int cap);
    // value * t^degree, degree <= cap.
    static PowerSeries monomial(Field field, const Rational& value, int degree, int cap);
    static PowerSeries one(Field field, int cap) { return constant(field, 1, cap); }

    Field field() const { return field_; }
    int cap() const { return cap_; }

    const Rational& coeff(int degree) const;    // 0 <= degree <= cap
    void set(int degree, const Rational& value);

    bool isZero() const;
    int degree() const;    // largest exponent with nonzero coefficient, -1 if zero

    PowerSeries truncated(int newCap) const;    // newCap <= cap

    // Zero-extends the coefficient vector. Legitimate only when the caller
    // knows the series is an exact polynomial of degree <= cap (catalog
    // closed forms, extracted quotient polynomials); arithmetic never calls
    // this implicitly.
    PowerSeries paddedTo(int newCap) const;

private:
    Field field_;
    int cap_;
    std::vector<Rational> c_;
};

// Coefficient-wise up to the smaller cap; the field tag does not participate.
bool operator==(const PowerSeries& a, const PowerSeries& b);
bool operator!=(const PowerSeries& a, const PowerSeries& b);

PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);

// The unique q with q*b = a up to the common cap. b must be nonzero; if its
// lowest nonzero degree is v > 0 then a must also vanish below degree v and
// the result cap shrinks by v. Anything else is InexactDivision.
PowerSeries divide(const PowerSeries& a, const PowerSeries& b);

// a * t^e with e >= 0; terms pushed past the cap are dropped.
PowerSeries timesMonomial(const PowerSeries& a, int e);

// t -> t^e with e >= 1. The cap is unchanged, so source terms with
// e*degree > cap are dropped rather than the cap stretched.
PowerSeries substituteTPower(const PowerSeries& a, int e);

// t^2 -> t, the left inverse of substituteTPower(a, 2). Every odd-degree
// coefficient must vanish (NonzeroOddCoefficient otherwise); the cap halves.
PowerSeries halveExponents(const PowerSeries& a);

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) { return add(a, b); }
inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return sub(a, b); }
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return mul(a, b); }

// A series presented as numerator / prod_p (1 - t^p): an exact polynomial
// numerator over a multiset of geometric factors. This is the closed shape
// of every classifying-space series and Grassmannian in the catalog, and it
// expands to any requested degree without error.
class CyclotomicProductForm {
public:
    // numerator is dense by degree and may be longer than any later
    // expansion cap; factors are the exponents p of (1 - t^p), each >= 1.
    CyclotomicProductForm(Field field, std::vector<Rational> numerator,
                          std::vector<int> factors);

    static CyclotomicProductForm one(Field field);

    Field field() const { return field_; }
    const std::vector<Rational>& numerator() const { return numerator_; }
    // Sorted multiset.
    const std::vector<int>& factors() const { return factors_; }

    // Exact coefficients of the series up to degree cap. Satisfies
    // expand(cap) * prod_p (1 - t^p) = numerator, truncated to cap.
    PowerSeries expand(int cap) const;

private:
    Field field_;
    std::vector<Rational> numerator_;
    std::vector<int> factors_;
};

}  // namespace qbetti
