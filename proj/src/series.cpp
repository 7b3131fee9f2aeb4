#include "qbetti/series.hpp"

#include <algorithm>

namespace qbetti {

const char* fieldName(Field f) {
    return f == Field::Rationals ? "rationals" : "gf2";
}

std::string rationalToString(const Rational& value) {
    std::string s = numerator(value).str();
    if (denominator(value) != 1) {
        s += "/" + denominator(value).str();
    }
    return s;
}

namespace {

void requireSameField(const PowerSeries& a, const PowerSeries& b, const char* op) {
    if (a.field() != b.field()) {
        throw FieldMismatch(std::string(op) + ": series tagged " + fieldName(a.field()) +
                            " and " + fieldName(b.field()) + " cannot be combined");
    }
}

}  // namespace

PowerSeries::PowerSeries(Field field, int cap) : field_(field), cap_(cap) {
    if (cap < 0) {
        throw DomainError("series cap must be >= 0, got " + std::to_string(cap));
    }
    c_.assign(static_cast<size_t>(cap) + 1, Rational(0));
}

PowerSeries PowerSeries::constant(Field field, const Rational& value, int cap) {
    PowerSeries s(field, cap);
    s.c_[0] = value;
    return s;
}

PowerSeries PowerSeries::monomial(Field field, const Rational& value, int degree, int cap) {
    PowerSeries s(field, cap);
    s.set(degree, value);
    return s;
}

const Rational& PowerSeries::coeff(int degree) const {
    if (degree < 0 || degree > cap_) {
        throw DomainError("coefficient of degree " + std::to_string(degree) +
                          " requested from a series capped at " + std::to_string(cap_));
    }
    return c_[static_cast<size_t>(degree)];
}

void PowerSeries::set(int degree, const Rational& value) {
    if (degree < 0 || degree > cap_) {
        throw DomainError("coefficient of degree " + std::to_string(degree) +
                          " set on a series capped at " + std::to_string(cap_));
    }
    c_[static_cast<size_t>(degree)] = value;
}

bool PowerSeries::isZero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

int PowerSeries::degree() const {
    for (int d = cap_; d >= 0; --d) {
        if (c_[static_cast<size_t>(d)] != 0) return d;
    }
    return -1;
}

PowerSeries PowerSeries::truncated(int newCap) const {
    if (newCap > cap_) {
        throw DomainError("truncated() cannot raise a cap; use paddedTo() on exact polynomials");
    }
    PowerSeries s(field_, newCap);
    for (int d = 0; d <= newCap; ++d) s.c_[static_cast<size_t>(d)] = c_[static_cast<size_t>(d)];
    return s;
}

PowerSeries PowerSeries::paddedTo(int newCap) const {
    if (newCap < cap_) {
        throw DomainError("paddedTo() cannot lower a cap; use truncated()");
    }
    PowerSeries s(field_, newCap);
    for (int d = 0; d <= cap_; ++d) s.c_[static_cast<size_t>(d)] = c_[static_cast<size_t>(d)];
    return s;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
    int cap = std::min(a.cap(), b.cap());
    for (int d = 0; d <= cap; ++d) {
        if (a.coeff(d) != b.coeff(d)) return false;
    }
    return true;
}

bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
    requireSameField(a, b, "add");
    PowerSeries r(a.field(), std::min(a.cap(), b.cap()));
    for (int d = 0; d <= r.cap(); ++d) r.set(d, a.coeff(d) + b.coeff(d));
    return r;
}

PowerSeries sub(const PowerSeries& a, const PowerSeries& b) {
    requireSameField(a, b, "sub");
    PowerSeries r(a.field(), std::min(a.cap(), b.cap()));
    for (int d = 0; d <= r.cap(); ++d) r.set(d, a.coeff(d) - b.coeff(d));
    return r;
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
    requireSameField(a, b, "mul");
    PowerSeries r(a.field(), std::min(a.cap(), b.cap()));
    for (int i = 0; i <= std::min(a.cap(), r.cap()); ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j <= r.cap() && j <= b.cap(); ++j) {
            if (b.coeff(j) == 0) continue;
            r.set(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

PowerSeries divide(const PowerSeries& a, const PowerSeries& b) {
    requireSameField(a, b, "divide");
    int v = 0;
    while (v <= b.cap() && b.coeff(v) == 0) ++v;
    if (v > b.cap()) {
        throw InexactDivision("division by the zero series");
    }
    int cap = std::min(a.cap(), b.cap()) - v;
    if (cap < 0) {
        throw DomainError("divisor valuation " + std::to_string(v) +
                          " exceeds the common cap, no coefficient of the quotient is determined");
    }
    // a must vanish wherever b does at the bottom, else no power series
    // solves q*b = a.
    for (int d = 0; d < v && d <= a.cap(); ++d) {
        if (a.coeff(d) != 0) {
            throw InexactDivision("dividend has a t^" + std::to_string(d) +
                                  " term below the divisor valuation " + std::to_string(v));
        }
    }
    PowerSeries q(a.field(), cap);
    const Rational& lead = b.coeff(v);
    for (int d = 0; d <= cap; ++d) {
        Rational acc = a.coeff(d + v);
        for (int i = 1; i <= d && i + v <= b.cap(); ++i) {
            if (b.coeff(i + v) == 0) continue;
            acc -= b.coeff(i + v) * q.coeff(d - i);
        }
        q.set(d, acc / lead);
    }
    return q;
}

PowerSeries timesMonomial(const PowerSeries& a, int e) {
    if (e < 0) {
        throw DomainError("timesMonomial needs e >= 0, got " + std::to_string(e));
    }
    PowerSeries r(a.field(), a.cap());
    for (int d = 0; d + e <= a.cap(); ++d) r.set(d + e, a.coeff(d));
    return r;
}

PowerSeries substituteTPower(const PowerSeries& a, int e) {
    if (e < 1) {
        throw DomainError("substituteTPower needs e >= 1, got " + std::to_string(e));
    }
    PowerSeries r(a.field(), a.cap());
    for (int d = 0; static_cast<long long>(d) * e <= a.cap(); ++d) {
        r.set(d * e, a.coeff(d));
    }
    return r;
}

PowerSeries halveExponents(const PowerSeries& a) {
    for (int d = 1; d <= a.cap(); d += 2) {
        if (a.coeff(d) != 0) {
            throw NonzeroOddCoefficient("halveExponents: nonzero coefficient at odd degree " +
                                        std::to_string(d));
        }
    }
    PowerSeries r(a.field(), a.cap() / 2);
    for (int d = 0; d <= r.cap(); ++d) r.set(d, a.coeff(2 * d));
    return r;
}

CyclotomicProductForm::CyclotomicProductForm(Field field, std::vector<Rational> numerator,
                                             std::vector<int> factors)
    : field_(field), numerator_(std::move(numerator)), factors_(std::move(factors)) {
    if (numerator_.empty()) numerator_.push_back(Rational(0));
    for (int p : factors_) {
        if (p < 1) {
            throw DomainError("product form factor (1 - t^p) needs p >= 1, got " +
                              std::to_string(p));
        }
    }
    std::sort(factors_.begin(), factors_.end());
}

CyclotomicProductForm CyclotomicProductForm::one(Field field) {
    return CyclotomicProductForm(field, {Rational(1)}, {});
}

PowerSeries CyclotomicProductForm::expand(int cap) const {
    PowerSeries r(field_, cap);
    for (int d = 0; d <= cap && d < static_cast<int>(numerator_.size()); ++d) {
        r.set(d, numerator_[static_cast<size_t>(d)]);
    }
    // In-place multiplication by 1/(1 - t^p): a running sum with stride p.
    for (int p : factors_) {
        for (int d = p; d <= cap; ++d) {
            r.set(d, r.coeff(d) + r.coeff(d - p));
        }
    }
    return r;
}

}  // namespace qbetti
