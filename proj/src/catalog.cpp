#include "qbetti/catalog.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace qbetti {

namespace {

// Generous desk-scale guards; the recursions stay far below them.
constexpr int kMaxClassifyingRank = 64;
constexpr int kMaxGrassmannianRank = 16;

void checkRank(int n, const char* what) {
    if (n < 0 || n > kMaxClassifyingRank) {
        throw DomainError(std::string(what) + " rank out of range: " + std::to_string(n));
    }
}

// Multiplies (1 - t^e) into a dense polynomial.
void mulOneMinus(std::vector<Rational>& poly, int e) {
    poly.resize(poly.size() + static_cast<size_t>(e), Rational(0));
    for (size_t d = poly.size(); d-- > static_cast<size_t>(e);) {
        poly[d] -= poly[d - static_cast<size_t>(e)];
    }
}

CyclotomicProductForm geometricForm(Field field, int lo, int hi, int scale) {
    std::vector<int> factors;
    for (int p = lo; p <= hi; ++p) factors.push_back(p * scale);
    return CyclotomicProductForm(field, {Rational(1)}, std::move(factors));
}

CyclotomicProductForm grassForm(int n, int k, int scale) {
    if (k < 0 || k > n || n > kMaxGrassmannianRank) {
        throw DomainError("Grassmannian parameters out of range: n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
    }
    std::vector<Rational> numerator = {Rational(1)};
    for (int p = n - k + 1; p <= n; ++p) mulOneMinus(numerator, p * scale);
    std::vector<int> factors;
    for (int p = 1; p <= k; ++p) factors.push_back(p * scale);
    Field field = scale == 2 ? Field::Rationals : Field::GF2;
    return CyclotomicProductForm(field, std::move(numerator), std::move(factors));
}

// The ratio is the Gaussian binomial, a polynomial: expanding to its known
// top degree captures it exactly.
PowerSeries grassPolynomial(int n, int k, int scale) {
    static std::map<std::tuple<int, int, int>, PowerSeries> memo;
    static std::mutex mu;
    std::tuple<int, int, int> key{n, k, scale};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    PowerSeries value = grassForm(n, k, scale).expand(scale * k * (n - k));
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(key, std::move(value)).first->second;
}

}  // namespace

CyclotomicProductForm poincareBU(int n) {
    checkRank(n, "BU");
    return geometricForm(Field::Rationals, 1, n, 2);
}

CyclotomicProductForm poincareBOmod2(int n) {
    checkRank(n, "BO");
    return geometricForm(Field::GF2, 1, n, 1);
}

CyclotomicProductForm poincareBSO(int n) {
    checkRank(n, "BSO");
    return geometricForm(Field::GF2, 2, n, 1);
}

CyclotomicProductForm poincareBT(int n) {
    checkRank(n, "BT");
    std::vector<int> factors(static_cast<size_t>(n), 2);
    return CyclotomicProductForm(Field::Rationals, {Rational(1)}, std::move(factors));
}

CyclotomicProductForm poincareBE2(int n) {
    checkRank(n, "BE2");
    std::vector<int> factors(static_cast<size_t>(n), 1);
    return CyclotomicProductForm(Field::GF2, {Rational(1)}, std::move(factors));
}

PowerSeries grassC(int n, int k) { return grassPolynomial(n, k, 2); }

PowerSeries grassRmod2(int n, int k) { return grassPolynomial(n, k, 1); }

CyclotomicProductForm catalogForm(const SpaceId& id) {
    switch (id.kind) {
        case SpaceKind::BU: return poincareBU(id.n);
        case SpaceKind::BO: return poincareBOmod2(id.n);
        case SpaceKind::BSO: return poincareBSO(id.n);
        case SpaceKind::BT: return poincareBT(id.n);
        case SpaceKind::BE2: return poincareBE2(id.n);
        case SpaceKind::GrassC: return grassForm(id.n, id.k, 2);
        case SpaceKind::GrassR: return grassForm(id.n, id.k, 1);
        case SpaceKind::Point: return CyclotomicProductForm::one(Field::Rationals);
    }
    throw DomainError("unknown space kind");
}

std::string spaceName(const SpaceId& id) {
    switch (id.kind) {
        case SpaceKind::BU: return "BU(" + std::to_string(id.n) + ")";
        case SpaceKind::BO: return "BO(" + std::to_string(id.n) + ")";
        case SpaceKind::BSO: return "BSO(" + std::to_string(id.n) + ")";
        case SpaceKind::BT: return "BT(" + std::to_string(id.n) + ")";
        case SpaceKind::BE2: return "BE2(" + std::to_string(id.n) + ")";
        case SpaceKind::GrassC:
            return "GrassC(" + std::to_string(id.n) + "," + std::to_string(id.k) + ")";
        case SpaceKind::GrassR:
            return "GrassR(" + std::to_string(id.n) + "," + std::to_string(id.k) + ")";
        case SpaceKind::Point: return "Point";
    }
    return "?";
}

SpaceId parseSpaceId(const std::string& text) {
    if (text == "Point") return {SpaceKind::Point, 0, 0};
    auto open = text.find('(');
    if (open == std::string::npos || text.back() != ')') {
        throw DomainError("cannot parse space id '" + text + "', expected Name(n) or Name(n,k)");
    }
    std::string name = text.substr(0, open);
    std::string args = text.substr(open + 1, text.size() - open - 2);
    SpaceId id;
    bool twoArgs = false;
    if (name == "BU") id.kind = SpaceKind::BU;
    else if (name == "BO") id.kind = SpaceKind::BO;
    else if (name == "BSO") id.kind = SpaceKind::BSO;
    else if (name == "BT") id.kind = SpaceKind::BT;
    else if (name == "BE2") id.kind = SpaceKind::BE2;
    else if (name == "GrassC") { id.kind = SpaceKind::GrassC; twoArgs = true; }
    else if (name == "GrassR") { id.kind = SpaceKind::GrassR; twoArgs = true; }
    else throw DomainError("unknown space '" + name + "'");

    try {
        auto comma = args.find(',');
        if (twoArgs != (comma != std::string::npos)) {
            throw DomainError("wrong arity");
        }
        if (twoArgs) {
            size_t used = 0;
            id.n = std::stoi(args.substr(0, comma), &used);
            if (used != comma) throw DomainError("trailing text");
            id.k = std::stoi(args.substr(comma + 1), &used);
            if (used != args.size() - comma - 1) throw DomainError("trailing text");
        } else {
            size_t used = 0;
            id.n = std::stoi(args, &used);
            if (used != args.size()) throw DomainError("trailing text");
        }
    } catch (const DomainError&) {
        throw DomainError("cannot parse arguments of space id '" + text + "'");
    } catch (const std::exception&) {
        throw DomainError("cannot parse arguments of space id '" + text + "'");
    }
    if (id.n < 0 || (twoArgs && (id.k < 0 || id.k > id.n))) {
        throw DomainError("space parameters out of range in '" + text + "'");
    }
    return id;
}

}  // namespace qbetti
