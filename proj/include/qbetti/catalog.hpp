#pragma once

// Closed-form Poincare series of the classifying spaces and Grassmannians
// that feed every recursion: the building blocks are always a polynomial
// numerator over geometric factors (1 - t^p), so everything lives in a
// CyclotomicProductForm and expands exactly to any degree.
//
// Conventions, fixed once here:
//   BU(n)        1 / prod_{p=1..n} (1 - t^{2p})            rational coefficients
//   BO(n)        1 / prod_{p=1..n} (1 - t^p)               mod-2 Betti numbers
//   BSO(n)       1 / prod_{p=2..n} (1 - t^p)               mod-2 Betti numbers
//   BT(n)        1 / (1 - t^2)^n                           rank-n torus
//   BE2(n)       1 / (1 - t)^n                             rank-n 2-torus
//   GrassC(n,k)  prod_{p=n-k+1..n} (1 - t^{2p}) / prod_{p=1..k} (1 - t^{2p})
//   GrassR(n,k)  the same with every exponent halved
//
// Both Grassmannian ratios are exact polynomials (Gaussian binomials in t^2
// resp. t), of degree 2k(n-k) resp. k(n-k), palindromic, with non-negative
// integer coefficients. The mod-2 family is the complex family with
// exponents halved; that identity is load-bearing downstream and is pinned
// by tests here.

#include <string>

#include "qbetti/series.hpp"

namespace qbetti {

enum class SpaceKind { BU, BO, BSO, BT, BE2, GrassC, GrassR, Point };

struct SpaceId {
    SpaceKind kind = SpaceKind::Point;
    int n = 0;
    int k = 0;    // Grassmannians only
};

// Accepts the rendered shape back: "BU(3)", "GrassC(4,2)", "Point".
SpaceId parseSpaceId(const std::string& text);
std::string spaceName(const SpaceId& id);

// Factored form of any catalog space. Grassmannians come back with the
// product of (1 - t^p) numerator factors multiplied out.
CyclotomicProductForm catalogForm(const SpaceId& id);

CyclotomicProductForm poincareBU(int n);
CyclotomicProductForm poincareBOmod2(int n);
CyclotomicProductForm poincareBSO(int n);
CyclotomicProductForm poincareBT(int n);
CyclotomicProductForm poincareBE2(int n);

// The full polynomial, capped at its exact top degree. Memoized per process;
// callers pad to their working cap.
PowerSeries grassC(int n, int k);
PowerSeries grassRmod2(int n, int k);

}  // namespace qbetti
