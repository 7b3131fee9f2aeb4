#pragma once

// Index set of the norm-square Morse stratification for a product of
// Grassmannians Gr_{l_1}(C^n) x ... x Gr_{l_r}(C^n) under the diagonal
// unitary action, together with each stratum's Morse half-index and
// codimension. The real flavor shares the index set; only the codimension
// halves.
//
// An index is a block partition of the rank: pairs (k_i, m_i) with
// sum m_i = n, sum k_i = sum l_j, and strictly decreasing slopes
// k_1/m_1 > ... > k_s/m_s, plus an s x r matrix distributing each weight
// column-wise over the blocks: row sums k_i, column sums l_j, entries
// 0 <= l_ij <= m_i. The unique s = 1 index is the open stratum and always
// has codimension zero.

#include <optional>
#include <string>
#include <vector>

#include "qbetti/errors.hpp"

namespace qbetti {

enum class Flavor { Complex, Real };

const char* flavorName(Flavor f);

struct SystemSpec {
    int n = 1;
    std::vector<int> weights;
    Flavor flavor = Flavor::Complex;
};

// Throws DomainError unless 1 <= n, 1 <= r, every 0 <= l_j <= n, and the
// size stays inside the enumeration guard (n <= 9, r <= 12; the index count
// grows exponentially past desk scale).
void validateSpec(const SystemSpec& spec);

struct Block {
    int k = 0;
    int m = 1;
    friend bool operator==(const Block&, const Block&) = default;
    friend auto operator<=>(const Block&, const Block&) = default;
};

struct StratumIndex {
    std::vector<Block> blocks;
    std::vector<std::vector<int>> matrix;    // s rows, r columns

    int s() const { return static_cast<int>(blocks.size()); }
    friend bool operator==(const StratumIndex&, const StratumIndex&) = default;
};

bool isMinimal(const StratumIndex& idx);

// The deterministic output order: s, then blocks lexicographically by
// (k_i, m_i), then the matrix row-major.
bool indexOrderLess(const StratumIndex& a, const StratumIndex& b);

// Empty result means the index is a valid stratum index for this spec;
// otherwise the first violated constraint, for diagnostics.
std::optional<std::string> indexViolation(const SystemSpec& spec, const StratumIndex& idx);

// Complete duplicate-free list in indexOrderLess order, minimal index first.
std::vector<StratumIndex> enumerateIndices(const SystemSpec& spec);

// m with 2m = dim of the negative-weight part of the tangent space along
// the critical set: m = sum_j sum_{i<i'} l_ij * (m_i' - l_i'j).
int morseHalfIndex(const StratumIndex& idx);

struct StratumData {
    StratumIndex index;
    int halfIndexM = 0;
    int codimComplex = 0;
    int codimReal = 0;
};

// A negative codimension names a stratum that must be empty; the recursion
// handles that by dropping the index when its contribution vanishes, so it
// asks for Allow and applies the zero-contribution protocol itself. Public
// callers keep the Reject default.
enum class NegativePolicy { Reject, Allow };

// codimComplex = 2m - n^2 + sum m_i^2 (even by construction, OddCodimension
// if that ever breaks), codimReal is its half.
StratumData codims(const StratumIndex& idx, int n, NegativePolicy policy = NegativePolicy::Reject);

// The block-i system the recursion descends into: rank m_i with weight row i.
SystemSpec subsystemSpec(const StratumIndex& idx, int i, Flavor flavor);

std::string renderIndex(const StratumIndex& idx);

}  // namespace qbetti
