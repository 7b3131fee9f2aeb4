#include "qbetti/strata.hpp"

#include <algorithm>
#include <numeric>

namespace qbetti {

const char* flavorName(Flavor f) {
    return f == Flavor::Complex ? "complex" : "real";
}

void validateSpec(const SystemSpec& spec) {
    if (spec.n < 1) {
        throw DomainError("system rank must be positive, got " + std::to_string(spec.n));
    }
    if (spec.weights.empty()) {
        throw DomainError("system needs at least one weight");
    }
    if (spec.n > 9 || spec.weights.size() > 12) {
        throw DomainError("system size beyond the enumeration guard (n <= 9, r <= 12): n=" +
                          std::to_string(spec.n) + " r=" + std::to_string(spec.weights.size()));
    }
    for (int l : spec.weights) {
        if (l < 0 || l > spec.n) {
            throw DomainError("weight " + std::to_string(l) + " outside 0..n for n=" +
                              std::to_string(spec.n));
        }
    }
}

bool isMinimal(const StratumIndex& idx) { return idx.blocks.size() == 1; }

bool indexOrderLess(const StratumIndex& a, const StratumIndex& b) {
    if (a.s() != b.s()) return a.s() < b.s();
    if (a.blocks != b.blocks) return a.blocks < b.blocks;
    return a.matrix < b.matrix;
}

std::optional<std::string> indexViolation(const SystemSpec& spec, const StratumIndex& idx) {
    int s = idx.s();
    int r = static_cast<int>(spec.weights.size());
    if (s < 1) return "no blocks";
    if (static_cast<int>(idx.matrix.size()) != s) return "matrix row count differs from s";
    long long mSum = 0, kSum = 0;
    for (const Block& b : idx.blocks) {
        if (b.m < 1) return "block multiplicity m must be positive";
        if (b.k < 0) return "block weight k must be non-negative";
        mSum += b.m;
        kSum += b.k;
    }
    if (mSum != spec.n) return "block multiplicities do not sum to n";
    long long L = std::accumulate(spec.weights.begin(), spec.weights.end(), 0LL);
    if (kSum != L) return "block weights do not sum to the total weight";
    for (int i = 0; i + 1 < s; ++i) {
        // k_i/m_i > k_{i+1}/m_{i+1}, exactly; adjacent strictness gives the
        // whole chain by transitivity.
        long long lhs = static_cast<long long>(idx.blocks[i].k) * idx.blocks[i + 1].m;
        long long rhs = static_cast<long long>(idx.blocks[i + 1].k) * idx.blocks[i].m;
        if (lhs <= rhs) return "slopes not strictly decreasing at position " + std::to_string(i);
    }
    for (int i = 0; i < s; ++i) {
        if (static_cast<int>(idx.matrix[i].size()) != r) return "matrix column count differs from r";
        long long rowSum = 0;
        for (int j = 0; j < r; ++j) {
            int v = idx.matrix[i][j];
            if (v < 0) return "negative matrix entry";
            if (v > idx.blocks[i].m) return "matrix entry exceeds block multiplicity";
            rowSum += v;
        }
        if (rowSum != idx.blocks[i].k) return "row " + std::to_string(i) + " does not sum to k";
    }
    for (int j = 0; j < r; ++j) {
        long long colSum = 0;
        for (int i = 0; i < s; ++i) colSum += idx.matrix[i][j];
        if (colSum != spec.weights[static_cast<size_t>(j)]) {
            return "column " + std::to_string(j) + " does not sum to the weight";
        }
    }
    return std::nullopt;
}

namespace {

struct Enumerator {
    const SystemSpec& spec;
    int r;
    long long L;
    std::vector<StratumIndex> out;

    std::vector<int> comp;    // current composition m_1..m_s
    std::vector<int> ks;      // current k_1..k_s

    void run() {
        descendComposition(spec.n);
    }

    void descendComposition(int remaining) {
        if (remaining == 0) {
            descendWeights(0, L);
            return;
        }
        for (int m = 1; m <= remaining; ++m) {
            comp.push_back(m);
            descendComposition(remaining - m);
            comp.pop_back();
        }
    }

    void descendWeights(size_t i, long long remaining) {
        size_t s = comp.size();
        if (i == s) {
            if (remaining == 0) fillMatrices();
            return;
        }
        // Row i can absorb at most r * m_i (every entry capped by m_i), and
        // its slope must stay strictly below the previous one.
        long long hi = std::min<long long>(remaining, static_cast<long long>(r) * comp[i]);
        for (long long k = (i + 1 == s) ? remaining : 0; k <= hi; ++k) {
            if (i > 0) {
                long long prev = static_cast<long long>(ks[i - 1]) * comp[i];
                if (k * comp[i - 1] >= prev) break;    // k only grows from here
            }
            ks.push_back(static_cast<int>(k));
            descendWeights(i + 1, remaining - k);
            ks.pop_back();
        }
    }

    // Column-by-column distribution of each weight over the blocks, with
    // row budgets rem_i = k_i and a suffix-capacity prune.
    std::vector<std::vector<int>> sufcap;    // sufcap[i][j] = sum_{j'>=j} min(m_i, l_j')
    std::vector<int> rem;
    std::vector<std::vector<int>> grid;

    void fillMatrices() {
        size_t s = comp.size();
        sufcap.assign(s, std::vector<int>(static_cast<size_t>(r) + 1, 0));
        for (size_t i = 0; i < s; ++i) {
            for (int j = r - 1; j >= 0; --j) {
                sufcap[i][static_cast<size_t>(j)] =
                    sufcap[i][static_cast<size_t>(j) + 1] +
                    std::min(comp[i], spec.weights[static_cast<size_t>(j)]);
            }
        }
        rem.assign(ks.begin(), ks.end());
        for (size_t i = 0; i < s; ++i) {
            if (rem[i] > sufcap[i][0]) return;
        }
        grid.assign(s, std::vector<int>(static_cast<size_t>(r), 0));
        descendColumn(0);
    }

    void descendColumn(int j) {
        size_t s = comp.size();
        if (j == r) {
            // Column sums consumed exactly sum l_j = sum k_i, so the budgets
            // are all zero here.
            StratumIndex idx;
            for (size_t i = 0; i < s; ++i) idx.blocks.push_back({ks[i], comp[i]});
            idx.matrix = grid;
            out.push_back(std::move(idx));
            return;
        }
        descendCell(j, 0, spec.weights[static_cast<size_t>(j)]);
    }

    void descendCell(int j, size_t i, int colRemaining) {
        size_t s = comp.size();
        if (i == s) {
            if (colRemaining == 0) descendColumn(j + 1);
            return;
        }
        int hi = std::min({colRemaining, comp[i], rem[i]});
        for (int v = 0; v <= hi; ++v) {
            if (rem[i] - v > sufcap[i][static_cast<size_t>(j) + 1]) continue;
            grid[i][static_cast<size_t>(j)] = v;
            rem[i] -= v;
            descendCell(j, i + 1, colRemaining - v);
            rem[i] += v;
            grid[i][static_cast<size_t>(j)] = 0;
        }
    }
};

}  // namespace

std::vector<StratumIndex> enumerateIndices(const SystemSpec& spec) {
    validateSpec(spec);
    Enumerator e{spec, static_cast<int>(spec.weights.size()),
                 std::accumulate(spec.weights.begin(), spec.weights.end(), 0LL),
                 {}, {}, {}, {}, {}, {}};
    e.run();
    std::sort(e.out.begin(), e.out.end(), indexOrderLess);
    return std::move(e.out);
}

int morseHalfIndex(const StratumIndex& idx) {
    int s = idx.s();
    int m = 0;
    for (int i = 0; i < s; ++i) {
        for (int ip = i + 1; ip < s; ++ip) {
            for (size_t j = 0; j < idx.matrix[static_cast<size_t>(i)].size(); ++j) {
                m += idx.matrix[static_cast<size_t>(i)][j] *
                     (idx.blocks[static_cast<size_t>(ip)].m -
                      idx.matrix[static_cast<size_t>(ip)][j]);
            }
        }
    }
    return m;
}

StratumData codims(const StratumIndex& idx, int n, NegativePolicy policy) {
    int half = morseHalfIndex(idx);
    int stabilizerDim = 0;
    for (const Block& b : idx.blocks) stabilizerDim += b.m * b.m;
    int c2 = 2 * half - n * n + stabilizerDim;
    if (c2 % 2 != 0) {
        throw OddCodimension("odd stratum codimension " + std::to_string(c2) + " at " +
                             renderIndex(idx));
    }
    if (c2 < 0 && policy == NegativePolicy::Reject) {
        throw NegativeCodimension("negative stratum codimension " + std::to_string(c2) + " at " +
                                  renderIndex(idx));
    }
    return {idx, half, c2, c2 / 2};
}

SystemSpec subsystemSpec(const StratumIndex& idx, int i, Flavor flavor) {
    if (i < 0 || i >= idx.s()) {
        throw DomainError("block index " + std::to_string(i) + " out of range");
    }
    return {idx.blocks[static_cast<size_t>(i)].m, idx.matrix[static_cast<size_t>(i)], flavor};
}

std::string renderIndex(const StratumIndex& idx) {
    std::string s = "blocks [";
    for (size_t i = 0; i < idx.blocks.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(idx.blocks[i].k) + "," + std::to_string(idx.blocks[i].m) + ")";
    }
    s += "] matrix [";
    for (size_t i = 0; i < idx.matrix.size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (size_t j = 0; j < idx.matrix[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(idx.matrix[i][j]);
        }
        s += "]";
    }
    s += "]";
    return s;
}

}  // namespace qbetti
