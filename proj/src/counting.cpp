#include "topsnut/counting.hpp"

#include <algorithm>

#include "topsnut/error.hpp"

namespace topsnut {

BigInt factorial(int n) {
    if (n < 0) fail("NegativeArgument", "factorial of negative number");
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

long long partitions_max_part(int m, int k) {
    if (m < 0 || k < 0) fail("NegativeArgument", "partition arguments must be nonnegative");
    if (m == 0) return 1;
    if (k == 0) return 0;
    if (k > m) k = m;
    std::vector<std::vector<long long>> a(m + 1, std::vector<long long>(k + 1, 0));
    for (int kk = 0; kk <= k; ++kk) a[0][kk] = 1;
    for (int mm = 1; mm <= m; ++mm)
        for (int kk = 1; kk <= k; ++kk)
            a[mm][kk] = a[mm][kk - 1] + (mm >= kk ? a[mm - kk][std::min(kk, mm - kk)] : 0);
    return a[m][k];
}

long long partitions_exact(int m, int k) {
    if (m < 0 || k < 0) fail("NegativeArgument", "partition arguments must be nonnegative");
    if (k == 0) return m == 0 ? 1 : 0;
    if (k > m) return 0;
    return partitions_max_part(m - k, k);
}

BigInt leaf_addition_count(int p, int m) {
    if (p < 0 || m < 0) fail("NegativeArgument", "leaf addition arguments must be nonnegative");
    BigInt sum = 0;
    for (int k = 1; k <= m; ++k) sum += partitions_exact(m, k);
    return factorial(p) * sum;
}

BigInt matrix_census_count(int q) { return factorial(q) * (BigInt(1) << q); }

BigInt tbpaw_count(int q) {
    if (q < 1) fail("NegativeArgument", "need at least one edge");
    return factorial(3 * q) * factorial(q) * (BigInt(1) << (q - 1));
}

BigInt raw_pair_count(int q) { return factorial(3 * q) * factorial(q) * (BigInt(1) << q); }

BigInt cycle_variant_count(const std::vector<int>& block_sizes) {
    const int n = static_cast<int>(block_sizes.size());
    if (n < 3) fail("NegativeArgument", "cycle needs at least three vertices");
    BigInt out = n;
    out *= factorial(block_sizes.front() + 1);
    out *= factorial(block_sizes.back() + 1);
    for (int i = 1; i + 1 < n; ++i) out *= factorial(block_sizes[i]);
    return out;
}

std::string FactoredCount::to_string() const {
    std::string out;
    for (int f : factorials) out += "(" + std::to_string(f) + "!)";
    if (pow2_exponent > 0) out += "2^" + std::to_string(pow2_exponent);
    return out.empty() ? "1" : out;
}

BigInt FactoredCount::expand() const {
    BigInt out = BigInt(1) << pow2_exponent;
    for (int f : factorials) out *= factorial(f);
    return out;
}

FactoredCount headline_count(int q) { return FactoredCount{{3 * q, q}, q}; }

namespace {

// Cover-path enumeration on the 3-row lattice. Cells are numbered row-major;
// a path is built from two disjoint arms leaving its anchor cell, the anchor
// being the lowest uncovered cell so every partition is generated once.
struct LatticeCensus {
    int rows = 3, cols = 0;
    std::vector<std::vector<int>> adj;
    std::vector<bool> covered;
    std::vector<long long> tally;

    explicit LatticeCensus(int q) : cols(q), covered(3 * q, false), tally(3 * q + 1, 0) {
        adj.resize(3 * q);
        auto id = [&](int r, int c) { return r * cols + c; };
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                if (c + 1 < cols) {
                    adj[id(r, c)].push_back(id(r, c + 1));
                    adj[id(r, c + 1)].push_back(id(r, c));
                }
                if (r + 1 < rows) {
                    adj[id(r, c)].push_back(id(r + 1, c));
                    adj[id(r + 1, c)].push_back(id(r, c));
                }
            }
    }

    void arms(int anchor, std::vector<std::vector<int>>& out) {
        out.push_back({});
        std::vector<int> arm;
        extend(anchor, anchor, arm, out);
    }

    void extend(int anchor, int tip, std::vector<int>& arm, std::vector<std::vector<int>>& out) {
        for (int next : adj[tip]) {
            if (next == anchor || covered[next]) continue;
            if (std::find(arm.begin(), arm.end(), next) != arm.end()) continue;
            arm.push_back(next);
            out.push_back(arm);
            extend(anchor, next, arm, out);
            arm.pop_back();
        }
    }

    void run(int placed_paths) {
        int anchor = -1;
        for (int c = 0; c < static_cast<int>(covered.size()); ++c)
            if (!covered[c]) {
                anchor = c;
                break;
            }
        if (anchor < 0) {
            ++tally[placed_paths];
            return;
        }
        covered[anchor] = true;
        std::vector<std::vector<int>> first;
        arms(anchor, first);
        for (const auto& a : first) {
            for (int cell : a) covered[cell] = true;
            std::vector<std::vector<int>> second;
            arms(anchor, second);
            for (const auto& b : second) {
                if (a.empty() && b.empty()) continue;  // single-cell path not allowed
                if (!a.empty() && !b.empty() && a.front() >= b.front()) continue;
                if (a.empty() && !b.empty()) continue;  // lone arm always goes first
                for (int cell : b) covered[cell] = true;
                run(placed_paths + 1);
                for (int cell : b) covered[cell] = false;
            }
            for (int cell : a) covered[cell] = false;
        }
        covered[anchor] = false;
    }
};

}  // namespace

std::vector<long long> foldline_census(int q) {
    if (q < 1 || q > 3) fail("SizeLimitExceeded", "lattice census supports q in 1..3");
    LatticeCensus census(q);
    census.run(0);
    std::vector<long long> out(census.tally.size(), 0);
    for (std::size_t m = 0; m < out.size(); ++m) out[m] = census.tally[m] * (1LL << m);
    return out;
}

BigInt foldline_total(int q) {
    auto census = foldline_census(q);
    BigInt sum = 0;
    for (std::size_t m = 1; m < census.size(); ++m) sum += BigInt(census[m]) * factorial(static_cast<int>(m));
    return factorial(q) * (BigInt(1) << q) * sum;
}

}  // namespace topsnut
