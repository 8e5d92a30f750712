#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace topsnut {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

long long partitions_max_part(int m, int k);  // partitions of m with parts <= k
long long partitions_exact(int m, int k);     // partitions of m into exactly k parts

// Number of distinct leaf-extended trees obtained by attaching m new leaves
// to a p-vertex host, counted over all placements and part permutations.
BigInt leaf_addition_count(int p, int m);

BigInt matrix_census_count(int q);  // distinct matrices of one labelled graph
BigInt tbpaw_count(int q);          // distinct text strings those matrices induce
BigInt raw_pair_count(int q);       // (matrix, route) pairs before dedup

// Cycle emission variants: one factor per spine vertex's neighbor block, the
// two cut ends gaining the extra spine neighbor, times the n start choices.
BigInt cycle_variant_count(const std::vector<int>& block_sizes);

// Oversized counts stay in factored form instead of expanding.
struct FactoredCount {
    std::vector<int> factorials;
    int pow2_exponent = 0;
    std::string to_string() const;
    BigInt expand() const;
};
FactoredCount headline_count(int q);

// census[m] = directed groups of m disjoint cover paths on the 3-by-q cell
// lattice, every path at least two cells. Exhaustive, q <= 3.
std::vector<long long> foldline_census(int q);
BigInt foldline_total(int q);

}  // namespace topsnut
