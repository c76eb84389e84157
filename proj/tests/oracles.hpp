// Brute-force reference implementations used to check the fast kernels.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "orthopat/pattern.hpp"

namespace orthopat::oracle {

/// Minimum over all (n!)^2 row/column permutation pairs.
ZeroPattern equivalence_minimum(const ZeroPattern& p);

/// Minimum over all n! simultaneous permutations.
ZeroPattern congruence_minimum(const ZeroPattern& p);

/// Some s x (n-s) all-zero submatrix, 0 < s < n, over all row and column subsets.
bool has_zero_block(const ZeroPattern& p);

/// RSQ straight from the definition, over every row subset.
bool rsq_by_definition(const ZeroPattern& p);

/// Maximum matching of the bipartite row/column graph.
int structural_rank(const ZeroPattern& p);

/// Integer matrices (every sign) with the given support and N N^T = d^2 I.
std::uint64_t count_orthogonal(const ZeroPattern& p, long long d);

/// Symmetric integer matrices with the given support, N^2 = d^2 I and
/// trace t d.
std::uint64_t count_symmetric(const ZeroPattern& p, long long d, long long t);

ZeroPattern random_pattern(int n, std::mt19937_64& rng, double density = 0.6);
ZeroPattern random_symmetric_pattern(int n, std::mt19937_64& rng, double density = 0.6);
std::vector<int> random_permutation(int n, std::mt19937_64& rng);

}  // namespace orthopat::oracle
