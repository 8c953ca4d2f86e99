#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "rescoh/rootsys.hpp"

namespace rescoh {

/// Compact/noncompact split of the C_n roots for Sp(2n,R): the compact roots
/// are exactly +-(e_i - e_j), the roots of the maximal compact U(n).
struct CompactnessTable {
  std::size_t rank = 0;
  std::vector<Weight> compact_roots;
};

CompactnessTable compactness_table(std::size_t rank);
bool is_compact_root(const Weight& root);

/// Half-sum of the compact, resp. noncompact, roots positive for eps.
Weight rho_c(std::size_t rank, const SignChamber& eps);
Weight rho_n(std::size_t rank, const SignChamber& eps);

/// Simple roots of the compact positive system Delta^eps intersected with Delta_c.
std::vector<Weight> compact_simple_roots(std::size_t rank, const SignChamber& eps);

/// Nonnegative pairing with every compact simple root for eps.
bool is_compact_dominant(std::size_t rank, const SignChamber& eps, const Weight& w);

/// eps_i(e_i + e_{i+1}) wherever eps_i != eps_{i+1}, then 2 eps_n e_n.
std::vector<Weight> noncompact_simple_roots(std::size_t rank, const SignChamber& eps);

/// All noncompact roots (both signs); dim p = rank(rank+1) of them.
std::vector<Weight> noncompact_roots(std::size_t rank);

/// Half the real dimension of Sp(2n,R)/U(n): n(n+1)/2.
int middle_degree(std::size_t rank);

using WeightMultiset = std::map<Weight, std::uint64_t>;

inline constexpr std::size_t kDefaultWedgeRankCap = 3;

/// Weights of the q-th exterior power of p: the multiset of sums over all
/// q-element subsets of the noncompact roots. Brute force over C(n(n+1), q)
/// subsets, so exponential in rank; ranks above `rank_cap` are refused with
/// RangeError, as is q outside [0, n(n+1)].
WeightMultiset wedge_weights(std::size_t rank, int q, std::size_t rank_cap = kDefaultWedgeRankCap);

std::uint64_t contains_weight(const WeightMultiset& ws, const Weight& mu);

}  // namespace rescoh
