#include "rescoh/realform.hpp"

#include <algorithm>
#include <bit>

#include "rescoh/error.hpp"

namespace rescoh {

bool is_compact_root(const Weight& root) {
  int plus = 0;
  int minus = 0;
  for (const auto& c : root.coords()) {
    if (c == 1) ++plus;
    else if (c == -1) ++minus;
    else if (c != 0) return false;
  }
  return plus == 1 && minus == 1;
}

CompactnessTable compactness_table(std::size_t rank) {
  const RootSystem rs = build_root_system(rank);
  CompactnessTable t{rank, {}};
  for (const auto& b : rs.roots())
    if (is_compact_root(b)) t.compact_roots.push_back(b);
  return t;
}

namespace {

Weight half_sum_where(std::size_t rank, const SignChamber& eps, bool compact) {
  const RootSystem rs = build_root_system(rank);
  Weight sum(rank);
  for (const auto& b : chamber_positive_roots(rs, eps))
    if (is_compact_root(b) == compact) sum += b;
  return Rational(1, 2) * sum;
}

}  // namespace

Weight rho_c(std::size_t rank, const SignChamber& eps) { return half_sum_where(rank, eps, true); }
Weight rho_n(std::size_t rank, const SignChamber& eps) { return half_sum_where(rank, eps, false); }

std::vector<Weight> compact_simple_roots(std::size_t rank, const SignChamber& eps) {
  const RootSystem rs = build_root_system(rank);
  std::vector<Weight> positive;
  for (const auto& b : chamber_positive_roots(rs, eps))
    if (is_compact_root(b)) positive.push_back(b);
  std::vector<Weight> simple;
  for (const auto& b : positive) {
    bool decomposable = false;
    for (std::size_t i = 0; i < positive.size() && !decomposable; ++i)
      for (std::size_t j = i + 1; j < positive.size() && !decomposable; ++j)
        decomposable = positive[i] + positive[j] == b;
    if (!decomposable) simple.push_back(b);
  }
  return simple;
}

bool is_compact_dominant(std::size_t rank, const SignChamber& eps, const Weight& w) {
  for (const auto& a : compact_simple_roots(rank, eps))
    if (coroot_pairing(w, a) < 0) return false;
  return true;
}

std::vector<Weight> noncompact_simple_roots(std::size_t rank, const SignChamber& eps) {
  const RootSystem rs = build_root_system(rank);
  std::vector<Weight> out;
  for (const auto& a : simple_roots(rs, eps))
    if (!is_compact_root(a)) out.push_back(a);
  return out;
}

std::vector<Weight> noncompact_roots(std::size_t rank) {
  const RootSystem rs = build_root_system(rank);
  std::vector<Weight> out;
  for (const auto& b : rs.roots())
    if (!is_compact_root(b)) out.push_back(b);
  return out;
}

int middle_degree(std::size_t rank) { return static_cast<int>(noncompact_roots(rank).size() / 2); }

WeightMultiset wedge_weights(std::size_t rank, int q, std::size_t rank_cap) {
  if (rank > rank_cap)
    throw RangeError("wedge_weights is brute force over 2^(n(n+1)) subsets; rank " + std::to_string(rank) +
                     " exceeds the cap " + std::to_string(rank_cap));
  const std::vector<Weight> nc = noncompact_roots(rank);
  const int dim = static_cast<int>(nc.size());
  if (q < 0 || q > dim) throw RangeError("wedge degree " + std::to_string(q) + " outside [0, " + std::to_string(dim) + "]");

  // Integer coordinates: accumulate in machine ints, convert once per weight.
  std::vector<std::vector<long>> roots(nc.size(), std::vector<long>(rank));
  for (std::size_t k = 0; k < nc.size(); ++k)
    for (std::size_t i = 0; i < rank; ++i) roots[k][i] = nc[k][i].get_num().get_si();

  std::map<std::vector<long>, std::uint64_t> counts;
  const std::uint64_t limit = std::uint64_t{1} << dim;
  std::vector<long> sum(rank);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != q) continue;
    std::fill(sum.begin(), sum.end(), 0);
    for (int k = 0; k < dim; ++k)
      if (mask >> k & 1U)
        for (std::size_t i = 0; i < rank; ++i) sum[i] += roots[static_cast<std::size_t>(k)][i];
    ++counts[sum];
  }
  WeightMultiset out;
  for (const auto& [coords, mult] : counts) {
    std::vector<Rational> c(coords.begin(), coords.end());
    out.emplace(Weight(std::move(c)), mult);
  }
  return out;
}

std::uint64_t contains_weight(const WeightMultiset& ws, const Weight& mu) {
  auto it = ws.find(mu);
  return it == ws.end() ? 0 : it->second;
}

}  // namespace rescoh
