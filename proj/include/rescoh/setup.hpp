#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rescoh/rational.hpp"
#include "rescoh/rootsys.hpp"

namespace rescoh {

/// The two maximal parabolic classes of Sp(2n) whose Levi has discrete
/// series: P1 (Levi GL_1 x Sp_{2n-2}) and P2 (Levi GL_2 x Sp_{2n-4}).
enum class ParabolicClass { P1, P2 };

std::string to_string(ParabolicClass c);
ParabolicClass parse_parabolic_class(const std::string& text);

/// A validated Harish-Chandra datum (rank, chamber eps, noncompact simple
/// root alpha0, Harish-Chandra parameter Lambda). Only validate_datum()
/// constructs one, so every instance satisfies:
///  - alpha0 is a noncompact simple root of Delta^eps,
///  - Lambda is integral and Delta^eps-dominant regular,
///  - <Lambda, alpha0^vee> = 1.
class HCDatum {
 public:
  std::size_t rank() const noexcept { return rank_; }
  const SignChamber& eps() const noexcept { return eps_; }
  const Weight& alpha0() const noexcept { return alpha0_; }
  const Weight& lambda() const noexcept { return lambda_; }
  ParabolicClass parabolic_class() const noexcept { return class_; }
  /// 0-based i0 with alpha0 = eps_{i0}(e_{i0} + e_{i0+1}); rank-1 for P1.
  std::size_t alpha0_index() const noexcept { return index_; }

  friend bool operator==(const HCDatum& a, const HCDatum& b) {
    return a.eps_ == b.eps_ && a.alpha0_ == b.alpha0_ && a.lambda_ == b.lambda_;
  }

 private:
  friend struct DatumFactory;
  std::size_t rank_ = 0;
  SignChamber eps_;
  Weight alpha0_;
  Weight lambda_;
  ParabolicClass class_ = ParabolicClass::P1;
  std::size_t index_ = 0;
};

struct Violation {
  std::string condition;  // integrality, dominance, alpha0, pairing, shape
  std::string message;
};

struct ValidationResult {
  std::optional<HCDatum> datum;
  std::vector<Violation> violations;
  bool ok() const noexcept { return datum.has_value(); }
};

ValidationResult validate_datum(std::size_t rank, const SignChamber& eps, const Weight& alpha0, const Weight& lambda);

/// Roots orthogonal to alpha0.
std::vector<Weight> levi_roots(const HCDatum& datum);
/// Each root with positive coroot pairing against alpha0, mapped to it.
std::map<Weight, Rational> nilradical_levels(const HCDatum& datum);

/// (sum of positive coroot pairings <beta, alpha^vee> over all roots)^-1.
Rational s0_for_root(std::size_t rank, const Weight& alpha);
Rational compute_s0(const HCDatum& datum);

struct LeviParameter {
  ParabolicClass parabolic_class = ParabolicClass::P1;
  std::optional<long> gl_weight;             // P2 only: 2|lambda_{i0+1}| + 1
  Weight sp_parameter;                       // rank n-1 (P1) or n-2 (P2)
  std::optional<bool> sign_character_odd;    // P1 only: parity of n-1
};

LeviParameter levi_restriction(const HCDatum& datum);

/// Dimension tables for the two long exact cohomology sequences of
///   0 -> D+ (+) D- -> Ind(pi, s0)  -> J        -> 0   (left: D, I+, J)
///   0 -> J         -> Ind(pi, -s0) -> D+ (+) D- -> 0   (right: J, I-, D)
/// in degrees d-1, d, d+1. The values are fixed data, not recomputed.
struct CohTable {
  int d = 0;
  std::array<std::array<int, 3>, 3> left_rows{};
  std::array<std::array<int, 3>, 3> right_rows{};
  int h_d_d_plus = 1;
  int h_d_d_minus = 1;
  int nonvanishing_image_degree = 0;  // d - 1
  int vanishing_image_degree = 0;     // d + 1
  std::array<int, 3> degrees() const { return {d - 1, d, d + 1}; }
};

CohTable cohomology_table(int d);

/// Euler characteristic zero and realizability of each table as an exact
/// sequence of vector spaces (greedy rank assignment).
bool les_consistency(const CohTable& table);
/// Same check for a single table whose rows are (A, B, C) of 0->A->B->C->0.
bool exact_sequence_realizable(const std::array<std::array<int, 3>, 3>& rows);

struct DSPackage {
  HCDatum datum;
  Rational s0;
  Weight blattner_plus;
  Weight blattner_minus;
  Weight j_lowest_ktype;
  Weight e_highest_weight;
  LeviParameter levi;
  int d = 0;
  int m = 1;
  CohTable coh_table;
};

/// Throws InvariantViolation if a derived parameter fails its check.
DSPackage derive_package(const HCDatum& datum);

/// Every valid datum of the given rank with max |lambda_i| <= weight_bound,
/// ordered by (eps, alpha0 index, Lambda). RangeError for weight_bound < 1.
std::vector<HCDatum> enumerate_data(std::size_t rank, long weight_bound);

}  // namespace rescoh
