#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rescoh/rational.hpp"
#include "rescoh/setup.hpp"

namespace rescoh {

/// coeff * s + constant.
struct LinearForm {
  Rational coeff;
  Rational constant;

  Rational evaluate(const Rational& s) const { return coeff * s + constant; }
  /// "3*s", "6*s + 1".
  std::string to_string() const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

struct LevelBucket {
  long level = 0;
  long dim = 0;
  std::optional<std::string> label;
  friend bool operator==(const LevelBucket&, const LevelBucket&) = default;
};

struct LShape {
  ParabolicClass parabolic_class = ParabolicClass::P1;
  std::size_t rank = 0;
  std::vector<LevelBucket> buckets;  // increasing level
  Rational s0;
  std::vector<LinearForm> numerator_args;    // level * s / (2 s0)
  std::vector<LinearForm> denominator_args;  // numerator + 1
};

/// Coroots of the Sp nilradical of the standard parabolic, written as type B
/// roots (2e_i -> e_i), bucketed by their raw pairing with e1+e2 (P2) or 2e1
/// (P1). RangeError when the rank is too small for the class.
std::vector<LevelBucket> dual_nilradical_buckets(std::size_t rank, ParabolicClass cls);

/// The dual nilradical coroots themselves, in the same coordinates.
std::vector<Weight> dual_nilradical_coroots(std::size_t rank, ParabolicClass cls);

LShape l_shape(std::size_t rank, ParabolicClass cls);
LShape l_shape(const HCDatum& datum);

/// sum over buckets of level * dim.
Rational level_weighted_sum(const LShape& shape);

struct PoleHypotheses {
  bool central_character_trivial = true;
  bool temperedness_assumed = true;
  bool central_value_nonzero = true;
};

enum class PoleVerdict { Pole, NoPole, Unknown };
std::string to_string(PoleVerdict v);

struct PoleCertificate {
  PoleVerdict verdict = PoleVerdict::Unknown;
  std::vector<std::string> reasons;
};

/// Rule-based and conservative: only the inferences available for the P2
/// family are encoded, everything else is unknown.
PoleCertificate pole_certificate(const LShape& shape, const PoleHypotheses& hyp);

}  // namespace rescoh
