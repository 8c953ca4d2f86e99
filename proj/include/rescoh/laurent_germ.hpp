#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rescoh/polynomial.hpp"
#include "rescoh/rational.hpp"

namespace rescoh {

inline constexpr int kDefaultGermDepth = 4;

/// Truncated Laurent expansion in t = s - base_point with coefficients in
/// Q(r), r being a formal symbol (carried as a RationalFunction in r).
///
/// coefficients()[i] multiplies t^(min_order() + i). A germ is either exact
/// (finitely many terms, nothing omitted) or known modulo t^precision, in
/// which case every exponent below `precision` is determined. The leading
/// stored coefficient is nonzero; a germ with no stored coefficients is zero
/// to the known precision.
///
/// `depth` is the absolute truncation used whenever a rational function in s
/// has to be expanded at the base point (see expand()).
class LaurentGerm {
 public:
  LaurentGerm(Rational base_point, int min_order, std::vector<RationalFunction> coefficients,
              std::optional<int> precision, int depth = kDefaultGermDepth);

  static LaurentGerm zero(const Rational& base_point, int depth = kDefaultGermDepth);
  static LaurentGerm constant(const Rational& base_point, const RationalFunction& c,
                              int depth = kDefaultGermDepth);
  /// Expansion of f(s) at `base_point`. Exact when the expansion terminates,
  /// otherwise known modulo t^depth.
  static LaurentGerm expand(const RationalFunction& f, const Rational& base_point,
                            int depth = kDefaultGermDepth);

  const Rational& base_point() const noexcept { return base_; }
  int min_order() const noexcept { return valuation_; }
  const std::vector<RationalFunction>& coefficients() const noexcept { return coeffs_; }
  const std::optional<int>& precision() const noexcept { return precision_; }
  int depth() const noexcept { return depth_; }
  bool is_exact() const noexcept { return !precision_.has_value(); }
  /// No nonzero coefficient is known.
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of t^exponent. PrecisionExhausted past the known range.
  RationalFunction coefficient(int exponent) const;
  /// Order of vanishing at the base point (negative for poles).
  int order() const;
  /// lim_{s -> base} of the germ. DomainError on a pole.
  RationalFunction value_at_base() const;

  LaurentGerm operator-() const;
  LaurentGerm& operator+=(const LaurentGerm& o);
  LaurentGerm& operator-=(const LaurentGerm& o) { return *this += -o; }
  friend LaurentGerm operator+(LaurentGerm a, const LaurentGerm& b) { return a += b; }
  friend LaurentGerm operator-(LaurentGerm a, const LaurentGerm& b) { return a -= b; }
  friend LaurentGerm operator*(const LaurentGerm& a, const LaurentGerm& b);
  LaurentGerm scaled(const RationalFunction& c) const;
  /// Product with f(s) expanded at the base point to this germ's depth.
  LaurentGerm multiply_by(const RationalFunction& f) const;

  friend bool operator==(const LaurentGerm& a, const LaurentGerm& b);

  /// e.g. "r*t^-1 + O(1)" with t = s - base.
  std::string to_string() const;

 private:
  void canonicalize();
  Rational base_;
  int valuation_;
  std::vector<RationalFunction> coeffs_;
  std::optional<int> precision_;
  int depth_;
};

}  // namespace rescoh
