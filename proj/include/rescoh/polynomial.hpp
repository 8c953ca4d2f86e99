#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rescoh/rational.hpp"

namespace rescoh {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has no coefficients; otherwise the top one is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT

  /// The monomial x.
  static Polynomial x();
  /// c0 + c1*x.
  static Polynomial linear(const Rational& c0, const Rational& c1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& at) const;
  /// p(a*x + b).
  Polynomial substitute_linear(const Rational& a, const Rational& b) const;
  Polynomial derivative() const;
  /// Multiplicity of `root` as a zero of p; p must be nonzero.
  int root_multiplicity(const Rational& root) const;
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: returns (quotient, remainder).
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static Polynomial gcd(Polynomial a, Polynomial b);

  /// e.g. "2*s^2 - 1/2". Terms in decreasing degree.
  std::string to_string(std::string_view var = "s") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Reduced quotient of polynomials over Q with a monic denominator.
/// The same type serves as Q(s) for the principal-series coefficients and
/// as Q(r) for the germ coefficients; only the printed variable differs.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(Polynomial num, Polynomial den);
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(c), den_(1) {}         // NOLINT
  RationalFunction(long c) : num_(c), den_(1) {}                    // NOLINT

  static RationalFunction variable() { return RationalFunction(Polynomial::x()); }

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

  /// Throws DomainError at a pole.
  Rational evaluate(const Rational& at) const;
  /// f(a*x + b).
  RationalFunction substitute_linear(const Rational& a, const Rational& b) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "p" for polynomials, otherwise "(p)/(q)".
  std::string to_string(std::string_view var = "s") const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

/// Order of f at `point`: positive for a zero, negative for a pole.
/// Throws DomainError for the zero function.
int vanishing_order(const RationalFunction& f, const Rational& point);

}  // namespace rescoh
