#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "rescoh/rational.hpp"

namespace rescoh {

/// Exact weight in the e_i basis.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, Rational(0)) {}
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<long> coords);

  /// The basis vector e_{index+1} scaled by `scale`.
  static Weight basis(std::size_t rank, std::size_t index, long scale = 1);

  std::size_t rank() const noexcept { return coords_.size(); }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_.at(i); }
  Rational& operator[](std::size_t i) { return coords_.at(i); }
  bool is_zero() const;
  bool is_integral() const;

  Weight operator-() const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& c);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& c, Weight w) { return w *= c; }
  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  /// Lexicographic on coordinates (rank first); used for ordered containers.
  friend bool operator<(const Weight& a, const Weight& b);

  /// "(3,-2)".
  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

/// Sign vector epsilon in {+1,-1}^rank; acts on weights coordinatewise.
class SignChamber {
 public:
  SignChamber() = default;
  explicit SignChamber(std::vector<int> signs);
  static SignChamber identity(std::size_t rank);
  /// From "+-+". Throws ParseError.
  static SignChamber parse(const std::string& text);
  /// All 2^rank chambers, "+" before "-" with the first coordinate most
  /// significant.
  static std::vector<SignChamber> all(std::size_t rank);

  std::size_t rank() const noexcept { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_.at(i); }
  const std::vector<int>& signs() const noexcept { return signs_; }
  Weight apply(const Weight& w) const;
  SignChamber operator-() const;
  friend bool operator==(const SignChamber&, const SignChamber&) = default;
  friend auto operator<=>(const SignChamber& a, const SignChamber& b) {
    // '+' (1) sorts before '-' (-1).
    for (std::size_t i = 0; i < a.signs_.size() && i < b.signs_.size(); ++i)
      if (a.signs_[i] != b.signs_[i]) return a.signs_[i] > b.signs_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.signs_.size() <=> b.signs_.size();
  }
  std::string to_string() const;

 private:
  std::vector<int> signs_;
};

/// Root system of type C_n: {+-(e_i+e_j), +-(e_i-e_j) : i<j} u {+-2e_i}.
/// Rank 1 degenerates to {+-2e_1}, the SL_2 case.
class RootSystem {
 public:
  std::size_t rank() const noexcept { return rank_; }
  std::string type_label() const { return "C" + std::to_string(rank_); }
  const std::vector<Weight>& roots() const noexcept { return roots_; }
  bool contains(const Weight& w) const;
  /// The standard positive system: e_i - e_j, e_i + e_j (i<j) and 2e_i.
  const std::vector<Weight>& standard_positive_roots() const noexcept { return positive_; }

 private:
  friend RootSystem build_root_system(std::size_t rank);
  std::size_t rank_ = 0;
  std::vector<Weight> roots_;
  std::vector<Weight> positive_;
};

/// Throws InvalidRankError for rank 0.
RootSystem build_root_system(std::size_t rank);

/// Standard Euclidean form sum a_i b_i. DimensionError on rank mismatch.
Rational inner_product(const Weight& a, const Weight& b);

/// True when w has the shape +-e_i+-e_j (i != j) or +-2e_i.
bool is_cn_root(const Weight& w);

/// 2<w,beta>/<beta,beta>. InvalidRootError unless beta is a C_n root.
Rational coroot_pairing(const Weight& w, const Weight& beta);

/// w - <w,beta^vee> beta.
Weight reflect(const Weight& w, const Weight& beta);

/// eps applied to the standard positive system; rank^2 roots.
std::vector<Weight> chamber_positive_roots(const RootSystem& rs, const SignChamber& eps);

/// eps applied to e_1-e_2, ..., e_{n-1}-e_n, 2e_n, in that order.
std::vector<Weight> simple_roots(const RootSystem& rs, const SignChamber& eps);

/// Half-sum of the chamber's positive roots.
Weight rho(const RootSystem& rs, const SignChamber& eps);

/// Integral, and strictly positive coroot pairing with every simple root.
bool is_dominant_regular_integral(const RootSystem& rs, const SignChamber& eps, const Weight& w);

/// Nonnegative coroot pairing with every simple root.
bool is_dominant(const RootSystem& rs, const SignChamber& eps, const Weight& w);

/// Coefficients of w in the standard simple roots e_1-e_2, ..., 2e_n.
std::vector<Rational> standard_simple_coordinates(const Weight& w);

/// Coroot 2 beta/<beta,beta>.
Weight coroot(const Weight& beta);

}  // namespace rescoh
