#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rescoh/error.hpp"
#include "rescoh/laurent_germ.hpp"
#include "rescoh/polynomial.hpp"
#include "rescoh/rational.hpp"

namespace rescoh {

/// Finite combination sum_k c_k * phi^(2k) of flat sections of the SL_2
/// principal series, keyed by the even weight 2k. Exact zero coefficients
/// are dropped; germs known only to some precision are kept even when no
/// coefficient is known, since they may hide a nonzero tail.
template <class Coeff>
class WeightSection {
 public:
  WeightSection() = default;

  static WeightSection basis(int weight, Coeff c) {
    WeightSection v;
    v.add(weight, std::move(c));
    return v;
  }

  const std::map<int, Coeff>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  /// The coefficient at `weight`, or nullopt when absent.
  std::optional<Coeff> at(int weight) const {
    auto it = entries_.find(weight);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void add(int weight, Coeff c);

  friend WeightSection operator+(WeightSection a, const WeightSection& b) {
    for (const auto& [w, c] : b.entries_) a.add(w, c);
    return a;
  }
  friend WeightSection operator-(WeightSection a, const WeightSection& b) {
    for (const auto& [w, c] : b.entries_) a.add(w, -c);
    return a;
  }
  friend bool operator==(const WeightSection& a, const WeightSection& b) { return a.entries_ == b.entries_; }

 private:
  std::map<int, Coeff> entries_;
};

inline bool is_exact_zero(const RationalFunction& c) { return c.is_zero(); }
inline bool is_exact_zero(const LaurentGerm& c) { return c.is_zero() && c.is_exact(); }

template <class Coeff>
void WeightSection<Coeff>::add(int weight, Coeff c) {
  if (weight % 2 != 0) throw DomainError("principal series weights are even, got " + std::to_string(weight));
  auto it = entries_.find(weight);
  if (it == entries_.end()) {
    if (!is_exact_zero(c)) entries_.emplace(weight, std::move(c));
    return;
  }
  it->second += c;
  if (is_exact_zero(it->second)) entries_.erase(it);
}

/// Coefficients in Q(s).
using PSElement = WeightSection<RationalFunction>;
/// Coefficients are germs at a base point, each carrying values in Q(r).
using GermSection = WeightSection<LaurentGerm>;

/// phi^(2k) with coefficient 1.
PSElement flat_section(int weight);

/// The induction parameter at which X_+ and X_- act, as a function of s:
/// s itself, -s after an intertwining operator, or a specialization.
using Parameter = RationalFunction;

/// H phi^(2k) = 2k phi^(2k).
PSElement act_h(const PSElement& v);
/// X_+- phi^(2k)_p = (p + 1/2 +- k) phi^(2k +- 2)_p.
PSElement act_raise(const PSElement& v, const Parameter& p = Parameter::variable());
PSElement act_lower(const PSElement& v, const Parameter& p = Parameter::variable());

GermSection act_h(const GermSection& v);
GermSection act_raise(const GermSection& v, const Parameter& p);
GermSection act_lower(const GermSection& v, const Parameter& p);

/// Scalar by which 1/2 H^2 + X_+X_- + X_-X_+ acts on a nonzero section of a
/// single weight. DomainError otherwise.
RationalFunction casimir(const PSElement& v);

/// c_k(s) = prod_{j < |k|} (1/2 + j - s)/(1/2 + j + s).
RationalFunction intertwining_coefficient(int k);

/// M(s) phi^(2k)_s = a(s) c_k(s) phi^(2k)_{-s}; the result lives at parameter -s.
PSElement intertwine(const PSElement& v, const RationalFunction& normalization = RationalFunction(1));

/// Germ expansion of every coefficient at `base`.
GermSection expand_section(const PSElement& v, const Rational& base, int depth = kDefaultGermDepth);

/// Relative 1-cochain, determined by its values on X_+ and X_-.
struct Cochain1 {
  GermSection on_raise;  // c(X_+), weight 2
  GermSection on_lower;  // c(X_-), weight -2
};

/// (d_0 v)(X) = X v. v must be K-invariant (weight 0), else CochainError.
Cochain1 boundary_d0(const GermSection& v, const Parameter& p);
/// (d_1 c)(X_+ ^ X_-) = X_+ c(X_-) - X_- c(X_+). CochainError unless c(X_+)
/// has weight 2 and c(X_-) weight -2.
GermSection boundary_d1(const Cochain1& c, const Parameter& p);

/// r t^-1 + O(1) at s = 1/2: the zeta quotient germ with formal residue r.
LaurentGerm zeta_quotient_germ(int depth = kDefaultGermDepth);

/// Constant term of d_1 c for the cochain c(X_+-) = a_+- phi^(+-2)_{1/2}:
/// the direct terms at s = 1/2 plus the limit at s -> 1/2 of the zeta germ
/// times d_1 of the intertwined cochain. Coefficients are in Q(r); the
/// section lives at parameter -1/2. PrecisionExhausted when `depth` is too
/// small to determine the limit.
PSElement constant_term_d1c(const Rational& a_plus, const Rational& a_minus,
                            const RationalFunction& normalization = RationalFunction(1),
                            int depth = kDefaultGermDepth);

struct Sl2Options {
  Rational a_plus = -1;
  Rational a_minus = 1;
  RationalFunction normalization = RationalFunction(1);
  int depth = kDefaultGermDepth;
};

enum class CheckStatus { Pass, Fail, Degenerate };
std::string to_string(CheckStatus s);

struct Sl2Check {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
  std::optional<std::string> error;
};

struct Sl2Report {
  std::vector<Sl2Check> checks;
  /// Coefficient of phi^(0)_{-1/2} in the constant term, when computed.
  std::optional<RationalFunction> constant_term_coefficient;
  bool degenerate = false;
  /// The degree-2 class is shown to be a coboundary.
  bool coboundary_established = false;
  /// No check failed (degenerate counts as not failed).
  bool ok() const;
};

Sl2Report verify_baby_theorem(const Sl2Options& options = {});

}  // namespace rescoh
