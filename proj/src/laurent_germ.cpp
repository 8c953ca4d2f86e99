#include "rescoh/laurent_germ.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "rescoh/error.hpp"

namespace rescoh {
namespace {

constexpr long kUnbounded = std::numeric_limits<int>::max();

long bound_of(const std::optional<int>& p) { return p ? *p : kUnbounded; }

std::optional<int> to_precision(long bound) {
  if (bound >= kUnbounded) return std::nullopt;
  return static_cast<int>(bound);
}

void require_same_base(const LaurentGerm& a, const LaurentGerm& b) {
  if (a.base_point() != b.base_point())
    throw DomainError("germs at different base points (" + to_string(a.base_point()) + " vs " +
                      to_string(b.base_point()) + ")");
}

// Lowest index with a nonzero coefficient; p must be nonzero.
int lowest_term(const Polynomial& p) {
  int k = 0;
  while (p.coeff(k) == 0) ++k;
  return k;
}

Polynomial drop_low_terms(const Polynomial& p, int k) {
  std::vector<Rational> c(p.coeffs().begin() + k, p.coeffs().end());
  return Polynomial(std::move(c));
}

}  // namespace

LaurentGerm::LaurentGerm(Rational base_point, int min_order, std::vector<RationalFunction> coefficients,
                         std::optional<int> precision, int depth)
    : base_(std::move(base_point)),
      valuation_(min_order),
      coeffs_(std::move(coefficients)),
      precision_(precision),
      depth_(depth) {
  if (depth_ < 0) throw RangeError("germ depth must be nonnegative");
  canonicalize();
}

LaurentGerm LaurentGerm::zero(const Rational& base_point, int depth) {
  return LaurentGerm(base_point, 0, {}, std::nullopt, depth);
}

LaurentGerm LaurentGerm::constant(const Rational& base_point, const RationalFunction& c, int depth) {
  return LaurentGerm(base_point, 0, {c}, std::nullopt, depth);
}

void LaurentGerm::canonicalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
  valuation_ += static_cast<int>(lead);
  if (precision_) {
    const long known = static_cast<long>(*precision_) - valuation_;
    if (known <= 0) {
      coeffs_.clear();
    } else if (static_cast<long>(coeffs_.size()) > known) {
      coeffs_.resize(static_cast<std::size_t>(known));
    }
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) valuation_ = precision_ ? *precision_ : 0;
}

LaurentGerm LaurentGerm::expand(const RationalFunction& f, const Rational& base_point, int depth) {
  if (f.is_zero()) return zero(base_point, depth);
  const Polynomial num = f.numerator().substitute_linear(1, base_point);
  const Polynomial den = f.denominator().substitute_linear(1, base_point);
  const int a = lowest_term(num);
  const int b = lowest_term(den);
  const Polynomial unit_num = drop_low_terms(num, a);
  const Polynomial unit_den = drop_low_terms(den, b);
  const int valuation = a - b;

  if (unit_den.degree() == 0) {
    std::vector<RationalFunction> c;
    for (const auto& q : unit_num.coeffs()) c.emplace_back(q / unit_den.coeff(0));
    return LaurentGerm(base_point, valuation, std::move(c), std::nullopt, depth);
  }

  const int count = depth - valuation;
  if (count <= 0) return LaurentGerm(base_point, depth, {}, depth, depth);
  // Power series division unit_num / unit_den, first `count` terms.
  std::vector<Rational> q(static_cast<std::size_t>(count), Rational(0));
  const Rational d0 = unit_den.coeff(0);
  for (int k = 0; k < count; ++k) {
    Rational acc = unit_num.coeff(k);
    for (int j = 1; j <= k && j <= unit_den.degree(); ++j) acc -= unit_den.coeff(j) * q[static_cast<std::size_t>(k - j)];
    q[static_cast<std::size_t>(k)] = acc / d0;
  }
  std::vector<RationalFunction> c(q.begin(), q.end());
  return LaurentGerm(base_point, valuation, std::move(c), depth, depth);
}

RationalFunction LaurentGerm::coefficient(int exponent) const {
  if (static_cast<long>(exponent) >= bound_of(precision_))
    throw PrecisionExhausted("germ coefficient of t^" + std::to_string(exponent) + " is beyond the known precision O(t^" +
                             std::to_string(*precision_) + "); increase the germ depth (currently " +
                             std::to_string(depth_) + ")");
  const long idx = static_cast<long>(exponent) - valuation_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return RationalFunction();
  return coeffs_[static_cast<std::size_t>(idx)];
}

int LaurentGerm::order() const {
  if (!is_zero()) return valuation_;
  if (is_exact()) throw DomainError("order of the zero germ");
  throw PrecisionExhausted("germ vanishes to the known precision O(t^" + std::to_string(*precision_) +
                           "); order undetermined at depth " + std::to_string(depth_));
}

RationalFunction LaurentGerm::value_at_base() const {
  if (!is_zero() && valuation_ < 0)
    throw DomainError("germ has a pole of order " + std::to_string(-valuation_) + " at s = " + rescoh::to_string(base_));
  return coefficient(0);
}

LaurentGerm LaurentGerm::operator-() const {
  LaurentGerm out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentGerm& LaurentGerm::operator+=(const LaurentGerm& o) {
  require_same_base(*this, o);
  const long prec = std::min(bound_of(precision_), bound_of(o.precision_));
  const int lo = std::min(valuation_, o.valuation_);
  long hi = std::max(valuation_ + static_cast<long>(coeffs_.size()), o.valuation_ + static_cast<long>(o.coeffs_.size()));
  hi = std::min(hi, prec);
  std::vector<RationalFunction> sum;
  for (long e = lo; e < hi; ++e) {
    RationalFunction c;
    const long i = e - valuation_;
    const long j = e - o.valuation_;
    if (i >= 0 && i < static_cast<long>(coeffs_.size())) c += coeffs_[static_cast<std::size_t>(i)];
    if (j >= 0 && j < static_cast<long>(o.coeffs_.size())) c += o.coeffs_[static_cast<std::size_t>(j)];
    sum.push_back(std::move(c));
  }
  valuation_ = lo;
  coeffs_ = std::move(sum);
  precision_ = to_precision(prec);
  depth_ = std::max(depth_, o.depth_);
  canonicalize();
  return *this;
}

LaurentGerm operator*(const LaurentGerm& a, const LaurentGerm& b) {
  require_same_base(a, b);
  const int depth = std::max(a.depth_, b.depth_);
  if ((a.is_zero() && a.is_exact()) || (b.is_zero() && b.is_exact())) return LaurentGerm::zero(a.base_, depth);
  // For an inexact zero, valuation_ already equals its precision bound.
  const long va = a.valuation_;
  const long vb = b.valuation_;
  long prec = kUnbounded;
  if (b.precision_) prec = std::min(prec, va + *b.precision_);
  if (a.precision_) prec = std::min(prec, vb + *a.precision_);
  std::vector<RationalFunction> out;
  if (!a.is_zero() && !b.is_zero()) {
    std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
    if (prec < kUnbounded) len = std::min<std::size_t>(len, static_cast<std::size_t>(std::max(0L, prec - va - vb)));
    out.assign(len, RationalFunction());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentGerm(a.base_, static_cast<int>(va + vb), std::move(out), to_precision(prec), depth);
}

LaurentGerm LaurentGerm::scaled(const RationalFunction& c) const {
  if (c.is_zero()) return zero(base_, depth_);
  LaurentGerm out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

LaurentGerm LaurentGerm::multiply_by(const RationalFunction& f) const { return *this * expand(f, base_, depth_); }

bool operator==(const LaurentGerm& a, const LaurentGerm& b) {
  return a.base_ == b.base_ && a.valuation_ == b.valuation_ && a.coeffs_ == b.coeffs_ && a.precision_ == b.precision_;
}

std::string LaurentGerm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const int e = valuation_ + static_cast<int>(i);
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[i].to_string("r") << ")";
    if (e != 0) os << "*t^" << e;
  }
  if (precision_) {
    if (!first) os << " + ";
    first = false;
    os << "O(t^" << *precision_ << ")";
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace rescoh
