#include "rescoh/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "rescoh/error.hpp"

namespace rescoh {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

Polynomial Polynomial::x() { return Polynomial(std::vector<Rational>{0, 1}); }

Polynomial Polynomial::linear(const Rational& c0, const Rational& c1) {
  return Polynomial(std::vector<Rational>{c0, c1});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::substitute_linear(const Rational& a, const Rational& b) const {
  // Horner with polynomial accumulator.
  Polynomial inner = linear(b, a);
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  return Polynomial(std::move(d));
}

int Polynomial::root_multiplicity(const Rational& root) const {
  if (is_zero()) throw DomainError("root multiplicity of the zero polynomial");
  Polynomial shifted = substitute_linear(1, root);
  int m = 0;
  while (shifted.coeffs_[static_cast<std::size_t>(m)] == 0) ++m;
  return m;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  const Rational lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  Polynomial rem = a;
  std::vector<Rational> quot(static_cast<std::size_t>(std::max(0, a.degree() - b.degree() + 1)), Rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Rational factor = rem.leading() / b.leading();
    quot[static_cast<std::size_t>(shift)] = factor;
    std::vector<Rational> sub(static_cast<std::size_t>(shift), Rational(0));
    for (const auto& c : b.coeffs_) sub.push_back(c * factor);
    rem -= Polynomial(std::move(sub));
  }
  return {Polynomial(std::move(quot)), rem};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << rescoh::to_string(mag);
      continue;
    }
    if (mag != 1) os << rescoh::to_string(mag) << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Polynomial::divmod(num_, g).first;
    den_ = Polynomial::divmod(den_, g).first;
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ *= Polynomial(Rational(1 / lead));
    den_ *= Polynomial(Rational(1 / lead));
  }
}

Rational RationalFunction::evaluate(const Rational& at) const {
  const Rational d = den_.evaluate(at);
  if (d == 0) throw DomainError("evaluation at a pole (" + rescoh::to_string(at) + ")");
  return num_.evaluate(at) / d;
}

RationalFunction RationalFunction::substitute_linear(const Rational& a, const Rational& b) const {
  return RationalFunction(num_.substitute_linear(a, b), den_.substitute_linear(a, b));
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DomainError("rational function division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string RationalFunction::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.to_string(var);
  const bool simple_num = num_.degree() <= 0 || (num_.degree() == 1 && num_.coeff(0) == 0);
  std::string n = num_.to_string(var);
  if (!simple_num) n = "(" + n + ")";
  return n + "/(" + den_.to_string(var) + ")";
}

int vanishing_order(const RationalFunction& f, const Rational& point) {
  if (f.is_zero()) throw DomainError("vanishing order of the zero function");
  return f.numerator().root_multiplicity(point) - f.denominator().root_multiplicity(point);
}

}  // namespace rescoh
