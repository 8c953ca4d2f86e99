#include "rescoh/sl2.hpp"

#include <cstdlib>

namespace rescoh {

namespace {

const Rational kHalf(1, 2);

// p + 1/2 + shift, as a function of s.
RationalFunction shifted(const Parameter& p, const Rational& shift) { return p + RationalFunction(kHalf + shift); }

template <class Coeff, class Scale>
WeightSection<Coeff> shift_weights(const WeightSection<Coeff>& v, int direction, Scale scale) {
  WeightSection<Coeff> out;
  for (const auto& [w, c] : v.entries()) out.add(w + 2 * direction, scale(w, c));
  return out;
}

void require_single_weight(const GermSection& v, int weight, const char* slot) {
  for (const auto& [w, c] : v.entries())
    if (w != weight)
      throw CochainError(std::string(slot) + " has a component of weight " + std::to_string(w) + ", expected " +
                         std::to_string(weight));
}

}  // namespace

PSElement flat_section(int weight) { return PSElement::basis(weight, RationalFunction(1)); }

PSElement act_h(const PSElement& v) {
  return shift_weights(v, 0, [](int w, const RationalFunction& c) { return RationalFunction(w) * c; });
}

PSElement act_raise(const PSElement& v, const Parameter& p) {
  return shift_weights(v, 1, [&](int w, const RationalFunction& c) { return shifted(p, w / 2) * c; });
}

PSElement act_lower(const PSElement& v, const Parameter& p) {
  return shift_weights(v, -1, [&](int w, const RationalFunction& c) { return shifted(p, -w / 2) * c; });
}

GermSection act_h(const GermSection& v) {
  return shift_weights(v, 0, [](int w, const LaurentGerm& c) { return c.scaled(RationalFunction(w)); });
}

GermSection act_raise(const GermSection& v, const Parameter& p) {
  return shift_weights(v, 1, [&](int w, const LaurentGerm& c) { return c.multiply_by(shifted(p, w / 2)); });
}

GermSection act_lower(const GermSection& v, const Parameter& p) {
  return shift_weights(v, -1, [&](int w, const LaurentGerm& c) { return c.multiply_by(shifted(p, -w / 2)); });
}

RationalFunction casimir(const PSElement& v) {
  if (v.is_zero()) throw DomainError("Casimir eigenvalue of the zero section");
  if (v.entries().size() != 1) throw DomainError("Casimir eigenvalue needs a section of a single weight");
  const auto& [weight, coeff] = *v.entries().begin();
  PSElement half_h2;
  const PSElement h2 = act_h(act_h(v));
  for (const auto& [w, c] : h2.entries()) half_h2.add(w, RationalFunction(kHalf) * c);
  const PSElement total = half_h2 + act_raise(act_lower(v)) + act_lower(act_raise(v));
  const auto image = total.at(weight);
  if (total.entries().size() > 1 || (total.entries().size() == 1 && !image))
    throw InvariantViolation("Casimir does not preserve the weight of its argument");
  return image ? *image / coeff : RationalFunction(0);
}

RationalFunction intertwining_coefficient(int k) {
  const RationalFunction s = RationalFunction::variable();
  RationalFunction c(1);
  for (int j = 0; j < std::abs(k); ++j) {
    const RationalFunction shift(kHalf + j);
    c *= (shift - s) / (shift + s);
  }
  return c;
}

PSElement intertwine(const PSElement& v, const RationalFunction& normalization) {
  PSElement out;
  for (const auto& [w, c] : v.entries()) out.add(w, normalization * intertwining_coefficient(w / 2) * c);
  return out;
}

GermSection expand_section(const PSElement& v, const Rational& base, int depth) {
  GermSection out;
  for (const auto& [w, c] : v.entries()) out.add(w, LaurentGerm::expand(c, base, depth));
  return out;
}

Cochain1 boundary_d0(const GermSection& v, const Parameter& p) {
  require_single_weight(v, 0, "d_0 input");
  return {act_raise(v, p), act_lower(v, p)};
}

GermSection boundary_d1(const Cochain1& c, const Parameter& p) {
  require_single_weight(c.on_raise, 2, "c(X_+)");
  require_single_weight(c.on_lower, -2, "c(X_-)");
  return act_raise(c.on_lower, p) - act_lower(c.on_raise, p);
}

LaurentGerm zeta_quotient_germ(int depth) {
  return LaurentGerm(kHalf, -1, {RationalFunction::variable()}, 0, depth);
}

PSElement constant_term_d1c(const Rational& a_plus, const Rational& a_minus, const RationalFunction& normalization,
                            int depth) {
  // Direct terms: d_1 of c at the specialized parameter 1/2.
  const PSElement c_raise = PSElement::basis(2, RationalFunction(a_plus));
  const PSElement c_lower = PSElement::basis(-2, RationalFunction(a_minus));
  const PSElement direct = act_raise(c_lower, RationalFunction(kHalf)) - act_lower(c_raise, RationalFunction(kHalf));

  PSElement out;
  for (const auto& [w, c] : direct.entries()) out.add(w, RationalFunction(c.evaluate(kHalf)));

  // Limit term: intertwine first, expand the coefficients at 1/2, and only
  // then act at parameter -s, so every product runs through the germs.
  const Cochain1 intertwined{expand_section(intertwine(c_raise, normalization), kHalf, depth),
                             expand_section(intertwine(c_lower, normalization), kHalf, depth)};
  const GermSection boundary = boundary_d1(intertwined, -RationalFunction::variable());
  const LaurentGerm zeta = zeta_quotient_germ(depth);
  for (const auto& [w, g] : boundary.entries()) out.add(w, (zeta * g).value_at_base());
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Degenerate: return "degenerate";
  }
  return "fail";
}

bool Sl2Report::ok() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

Sl2Report verify_baby_theorem(const Sl2Options& options) {
  Sl2Report report;

  {
    Sl2Check check{"intertwining_vanishing_order", CheckStatus::Fail, "", std::nullopt};
    try {
      const int plus = vanishing_order(options.normalization * intertwining_coefficient(1), kHalf);
      const int minus = vanishing_order(options.normalization * intertwining_coefficient(-1), kHalf);
      check.detail = "order of a(s)c_1(s) at 1/2 is " + std::to_string(plus) + ", of a(s)c_-1(s) is " +
                     std::to_string(minus);
      if (plus == 1 && minus == 1) check.status = CheckStatus::Pass;
    } catch (const Error& e) {
      check.error = e.what();
    }
    report.checks.push_back(std::move(check));
  }

  {
    Sl2Check check{"boundary_terms_vanish", CheckStatus::Fail, "", std::nullopt};
    const RationalFunction at_half(kHalf);
    const PSElement lowered = act_lower(flat_section(2), at_half);
    const PSElement raised = act_raise(flat_section(-2), at_half);
    check.detail = std::string("X_- phi^(2)_{1/2} ") + (lowered.is_zero() ? "= 0" : "!= 0") + ", X_+ phi^(-2)_{1/2} " +
                   (raised.is_zero() ? "= 0" : "!= 0");
    if (lowered.is_zero() && raised.is_zero()) check.status = CheckStatus::Pass;
    report.checks.push_back(std::move(check));
  }

  {
    Sl2Check check{"constant_term_nonzero", CheckStatus::Fail, "", std::nullopt};
    try {
      const PSElement ct = constant_term_d1c(options.a_plus, options.a_minus, options.normalization, options.depth);
      bool single_line = true;
      for (const auto& [w, c] : ct.entries()) single_line = single_line && w == 0;
      const RationalFunction coeff = ct.at(0).value_or(RationalFunction(0));
      report.constant_term_coefficient = coeff;
      if (!single_line) {
        check.detail = "constant term has components outside weight 0";
      } else if (!coeff.is_zero()) {
        check.status = CheckStatus::Pass;
        check.detail = "constant term is (" + coeff.to_string("r") + ") phi^(0)_{-1/2}";
      } else if (options.a_plus == options.a_minus) {
        check.status = CheckStatus::Degenerate;
        report.degenerate = true;
        check.detail = "a_+ = a_- makes the constant term vanish identically";
      } else {
        check.detail = "constant term vanishes for a_+ != a_-";
      }
    } catch (const PrecisionExhausted& e) {
      check.error = std::string("precision exhausted: ") + e.what();
    } catch (const Error& e) {
      check.error = e.what();
    }
    report.checks.push_back(std::move(check));
  }

  bool all_pass = true;
  for (const auto& c : report.checks) all_pass = all_pass && c.status == CheckStatus::Pass;
  report.coboundary_established = all_pass;
  return report;
}

}  // namespace rescoh
