#include "rescoh/setup.hpp"

#include <algorithm>
#include <functional>

#include "rescoh/error.hpp"
#include "rescoh/realform.hpp"
#include "rescoh/root_spec.hpp"

namespace rescoh {

std::string to_string(ParabolicClass c) { return c == ParabolicClass::P1 ? "P1" : "P2"; }

ParabolicClass parse_parabolic_class(const std::string& text) {
  if (text == "P1" || text == "p1") return ParabolicClass::P1;
  if (text == "P2" || text == "p2") return ParabolicClass::P2;
  throw ParseError("unknown parabolic class '" + text + "' (expected P1 or P2)", 0);
}

struct DatumFactory {
  static HCDatum make(std::size_t rank, const SignChamber& eps, const Weight& alpha0, const Weight& lambda,
                      ParabolicClass cls, std::size_t index) {
    HCDatum d;
    d.rank_ = rank;
    d.eps_ = eps;
    d.alpha0_ = alpha0;
    d.lambda_ = lambda;
    d.class_ = cls;
    d.index_ = index;
    return d;
  }
};

ValidationResult validate_datum(std::size_t rank, const SignChamber& eps, const Weight& alpha0, const Weight& lambda) {
  ValidationResult result;
  auto fail = [&](std::string cond, std::string msg) { result.violations.push_back({std::move(cond), std::move(msg)}); };

  if (rank == 0) {
    fail("shape", "rank must be at least 1");
    return result;
  }
  if (eps.rank() != rank) fail("shape", "chamber has " + std::to_string(eps.rank()) + " signs, expected " + std::to_string(rank));
  if (alpha0.rank() != rank) fail("shape", "alpha0 has rank " + std::to_string(alpha0.rank()) + ", expected " + std::to_string(rank));
  if (lambda.rank() != rank) fail("shape", "lambda has " + std::to_string(lambda.rank()) + " entries, expected " + std::to_string(rank));
  if (!result.violations.empty()) return result;

  const RootSystem rs = build_root_system(rank);

  for (std::size_t i = 0; i < rank; ++i)
    if (!is_integer(lambda[i]))
      fail("integrality", "lambda_" + std::to_string(i + 1) + " = " + to_string(lambda[i]) + " is not an integer");

  const auto simple = simple_roots(rs, eps);
  for (const auto& a : simple) {
    const Rational p = coroot_pairing(lambda, a);
    if (p <= 0)
      fail("dominance", "coroot pairing of lambda with simple root " + format_root(a) + " is " + to_string(p) +
                            ", need > 0 (lambda is not dominant regular for chamber " + eps.to_string() + ")");
  }

  std::optional<std::size_t> index;
  if (!rs.contains(alpha0)) {
    fail("alpha0", "alpha0 " + alpha0.to_string() + " is not a root of " + rs.type_label());
  } else if (is_compact_root(alpha0)) {
    fail("alpha0", "alpha0 " + format_root(alpha0) + " is compact");
  } else {
    auto it = std::find(simple.begin(), simple.end(), alpha0);
    if (it == simple.end())
      fail("alpha0", "alpha0 " + format_root(alpha0) + " is not a simple root of chamber " + eps.to_string());
    else
      index = static_cast<std::size_t>(it - simple.begin());
  }

  if (rs.contains(alpha0)) {
    const Rational p = coroot_pairing(lambda, alpha0);
    if (p != 1) fail("pairing", "coroot pairing " + to_string(p) + " ≠ 1");
  }

  if (!result.violations.empty()) return result;
  const ParabolicClass cls = *index + 1 == rank ? ParabolicClass::P1 : ParabolicClass::P2;
  result.datum = DatumFactory::make(rank, eps, alpha0, lambda, cls, *index);
  return result;
}

std::vector<Weight> levi_roots(const HCDatum& datum) {
  std::vector<Weight> out;
  const RootSystem rs = build_root_system(datum.rank());
  for (const auto& b : rs.roots())
    if (inner_product(b, datum.alpha0()) == 0) out.push_back(b);
  return out;
}

std::map<Weight, Rational> nilradical_levels(const HCDatum& datum) {
  std::map<Weight, Rational> out;
  const RootSystem rs = build_root_system(datum.rank());
  for (const auto& b : rs.roots()) {
    Rational p = coroot_pairing(b, datum.alpha0());
    if (p > 0) out.emplace(b, std::move(p));
  }
  return out;
}

Rational s0_for_root(std::size_t rank, const Weight& alpha) {
  Rational total = 0;
  const RootSystem rs = build_root_system(rank);
  for (const auto& b : rs.roots()) {
    const Rational p = coroot_pairing(b, alpha);
    if (p > 0) total += p;
  }
  return 1 / total;
}

Rational compute_s0(const HCDatum& datum) { return s0_for_root(datum.rank(), datum.alpha0()); }

LeviParameter levi_restriction(const HCDatum& datum) {
  const std::size_t n = datum.rank();
  const Weight& lam = datum.lambda();
  LeviParameter p;
  p.parabolic_class = datum.parabolic_class();
  std::vector<Rational> sp;
  if (p.parabolic_class == ParabolicClass::P2) {
    const std::size_t i0 = datum.alpha0_index();
    p.gl_weight = 2 * abs(lam[i0 + 1]).get_num().get_si() + 1;
    for (std::size_t i = 0; i < n; ++i)
      if (i != i0 && i != i0 + 1) sp.push_back(lam[i]);
    if (*p.gl_weight < 3 || *p.gl_weight % 2 == 0)
      throw InvariantViolation("GL_2 weight " + std::to_string(*p.gl_weight) + " must be odd and at least 3");
    for (std::size_t k = 0; k < sp.size(); ++k) {
      if (sp[k] == 0) throw InvariantViolation("Sp parameter has a zero entry");
      if (k > 0 && abs(sp[k - 1]) <= abs(sp[k])) throw InvariantViolation("Sp parameter is not strictly decreasing in |.|");
    }
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) sp.push_back(lam[i]);
    p.sign_character_odd = (n - 1) % 2 == 1;
    if (!sp.empty() && abs(sp.back()) < 2)
      throw InvariantViolation("P1 restriction needs |lambda_{n-1}| >= 2, got " + to_string(sp.back()));
  }
  p.sp_parameter = Weight(std::move(sp));
  return p;
}

CohTable cohomology_table(int d) {
  CohTable t;
  t.d = d;
  t.left_rows = {{{0, 0, 1}, {2, 1, 0}, {0, 1, 1}}};
  t.right_rows = {{{1, 1, 0}, {0, 1, 2}, {1, 0, 0}}};
  t.nonvanishing_image_degree = d - 1;
  t.vanishing_image_degree = d + 1;
  return t;
}

bool exact_sequence_realizable(const std::array<std::array<int, 3>, 3>& rows) {
  std::vector<int> dims;
  for (const auto& row : rows) {
    // Long exact sequence order: H^q(A) -> H^q(B) -> H^q(C) -> H^{q+1}(A).
    dims.push_back(row[0]);
    dims.push_back(row[1]);
    dims.push_back(row[2]);
  }
  int euler = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 0) return false;
    euler += (i % 2 == 0 ? 1 : -1) * dims[i];
  }
  if (euler != 0) return false;
  // The image of V_i -> V_{i+1} has rank dim V_i - rank(V_{i-1} -> V_i).
  int incoming = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const int outgoing = dims[i] - incoming;
    if (outgoing < 0) return false;
    const int next = i + 1 < dims.size() ? dims[i + 1] : 0;
    if (outgoing > next) return false;
    incoming = outgoing;
  }
  return incoming == 0;
}

bool les_consistency(const CohTable& table) {
  return exact_sequence_realizable(table.left_rows) && exact_sequence_realizable(table.right_rows);
}

DSPackage derive_package(const HCDatum& datum) {
  const std::size_t n = datum.rank();
  const RootSystem rs = build_root_system(n);
  const SignChamber& eps = datum.eps();
  const Weight& lam = datum.lambda();
  const Weight& a0 = datum.alpha0();

  DSPackage pkg{datum, compute_s0(datum), {}, {}, {}, {}, levi_restriction(datum), middle_degree(n), 1, {}};
  pkg.blattner_plus = lam - rho_c(n, eps) + rho_n(n, eps);
  pkg.blattner_minus = pkg.blattner_plus - Rational(2) * a0;
  pkg.j_lowest_ktype = pkg.blattner_plus - a0;
  pkg.e_highest_weight = lam - rho(rs, eps);
  pkg.coh_table = cohomology_table(pkg.d);

  if (pkg.s0 <= 0) throw InvariantViolation("s0 = " + to_string(pkg.s0) + " is not positive");
  if (reflect(lam, a0) != lam - a0) throw InvariantViolation("reflection of Lambda in alpha0 is not Lambda - alpha0");
  if (!pkg.e_highest_weight.is_integral() || !is_dominant(rs, eps, pkg.e_highest_weight))
    throw InvariantViolation("Lambda - rho = " + pkg.e_highest_weight.to_string() + " is not dominant integral");
  for (const Weight* w : {&pkg.blattner_plus, &pkg.blattner_minus, &pkg.j_lowest_ktype, &pkg.e_highest_weight})
    if (!is_compact_dominant(n, eps, *w)) throw InvariantViolation(w->to_string() + " is not K-dominant");
  if (!les_consistency(pkg.coh_table)) throw InvariantViolation("cohomology tables are not exact");
  return pkg;
}

std::vector<HCDatum> enumerate_data(std::size_t rank, long weight_bound) {
  if (weight_bound < 1) throw RangeError("weight bound must be at least 1");
  if (rank == 0) throw InvalidRankError("rank must be at least 1");
  std::vector<HCDatum> out;

  // Strictly decreasing magnitudes bound >= m_1 > ... > m_n >= 1.
  std::vector<std::vector<long>> magnitudes;
  std::vector<long> current;
  std::function<void(long)> choose = [&](long below) {
    if (current.size() == rank) {
      magnitudes.push_back(current);
      return;
    }
    for (long m = below - 1; m >= static_cast<long>(rank - current.size()); --m) {
      current.push_back(m);
      choose(m);
      current.pop_back();
    }
  };
  choose(weight_bound + 1);

  for (const auto& eps : SignChamber::all(rank)) {
    for (const auto& a0 : noncompact_simple_roots(rank, eps)) {
      std::vector<HCDatum> batch;
      for (const auto& mags : magnitudes) {
        Weight lam(rank);
        for (std::size_t i = 0; i < rank; ++i) lam[i] = eps[i] * mags[i];
        auto res = validate_datum(rank, eps, a0, lam);
        if (res.ok()) batch.push_back(std::move(*res.datum));
      }
      std::sort(batch.begin(), batch.end(), [](const HCDatum& x, const HCDatum& y) { return x.lambda() < y.lambda(); });
      out.insert(out.end(), batch.begin(), batch.end());
    }
  }
  return out;
}

}  // namespace rescoh
