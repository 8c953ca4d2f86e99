#include "rescoh/lshape.hpp"

#include <map>

#include "rescoh/error.hpp"

namespace rescoh {

std::string LinearForm::to_string() const {
  std::string out;
  if (coeff != 0) out = (coeff == 1 ? std::string() : rescoh::to_string(coeff) + "*") + "s";
  if (constant != 0 || out.empty()) {
    if (out.empty()) return rescoh::to_string(constant);
    out += constant > 0 ? " + " : " - ";
    out += rescoh::to_string(abs(constant));
  }
  return out;
}

namespace {

// Index (0-based) of the simple root removed to form the standard parabolic.
std::size_t removed_simple_root(std::size_t rank, ParabolicClass cls) {
  if (cls == ParabolicClass::P2) {
    if (rank < 2) throw RangeError("P2 needs rank at least 2, got " + std::to_string(rank));
    return 1;
  }
  if (rank < 1) throw InvalidRankError("rank must be at least 1");
  return 0;
}

Weight distinguished_dual_root(std::size_t rank, ParabolicClass cls) {
  if (cls == ParabolicClass::P2) return Weight::basis(rank, 0) + Weight::basis(rank, 1);
  return Weight::basis(rank, 0, 2);
}

std::string bucket_label(std::size_t rank, ParabolicClass cls, long level) {
  const auto n = static_cast<long>(rank);
  if (cls == ParabolicClass::P1) return "std_{SO_" + std::to_string(2 * n - 1) + "}";
  if (level == 1) return "std_{GL_2}⊠std_{SO_" + std::to_string(2 * n - 3) + "}";
  return "det⊠1";
}

}  // namespace

std::vector<Weight> dual_nilradical_coroots(std::size_t rank, ParabolicClass cls) {
  const std::size_t r = removed_simple_root(rank, cls);
  std::vector<Weight> out;
  const RootSystem rs = build_root_system(rank);
  for (const auto& beta : rs.standard_positive_roots())
    if (standard_simple_coordinates(beta)[r] > 0) out.push_back(coroot(beta));
  return out;
}

std::vector<LevelBucket> dual_nilradical_buckets(std::size_t rank, ParabolicClass cls) {
  removed_simple_root(rank, cls);
  const Weight alpha = distinguished_dual_root(rank, cls);
  std::map<long, long> counts;
  for (const auto& gamma : dual_nilradical_coroots(rank, cls)) {
    const Rational level = inner_product(gamma, alpha);
    if (level <= 0 || !is_integer(level))
      throw InvariantViolation("dual nilradical coroot " + gamma.to_string() + " has level " + to_string(level));
    ++counts[level.get_num().get_si()];
  }
  std::vector<LevelBucket> out;
  for (const auto& [level, dim] : counts) out.push_back({level, dim, bucket_label(rank, cls, level)});
  return out;
}

LShape l_shape(std::size_t rank, ParabolicClass cls) {
  LShape shape;
  shape.parabolic_class = cls;
  shape.rank = rank;
  shape.buckets = dual_nilradical_buckets(rank, cls);
  const Weight alpha0 = cls == ParabolicClass::P2 ? Weight::basis(rank, 0) + Weight::basis(rank, 1)
                                                  : Weight::basis(rank, rank - 1, 2);
  shape.s0 = s0_for_root(rank, alpha0);
  for (const auto& b : shape.buckets) {
    const Rational coeff = Rational(b.level) / (2 * shape.s0);
    shape.numerator_args.push_back({coeff, 0});
    shape.denominator_args.push_back({coeff, 1});
  }
  return shape;
}

LShape l_shape(const HCDatum& datum) { return l_shape(datum.rank(), datum.parabolic_class()); }

Rational level_weighted_sum(const LShape& shape) {
  Rational total = 0;
  for (const auto& b : shape.buckets) total += Rational(b.level * b.dim);
  return total;
}

std::string to_string(PoleVerdict v) {
  switch (v) {
    case PoleVerdict::Pole: return "pole";
    case PoleVerdict::NoPole: return "no_pole";
    case PoleVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

PoleCertificate pole_certificate(const LShape& shape, const PoleHypotheses& hyp) {
  PoleCertificate cert;
  if (shape.parabolic_class == ParabolicClass::P1) {
    cert.reasons.push_back("non-generic input requires L-function arithmetic out of scope");
    return cert;
  }
  const LevelBucket* top = nullptr;
  for (const auto& b : shape.buckets)
    if (b.level == 2) top = &b;
  if (top == nullptr || top->dim != 1) {
    cert.reasons.push_back("no one-dimensional level-2 bucket; no rule applies");
    return cert;
  }
  const std::string top_arg = LinearForm{Rational(2) / (2 * shape.s0), 0}.to_string();
  if (!hyp.central_character_trivial) cert.reasons.push_back("central character not known to be trivial");
  if (!hyp.temperedness_assumed) cert.reasons.push_back("temperedness not assumed");
  if (!cert.reasons.empty()) return cert;

  cert.reasons.push_back("level-2 factor is zeta^S(" + top_arg + "), with a simple pole at s = s0 = " +
                         to_string(shape.s0));
  cert.reasons.push_back("denominator factors are finite and nonzero at s0 under temperedness");
  if (hyp.central_value_nonzero) {
    cert.verdict = PoleVerdict::Pole;
    cert.reasons.push_back("level-1 factor at s0 is the central value, assumed nonzero; the zeta residue survives");
  } else {
    cert.verdict = PoleVerdict::NoPole;
    cert.reasons.push_back("level-1 factor vanishes at s0 and cancels the zeta residue");
  }
  return cert;
}

}  // namespace rescoh
