#include "rescoh/rootsys.hpp"

#include <algorithm>
#include <sstream>

#include "rescoh/error.hpp"

namespace rescoh {

Weight::Weight(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

Weight Weight::basis(std::size_t rank, std::size_t index, long scale) {
  Weight w(rank);
  w.coords_.at(index) = scale;
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

bool Weight::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return rescoh::is_integer(q); });
}

Weight Weight::operator-() const {
  Weight out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

Weight& Weight::operator+=(const Weight& o) {
  if (rank() != o.rank()) throw DimensionError("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (rank() != o.rank()) throw DimensionError("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

bool operator<(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << rescoh::to_string(coords_[i]);
  os << ")";
  return os.str();
}

SignChamber::SignChamber(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_)
    if (s != 1 && s != -1) throw DomainError("chamber signs must be +1 or -1");
}

SignChamber SignChamber::identity(std::size_t rank) { return SignChamber(std::vector<int>(rank, 1)); }

SignChamber SignChamber::parse(const std::string& text) {
  if (text.empty()) throw ParseError("empty chamber string", 0);
  std::vector<int> signs;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '+') signs.push_back(1);
    else if (text[i] == '-') signs.push_back(-1);
    else throw ParseError(std::string("unexpected character '") + text[i] + "' in chamber", i);
  }
  return SignChamber(std::move(signs));
}

std::vector<SignChamber> SignChamber::all(std::size_t rank) {
  std::vector<SignChamber> out;
  const std::size_t count = std::size_t{1} << rank;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<int> s(rank);
    for (std::size_t i = 0; i < rank; ++i) s[i] = (mask >> (rank - 1 - i)) & 1U ? -1 : 1;
    out.emplace_back(std::move(s));
  }
  return out;
}

Weight SignChamber::apply(const Weight& w) const {
  if (w.rank() != rank()) throw DimensionError("chamber rank does not match weight rank");
  Weight out = w;
  for (std::size_t i = 0; i < rank(); ++i)
    if (signs_[i] < 0) out[i] = -out[i];
  return out;
}

SignChamber SignChamber::operator-() const {
  SignChamber out = *this;
  for (int& s : out.signs_) s = -s;
  return out;
}

std::string SignChamber::to_string() const {
  std::string s;
  for (int x : signs_) s += x > 0 ? '+' : '-';
  return s;
}

bool RootSystem::contains(const Weight& w) const { return std::find(roots_.begin(), roots_.end(), w) != roots_.end(); }

RootSystem build_root_system(std::size_t rank) {
  if (rank == 0) throw InvalidRankError("root system rank must be at least 1");
  RootSystem rs;
  rs.rank_ = rank;
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      rs.positive_.push_back(Weight::basis(rank, i) - Weight::basis(rank, j));
      rs.positive_.push_back(Weight::basis(rank, i) + Weight::basis(rank, j));
    }
    rs.positive_.push_back(Weight::basis(rank, i, 2));
  }
  for (const auto& b : rs.positive_) {
    rs.roots_.push_back(b);
    rs.roots_.push_back(-b);
  }
  return rs;
}

Rational inner_product(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank())
    throw DimensionError("inner product of weights of rank " + std::to_string(a.rank()) + " and " + std::to_string(b.rank()));
  Rational acc = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_cn_root(const Weight& w) {
  std::size_t nonzero = 0;
  for (const auto& c : w.coords())
    if (c != 0) ++nonzero;
  if (nonzero == 1) {
    for (const auto& c : w.coords())
      if (c != 0) return abs(c) == 2;
  }
  if (nonzero == 2) {
    for (const auto& c : w.coords())
      if (c != 0 && abs(c) != 1) return false;
    return true;
  }
  return false;
}

Rational coroot_pairing(const Weight& w, const Weight& beta) {
  if (!is_cn_root(beta)) throw InvalidRootError(beta.to_string() + " is not a root of type C_" + std::to_string(beta.rank()));
  return 2 * inner_product(w, beta) / inner_product(beta, beta);
}

Weight reflect(const Weight& w, const Weight& beta) { return w - coroot_pairing(w, beta) * beta; }

std::vector<Weight> chamber_positive_roots(const RootSystem& rs, const SignChamber& eps) {
  std::vector<Weight> out;
  out.reserve(rs.standard_positive_roots().size());
  for (const auto& b : rs.standard_positive_roots()) out.push_back(eps.apply(b));
  return out;
}

std::vector<Weight> simple_roots(const RootSystem& rs, const SignChamber& eps) {
  const std::size_t n = rs.rank();
  std::vector<Weight> out;
  for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(eps.apply(Weight::basis(n, i) - Weight::basis(n, i + 1)));
  out.push_back(eps.apply(Weight::basis(n, n - 1, 2)));
  return out;
}

Weight rho(const RootSystem& rs, const SignChamber& eps) {
  Weight sum(rs.rank());
  for (const auto& b : chamber_positive_roots(rs, eps)) sum += b;
  return Rational(1, 2) * sum;
}

bool is_dominant_regular_integral(const RootSystem& rs, const SignChamber& eps, const Weight& w) {
  if (w.rank() != rs.rank() || !w.is_integral()) return false;
  for (const auto& a : simple_roots(rs, eps))
    if (coroot_pairing(w, a) <= 0) return false;
  return true;
}

bool is_dominant(const RootSystem& rs, const SignChamber& eps, const Weight& w) {
  for (const auto& a : simple_roots(rs, eps))
    if (coroot_pairing(w, a) < 0) return false;
  return true;
}

std::vector<Rational> standard_simple_coordinates(const Weight& w) {
  // alpha_k = e_k - e_{k+1} (k < n), alpha_n = 2e_n: the coefficient of
  // alpha_k is the partial sum w_1 + ... + w_k, halved for k = n.
  const std::size_t n = w.rank();
  std::vector<Rational> c(n);
  Rational partial = 0;
  for (std::size_t k = 0; k < n; ++k) {
    partial += w[k];
    c[k] = partial;
  }
  if (n > 0) c[n - 1] /= 2;
  return c;
}

Weight coroot(const Weight& beta) {
  if (!is_cn_root(beta)) throw InvalidRootError(beta.to_string() + " is not a root");
  return (2 / inner_product(beta, beta)) * beta;
}

}  // namespace rescoh
