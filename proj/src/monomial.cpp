#include "stanley/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "stanley/errors.hpp"

namespace stanley {

Monomial::Monomial(Ring ring, std::vector<int> exponents)
    : ring_(std::move(ring)), exps_(std::move(exponents)) {
  if (static_cast<int>(exps_.size()) != ring_.var_count())
    throw InvalidInputError("exponent vector length does not match the ring");
  for (int e : exps_)
    if (e < 0) throw InvalidInputError("monomial exponents must be nonnegative");
}

Monomial Monomial::one(const Ring& ring) {
  return Monomial(ring, std::vector<int>(ring.var_count(), 0));
}

Monomial Monomial::variable(const Ring& ring, int j, int power) {
  if (j < 0 || j >= ring.var_count())
    throw InvalidInputError("variable index out of range");
  if (power < 1) throw InvalidInputError("variable power must be positive");
  std::vector<int> exps(ring.var_count(), 0);
  exps[j] = power;
  return Monomial(ring, std::move(exps));
}

int Monomial::exponent(int j) const {
  if (j < 0 || j >= ring_.var_count())
    throw InvalidInputError("variable index out of range");
  return exps_[j];
}

int Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

VarSet Monomial::support() const {
  VarSet s;
  for (int j = 0; j < static_cast<int>(exps_.size()); ++j)
    if (exps_[j] > 0) s |= VarSet::single(j);
  return s;
}

bool Monomial::divides(const Monomial& m) const {
  require_same_ring(ring_, m.ring_, "divides");
  for (size_t j = 0; j < exps_.size(); ++j)
    if (exps_[j] > m.exps_[j]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& m) const {
  require_same_ring(ring_, m.ring_, "divided_by");
  std::vector<int> exps(exps_.size());
  for (size_t j = 0; j < exps_.size(); ++j) {
    if (m.exps_[j] > exps_[j])
      throw InvalidInputError("quotient of monomials is not a monomial");
    exps[j] = exps_[j] - m.exps_[j];
  }
  return Monomial(ring_, std::move(exps));
}

bool Monomial::operator==(const Monomial& o) const {
  return ring_ == o.ring_ && exps_ == o.exps_;
}

bool Monomial::operator<(const Monomial& o) const { return exps_ < o.exps_; }

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::string out;
  for (int j = 0; j < static_cast<int>(exps_.size()); ++j) {
    if (exps_[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring_.var_name(j);
    if (exps_[j] > 1) out += "^" + std::to_string(exps_[j]);
  }
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a.ring(), b.ring(), "lcm");
  std::vector<int> exps(a.exponents().size());
  for (size_t j = 0; j < exps.size(); ++j)
    exps[j] = std::max(a.exponents()[j], b.exponents()[j]);
  return Monomial(a.ring(), std::move(exps));
}

}  // namespace stanley
