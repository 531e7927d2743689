#include "stanley/component.hpp"

#include <algorithm>

#include "stanley/errors.hpp"

namespace stanley {

std::string PrimeSupport::str() const {
  std::string out = "{";
  bool first = true;
  for (int j : vars.members()) {
    if (!first) out += ",";
    out += ring.var_name(j);
    first = false;
  }
  return out + "}";
}

IrreducibleComponent::IrreducibleComponent(Ring ring, std::vector<int> powers)
    : ring_(std::move(ring)), powers_(std::move(powers)) {
  if (static_cast<int>(powers_.size()) != ring_.var_count())
    throw InvalidInputError("power vector length does not match the ring");
  bool any = false;
  for (int p : powers_) {
    if (p < 0) throw InvalidInputError("component powers must be nonnegative");
    if (p > 0) any = true;
  }
  if (!any)
    throw InvalidInputError("irreducible component must involve a variable");
}

IrreducibleComponent IrreducibleComponent::from_pairs(
    const Ring& ring, const std::vector<std::pair<int, int>>& var_power) {
  std::vector<int> powers(ring.var_count(), 0);
  for (auto [j, p] : var_power) {
    if (j < 0 || j >= ring.var_count())
      throw InvalidInputError("variable index out of range");
    if (p < 1) throw InvalidInputError("component powers must be positive");
    powers[j] = p;
  }
  return IrreducibleComponent(ring, std::move(powers));
}

int IrreducibleComponent::power(int j) const {
  if (j < 0 || j >= ring_.var_count())
    throw InvalidInputError("variable index out of range");
  return powers_[j];
}

VarSet IrreducibleComponent::support() const {
  VarSet s;
  for (int j = 0; j < static_cast<int>(powers_.size()); ++j)
    if (powers_[j] > 0) s |= VarSet::single(j);
  return s;
}

bool IrreducibleComponent::is_prime() const {
  return std::all_of(powers_.begin(), powers_.end(),
                     [](int p) { return p <= 1; });
}

PrimeSupport IrreducibleComponent::radical() const {
  return PrimeSupport{ring_, support()};
}

MonomialIdeal IrreducibleComponent::to_ideal() const {
  std::vector<Monomial> gens;
  for (int j = 0; j < static_cast<int>(powers_.size()); ++j)
    if (powers_[j] > 0) gens.push_back(Monomial::variable(ring_, j, powers_[j]));
  return MonomialIdeal::from_generators(ring_, std::move(gens));
}

bool IrreducibleComponent::contains(const Monomial& m) const {
  require_same_ring(ring_, m.ring(), "contains");
  for (int j = 0; j < static_cast<int>(powers_.size()); ++j)
    if (powers_[j] > 0 && m.exponents()[j] >= powers_[j]) return true;
  return false;
}

bool IrreducibleComponent::contains(const IrreducibleComponent& other) const {
  require_same_ring(ring_, other.ring_, "contains");
  // Every pure power of `other` must lie in *this.
  for (int j = 0; j < static_cast<int>(powers_.size()); ++j)
    if (other.powers_[j] > 0 &&
        !(powers_[j] > 0 && powers_[j] <= other.powers_[j]))
      return false;
  return true;
}

bool IrreducibleComponent::operator==(const IrreducibleComponent& o) const {
  return ring_ == o.ring_ && powers_ == o.powers_;
}

bool IrreducibleComponent::operator<(const IrreducibleComponent& o) const {
  return powers_ < o.powers_;
}

std::string IrreducibleComponent::str() const {
  std::string out = "(";
  bool first = true;
  for (int j = 0; j < static_cast<int>(powers_.size()); ++j) {
    if (powers_[j] == 0) continue;
    if (!first) out += ",";
    out += ring_.var_name(j);
    if (powers_[j] > 1) out += "^" + std::to_string(powers_[j]);
    first = false;
  }
  return out + ")";
}

IrreducibleComponent comp_sum(const IrreducibleComponent& a,
                              const IrreducibleComponent& b) {
  require_same_ring(a.ring(), b.ring(), "comp_sum");
  std::vector<int> powers(a.powers().size(), 0);
  for (size_t j = 0; j < powers.size(); ++j) {
    int pa = a.powers()[j];
    int pb = b.powers()[j];
    if (pa > 0 && pb > 0)
      powers[j] = std::min(pa, pb);
    else
      powers[j] = std::max(pa, pb);
  }
  return IrreducibleComponent(a.ring(), std::move(powers));
}

PrimeSupport radical(const IrreducibleComponent& q) { return q.radical(); }

}  // namespace stanley
