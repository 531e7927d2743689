#include "stanley/ideal.hpp"

#include <algorithm>

#include "stanley/errors.hpp"

namespace stanley {

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {}

MonomialIdeal MonomialIdeal::zero(const Ring& ring) {
  return MonomialIdeal(ring, {});
}

MonomialIdeal MonomialIdeal::from_generators(const Ring& ring,
                                             std::vector<Monomial> gens) {
  for (const Monomial& g : gens)
    require_same_ring(ring, g.ring(), "from_generators");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t k = 0; k < gens.size() && !redundant; ++k)
      if (k != i && gens[k].divides(gens[i]) && !(gens[i] == gens[k]))
        redundant = true;
    if (!redundant) minimal.push_back(gens[i]);
  }
  return MonomialIdeal(ring, std::move(minimal));
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0].is_one();
}

bool MonomialIdeal::is_squarefree() const {
  for (const Monomial& g : gens_)
    for (int e : g.exponents())
      if (e > 1) return false;
  return true;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same_ring(ring_, m.ring(), "contains");
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ring(ring_, other.ring_, "contains");
  for (const Monomial& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

int MonomialIdeal::deg_var(int j) const {
  if (j < 0 || j >= ring_.var_count())
    throw InvalidInputError("variable index out of range");
  int deg = 0;
  for (const Monomial& g : gens_) deg = std::max(deg, g.exponents()[j]);
  return deg;
}

bool MonomialIdeal::operator==(const MonomialIdeal& o) const {
  return ring_ == o.ring_ && gens_ == o.gens_;
}

std::string MonomialIdeal::str() const {
  if (is_zero()) return "(0)";
  std::string out = "(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].str();
  }
  return out + ")";
}

MonomialIdeal minimalize(const Ring& ring, const std::vector<Monomial>& gens) {
  return MonomialIdeal::from_generators(ring, gens);
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "intersect");
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.ring());
  std::vector<Monomial> lcms;
  lcms.reserve(a.generators().size() * b.generators().size());
  for (const Monomial& u : a.generators())
    for (const Monomial& v : b.generators()) lcms.push_back(lcm(u, v));
  return MonomialIdeal::from_generators(a.ring(), std::move(lcms));
}

MonomialIdeal intersect(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty())
    throw InvalidInputError("intersection of an empty list of ideals");
  MonomialIdeal acc = ideals.front();
  for (size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

}  // namespace stanley
