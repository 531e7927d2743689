#pragma once

#include <string>
#include <vector>

#include "stanley/monomial.hpp"

namespace stanley {

// Monomial ideal, kept as its minimal generating set sorted lexicographically.
// Equal ideals have identical representations. An empty generator list is the
// zero ideal; the single generator 1 is the unit ideal.
class MonomialIdeal {
public:
  static MonomialIdeal zero(const Ring& ring);
  static MonomialIdeal from_generators(const Ring& ring,
                                       std::vector<Monomial> gens);

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }
  bool is_squarefree() const;

  /// Membership: some generator divides m.
  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  /// Largest exponent of x_j over the minimal generators; 0 when absent.
  int deg_var(int j) const;

  bool operator==(const MonomialIdeal& o) const;
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

  std::string str() const;

private:
  MonomialIdeal(Ring ring, std::vector<Monomial> gens);

  Ring ring_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(const Ring& ring, const std::vector<Monomial>& gens);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const std::vector<MonomialIdeal>& ideals);

}  // namespace stanley
