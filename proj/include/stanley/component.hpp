#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stanley/ideal.hpp"

namespace stanley {

// Support of a monomial prime ideal: a set of variables.
struct PrimeSupport {
  Ring ring;
  VarSet vars;

  int height() const { return vars.count(); }
  int dim_quotient() const { return ring.var_count() - vars.count(); }

  bool operator==(const PrimeSupport& o) const {
    return ring == o.ring && vars == o.vars;
  }
  bool operator<(const PrimeSupport& o) const { return vars < o.vars; }

  std::string str() const;
};

// Irreducible monomial ideal: generated by pure powers of distinct variables.
// Stored as a full-length power vector, 0 marking an absent variable.
class IrreducibleComponent {
public:
  IrreducibleComponent(Ring ring, std::vector<int> powers);
  static IrreducibleComponent from_pairs(
      const Ring& ring, const std::vector<std::pair<int, int>>& var_power);

  const Ring& ring() const { return ring_; }
  const std::vector<int>& powers() const { return powers_; }
  int power(int j) const;
  VarSet support() const;
  bool is_prime() const;  // every power equals 1

  PrimeSupport radical() const;
  MonomialIdeal to_ideal() const;

  /// Membership of a monomial in the pure-power ideal.
  bool contains(const Monomial& m) const;
  /// Ideal containment: *this contains other.
  bool contains(const IrreducibleComponent& other) const;

  bool operator==(const IrreducibleComponent& o) const;
  bool operator!=(const IrreducibleComponent& o) const { return !(*this == o); }
  bool operator<(const IrreducibleComponent& o) const;  // lex on power vectors

  std::string str() const;

private:
  Ring ring_;
  std::vector<int> powers_;
};

/// Sum of two pure-power ideals: union of supports, minimum shared exponent.
IrreducibleComponent comp_sum(const IrreducibleComponent& a,
                              const IrreducibleComponent& b);

PrimeSupport radical(const IrreducibleComponent& q);

}  // namespace stanley
