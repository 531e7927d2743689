#pragma once

#include <string>
#include <vector>

#include "stanley/ring.hpp"

namespace stanley {

// Monomial as an exponent vector in a fixed ring.
class Monomial {
public:
  Monomial(Ring ring, std::vector<int> exponents);
  static Monomial one(const Ring& ring);
  static Monomial variable(const Ring& ring, int j, int power = 1);

  const Ring& ring() const { return ring_; }
  const std::vector<int>& exponents() const { return exps_; }
  int exponent(int j) const;
  int total_degree() const;
  bool is_one() const;
  VarSet support() const;

  bool divides(const Monomial& m) const;
  Monomial divided_by(const Monomial& m) const;

  bool operator==(const Monomial& o) const;
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  bool operator<(const Monomial& o) const;  // lex on exponent vectors

  std::string str() const;

private:
  Ring ring_;
  std::vector<int> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);

}  // namespace stanley
