#pragma once

#include <string>
#include <vector>

#include "stanley/component.hpp"

namespace stanley {

// Ordered intersection of irreducible components presenting a monomial ideal.
class Decomposition {
public:
  Decomposition(Ring ring, std::vector<IrreducibleComponent> components,
                bool irredundant = false);

  const Ring& ring() const { return ring_; }
  const std::vector<IrreducibleComponent>& components() const {
    return components_;
  }
  const IrreducibleComponent& component(int i) const { return components_[i]; }
  int component_count() const { return static_cast<int>(components_.size()); }
  bool irredundant() const { return irredundant_; }
  bool is_squarefree() const;

  /// Largest exponent of x_j over the components.
  int max_power(int j) const;

  MonomialIdeal intersection() const;

  std::string str() const;

private:
  Ring ring_;
  std::vector<IrreducibleComponent> components_;
  bool irredundant_;
};

/// Irredundant irreducible decomposition by recursive generator splitting,
/// components in canonical (lexicographic) order.
Decomposition irreducible_decomposition(const MonomialIdeal& ideal);

struct IrredundantResult {
  Decomposition decomposition;
  std::vector<int> kept;  // indices into the input component list
};

/// Drops components containing the intersection of the others; among equal
/// components the first occurrence survives. Relative order is preserved.
IrredundantResult irredundantize_indexed(const Decomposition& d);
Decomposition irredundantize(const Decomposition& d);

/// Distinct radicals of an irredundant decomposition, sorted.
std::vector<PrimeSupport> ass_primes(const Decomposition& d);
/// The subset of ass_primes maximal under inclusion.
std::vector<PrimeSupport> maximal_ass_primes(const Decomposition& d);
/// Indices of components whose radical is maximal among the associated primes.
std::vector<int> maximal_component_indices(const Decomposition& d);

struct StripResult {
  Decomposition decomposition;  // in the smaller ring
  int removed;                  // count of dropped variables
  std::vector<int> kept_vars;   // original indices of the surviving variables
};

/// Removes variables outside the union of all associated-prime supports.
StripResult strip_free_variables(const Decomposition& d);

}  // namespace stanley
