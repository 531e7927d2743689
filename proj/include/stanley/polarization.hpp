#pragma once

#include <optional>
#include <vector>

#include "stanley/invariants.hpp"

namespace stanley {

enum class ComponentOrigin { Unchanged, Primed, Doubled };

struct OriginRef {
  int source_index;
  ComponentOrigin kind;
};

// One exponent-splitting step: the components carrying the top power c of the
// split variable are replaced by a lowered copy and a copy using the fresh
// variable, every other component is carried over unchanged.
struct PolarizationStep {
  Decomposition source;
  Ring target_ring;  // source ring with one variable appended
  int split_var;
  int degree;               // c, the split power
  std::vector<int> e_set;   // source components with power c on split_var
  std::vector<IrreducibleComponent> primed;   // in the source ring, power c-1
  std::vector<IrreducibleComponent> doubled;  // in the target ring
  Decomposition raw_target;                   // unchanged, primed, doubled
  std::vector<OriginRef> origins;             // one per raw_target component
};

/// Requires the split variable to carry power >= 2 somewhere.
PolarizationStep polarize_step(const Decomposition& d, int j);

struct VariableOrigin {
  int source_var;
  int level;  // the power slot the fresh variable stands for
};

struct FullPolarization {
  Decomposition result;  // irredundant and squarefree
  std::vector<PolarizationStep> steps;
  std::vector<std::vector<int>> kept_after_step;  // irredundantize survivors
  std::vector<VariableOrigin> new_vars;           // per appended variable
};

/// Repeatedly splits the smallest variable still carrying a power >= 2,
/// irredundantizing after each step, until the decomposition is squarefree.
FullPolarization full_polarization(const Decomposition& d);

/// Substituting the fresh variable back into the split one must recover the
/// source ideal exactly.
bool depolarize_check(const PolarizationStep& step);

// Lcms of the nonempty generator subsets, ordered by divisibility, plus a
// formal bottom element. Join is lcm.
class LcmLattice {
public:
  LcmLattice(Ring ring, std::vector<Monomial> nodes);

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& nodes() const { return nodes_; }
  bool is_node(const Monomial& m) const;

private:
  Ring ring_;
  std::vector<Monomial> nodes_;  // sorted, deduplicated; bottom kept formal
};

LcmLattice lcm_lattice(const MonomialIdeal& ideal, int max_generators = 16);

/// True when substituting source variables by var_map[j] sends every node to
/// a node, hits every target node, and commutes with joins.
bool lattice_surjection_check(const LcmLattice& source,
                              const LcmLattice& target,
                              const std::vector<int>& var_map);

// Everything needed to pull a family of the polarized ideal back to one of
// the source ideal.
struct TransferContext {
  Decomposition source;
  Decomposition raw_target;
  std::vector<OriginRef> origins;
  std::vector<bool> source_prime_maximal;      // per source component
  std::vector<int> e_set;                      // source indices, ascending
  std::vector<IrreducibleComponent> primed_in_source;  // parallel to e_set
};

TransferContext make_transfer_context(const PolarizationStep& step);

/// Family positions refer to raw_target components. Unchanged components with
/// maximal primes restrict to the source; primed/doubled components return to
/// their originals; the rest land in the smallest primed component containing
/// them. Duplicates keep their first occurrence.
Family replacement_family(const TransferContext& ctx, const Family& ft);

/// Witness-guided recursion: replace when the witness is the whole family,
/// otherwise descend into the witness subfamily. The result satisfies
/// 1 + bigsize(result) <= bigsize(ft).
Family transfer_family(const TransferContext& ctx, const Family& ft);

/// Variable bijection sending one component multiset onto the other, when one
/// exists. Values are target indices per source variable.
std::optional<std::vector<int>> find_variable_bijection(const Decomposition& a,
                                                        const Decomposition& b);

}  // namespace stanley
