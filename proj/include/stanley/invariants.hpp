#pragma once

#include <string>
#include <vector>

#include "stanley/decomposition.hpp"

namespace stanley {

inline constexpr int kDefaultOrderBound = 9;

// Total order on the components of a decomposition.
// perm[position] = component index, 0-based.
class TotalOrder {
public:
  TotalOrder(Decomposition decomposition, std::vector<int> perm);

  const Decomposition& decomposition() const { return decomposition_; }
  const std::vector<int>& perm() const { return perm_; }
  int length() const { return static_cast<int>(perm_.size()); }

private:
  Decomposition decomposition_;
  std::vector<int> perm_;
};

// Ordered list of components drawn from a decomposition, with the running
// prefix supports a_0 = {} and a_k = a_{k-1} | support(member k).
class Family {
public:
  Family(Ring ring, std::vector<IrreducibleComponent> members,
         std::vector<int> indices);

  const Ring& ring() const { return ring_; }
  int length() const { return static_cast<int>(members_.size()); }
  const IrreducibleComponent& member(int k) const { return members_[k]; }
  const std::vector<IrreducibleComponent>& members() const { return members_; }
  const std::vector<int>& indices() const { return indices_; }

  VarSet prefix_support(int k) const;  // a_k, 0 <= k <= length
  VarSet support_union() const { return prefix_support(length()); }

  Family prefix(int new_length) const;
  Family subsequence(const std::vector<int>& positions) const;

  std::string str() const;

private:
  Ring ring_;
  std::vector<IrreducibleComponent> members_;
  std::vector<int> indices_;
};

/// n - h + r - 1 for an irredundant decomposition, where h is the height of
/// the sum of all associated primes and r the least number of them whose sum
/// already has height h (exact minimum over subsets).
int ideal_size(const Decomposition& d);
struct SizeDetail {
  int value;
  int h;
  int r;
  std::vector<int> cover;  // component-support cover realizing r, as var sets
};
SizeDetail ideal_size_detail(const Decomposition& d);

/// An order is admissible when, relative to every nonempty prefix, the next
/// component's height increment is minimal among the components that still
/// add variables; components already absorbed by the prefix sum are free.
bool is_admissible_order(const TotalOrder& order);

/// All admissible orders, by position-by-position backtracking.
std::vector<TotalOrder> admissible_orders(
    const Decomposition& d, int max_components = kDefaultOrderBound);

/// One admissible order, built greedily without enumeration: repeatedly the
/// smallest-index component of minimal height increment, absorbed ones last.
TotalOrder first_admissible_order(const Decomposition& d);

/// Greedy scan of the maximal-radical components in order; a component joins
/// when its radical is not yet inside the running prefix sum.
Family maximal_admissible_family(const TotalOrder& order);

/// Sums of the last member with each earlier one; entries strictly containing
/// another entry are dropped, equal entries keep their first occurrence, and
/// entries whose radical is not maximal among the survivors are dropped.
Family reduce_f1(const Family& f);

/// min over dropping the last member and 1 + the reduced family, with the
/// one-member base case dim S/P.
int bigsize_family(const Family& f);

/// bigsize of the greedy maximal family of an admissible order.
int bigsize_for_order(const TotalOrder& order);

struct BigsizeResult {
  int value;
  std::vector<int> best_order;      // permutation achieving the maximum
  std::vector<int> family_indices;  // its greedy family, by component index
  int admissible_order_count;
};

/// Maximum of bigsize_for_order over every admissible order.
BigsizeResult bigsize_ideal(const Decomposition& d,
                            int max_components = kDefaultOrderBound);

/// Positions k_1 < ... < k_r with r - 1 + dim S/(sum of their radicals) equal
/// to bigsize_family(f); shortest, then lexicographically first.
std::vector<int> bigsize_witness(const Family& f);

}  // namespace stanley
