#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stanley/decomposition.hpp"

namespace stanley {

inline constexpr int kDefaultPosetBound = 4096;

enum class PosetMode { Ideal, Quotient };

// Exponent vectors below the degree bound g, filtered to the ideal's members
// (ideal mode) or its complement (quotient mode). Cells are addressed by a
// mixed-radix id whose numeric order is the lexicographic order.
class CharacteristicPoset {
public:
  CharacteristicPoset(Ring ring, std::vector<int> bounds, PosetMode mode,
                      std::vector<char> member);

  const Ring& ring() const { return ring_; }
  const std::vector<int>& bounds() const { return bounds_; }
  PosetMode mode() const { return mode_; }

  int box_size() const { return static_cast<int>(member_.size()); }
  bool element(int id) const { return member_[id] != 0; }
  int element_count() const { return element_count_; }

  /// Count of coordinates sitting at their bound.
  int rho(int id) const { return rho_[id]; }

  std::vector<int> exponents_of(int id) const;
  int id_of(const std::vector<int>& exps) const;
  std::vector<std::vector<int>> elements() const;

private:
  Ring ring_;
  std::vector<int> bounds_;
  PosetMode mode_;
  std::vector<char> member_;
  std::vector<int> rho_;
  std::vector<int> stride_;
  int element_count_;
};

/// Builds the poset with g_j = max(deg_j, 1); refuses boxes above max_box.
CharacteristicPoset char_poset(const MonomialIdeal& ideal, PosetMode mode,
                               int max_box = kDefaultPosetBound);

struct Interval {
  std::vector<int> lower;
  std::vector<int> upper;
};

struct IntervalPartition {
  std::vector<Interval> intervals;
};

struct SdepthResult {
  int value;
  IntervalPartition certificate;
};

/// Exact Stanley depth: the best achievable minimum rho over the interval
/// tops of a partition of the poset, with a witnessing partition.
SdepthResult sdepth_of_poset(const CharacteristicPoset& poset);
SdepthResult sdepth_exact(const MonomialIdeal& ideal, PosetMode mode,
                          int max_box = kDefaultPosetBound);

/// Disjoint, covering, inside the poset, and min rho equal to the value.
bool valid_partition(const CharacteristicPoset& poset,
                     const IntervalPartition& partition, int value);

// One variable-splitting datum: restrictions of the two complementary
// intersections to the subrings cut out by Z and tau.
struct SplitData {
  std::vector<int> tau;    // component indices, ascending
  VarSet s_tau_vars;       // Z minus the variables of the tau-sum
  VarSet s_second_vars;    // complement of Z
  MonomialIdeal j_tau;     // in the ring on s_tau_vars; zero marker allowed
  MonomialIdeal l_tau;     // in the ring on s_second_vars
  std::optional<int> a_tau;
};

struct SplitScan {
  std::optional<int> a0;
  std::vector<SplitData> qualifying;  // both restrictions nonzero
  std::optional<int> bound;           // min over a0 and the qualifying a_tau
};

SplitData split_data(const Decomposition& d, VarSet z,
                     const std::vector<int>& tau,
                     int max_box = kDefaultPosetBound);
SplitScan scan_splits(const Decomposition& d, VarSet z,
                      int max_box = kDefaultPosetBound,
                      int max_components = 9);
int split_lower_bound(const Decomposition& d, VarSet z,
                      int max_box = kDefaultPosetBound,
                      int max_components = 9);

struct Check {
  std::string name;
  long long lhs;
  long long rhs;
  std::string relation;
  bool pass;
};

struct VerifyReport {
  std::vector<Check> checks;
  std::vector<std::string> notes;
  bool all_pass() const;
};

struct VerifyOptions {
  int max_box = kDefaultPosetBound;
  int max_components = 9;
  bool quotient_check = true;
};

/// Inequality battery for one instance: sdepth >= size + 1 always, plus the
/// bigsize comparisons, and the quotient bound on squarefree input.
VerifyReport verify_instance(const Decomposition& d,
                             const VerifyOptions& options = {});

}  // namespace stanley
