#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace stanley {

inline constexpr int kMaxVars = 64;

// Set of 0-based variable indices packed into one word.
struct VarSet {
  std::uint64_t bits = 0;

  static VarSet single(int j) { return VarSet{std::uint64_t{1} << j}; }
  static VarSet first_n(int n) {
    return VarSet{n >= kMaxVars ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << n) - 1};
  }

  bool contains(int j) const { return (bits >> j) & 1u; }
  bool subset_of(VarSet o) const { return (bits & ~o.bits) == 0; }
  bool proper_subset_of(VarSet o) const {
    return subset_of(o) && bits != o.bits;
  }
  bool empty() const { return bits == 0; }
  int count() const { return std::popcount(bits); }

  VarSet& operator|=(VarSet o) {
    bits |= o.bits;
    return *this;
  }
  friend VarSet operator|(VarSet a, VarSet b) { return VarSet{a.bits | b.bits}; }
  friend VarSet operator&(VarSet a, VarSet b) { return VarSet{a.bits & b.bits}; }
  friend VarSet operator-(VarSet a, VarSet b) { return VarSet{a.bits & ~b.bits}; }

  auto operator<=>(const VarSet&) const = default;

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1)
      out.push_back(std::countr_zero(rest));
    return out;
  }
};

}  // namespace stanley
