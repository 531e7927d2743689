#include "stanley/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "stanley/errors.hpp"

namespace stanley {

TotalOrder::TotalOrder(Decomposition decomposition, std::vector<int> perm)
    : decomposition_(std::move(decomposition)), perm_(std::move(perm)) {
  int s = decomposition_.component_count();
  if (static_cast<int>(perm_.size()) != s)
    throw InvalidInputError("order length does not match the decomposition");
  std::vector<bool> seen(s, false);
  for (int i : perm_) {
    if (i < 0 || i >= s || seen[i])
      throw InvalidInputError("order is not a permutation of the components");
    seen[i] = true;
  }
}

Family::Family(Ring ring, std::vector<IrreducibleComponent> members,
               std::vector<int> indices)
    : ring_(std::move(ring)),
      members_(std::move(members)),
      indices_(std::move(indices)) {
  if (members_.empty()) throw InvalidInputError("family must be nonempty");
  if (indices_.size() != members_.size())
    throw InvalidInputError("family index list does not match its members");
  for (const auto& m : members_) require_same_ring(ring_, m.ring(), "family");
}

VarSet Family::prefix_support(int k) const {
  VarSet s;
  for (int i = 0; i < k; ++i) s |= members_[i].support();
  return s;
}

Family Family::prefix(int new_length) const {
  if (new_length < 1 || new_length > length())
    throw InvalidInputError("bad family prefix length");
  return Family(ring_,
                {members_.begin(), members_.begin() + new_length},
                {indices_.begin(), indices_.begin() + new_length});
}

Family Family::subsequence(const std::vector<int>& positions) const {
  std::vector<IrreducibleComponent> members;
  std::vector<int> indices;
  int prev = -1;
  for (int p : positions) {
    if (p <= prev || p >= length())
      throw InvalidInputError("family subsequence positions must increase");
    members.push_back(members_[p]);
    indices.push_back(indices_[p]);
    prev = p;
  }
  return Family(ring_, std::move(members), std::move(indices));
}

std::string Family::str() const {
  std::string out;
  for (int k = 0; k < length(); ++k) {
    if (k) out += ",";
    out += members_[k].str();
  }
  return out;
}

SizeDetail ideal_size_detail(const Decomposition& d) {
  std::vector<PrimeSupport> primes = ass_primes(d);
  VarSet full;
  for (const auto& p : primes) full |= p.vars;
  int h = full.count();
  int n = d.ring().var_count();
  int p = static_cast<int>(primes.size());

  int best_r = p;
  std::uint32_t best_mask = (1u << p) - 1;
  for (std::uint32_t mask = 1; mask < (1u << p); ++mask) {
    int pop = std::popcount(mask);
    if (pop >= best_r) continue;
    VarSet u;
    for (int i = 0; i < p; ++i)
      if ((mask >> i) & 1u) u |= primes[i].vars;
    if (u == full) {
      best_r = pop;
      best_mask = mask;
    }
  }
  std::vector<int> cover;
  for (int i = 0; i < p; ++i)
    if ((best_mask >> i) & 1u) cover.push_back(i);
  return SizeDetail{n - h + best_r - 1, h, best_r, std::move(cover)};
}

int ideal_size(const Decomposition& d) { return ideal_size_detail(d).value; }

namespace {

std::vector<VarSet> component_supports(const Decomposition& d) {
  std::vector<VarSet> s;
  s.reserve(d.component_count());
  for (const auto& c : d.components()) s.push_back(c.support());
  return s;
}

// Valid placement of `next` after a prefix with support union `u`, given the
// supports of the components not yet placed (next excluded).
bool placement_ok(VarSet u, VarSet next_support,
                  const std::vector<VarSet>& rest) {
  if (next_support.subset_of(u)) return true;
  int h_next = (u | next_support).count();
  for (VarSet s : rest) {
    if (s.subset_of(u)) continue;
    if ((u | s).count() < h_next) return false;
  }
  return true;
}

}  // namespace

bool is_admissible_order(const TotalOrder& order) {
  const Decomposition& d = order.decomposition();
  int s = order.length();
  if (s <= 1) return true;
  std::vector<VarSet> supports = component_supports(d);

  VarSet u = supports[order.perm()[0]];
  for (int pos = 1; pos < s; ++pos) {
    std::vector<VarSet> rest;
    for (int q = pos + 1; q < s; ++q) rest.push_back(supports[order.perm()[q]]);
    if (!placement_ok(u, supports[order.perm()[pos]], rest)) return false;
    u |= supports[order.perm()[pos]];
  }
  return true;
}

std::vector<TotalOrder> admissible_orders(const Decomposition& d,
                                          int max_components) {
  int s = d.component_count();
  if (s > max_components)
    throw BoundError("order enumeration refused for " + std::to_string(s) +
                     " components (bound " + std::to_string(max_components) +
                     ")");
  std::vector<VarSet> supports = component_supports(d);
  std::vector<TotalOrder> out;
  std::vector<int> perm;
  std::vector<bool> placed(s, false);

  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(perm.size()) == s) {
      out.emplace_back(d, perm);
      return;
    }
    VarSet u;
    for (int i : perm) u |= supports[i];
    for (int c = 0; c < s; ++c) {
      if (placed[c]) continue;
      bool ok = true;
      if (!perm.empty()) {
        std::vector<VarSet> rest;
        for (int m = 0; m < s; ++m)
          if (!placed[m] && m != c) rest.push_back(supports[m]);
        ok = placement_ok(u, supports[c], rest);
      }
      if (!ok) continue;
      placed[c] = true;
      perm.push_back(c);
      self(self);
      perm.pop_back();
      placed[c] = false;
    }
  };
  rec(rec);
  return out;
}

TotalOrder first_admissible_order(const Decomposition& d) {
  int s = d.component_count();
  std::vector<VarSet> supports = component_supports(d);
  std::vector<bool> placed(s, false);
  std::vector<int> perm;
  VarSet u;
  while (static_cast<int>(perm.size()) < s) {
    int pick = -1;
    int best_h = -1;
    for (int c = 0; c < s; ++c) {
      if (placed[c] || supports[c].subset_of(u)) continue;
      int h = (u | supports[c]).count();
      if (pick < 0 || h < best_h) {
        pick = c;
        best_h = h;
      }
    }
    if (pick < 0)
      for (int c = 0; c < s && pick < 0; ++c)
        if (!placed[c]) pick = c;
    placed[pick] = true;
    perm.push_back(pick);
    u |= supports[pick];
  }
  return TotalOrder(d, std::move(perm));
}

Family maximal_admissible_family(const TotalOrder& order) {
  if (!is_admissible_order(order))
    throw InvalidInputError("order is not admissible");
  const Decomposition& d = order.decomposition();
  std::vector<int> maximal = maximal_component_indices(d);
  std::set<int> maximal_set(maximal.begin(), maximal.end());

  std::vector<IrreducibleComponent> members;
  std::vector<int> indices;
  VarSet u;
  for (int pos = 0; pos < order.length(); ++pos) {
    int c = order.perm()[pos];
    if (!maximal_set.count(c)) continue;
    VarSet s = d.component(c).support();
    if (s.subset_of(u)) continue;
    members.push_back(d.component(c));
    indices.push_back(c);
    u |= s;
  }
  for (const auto& p : ass_primes(d))
    if (!p.vars.subset_of(u))
      throw DefectError("greedy family fails to absorb every associated prime");
  return Family(d.ring(), std::move(members), std::move(indices));
}

Family reduce_f1(const Family& f) {
  int t = f.length();
  if (t < 2)
    throw InvalidInputError("family reduction needs at least two members");
  std::vector<IrreducibleComponent> sums;
  sums.reserve(t - 1);
  for (int k = 0; k + 1 < t; ++k)
    sums.push_back(comp_sum(f.member(t - 1), f.member(k)));

  std::vector<bool> kept(sums.size(), true);
  for (size_t k = 0; k < sums.size(); ++k) {
    for (size_t k2 = 0; k2 < sums.size(); ++k2) {
      if (k == k2) continue;
      if (sums[k] == sums[k2]) {
        if (k2 < k) kept[k] = false;  // equal entries keep the first
      } else if (sums[k].contains(sums[k2])) {
        kept[k] = false;
      }
      if (!kept[k]) break;
    }
  }
  // Drop survivors whose radical sits inside another survivor's radical.
  std::vector<bool> final_kept = kept;
  for (size_t k = 0; k < sums.size(); ++k) {
    if (!kept[k]) continue;
    for (size_t k2 = 0; k2 < sums.size(); ++k2) {
      if (!kept[k2] || k == k2) continue;
      if (sums[k].support().proper_subset_of(sums[k2].support())) {
        final_kept[k] = false;
        break;
      }
    }
  }

  std::vector<IrreducibleComponent> members;
  std::vector<int> indices;
  for (size_t k = 0; k < sums.size(); ++k)
    if (final_kept[k]) {
      members.push_back(sums[k]);
      indices.push_back(static_cast<int>(indices.size()));
    }
  if (members.empty())
    throw DefectError("family reduction produced an empty family");
  return Family(f.ring(), std::move(members), std::move(indices));
}

int bigsize_family(const Family& f) {
  if (f.length() == 1)
    return f.ring().var_count() - f.member(0).support().count();
  int without_last = bigsize_family(f.prefix(f.length() - 1));
  int reduced = 1 + bigsize_family(reduce_f1(f));
  return std::min(without_last, reduced);
}

int bigsize_for_order(const TotalOrder& order) {
  return bigsize_family(maximal_admissible_family(order));
}

BigsizeResult bigsize_ideal(const Decomposition& d, int max_components) {
  std::vector<TotalOrder> orders = admissible_orders(d, max_components);
  std::map<std::vector<int>, int> family_cache;
  BigsizeResult best{-1, {}, {}, static_cast<int>(orders.size())};
  for (const TotalOrder& order : orders) {
    Family fam = maximal_admissible_family(order);
    auto it = family_cache.find(fam.indices());
    int value;
    if (it != family_cache.end()) {
      value = it->second;
    } else {
      value = bigsize_family(fam);
      family_cache.emplace(fam.indices(), value);
    }
    if (value > best.value) {
      best.value = value;
      best.best_order = order.perm();
      best.family_indices = fam.indices();
    }
  }
  return best;
}

std::vector<int> bigsize_witness(const Family& f) {
  int target = bigsize_family(f);
  int t = f.length();
  int n = f.ring().var_count();
  std::vector<int> picked;

  auto value_of = [&](const std::vector<int>& positions) {
    VarSet u;
    for (int p : positions) u |= f.member(p).support();
    return static_cast<int>(positions.size()) - 1 + n - u.count();
  };

  // Shortest witnesses first, lexicographic within a length.
  for (int r = 1; r <= t; ++r) {
    std::vector<int> idx(r);
    auto rec = [&](auto&& self, int depth, int from) -> bool {
      if (depth == r) return value_of(idx) == target;
      for (int p = from; p < t; ++p) {
        idx[depth] = p;
        if (self(self, depth + 1, p + 1)) return true;
      }
      return false;
    };
    if (rec(rec, 0, 0)) return idx;
  }
  throw DefectError("no witness subsequence matches the family bigsize");
}

}  // namespace stanley
