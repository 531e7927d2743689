#include "stanley/sdepth.hpp"

#include <algorithm>

#include "stanley/errors.hpp"
#include "stanley/invariants.hpp"

namespace stanley {

CharacteristicPoset::CharacteristicPoset(Ring ring, std::vector<int> bounds,
                                         PosetMode mode,
                                         std::vector<char> member)
    : ring_(std::move(ring)),
      bounds_(std::move(bounds)),
      mode_(mode),
      member_(std::move(member)) {
  int n = ring_.var_count();
  stride_.assign(n, 1);
  for (int j = n - 2; j >= 0; --j)
    stride_[j] = stride_[j + 1] * (bounds_[j + 1] + 1);

  rho_.assign(member_.size(), 0);
  element_count_ = 0;
  for (int id = 0; id < static_cast<int>(member_.size()); ++id) {
    std::vector<int> exps = exponents_of(id);
    int r = 0;
    for (int j = 0; j < n; ++j)
      if (exps[j] == bounds_[j]) ++r;
    rho_[id] = r;
    if (member_[id]) ++element_count_;
  }
}

std::vector<int> CharacteristicPoset::exponents_of(int id) const {
  int n = ring_.var_count();
  std::vector<int> exps(n, 0);
  for (int j = 0; j < n; ++j) {
    exps[j] = id / stride_[j];
    id %= stride_[j];
  }
  return exps;
}

int CharacteristicPoset::id_of(const std::vector<int>& exps) const {
  int id = 0;
  for (int j = 0; j < ring_.var_count(); ++j) id += exps[j] * stride_[j];
  return id;
}

std::vector<std::vector<int>> CharacteristicPoset::elements() const {
  std::vector<std::vector<int>> out;
  for (int id = 0; id < box_size(); ++id)
    if (member_[id]) out.push_back(exponents_of(id));
  return out;
}

CharacteristicPoset char_poset(const MonomialIdeal& ideal, PosetMode mode,
                               int max_box) {
  if (!ideal.is_proper_nonzero())
    throw InvalidInputError("characteristic poset requires a proper nonzero ideal");
  const Ring& ring = ideal.ring();
  int n = ring.var_count();
  std::vector<int> bounds(n, 1);
  long long box = 1;
  for (int j = 0; j < n; ++j) {
    bounds[j] = std::max(ideal.deg_var(j), 1);
    box *= bounds[j] + 1;
    if (box > max_box)
      throw BoundError("characteristic poset box exceeds the bound of " +
                       std::to_string(max_box));
  }

  std::vector<char> member(static_cast<size_t>(box), 0);
  std::vector<int> exps(n, 0);
  for (int id = 0; id < box; ++id) {
    Monomial m(ring, exps);
    bool in_ideal = ideal.contains(m);
    member[id] = (mode == PosetMode::Ideal) ? in_ideal : !in_ideal;
    for (int j = n - 1; j >= 0; --j) {
      if (++exps[j] <= bounds[j]) break;
      exps[j] = 0;
    }
  }
  return CharacteristicPoset(ring, std::move(bounds), mode, std::move(member));
}

namespace {

struct PartitionSearch {
  const CharacteristicPoset& poset;
  int n;
  int box;
  int k = 0;
  std::vector<char> covered;
  int uncovered = 0;
  std::vector<std::pair<int, int>> chosen;

  explicit PartitionSearch(const CharacteristicPoset& p)
      : poset(p), n(p.ring().var_count()), box(p.box_size()) {}

  void box_ids(const std::vector<int>& lo, const std::vector<int>& hi,
               std::vector<int>& out) const {
    out.clear();
    std::vector<int> cur = lo;
    for (;;) {
      out.push_back(poset.id_of(cur));
      int j = n - 1;
      for (; j >= 0; --j) {
        if (cur[j] < hi[j]) {
          ++cur[j];
          break;
        }
        cur[j] = lo[j];
      }
      if (j < 0) break;
    }
  }

  int stride(int j) const {
    int s = 1;
    for (int q = j + 1; q < n; ++q) s *= poset.bounds()[q] + 1;
    return s;
  }

  bool box_free(const std::vector<int>& lo, const std::vector<int>& hi,
                std::vector<int>& scratch) const {
    box_ids(lo, hi, scratch);
    for (int id : scratch)
      if (!poset.element(id) || covered[id]) return false;
    return true;
  }

  bool run(int target_k, IntervalPartition* out) {
    k = target_k;
    covered.assign(box, 0);
    uncovered = poset.element_count();
    chosen.clear();

    // Every element must reach some admissible top.
    std::vector<int> best_above(box, -1);
    for (int id = box - 1; id >= 0; --id) {
      int best = poset.element(id) && poset.rho(id) >= k ? poset.rho(id) : -1;
      std::vector<int> exps = poset.exponents_of(id);
      for (int j = 0; j < n; ++j)
        if (exps[j] < poset.bounds()[j])
          best = std::max(best, best_above[id + stride(j)]);
      best_above[id] = best;
      if (poset.element(id) && best < 0) return false;
    }

    if (!cover_from(0)) return false;
    if (out) {
      for (auto [lo, hi] : chosen)
        out->intervals.push_back(
            Interval{poset.exponents_of(lo), poset.exponents_of(hi)});
    }
    return true;
  }

  bool cover_from(int hint) {
    if (uncovered == 0) return true;
    int a = hint;
    while (a < box && (!poset.element(a) || covered[a])) ++a;

    std::vector<int> lo = poset.exponents_of(a);
    std::vector<int> hi = lo;
    std::vector<int> candidates;
    collect_tops(lo, hi, 0, candidates);
    if (candidates.empty()) return false;
    std::stable_sort(candidates.begin(), candidates.end(),
                     [this](int x, int y) { return poset.rho(x) > poset.rho(y); });

    std::vector<int> cells;
    for (int b : candidates) {
      box_ids(lo, poset.exponents_of(b), cells);
      for (int id : cells) covered[id] = 1;
      uncovered -= static_cast<int>(cells.size());
      chosen.emplace_back(a, b);
      if (cover_from(a + 1)) return true;
      chosen.pop_back();
      box_ids(lo, poset.exponents_of(b), cells);
      for (int id : cells) covered[id] = 0;
      uncovered += static_cast<int>(cells.size());
    }
    return false;
  }

  // All b >= lo whose full box over lo stays uncovered inside the poset.
  void collect_tops(const std::vector<int>& lo, std::vector<int>& hi, int coord,
                    std::vector<int>& out) {
    if (coord == n) {
      std::vector<int> scratch;
      if (box_free(lo, hi, scratch)) {
        int b = poset.id_of(hi);
        if (poset.rho(b) >= k) out.push_back(b);
      }
      return;
    }
    for (int v = lo[coord]; v <= poset.bounds()[coord]; ++v) {
      hi[coord] = v;
      collect_tops(lo, hi, coord + 1, out);
    }
    hi[coord] = lo[coord];
  }
};

}  // namespace

SdepthResult sdepth_of_poset(const CharacteristicPoset& poset) {
  int n = poset.ring().var_count();
  int top = 0;
  for (int id = 0; id < poset.box_size(); ++id)
    if (poset.element(id)) top = std::max(top, poset.rho(id));

  for (int k = std::min(n, top); k >= 0; --k) {
    PartitionSearch search(poset);
    IntervalPartition certificate;
    if (search.run(k, &certificate)) return SdepthResult{k, certificate};
  }
  throw DefectError("no interval partition found at any level");
}

SdepthResult sdepth_exact(const MonomialIdeal& ideal, PosetMode mode,
                          int max_box) {
  return sdepth_of_poset(char_poset(ideal, mode, max_box));
}

bool valid_partition(const CharacteristicPoset& poset,
                     const IntervalPartition& partition, int value) {
  std::vector<char> covered(poset.box_size(), 0);
  int covered_count = 0;
  int min_rho = poset.ring().var_count();
  if (partition.intervals.empty()) return false;
  for (const Interval& iv : partition.intervals) {
    for (size_t j = 0; j < iv.lower.size(); ++j)
      if (iv.lower[j] > iv.upper[j]) return false;
    std::vector<int> cur = iv.lower;
    for (;;) {
      int id = poset.id_of(cur);
      if (!poset.element(id) || covered[id]) return false;
      covered[id] = 1;
      ++covered_count;
      int j = static_cast<int>(cur.size()) - 1;
      for (; j >= 0; --j) {
        if (cur[j] < iv.upper[j]) {
          ++cur[j];
          break;
        }
        cur[j] = iv.lower[j];
      }
      if (j < 0) break;
    }
    min_rho = std::min(min_rho, poset.rho(poset.id_of(iv.upper)));
  }
  return covered_count == poset.element_count() && min_rho == value;
}

namespace {

MonomialIdeal restrict_to(const MonomialIdeal& ideal, VarSet vars,
                          const Ring& subring) {
  std::vector<int> kept = vars.members();
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) {
    if (!g.support().subset_of(vars)) continue;
    std::vector<int> exps;
    exps.reserve(kept.size());
    for (int j : kept) exps.push_back(g.exponents()[j]);
    gens.emplace_back(subring, std::move(exps));
  }
  if (gens.empty()) return MonomialIdeal::zero(subring);
  return MonomialIdeal::from_generators(subring, std::move(gens));
}

MonomialIdeal intersect_components(const Decomposition& d,
                                   const std::vector<int>& which) {
  std::vector<MonomialIdeal> ideals;
  for (int i : which) ideals.push_back(d.component(i).to_ideal());
  return intersect(ideals);
}

}  // namespace

SplitData split_data(const Decomposition& d, VarSet z,
                     const std::vector<int>& tau, int max_box) {
  if (!d.is_squarefree())
    throw InvalidInputError("variable splitting requires squarefree input");
  int s = d.component_count();
  if (tau.empty() || static_cast<int>(tau.size()) >= s)
    throw InvalidInputError("tau must be a nonempty proper component subset");

  VarSet tau_sum;
  std::vector<char> in_tau(s, 0);
  for (int i : tau) {
    if (i < 0 || i >= s) throw InvalidInputError("tau index out of range");
    in_tau[i] = 1;
    tau_sum |= d.component(i).support();
  }
  std::vector<int> complement;
  for (int i = 0; i < s; ++i)
    if (!in_tau[i]) complement.push_back(i);

  VarSet s_tau_vars = z - tau_sum;
  VarSet s_second_vars = d.ring().all_vars() - z;

  Ring tau_ring = d.ring().restricted(s_tau_vars);
  Ring second_ring = d.ring().restricted(s_second_vars);

  MonomialIdeal j_tau =
      restrict_to(intersect_components(d, complement), s_tau_vars, tau_ring);
  MonomialIdeal l_tau =
      restrict_to(intersect_components(d, tau), s_second_vars, second_ring);

  std::optional<int> a_tau;
  if (!j_tau.is_zero() && !l_tau.is_zero())
    a_tau = sdepth_exact(j_tau, PosetMode::Ideal, max_box).value +
            sdepth_exact(l_tau, PosetMode::Ideal, max_box).value;

  return SplitData{tau, s_tau_vars, s_second_vars, std::move(j_tau),
                   std::move(l_tau), a_tau};
}

SplitScan scan_splits(const Decomposition& d, VarSet z, int max_box,
                      int max_components) {
  if (!d.is_squarefree())
    throw InvalidInputError("variable splitting requires squarefree input");
  int s = d.component_count();
  if (s > max_components)
    throw BoundError("split scan refused for " + std::to_string(s) +
                     " components (bound " + std::to_string(max_components) +
                     ")");

  SplitScan out;

  MonomialIdeal full = d.intersection();
  Ring z_ring = d.ring().restricted(z);
  MonomialIdeal inside = restrict_to(full, z, z_ring);
  if (!inside.is_zero()) {
    // (I cap S') S lives in the full ring on the same generators.
    std::vector<Monomial> gens;
    for (const Monomial& g : full.generators())
      if (g.support().subset_of(z)) gens.push_back(g);
    MonomialIdeal i0 = MonomialIdeal::from_generators(d.ring(), gens);
    out.a0 = sdepth_exact(i0, PosetMode::Ideal, max_box).value;
  }

  for (std::uint32_t mask = 1; mask + 1 < (1u << s); ++mask) {
    std::vector<int> tau;
    for (int i = 0; i < s; ++i)
      if ((mask >> i) & 1u) tau.push_back(i);
    SplitData data = split_data(d, z, tau, max_box);
    if (data.a_tau) out.qualifying.push_back(std::move(data));
  }

  if (out.a0) out.bound = *out.a0;
  for (const SplitData& q : out.qualifying)
    out.bound = out.bound ? std::min(*out.bound, *q.a_tau) : *q.a_tau;
  return out;
}

int split_lower_bound(const Decomposition& d, VarSet z, int max_box,
                      int max_components) {
  SplitScan scan = scan_splits(d, z, max_box, max_components);
  if (!scan.bound)
    throw InvalidInputError(
        "splitting bound is vacuous: no nonzero restriction for this Z");
  return *scan.bound;
}

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

VerifyReport verify_instance(const Decomposition& input,
                             const VerifyOptions& options) {
  VerifyReport report;
  Decomposition d = input.irredundant() ? input : irredundantize(input);
  MonomialIdeal ideal = d.intersection();
  int size = ideal_size(d);

  std::optional<int> sdepth_ideal;
  try {
    sdepth_ideal = sdepth_exact(ideal, PosetMode::Ideal, options.max_box).value;
    report.checks.push_back(Check{"sdepth_ge_size_plus_one", *sdepth_ideal,
                                  size + 1, ">=", *sdepth_ideal >= size + 1});
  } catch (const BoundError&) {
    report.notes.push_back("sdepth skipped: poset bound exceeded");
  }

  try {
    std::vector<TotalOrder> orders =
        admissible_orders(d, options.max_components);
    int min_bigsize = d.ring().var_count() + 1;
    int max_bigsize = -1;
    for (const TotalOrder& order : orders) {
      int b = bigsize_for_order(order);
      min_bigsize = std::min(min_bigsize, b);
      max_bigsize = std::max(max_bigsize, b);
    }
    report.checks.push_back(
        Check{"bigsize_ge_size", min_bigsize, size, ">=", min_bigsize >= size});
    if (d.is_squarefree() && sdepth_ideal)
      report.checks.push_back(Check{"squarefree_sdepth_ge_bigsize_plus_one",
                                    *sdepth_ideal, max_bigsize + 1,
                                    ">=", *sdepth_ideal >= max_bigsize + 1});
  } catch (const BoundError&) {
    report.notes.push_back("bigsize skipped: order bound exceeded");
  }

  if (d.is_squarefree() && options.quotient_check) {
    try {
      int q = sdepth_exact(ideal, PosetMode::Quotient, options.max_box).value;
      report.checks.push_back(
          Check{"quotient_sdepth_ge_size", q, size, ">=", q >= size});
    } catch (const BoundError&) {
      report.notes.push_back("quotient sdepth skipped: poset bound exceeded");
    }
  }
  return report;
}

}  // namespace stanley
