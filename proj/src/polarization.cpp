#include "stanley/polarization.hpp"

#include <algorithm>
#include <set>

#include "stanley/errors.hpp"

namespace stanley {

PolarizationStep polarize_step(const Decomposition& d, int j) {
  const Ring& ring = d.ring();
  if (j < 0 || j >= ring.var_count())
    throw InvalidInputError("variable index out of range");
  int c = d.max_power(j);
  if (c <= 1)
    throw InvalidInputError("variable " + ring.var_name(j) +
                            " carries no power above 1; nothing to polarize");

  Ring target = ring.extended();

  std::vector<int> e_set;
  for (int i = 0; i < d.component_count(); ++i)
    if (d.component(i).powers()[j] == c) e_set.push_back(i);

  std::vector<IrreducibleComponent> primed, doubled;
  for (int i : e_set) {
    std::vector<int> lowered = d.component(i).powers();
    lowered[j] = c - 1;
    primed.emplace_back(ring, std::move(lowered));

    std::vector<int> moved = d.component(i).powers();
    moved[j] = 0;
    moved.push_back(1);
    doubled.emplace_back(target, std::move(moved));
  }

  auto extend = [&](const IrreducibleComponent& comp) {
    std::vector<int> powers = comp.powers();
    powers.push_back(0);
    return IrreducibleComponent(target, std::move(powers));
  };

  std::vector<IrreducibleComponent> raw;
  std::vector<OriginRef> origins;
  for (int i = 0; i < d.component_count(); ++i) {
    if (std::find(e_set.begin(), e_set.end(), i) != e_set.end()) continue;
    raw.push_back(extend(d.component(i)));
    origins.push_back(OriginRef{i, ComponentOrigin::Unchanged});
  }
  for (size_t k = 0; k < e_set.size(); ++k) {
    raw.push_back(extend(primed[k]));
    origins.push_back(OriginRef{e_set[k], ComponentOrigin::Primed});
  }
  for (size_t k = 0; k < e_set.size(); ++k) {
    raw.push_back(doubled[k]);
    origins.push_back(OriginRef{e_set[k], ComponentOrigin::Doubled});
  }

  return PolarizationStep{d,
                          target,
                          j,
                          c,
                          std::move(e_set),
                          std::move(primed),
                          std::move(doubled),
                          Decomposition(target, std::move(raw)),
                          std::move(origins)};
}

FullPolarization full_polarization(const Decomposition& d) {
  FullPolarization out{d.irredundant() ? d : irredundantize(d), {}, {}, {}};
  for (;;) {
    const Decomposition& cur = out.result;
    int split = -1;
    for (int j = 0; j < cur.ring().var_count() && split < 0; ++j)
      if (cur.max_power(j) > 1) split = j;
    if (split < 0) break;

    PolarizationStep step = polarize_step(cur, split);
    out.new_vars.push_back(VariableOrigin{split, step.degree});
    IrredundantResult reduced = irredundantize_indexed(step.raw_target);
    out.kept_after_step.push_back(reduced.kept);
    out.result = reduced.decomposition;
    out.steps.push_back(std::move(step));
  }
  return out;
}

bool depolarize_check(const PolarizationStep& step) {
  const Ring& source_ring = step.source.ring();
  int fresh = step.target_ring.var_count() - 1;
  MonomialIdeal target_ideal = step.raw_target.intersection();

  std::vector<Monomial> mapped;
  for (const Monomial& g : target_ideal.generators()) {
    std::vector<int> exps(g.exponents().begin(), g.exponents().end() - 1);
    exps[step.split_var] += g.exponents()[fresh];
    mapped.emplace_back(source_ring, std::move(exps));
  }
  MonomialIdeal back = MonomialIdeal::from_generators(source_ring, mapped);
  return back == step.source.intersection();
}

LcmLattice::LcmLattice(Ring ring, std::vector<Monomial> nodes)
    : ring_(std::move(ring)), nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
}

bool LcmLattice::is_node(const Monomial& m) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), m);
}

LcmLattice lcm_lattice(const MonomialIdeal& ideal, int max_generators) {
  if (!ideal.is_proper_nonzero())
    throw InvalidInputError("lcm lattice requires a proper nonzero ideal");
  if (static_cast<int>(ideal.generators().size()) > max_generators)
    throw BoundError("lcm lattice refused for " +
                     std::to_string(ideal.generators().size()) +
                     " generators (bound " + std::to_string(max_generators) +
                     ")");
  // Join closure of the generators equals the set of subset lcms.
  std::set<Monomial> nodes(ideal.generators().begin(),
                           ideal.generators().end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Monomial> snapshot(nodes.begin(), nodes.end());
    for (size_t a = 0; a < snapshot.size(); ++a)
      for (size_t b = a + 1; b < snapshot.size(); ++b)
        if (nodes.insert(lcm(snapshot[a], snapshot[b])).second) grew = true;
  }
  return LcmLattice(ideal.ring(),
                    std::vector<Monomial>(nodes.begin(), nodes.end()));
}

namespace {

bool substitute_node(const LcmLattice& source, const LcmLattice& target,
                     const std::vector<int>& var_map, const Monomial& m,
                     Monomial* out) {
  std::vector<int> exps(target.ring().var_count(), 0);
  for (int j = 0; j < source.ring().var_count(); ++j) {
    int image = var_map[j];
    if (image < 0 || image >= target.ring().var_count()) return false;
    exps[image] += m.exponents()[j];
  }
  Monomial candidate(target.ring(), std::move(exps));
  if (!target.is_node(candidate)) return false;
  *out = candidate;
  return true;
}

}  // namespace

bool lattice_surjection_check(const LcmLattice& source,
                              const LcmLattice& target,
                              const std::vector<int>& var_map) {
  if (static_cast<int>(var_map.size()) != source.ring().var_count())
    throw InvalidInputError("variable map length does not match the source ring");

  std::vector<Monomial> images;
  images.reserve(source.nodes().size());
  for (const Monomial& m : source.nodes()) {
    Monomial image = Monomial::one(target.ring());
    if (!substitute_node(source, target, var_map, m, &image)) return false;
    images.push_back(image);
  }

  std::set<Monomial> hit(images.begin(), images.end());
  if (hit.size() != target.nodes().size()) return false;

  int count = static_cast<int>(source.nodes().size());
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b) {
      Monomial join_image = Monomial::one(target.ring());
      if (!substitute_node(source, target, var_map,
                           lcm(source.nodes()[a], source.nodes()[b]),
                           &join_image))
        return false;
      if (!(join_image == lcm(images[a], images[b]))) return false;
    }
  return true;
}

TransferContext make_transfer_context(const PolarizationStep& step) {
  Decomposition source = step.source.irredundant()
                             ? step.source
                             : irredundantize(step.source);
  std::vector<bool> maximal(source.component_count(), false);
  for (int i : maximal_component_indices(source)) maximal[i] = true;
  return TransferContext{std::move(source), step.raw_target, step.origins,
                         std::move(maximal), step.e_set, step.primed};
}

Family replacement_family(const TransferContext& ctx, const Family& ft) {
  std::vector<IrreducibleComponent> members;
  std::vector<int> indices;
  for (int k = 0; k < ft.length(); ++k) {
    int raw_pos = ft.indices()[k];
    if (raw_pos < 0 || raw_pos >= ctx.raw_target.component_count())
      throw InvalidInputError("family index outside the polarized decomposition");
    const OriginRef& origin = ctx.origins[raw_pos];
    int source_index = origin.source_index;
    if (origin.kind == ComponentOrigin::Unchanged &&
        !ctx.source_prime_maximal[source_index]) {
      int found = -1;
      for (size_t e = 0; e < ctx.e_set.size() && found < 0; ++e)
        if (ctx.primed_in_source[e].contains(ctx.source.component(source_index)))
          found = ctx.e_set[e];
      if (found < 0)
        throw DefectError(
            "no lowered component absorbs a non-maximal carried component");
      source_index = found;
    }
    if (std::find(indices.begin(), indices.end(), source_index) !=
        indices.end())
      continue;  // keep only the first occurrence
    members.push_back(ctx.source.component(source_index));
    indices.push_back(source_index);
  }
  return Family(ctx.source.ring(), std::move(members), std::move(indices));
}

namespace {

Family transfer_family_rec(const TransferContext& ctx, const Family& ft) {
  std::vector<int> witness = bigsize_witness(ft);
  if (static_cast<int>(witness.size()) == ft.length())
    return replacement_family(ctx, ft);
  return transfer_family_rec(ctx, ft.subsequence(witness));
}

}  // namespace

Family transfer_family(const TransferContext& ctx, const Family& ft) {
  Family out = transfer_family_rec(ctx, ft);
  if (1 + bigsize_family(out) > bigsize_family(ft))
    throw DefectError("family transfer failed to lose at least one dimension");
  return out;
}

std::optional<std::vector<int>> find_variable_bijection(const Decomposition& a,
                                                        const Decomposition& b) {
  int n = a.ring().var_count();
  if (n != b.ring().var_count() ||
      a.component_count() != b.component_count())
    return std::nullopt;

  std::vector<std::vector<int>> target;
  for (const auto& c : b.components()) target.push_back(c.powers());
  std::sort(target.begin(), target.end());

  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int j) -> bool {
    if (j == n) {
      std::vector<std::vector<int>> mapped;
      for (const auto& c : a.components()) {
        std::vector<int> powers(n, 0);
        for (int v = 0; v < n; ++v) powers[map[v]] = c.powers()[v];
        mapped.push_back(std::move(powers));
      }
      std::sort(mapped.begin(), mapped.end());
      return mapped == target;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      map[j] = v;
      if (self(self, j + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  if (rec(rec, 0)) return map;
  return std::nullopt;
}

}  // namespace stanley
