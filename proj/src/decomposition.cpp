#include "stanley/decomposition.hpp"

#include <algorithm>
#include <set>

#include "stanley/errors.hpp"

namespace stanley {

Decomposition::Decomposition(Ring ring,
                             std::vector<IrreducibleComponent> components,
                             bool irredundant)
    : ring_(std::move(ring)),
      components_(std::move(components)),
      irredundant_(irredundant) {
  if (components_.empty())
    throw InvalidInputError("decomposition needs at least one component");
  for (const auto& c : components_)
    require_same_ring(ring_, c.ring(), "decomposition");
}

bool Decomposition::is_squarefree() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const IrreducibleComponent& c) { return c.is_prime(); });
}

int Decomposition::max_power(int j) const {
  int deg = 0;
  for (const auto& c : components_) deg = std::max(deg, c.powers()[j]);
  return deg;
}

MonomialIdeal Decomposition::intersection() const {
  std::vector<MonomialIdeal> ideals;
  ideals.reserve(components_.size());
  for (const auto& c : components_) ideals.push_back(c.to_ideal());
  return intersect(ideals);
}

std::string Decomposition::str() const {
  std::string out;
  for (size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ",";
    out += components_[i].str();
  }
  return out;
}

namespace {

void decompose_rec(const MonomialIdeal& ideal,
                   std::set<std::vector<int>>& visited,
                   std::vector<IrreducibleComponent>& out) {
  std::vector<int> key;
  for (const Monomial& g : ideal.generators())
    key.insert(key.end(), g.exponents().begin(), g.exponents().end());
  if (!visited.insert(std::move(key)).second) return;

  const Ring& ring = ideal.ring();
  const Monomial* mixed = nullptr;
  for (const Monomial& g : ideal.generators()) {
    if (g.support().count() > 1) {
      mixed = &g;
      break;
    }
  }
  if (mixed == nullptr) {
    // All generators are pure powers: the ideal itself is irreducible.
    std::vector<int> powers(ring.var_count(), 0);
    for (const Monomial& g : ideal.generators()) {
      int j = g.support().members().front();
      powers[j] = g.exponents()[j];
    }
    out.emplace_back(ring, std::move(powers));
    return;
  }

  // Split off the full power of the smallest variable of the chosen generator.
  int j = mixed->support().members().front();
  Monomial u = Monomial::variable(ring, j, mixed->exponents()[j]);
  Monomial v = mixed->divided_by(u);

  std::vector<Monomial> with_u = ideal.generators();
  with_u.push_back(u);
  std::vector<Monomial> with_v = ideal.generators();
  with_v.push_back(v);
  decompose_rec(MonomialIdeal::from_generators(ring, std::move(with_u)),
                visited, out);
  decompose_rec(MonomialIdeal::from_generators(ring, std::move(with_v)),
                visited, out);
}

}  // namespace

Decomposition irreducible_decomposition(const MonomialIdeal& ideal) {
  if (!ideal.is_proper_nonzero())
    throw InvalidInputError(
        "irreducible decomposition requires a proper nonzero ideal");
  std::set<std::vector<int>> visited;
  std::vector<IrreducibleComponent> raw;
  decompose_rec(ideal, visited, raw);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  Decomposition collected(ideal.ring(), std::move(raw));
  return irredundantize(collected);
}

IrredundantResult irredundantize_indexed(const Decomposition& d) {
  int s = d.component_count();
  std::vector<bool> kept(s, true);
  std::vector<MonomialIdeal> ideals;
  ideals.reserve(s);
  for (const auto& c : d.components()) ideals.push_back(c.to_ideal());

  // Scanning from the back keeps the first occurrence among equal components.
  for (int i = s - 1; i >= 0; --i) {
    std::vector<MonomialIdeal> others;
    for (int k = 0; k < s; ++k)
      if (kept[k] && k != i) others.push_back(ideals[k]);
    if (others.empty()) continue;
    MonomialIdeal inter = intersect(others);
    bool redundant = true;
    for (const Monomial& g : inter.generators())
      if (!d.component(i).contains(g)) {
        redundant = false;
        break;
      }
    if (redundant) kept[i] = false;
  }

  std::vector<IrreducibleComponent> comps;
  std::vector<int> indices;
  for (int i = 0; i < s; ++i)
    if (kept[i]) {
      comps.push_back(d.component(i));
      indices.push_back(i);
    }
  return IrredundantResult{Decomposition(d.ring(), std::move(comps), true),
                           std::move(indices)};
}

Decomposition irredundantize(const Decomposition& d) {
  return irredundantize_indexed(d).decomposition;
}

std::vector<PrimeSupport> ass_primes(const Decomposition& d) {
  if (!d.irredundant())
    throw InvalidInputError("associated primes require an irredundant decomposition");
  std::vector<PrimeSupport> primes;
  for (const auto& c : d.components()) primes.push_back(c.radical());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

std::vector<PrimeSupport> maximal_ass_primes(const Decomposition& d) {
  std::vector<PrimeSupport> primes = ass_primes(d);
  std::vector<PrimeSupport> maximal;
  for (const auto& p : primes) {
    bool is_max = true;
    for (const auto& q : primes)
      if (p.vars.proper_subset_of(q.vars)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(p);
  }
  return maximal;
}

std::vector<int> maximal_component_indices(const Decomposition& d) {
  std::vector<PrimeSupport> maximal = maximal_ass_primes(d);
  std::vector<int> out;
  for (int i = 0; i < d.component_count(); ++i) {
    VarSet s = d.component(i).support();
    for (const auto& p : maximal)
      if (p.vars == s) {
        out.push_back(i);
        break;
      }
  }
  return out;
}

StripResult strip_free_variables(const Decomposition& d) {
  if (!d.irredundant())
    throw InvalidInputError("strip_free_variables requires an irredundant decomposition");
  VarSet used;
  for (const auto& c : d.components()) used |= c.support();
  int removed = d.ring().var_count() - used.count();
  std::vector<int> kept_vars = used.members();
  Ring small = d.ring().restricted(used);
  std::vector<IrreducibleComponent> comps;
  for (const auto& c : d.components()) {
    std::vector<int> powers;
    powers.reserve(kept_vars.size());
    for (int j : kept_vars) powers.push_back(c.powers()[j]);
    comps.emplace_back(small, std::move(powers));
  }
  return StripResult{Decomposition(small, std::move(comps), true), removed,
                     std::move(kept_vars)};
}

}  // namespace stanley
