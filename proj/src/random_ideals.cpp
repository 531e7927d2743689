#include "stanley/random_ideals.hpp"

#include <algorithm>

namespace stanley {

namespace {

int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

Decomposition random_decomposition(std::mt19937_64& rng,
                                   const RandomIdealOptions& options) {
  int n = draw(rng, 2, std::max(2, options.max_vars));
  Ring ring(n);
  int target = draw(rng, 1, options.max_components);

  std::vector<IrreducibleComponent> comps;
  for (int c = 0; c < target; ++c) {
    int support = draw(rng, 1, std::min(options.max_support, n));
    std::vector<int> vars(n);
    for (int j = 0; j < n; ++j) vars[j] = j;
    for (int j = 0; j < support; ++j)
      std::swap(vars[j], vars[draw(rng, j, n - 1)]);
    std::vector<int> powers(n, 0);
    for (int j = 0; j < support; ++j)
      powers[vars[j]] =
          options.squarefree ? 1 : draw(rng, 1, options.max_exponent);
    IrreducibleComponent comp(ring, std::move(powers));
    if (std::find(comps.begin(), comps.end(), comp) == comps.end())
      comps.push_back(std::move(comp));
  }
  return irredundantize(Decomposition(ring, std::move(comps)));
}

}  // namespace stanley
