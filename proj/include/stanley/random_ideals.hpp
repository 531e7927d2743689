#pragma once

#include <cstdint>
#include <random>

#include "stanley/decomposition.hpp"

namespace stanley {

struct RandomIdealOptions {
  int max_vars = 4;
  int max_components = 4;
  int max_support = 3;
  int max_exponent = 3;
  bool squarefree = false;
};

/// Seed-reproducible instance generator. Draws raw components, deduplicates
/// them and irredundantizes the list. Uses the engine directly so identical
/// seeds give identical instances everywhere.
Decomposition random_decomposition(std::mt19937_64& rng,
                                   const RandomIdealOptions& options);

}  // namespace stanley
