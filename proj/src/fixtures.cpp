#include "stanley/fixtures.hpp"

namespace stanley {

const std::vector<Fixture>& all_fixtures() {
  static const std::vector<Fixture> fixtures = {
      {"e",
       "ring 5\n"
       "components = (x1,x2),(x2,x3),(x1,x4,x5)\n"
       "label = e\n",
       {}},
      {"ex",
       "ring 6\n"
       "components = (x1,x2,x4),(x1,x3,x4,x6),(x2,x3,x4,x6),(x1,x4,x5,x6),"
       "(x1,x2,x3,x5,x6)\n"
       "label = ex\n",
       {}},
      {"e0",
       "ring 4\n"
       "components = (x1,x2^2),(x2,x3),(x3^2,x4)\n"
       "label = e0\n",
       {}},
      {"e1",
       "ring 2\n"
       "components = (x1),(x1^2,x2)\n"
       "label = e1\n",
       {}},
      {"e2",
       "ring 4\n"
       "components = (x1,x2),(x1,x3),(x1^2,x2,x3),(x1^2,x3,x4)\n"
       "label = e2\n",
       {}},
      {"e3",
       "ring 4\n"
       "components = (x1,x2),(x1^2,x3),(x1^2,x4)\n"
       "label = e3\n",
       {}},
      {"e-prime",
       "ring 6\n"
       "components = (x1,x2),(x1,x3),(x1,x6),(x3,x4),(x3,x5),(x2,x4),(x5,x6)\n"
       "label = e-prime\n",
       {"size: the recorded reference value 3 differs from the exact "
        "set-cover minimum 2 (components 1, 4 and 7 span every variable); "
        "the computed value 2 is reported"}},
      {"e4",
       "ring 6\n"
       "components = (x1,x2),(x1,x3),(x1,x6),(x3,x4),(x3,x5),(x2,x4),(x5,x6)\n"
       "label = e4\n"
       "zvars = x5\n",
       {"split over Z = {x5}: the unique qualifying tau is {1,2,3,4,6}"}},
      {"e5",
       "ring 6\n"
       "components = (x1,x2),(x1,x3),(x1,x6),(x3,x4),(x3,x5),(x2,x4),(x5,x6)\n"
       "label = e5\n"
       "zvars = x4\n",
       {"split over Z = {x4}: the unique qualifying tau is {1,2,3,5,7}"}},
      {"j",
       "ring 4\n"
       "components = (x1,x2),(x1^2,x3^2),(x2,x4),(x3,x4)\n"
       "label = j\n",
       {"full polarization reproduces the e-prime component set up to a "
        "variable bijection"}},
  };
  return fixtures;
}

const Fixture* find_fixture(std::string_view name) {
  for (const Fixture& f : all_fixtures())
    if (f.name == name) return &f;
  return nullptr;
}

}  // namespace stanley
