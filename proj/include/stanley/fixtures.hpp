#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace stanley {

// Built-in worked examples, runnable by label from the command line.
struct Fixture {
  std::string name;
  std::string text;
  std::vector<std::string> notes;
};

const std::vector<Fixture>& all_fixtures();
const Fixture* find_fixture(std::string_view name);

}  // namespace stanley
