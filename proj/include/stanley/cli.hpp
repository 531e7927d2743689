#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stanley/parse.hpp"
#include "stanley/sdepth.hpp"

namespace stanley::cli {

struct Options {
  bool timing = false;
  std::vector<int> order;  // 1-based component permutation
  bool all_orders = false;
  bool quotient = false;
  std::optional<int> steps;  // polarize: step cap; absent means full
  std::string suite;         // verify: "paper-examples" or "random"
  std::uint64_t seed = 1;
  int count = 20;
  int max_box = kDefaultPosetBound;
  int max_components = 9;
  std::vector<std::string> zvars;  // split: variable names
  std::vector<int> tau;            // split: 1-based component subset
};

struct Report {
  std::string command;
  std::string input;
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  nlohmann::ordered_json certificates = nlohmann::ordered_json::object();
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool ok() const;
};

Report run_command(const std::string& command, const IdealDocument& doc,
                   const Options& options);

/// verify --suite ...; needs no input document.
Report run_suite(const Options& options);

std::string emit(const Report& report, bool as_json);

}  // namespace stanley::cli
