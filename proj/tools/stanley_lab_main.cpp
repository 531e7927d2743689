#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "stanley/cli.hpp"
#include "stanley/errors.hpp"
#include "stanley/fixtures.hpp"

namespace {

// Exit codes: 0 all good, 1 failed checks, 2 parse error, 3 bound refusal,
// 4 usage or input error.
constexpr int kExitChecksFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitBoundError = 3;
constexpr int kExitUsageError = 4;

std::string load_input(const std::string& input_file,
                       const std::string& fixture_name) {
  if (!fixture_name.empty()) {
    const stanley::Fixture* fixture = stanley::find_fixture(fixture_name);
    if (fixture == nullptr)
      throw stanley::InvalidInputError("unknown fixture '" + fixture_name +
                                       "'");
    return fixture->text;
  }
  std::ifstream in(input_file);
  if (!in)
    throw stanley::InvalidInputError("cannot open input file '" + input_file +
                                     "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stanley-lab: combinatorial invariants of monomial ideals"};
  app.require_subcommand(1);

  bool json = false;
  stanley::cli::Options options;
  std::string input_file;
  std::string fixture_name;
  std::string order_csv;
  std::string zvars_csv;
  std::string tau_csv;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    cmd->add_flag("--json", json, "emit the machine-readable report");
    cmd->add_flag("--timing", options.timing,
                  "include wall-clock timing (non-deterministic output)");
    cmd->add_option("--max-poset", options.max_box,
                    "largest allowed characteristic-poset box");
    cmd->add_option("--max-orders", options.max_components,
                    "largest component count for order enumeration");
    if (needs_input) {
      auto* in = cmd->add_option("--input", input_file, "ideal file");
      auto* fx = cmd->add_option("--fixture", fixture_name,
                                 "built-in example by label");
      in->excludes(fx);
    }
  };

  auto* decompose = app.add_subcommand("decompose", "irreducible decomposition");
  add_common(decompose, true);

  auto* size_cmd = app.add_subcommand("size", "size invariant");
  add_common(size_cmd, true);

  auto* bigsize_cmd = app.add_subcommand("bigsize", "bigsize invariant");
  add_common(bigsize_cmd, true);
  bigsize_cmd->add_option("--order", order_csv,
                          "1-based component order, e.g. 2,1,3");
  bigsize_cmd->add_flag("--all-orders", options.all_orders,
                        "list every admissible order with its bigsize");

  auto* sdepth_cmd = app.add_subcommand("sdepth", "exact Stanley depth");
  add_common(sdepth_cmd, true);
  sdepth_cmd->add_flag("--quotient", options.quotient,
                       "Stanley depth of the quotient instead of the ideal");

  auto* polarize_cmd = app.add_subcommand("polarize", "exponent splitting");
  add_common(polarize_cmd, true);
  int steps = -1;
  polarize_cmd->add_option("--steps", steps, "number of steps; default full");
  bool full = false;
  polarize_cmd->add_flag("--full", full, "polarize until squarefree (default)");

  auto* split_cmd = app.add_subcommand("split", "variable-splitting bound");
  add_common(split_cmd, true);
  split_cmd->add_option("--zvars", zvars_csv, "comma-separated Z variables");
  split_cmd->add_option("--tau", tau_csv, "1-based component subset");

  auto* verify_cmd = app.add_subcommand("verify", "inequality verification");
  add_common(verify_cmd, true);
  verify_cmd->add_option("--suite", options.suite,
                         "paper-examples or random; otherwise verifies the input");
  verify_cmd->add_option("--seed", options.seed, "random-suite seed");
  verify_cmd->add_option("--count", options.count, "random-suite instance count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsageError;
  }

  auto parse_csv_ints = [](const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) out.push_back(std::stoi(item));
    return out;
  };
  auto parse_csv_words = [](const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) out.push_back(item);
    return out;
  };

  try {
    options.order = parse_csv_ints(order_csv);
    options.tau = parse_csv_ints(tau_csv);
    options.zvars = parse_csv_words(zvars_csv);
    if (steps >= 0) options.steps = steps;

    std::string command = app.get_subcommands().front()->get_name();
    stanley::cli::Report report;
    if (command == "verify" && !options.suite.empty()) {
      report = stanley::cli::run_suite(options);
    } else {
      if (input_file.empty() && fixture_name.empty())
        throw stanley::InvalidInputError("provide --input FILE or --fixture NAME");
      std::string text = load_input(input_file, fixture_name);
      stanley::IdealDocument doc = stanley::parse_document(text);
      report = stanley::cli::run_command(command, doc, options);
      if (!fixture_name.empty())
        for (const std::string& note :
             stanley::find_fixture(fixture_name)->notes)
          report.notes.push_back(note);
    }
    std::cout << stanley::cli::emit(report, json);
    return report.ok() ? 0 : kExitChecksFailed;
  } catch (const stanley::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const stanley::BoundError& e) {
    std::cerr << "bound refusal: " << e.what() << "\n";
    return kExitBoundError;
  } catch (const stanley::DefectError& e) {
    std::cerr << "defect: " << e.what() << "\n";
    return kExitChecksFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsageError;
  }
}
